#pragma once

/**
 * @file homfly.hpp
 * @brief Extreme a-degree coefficients of the reduced HOMFLYPT series of a
 * type-A braid closure, read off from the Hecke traces τ±.
 *
 * For β on n strands,
 *   [a^{|β| ± (n-1)}] P(closure) = (v^{-1} - v)^{-(n-1)} (-1)^{|β|} τ±(β).
 * The value is held as an unreduced fraction; equality is by cross-multiplication.
 */

#include <string>

#include "unitwist/braid.hpp"
#include "unitwist/ring.hpp"

namespace unitwist {

enum class TraceSign { Minus, Plus };

struct ExtremeCoeff {
  LaurentPoly numerator;
  LaurentPoly denominator;  // (v^{-1} - v)^{n-1}
  int a_degree = 0;
  int strands = 0;
};

/// Throws InvalidArgument unless β lives in a type-A system.
ExtremeCoeff extreme_coeff(const BraidWord& beta, TraceSign sign);

bool coeff_equal(const ExtremeCoeff& x, const ExtremeCoeff& y);

/// numerator / denominator when the division is exact in Z[v^{±1}].
std::optional<LaurentPoly> exact_value(const ExtremeCoeff& x);

struct KalmanResult {
  ExtremeCoeff lowest;        // sign − coefficient of β
  ExtremeCoeff highest_twist; // sign + coefficient of βπ
  bool values_equal = false;
  bool degrees_aligned = false;
  bool pass = false;
};

KalmanResult kalman_check(const BraidWord& beta);

}  // namespace unitwist
