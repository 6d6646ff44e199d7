#pragma once

/**
 * @file ring.hpp
 * @brief Exact Laurent polynomials in v = q^{1/2} with integer coefficients.
 *
 * Exponents are stored in units of v, so q^k is the monomial v^{2k}. The bar
 * involution sends v to v^{-1}. Coefficients are GMP integers because Hecke
 * traces of long braids outgrow 64 bits quickly.
 */

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace unitwist {

class LaurentPoly {
 public:
  using Terms = std::map<int, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: integers embed as constants

  static LaurentPoly monomial(int exponent, const mpz_class& coeff = 1);
  /// v = q^{1/2}.
  static LaurentPoly v() { return monomial(1); }
  /// v - v^{-1}, the constant in the quadratic relation.
  static LaurentPoly delta();
  /// Builds from (exponent, coefficient) pairs; repeated exponents accumulate.
  static LaurentPoly from_pairs(const std::vector<std::pair<int, long>>& pairs);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpz_class coeff(int exponent) const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;  // requires !is_zero()

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  void add_term(int exponent, const mpz_class& coeff);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned k) const;
  /// Multiplies by v^shift.
  LaurentPoly shifted(int shift) const;

  /// Exact quotient a / divisor, or nullopt when divisor does not divide a in Z[v^{±1}].
  std::optional<LaurentPoly> div_exact(const LaurentPoly& divisor) const;

  /// Human-readable form, e.g. "v^2 - 2 + v^-2".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// v -> v^{-1}.
LaurentPoly bar(const LaurentPoly& a);

/// Evaluates at v = sqrt(q). Throws Error(OddExponent) if any exponent is odd.
mpq_class eval_q(const LaurentPoly& a, long q);

/// Sorted `[exponent, coefficient]` pairs; coefficients beyond int64 become strings.
std::string serialize(const LaurentPoly& a);

}  // namespace unitwist
