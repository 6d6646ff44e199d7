#pragma once

/**
 * @file group.hpp
 * @brief Split groups GL_n, SL_n and Sp_4 over F_p with their standard Borel
 * B₊ (upper triangular), unipotent radicals U± and Weyl-group lifts.
 *
 * Sp_4 is {g : gᵗJg = J} with J = antidiag(1, 1, -1, -1) read row by row:
 * J(0,3) = J(1,2) = 1, J(2,1) = J(3,0) = -1. Its Weyl group is B(2) with
 * generator 1 = s (swap of the two torus coordinates) and 2 = t (inversion
 * of the second torus coordinate).
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "unitwist/coxeter.hpp"
#include "unitwist/matrix.hpp"

namespace unitwist {

enum class GroupFamily { GL, SL, SP4 };

std::string to_string(GroupFamily family);

class GroupSpec {
 public:
  /// Validates: p prime, n <= 4, Sp_4 forces n = 4 and p odd.
  GroupSpec(GroupFamily family, int n, std::uint32_t p);

  GroupFamily family() const noexcept { return family_; }
  int n() const noexcept { return n_; }
  std::uint32_t p() const noexcept { return p_; }
  /// Exponent of (q-1) in the point-count formulas: n for GL_n, n-1 for SL_n, 2 for Sp_4.
  int r() const noexcept;
  int torus_rank() const noexcept;
  int positive_roots() const noexcept;
  CoxeterSystem weyl() const;
  /// |G(F_p)|.
  mpz_class order() const;
  /// |B₊(F_p)|.
  std::uint64_t borel_size() const;
  std::string name() const;

 private:
  GroupFamily family_;
  int n_;
  std::uint32_t p_;
};

Mat sp4_form(std::uint32_t p);

bool is_unipotent(const Mat& g);
bool in_group(const Mat& g, const GroupSpec& spec);

/// Unit upper/lower factors with x = x₊·x₋, or nullopt when x ∉ U₊U₋.
struct ULFactors {
  Mat upper;
  Mat lower;
};
std::optional<ULFactors> ul_factorize(const Mat& x);

/// x = u·t for upper-triangular invertible x; t is the diagonal part.
struct BorelParts {
  Mat t;
  Mat u;
};
BorelParts decompose_borel(const Mat& x);

/// Torus-normalizing lift ẇ of a Weyl group element.
Mat weyl_lift(const CoxElement& w, const GroupSpec& spec);

/// Calls visit(b) for every b in B₊(F_p). Throws SizeBound above max_points.
void for_each_borel(const GroupSpec& spec, const std::function<void(const Mat&)>& visit,
                    std::uint64_t max_points = 50'000'000);
/// Calls visit(u) for every u in U₊(F_p).
void for_each_upper_unipotent(const GroupSpec& spec, const std::function<void(const Mat&)>& visit);
/// g·b for every b in B₊(F_p).
void enumerate_borel_coset(const Mat& g, const GroupSpec& spec, const std::function<void(const Mat&)>& visit,
                           std::uint64_t max_points = 50'000'000);

/// Uniform random elements of U₊(F_p) and B₊(F_p).
Mat random_upper_unipotent(const GroupSpec& spec, std::mt19937_64& rng);
Mat random_borel(const GroupSpec& spec, std::mt19937_64& rng);

/// Sp_4 unipotent upper element with coordinates (a, b, c, d).
Mat sp4_upper(Fp a, Fp b, Fp c, Fp d);
/// Sp_4 unipotent lower element with coordinates (a', b', c', d').
Mat sp4_lower(Fp a1, Fp b1, Fp c1, Fp d1);

/// Φ(x₊x₋) = x₊x₋x₊^{-1}.
Mat phi_apply(const Mat& upper, const Mat& lower);

/// H_g = B₊ ∩ gB₊g^{-1}.
bool in_Hg(const Mat& b, const Mat& g);

/// Action of b ∈ H_g on x ∈ V_g: writing b = t·u with t diagonal,
/// b·x₊x₋ = (t u x₊ t^{-1})(t x₋ t^{-1}). Throws NotInHg / NotInBigCell.
Mat action_Vg(const Mat& b, const Mat& x, const Mat& g);

}  // namespace unitwist
