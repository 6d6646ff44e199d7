#pragma once

/**
 * @file hecke.hpp
 * @brief Iwahori-Hecke algebra of a finite Coxeter group over Z[v^{±1}].
 *
 * Normalization: (σ_s - v)(σ_s + v^{-1}) = 0, i.e. σ_s^2 = 1 + (v - v^{-1})σ_s
 * and σ_s^{-1} = σ_s - (v - v^{-1}). Elements are stored in the standard basis
 * {σ_w}; the inverse basis {σ_w^{-1}} only appears through tau_minus.
 *
 * τ⁻ is computed without a change of basis. Let ψ be the ring involution with
 * ψ(v) = v^{-1} and ψ(σ_s) = σ_s^{-1}. Then ψ(σ_w^{-1}) = σ_{w^{-1}}, so if
 * β = Σ c_w σ_w^{-1} we get τ⁺(ψ(β)) = ψ(c_e) and τ⁻(β) = bar(τ⁺(ψ(β))).
 * ψ(β) for a positive word is the fold of right multiplications by σ_s^{-1}.
 * tau_minus_oracle performs the full triangular basis change instead.
 */

#include <map>
#include <string>

#include "unitwist/braid.hpp"
#include "unitwist/coxeter.hpp"
#include "unitwist/ring.hpp"

namespace unitwist {

class HeckeElement {
 public:
  using Coeffs = std::map<CoxElement, LaurentPoly>;

  explicit HeckeElement(CoxeterSystem system) : system_(std::move(system)) {}

  /// c·σ_w.
  static HeckeElement basis(const CoxeterSystem& sys, const CoxElement& w, const LaurentPoly& c = 1);

  const CoxeterSystem& system() const noexcept { return system_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  LaurentPoly coeff(const CoxElement& w) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  void add(const CoxElement& w, const LaurentPoly& c);
  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  HeckeElement scaled(const LaurentPoly& c) const;

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.system_ == b.system_ && a.coeffs_ == b.coeffs_;
  }

  /// JSON text: [[reduced_word, [[e,c],...]], ...] sorted by reduced word.
  std::string to_json() const;

 private:
  CoxeterSystem system_;
  Coeffs coeffs_;
};

/// h·σ_s.
HeckeElement hecke_mul_gen(const HeckeElement& h, int s);
/// h·σ_s^{-1}.
HeckeElement hecke_mul_gen_inv(const HeckeElement& h, int s);
/// Image of the positive braid in H_W, starting from σ_e.
HeckeElement eval_braid(const BraidWord& beta);
/// Coefficient of σ_e.
LaurentPoly tau_plus(const HeckeElement& h);
/// τ⁻ of a positive braid via the bar-involution route.
LaurentPoly tau_minus_braid(const BraidWord& beta);
/// τ⁻ by explicit change to the inverse basis. Throws SizeBound when |W| > 24.
LaurentPoly tau_minus_oracle(const HeckeElement& h);

struct TwistResult {
  BraidWord beta;
  LaurentPoly tau_minus;
  LaurentPoly tau_plus_twisted;  // τ⁺(βπ)
  bool pass = false;
};

/// τ⁻(β) == τ⁺(βπ).
TwistResult twist_check(const BraidWord& beta);

}  // namespace unitwist
