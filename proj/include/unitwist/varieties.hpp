#pragma once

/**
 * @file varieties.hpp
 * @brief F_p-point counts of the Bruhat-coset varieties U_g, V_g, X_g and of the
 * braid varieties U(β), X(β), plus the identity checks built on them.
 *
 * U_g = unipotents in gB₊, V_g = U₊U₋ ∩ gB₊, X_g = flags F with
 * std →w0 F →w0 g·std. For β = s_1 ⋯ s_k,
 *   X(β) = {(B_1..B_k) : B_k →s_1 B_1 →s_2 ⋯ →s_k B_k},
 *   U(β) = {(u, B_1..B_k) : u unipotent, u^{-1}B_k u →s_1 B_1 ⋯ →s_k B_k}.
 * The empty word is read as the single step B_1 →e B_1.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "unitwist/braid.hpp"
#include "unitwist/flag.hpp"
#include "unitwist/group.hpp"
#include "unitwist/homfly.hpp"
#include "unitwist/report.hpp"

namespace unitwist {

struct CosetCounts {
  std::uint64_t unipotent = 0;  // |U_g(F_p)|
  std::uint64_t big_cell = 0;   // |V_g(F_p)|
};

/// One scan of gB₊ counting both U_g and V_g.
CosetCounts count_coset(const Mat& g, const GroupSpec& spec);
std::uint64_t count_Ug(const Mat& g, const GroupSpec& spec);
std::uint64_t count_Vg(const Mat& g, const GroupSpec& spec);
/// GL/SL only.
std::uint64_t count_Xg(const Mat& g, const GroupSpec& spec);
std::uint64_t count_Xg(const Mat& g, const GroupSpec& spec, const FlagSpace& flags);

/// H_g(F_p) = B₊ ∩ gB₊g^{-1}.
std::vector<Mat> enumerate_Hg(const Mat& g, const GroupSpec& spec);

/// V_g → X_g: g^{-1}x = u·t, x ↦ g·u·ẇ0·B₊. Throws NotInBigCell when x ∉ V_g.
Flag v_to_x_map(const Mat& x, const Mat& g, const GroupSpec& spec);

/// All unipotent n×n matrices over F_p (I + N with N^n = 0), by scanning every matrix.
std::vector<Mat> enumerate_unipotents(int n, std::uint32_t p, std::uint64_t max_scan = 5'000'000);

/// Shared state for repeated braid-variety counts over one (n, p):
/// the flag space, its adjacency tables, and the unipotent action on flags.
class BraidCounter {
 public:
  BraidCounter(int n, std::uint32_t p, int max_word = 10);

  int n() const noexcept { return flags_.n(); }
  std::uint32_t p() const noexcept { return flags_.p(); }
  const FlagSpace& flags() const noexcept { return flags_; }

  std::uint64_t count_X(const std::vector<int>& word) const;
  std::uint64_t count_U(const std::vector<int>& word);
  std::size_t unipotent_count();

 private:
  /// transfer[a * N + b] = number of simple-step chains from flag a to flag b.
  std::vector<std::uint64_t> transfer(const std::vector<int>& word) const;
  void load_unipotents();

  FlagSpace flags_;
  int max_word_;
  // inv_action_[k][i] = index of u_k^{-1}·F_i
  std::vector<std::vector<std::uint32_t>> inv_action_;
};

std::uint64_t count_X_beta(const BraidWord& beta, const GroupSpec& spec);
std::uint64_t count_U_beta(const BraidWord& beta, const GroupSpec& spec);

CountReport kawanaka_check(const GroupSpec& spec, const CoxElement& w);
CountReport cor_check(const BraidWord& beta, const GroupSpec& spec, BraidCounter& counter);
/// count·(q-1)^r == |G|·eval_q(v^{|β|}τ±(β)); sign Minus uses U(β), Plus uses X(β).
CountReport hecke_count_check(const BraidWord& beta, const GroupSpec& spec, TraceSign sign, BraidCounter& counter);
/// Same prediction with the extra factor q^{-N}, N = #positive roots (X(β) only).
CountReport hecke_count_check_normalized(const BraidWord& beta, const GroupSpec& spec, BraidCounter& counter);
CountReport prop44_check(const CoxElement& w, const GroupSpec& spec, BraidCounter& counter);
CountReport bruhat_constancy_check(const CoxElement& w, const GroupSpec& spec, int samples, std::uint64_t seed);
/// Unipotent count of GL_n against |U₊U₋| and p^{n(n-1)}.
CountReport steinberg_check(int n, std::uint32_t p);

/// Bijectivity and landing of v_to_x_map onto X_g for g = ẇ, plus H_g-equivariance when requested.
CountReport v_to_x_check(const CoxElement& w, const GroupSpec& spec, bool check_equivariance);

/// Φ(V_g) ⊆ U_g ∩ gB₊ and Φ(b·x) = bΦ(x)b^{-1} over all x ∈ V_g, b ∈ H_g for g = ẇ.
CountReport phi_equivariance_check(const CoxElement& w, const GroupSpec& spec);

}  // namespace unitwist
