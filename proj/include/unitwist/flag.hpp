#pragma once

/**
 * @file flag.hpp
 * @brief Complete flags in F_p^n as canonical representatives of G/B₊.
 *
 * Canonical form (right B₊ acts by column operations that only add earlier
 * columns to later ones): each column's lowest nonzero entry is 1, and every
 * later column vanishes in that row. Subspace i is the span of columns 1..i.
 */

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "unitwist/coxeter.hpp"
#include "unitwist/matrix.hpp"

namespace unitwist {

class Flag {
 public:
  const Mat& matrix() const noexcept { return m_; }
  int n() const noexcept { return m_.n(); }
  std::uint32_t p() const noexcept { return m_.p(); }

  friend bool operator==(const Flag&, const Flag&) = default;
  friend auto operator<=>(const Flag&, const Flag&) = default;

 private:
  friend Flag flag_canonicalize(const Mat& m);
  explicit Flag(Mat m) : m_(std::move(m)) {}
  Mat m_;
};

/// Canonical representative of m·B₊. Throws Singular.
Flag flag_canonicalize(const Mat& m);
/// The flag of B₊ itself (identity matrix).
Flag standard_flag(int n, std::uint32_t p);
/// g·F.
Flag act(const Mat& g, const Flag& f);

/// w ∈ S_n with relative_position(std, ẇ·std) = w. Throws DimensionMismatch.
CoxElement relative_position(const Flag& a, const Flag& b);

/// All flags of F_p^n with simple-reflection adjacency tables.
class FlagSpace {
 public:
  /// Throws SizeBound when the flag count exceeds max_flags.
  FlagSpace(int n, std::uint32_t p, std::size_t max_flags = 200'000);

  int n() const noexcept { return n_; }
  std::uint32_t p() const noexcept { return p_; }
  std::size_t size() const noexcept { return flags_.size(); }
  const Flag& flag(std::size_t i) const { return flags_[i]; }
  const std::vector<Flag>& flags() const noexcept { return flags_; }
  std::size_t index_of(const Flag& f) const;
  /// Index of g·flag(i).
  std::size_t act_index(const Mat& g, std::size_t i) const;
  /// The p flags F' with F →s F' (s is 1-based).
  const std::vector<std::size_t>& neighbors(std::size_t i, int s) const {
    return adjacency_[i][static_cast<std::size_t>(s - 1)];
  }

 private:
  int n_;
  std::uint32_t p_;
  std::vector<Flag> flags_;
  std::unordered_map<Mat, std::size_t, MatHash> index_;
  std::vector<std::vector<std::vector<std::size_t>>> adjacency_;
};

/// Number of complete flags: ∏_{k=1}^{n} (q^k - 1)/(q - 1).
std::uint64_t flag_count(int n, std::uint32_t p);

}  // namespace unitwist
