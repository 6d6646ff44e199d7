#pragma once

/**
 * @file coxeter.hpp
 * @brief Finite Coxeter groups of type A(n), B(n) and I2(m).
 *
 * Elements carry a canonical encoding so equality and multiplication are
 * plain array operations:
 *  - A(n): one-line notation of a permutation of {0,...,n} (0-based images);
 *  - B(n): signed one-line notation w(1..n), entries in {±1,...,±n};
 *  - I2(m): the pair (k, eps) meaning r^k (eps = +1) or r^k s (eps = -1),
 *    with r = s t.
 *
 * Generators are 1-based. In A(n), generator i swaps i and i+1. In B(n),
 * generators 1..n-1 are adjacent transpositions and generator n negates the
 * last coordinate (so m(n-1, n) = 4). In I2(m), generator 1 is s and 2 is t.
 */

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace unitwist {

enum class Family { A, B, I2 };

class CoxeterSystem;

class CoxElement {
 public:
  CoxElement() = default;
  CoxElement(Family family, int rank, int m, std::vector<int> code)
      : family_(family), rank_(rank), m_(m), code_(std::move(code)) {}

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  const std::vector<int>& code() const noexcept { return code_; }

  /// True when both elements live in the same Coxeter system.
  bool same_system(const CoxElement& other) const noexcept {
    return family_ == other.family_ && rank_ == other.rank_ && m_ == other.m_;
  }

  friend bool operator==(const CoxElement&, const CoxElement&) = default;
  friend auto operator<=>(const CoxElement& a, const CoxElement& b) { return a.code_ <=> b.code_; }

 private:
  friend class CoxeterSystem;
  Family family_ = Family::A;
  int rank_ = 0;
  int m_ = 0;
  std::vector<int> code_;
};

struct CoxElementHash {
  std::size_t operator()(const CoxElement& e) const noexcept;
};

class CoxeterSystem {
 public:
  static CoxeterSystem A(int rank);
  static CoxeterSystem B(int rank);
  static CoxeterSystem I2(int m);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  /// Dihedral order parameter (I2 only; 0 otherwise).
  int dihedral_m() const noexcept { return m_; }
  /// m(s,t) for 1-based generators.
  int coxeter_entry(int s, int t) const;
  std::vector<std::vector<int>> coxeter_matrix() const;
  std::string name() const;

  friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_ && a.m_ == b.m_;
  }

  bool contains(const CoxElement& a) const noexcept;
  bool valid_generator(int s) const noexcept { return s >= 1 && s <= rank_; }

  CoxElement identity() const;
  CoxElement generator(int s) const;
  CoxElement mul(const CoxElement& a, const CoxElement& b) const;
  CoxElement inv(const CoxElement& a) const;
  /// Folds a word of 1-based generators.
  CoxElement from_word(const std::vector<int>& word) const;

  int length(const CoxElement& a) const;
  bool right_descent(const CoxElement& a, int s) const;
  bool left_descent(const CoxElement& a, int s) const;
  /// Greedy: repeatedly strip the smallest right descent, so the word reads left to right.
  std::vector<int> reduced_word(const CoxElement& a) const;
  /// Every reduced word of a (small groups only; exponential in length).
  std::vector<std::vector<int>> all_reduced_words(const CoxElement& a) const;
  CoxElement longest() const;
  std::size_t order() const;
  /// Breadth-first closure; throws SizeBound above max_size.
  std::vector<CoxElement> enumerate(std::size_t max_size = 3628800) const;

  std::string element_to_string(const CoxElement& a) const;

 private:
  CoxeterSystem(Family family, int rank, int m) : family_(family), rank_(rank), m_(m) {}
  void check(const CoxElement& a) const;

  Family family_;
  int rank_;
  int m_;
};

}  // namespace unitwist
