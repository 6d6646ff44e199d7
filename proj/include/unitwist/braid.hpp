#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unitwist/coxeter.hpp"

namespace unitwist {

/// A positive braid word: a sequence of 1-based simple generators.
/// Equality is literal word equality.
class BraidWord {
 public:
  BraidWord(CoxeterSystem system, std::vector<int> letters);

  const CoxeterSystem& system() const noexcept { return system_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  /// |β|, the number of letters.
  int size() const noexcept { return static_cast<int>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.system_ == b.system_ && a.letters_ == b.letters_;
  }

  std::string to_string() const;

 private:
  CoxeterSystem system_;
  std::vector<int> letters_;
};

/// σ_w: the greedy reduced word of w.
BraidWord braid_of_element(const CoxeterSystem& sys, const CoxElement& w);
/// π = σ_{w0}^2.
BraidWord full_twist(const CoxeterSystem& sys);
BraidWord braid_concat(const BraidWord& a, const BraidWord& b);

/// Parses "1,2,1" or "1 2 1" (commas and whitespace both separate).
std::vector<int> parse_word(std::string_view text);

/// All words of exactly the given length over rank generators, in lexicographic order.
std::vector<std::vector<int>> all_words(int rank, int length);

}  // namespace unitwist
