#include "unitwist/braid.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "unitwist/error.hpp"

namespace unitwist {

BraidWord::BraidWord(CoxeterSystem system, std::vector<int> letters)
    : system_(std::move(system)), letters_(std::move(letters)) {
  for (int s : letters_) {
    if (!system_.valid_generator(s)) {
      throw Error(ErrorKind::InvalidArgument, "letter " + std::to_string(s) + " is not a generator of " + system_.name());
    }
  }
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? "," : "") << letters_[i];
  os << "]";
  return os.str();
}

BraidWord braid_of_element(const CoxeterSystem& sys, const CoxElement& w) {
  return BraidWord(sys, sys.reduced_word(w));
}

BraidWord full_twist(const CoxeterSystem& sys) {
  const BraidWord half = braid_of_element(sys, sys.longest());
  return braid_concat(half, half);
}

BraidWord braid_concat(const BraidWord& a, const BraidWord& b) {
  if (!(a.system() == b.system())) {
    throw Error(ErrorKind::SystemMismatch, a.system().name() + " vs " + b.system().name());
  }
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.system(), std::move(letters));
}

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i) {
      throw Error(ErrorKind::InvalidArgument, "cannot parse word '" + std::string(text) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

std::vector<std::vector<int>> all_words(int rank, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> word(length, 1);
  while (true) {
    out.push_back(word);
    int pos = length - 1;
    while (pos >= 0 && word[pos] == rank) word[pos--] = 1;
    if (pos < 0) break;
    ++word[pos];
  }
  return out;
}

}  // namespace unitwist
