#include "support.hpp"
#include "unitwist/braid.hpp"

using namespace unitwist;

TEST_CASE("braid_of_element") {
  const auto a2 = CoxeterSystem::A(2);
  CHECK(braid_of_element(a2, a2.identity()).empty());
  CHECK(braid_of_element(a2, a2.generator(2)).letters() == std::vector<int>{2});
  const auto b = braid_of_element(a2, a2.longest());
  CHECK(b.size() == 3);
  CHECK(a2.from_word(b.letters()) == a2.longest());
}

TEST_CASE("full twist") {
  CHECK(full_twist(CoxeterSystem::A(1)).letters() == std::vector<int>{1, 1});
  CHECK(full_twist(CoxeterSystem::A(2)).size() == 6);
  CHECK(full_twist(CoxeterSystem::I2(4)).size() == 8);
  for (const auto& sys : testing::small_systems()) {
    const auto pi = full_twist(sys);
    CHECK(pi.size() == 2 * sys.length(sys.longest()));
    CHECK(sys.from_word(pi.letters()) == sys.identity());
  }
}

TEST_CASE("concatenation") {
  const auto a2 = CoxeterSystem::A(2);
  const BraidWord beta(a2, {1, 2, 2});
  CHECK(braid_concat(beta, BraidWord(a2, {})) == beta);
  CHECK(braid_concat(BraidWord(a2, {1}), BraidWord(a2, {2})).letters() == std::vector<int>{1, 2});
  CHECK(braid_concat(beta, full_twist(a2)).size() == beta.size() + 2 * a2.length(a2.longest()));
  CHECK_ERROR_KIND(braid_concat(beta, BraidWord(CoxeterSystem::A(3), {1})), ErrorKind::SystemMismatch);
}

TEST_CASE("parsing and validation") {
  CHECK(parse_word("1,2,1") == std::vector<int>{1, 2, 1});
  CHECK(parse_word(" 1 2  1 ") == std::vector<int>{1, 2, 1});
  CHECK(parse_word("3, 1") == std::vector<int>{3, 1});
  CHECK(parse_word("").empty());
  CHECK_ERROR_KIND(parse_word("1,x"), ErrorKind::InvalidArgument);
  CHECK_ERROR_KIND(BraidWord(CoxeterSystem::A(2), {1, 3}), ErrorKind::InvalidArgument);
  CHECK_ERROR_KIND(BraidWord(CoxeterSystem::A(2), {0}), ErrorKind::InvalidArgument);
}

TEST_CASE("all_words") {
  CHECK(all_words(2, 0).size() == 1);
  CHECK(all_words(3, 4).size() == 81);
  const auto words = all_words(2, 3);
  CHECK(words.front() == std::vector<int>{1, 1, 1});
  CHECK(words.back() == std::vector<int>{2, 2, 2});
  CHECK(std::is_sorted(words.begin(), words.end()));
  std::size_t total = 0;
  for (int k = 0; k <= 6; ++k) total += all_words(2, k).size();
  CHECK(total == 127);
}
