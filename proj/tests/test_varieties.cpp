#include <functional>
#include <set>
#include <tuple>

#include "support.hpp"
#include "unitwist/varieties.hpp"

using namespace unitwist;

namespace {

// Flags of F_p^n as the orbit of the standard flag under all of GL_n.
std::vector<Flag> flags_by_orbit(int n, std::uint32_t p) {
  std::set<Flag> seen;
  const GroupSpec spec(GroupFamily::GL, n, p);
  const Flag base = standard_flag(n, p);
  const int cells = n * n;
  std::uint64_t total = 1;
  for (int i = 0; i < cells; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Mat m(n, p);
    std::uint64_t c = code;
    for (int k = 0; k < cells; ++k, c /= p) m.set(k / n, k % n, static_cast<long long>(c % p));
    if (m.det() != 0) seen.insert(act(m, base));
  }
  return {seen.begin(), seen.end()};
}

std::vector<Mat> unipotents_by_scan(int n, std::uint32_t p) {
  std::vector<Mat> out;
  const int cells = n * n;
  std::uint64_t total = 1;
  for (int i = 0; i < cells; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Mat m(n, p);
    std::uint64_t c = code;
    for (int k = 0; k < cells; ++k, c /= p) m.set(k / n, k % n, static_cast<long long>(c % p));
    if (m.det() != 0 && is_unipotent(m)) out.push_back(m);
  }
  return out;
}

// Number of chains first →s_1 F_1 →s_2 ... →s_k F_k with F_k = last, over explicit tuples.
std::uint64_t chains(const std::vector<Flag>& flags, const std::vector<int>& word, const Flag& first,
                     const std::function<bool(const Flag&)>& accept_last, int n) {
  const auto sys = CoxeterSystem::A(n - 1);
  std::function<std::uint64_t(std::size_t, const Flag&)> rec = [&](std::size_t i, const Flag& prev) -> std::uint64_t {
    if (i == word.size()) return accept_last(prev) ? 1 : 0;
    std::uint64_t total = 0;
    for (const Flag& f : flags)
      if (relative_position(prev, f) == sys.generator(word[i])) total += rec(i + 1, f);
    return total;
  };
  return rec(0, first);
}

std::uint64_t brute_X(const std::vector<Flag>& flags, const std::vector<int>& word, int n) {
  if (word.empty()) return flags.size();
  std::uint64_t total = 0;
  for (const Flag& start : flags) total += chains(flags, word, start, [&](const Flag& f) { return f == start; }, n);
  return total;
}

std::uint64_t brute_U(const std::vector<Flag>& flags, const std::vector<Mat>& unipotents, const std::vector<int>& word,
                      int n) {
  std::uint64_t total = 0;
  for (const Mat& u : unipotents) {
    const Mat uinv = u.inverse();
    for (const Flag& last : flags) {
      const Flag twisted = act(uinv, last);
      if (word.empty()) {
        total += twisted == last ? 1 : 0;
        continue;
      }
      total += chains(flags, word, twisted, [&](const Flag& f) { return f == last; }, n);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("unipotent enumeration matches an independent scan") {
  for (auto [n, p] : {std::pair{2, 2u}, std::pair{2, 3u}, std::pair{2, 5u}, std::pair{3, 2u}, std::pair{3, 3u}}) {
    const auto lib = enumerate_unipotents(n, p);
    const auto oracle = unipotents_by_scan(n, p);
    CHECK(std::set<Mat>(lib.begin(), lib.end()) == std::set<Mat>(oracle.begin(), oracle.end()));
    std::uint64_t expected = 1;
    for (int k = 0; k < n * (n - 1); ++k) expected *= p;
    CHECK(lib.size() == expected);
  }
  CHECK_ERROR_KIND(enumerate_unipotents(4, 5), ErrorKind::SizeBound);
}

TEST_CASE("braid variety counts against tuple enumeration") {
  for (auto [n, p, max_len] : {std::tuple{2, 2u, 4}, std::tuple{2, 3u, 3}, std::tuple{3, 2u, 3}}) {
    const auto flags = flags_by_orbit(n, p);
    const auto unipotents = unipotents_by_scan(n, p);
    BraidCounter counter(n, p);
    CHECK(counter.flags().size() == flags.size());
    for (int k = 0; k <= max_len; ++k)
      for (const auto& w : all_words(n - 1, k)) {
        CHECK(counter.count_X(w) == brute_X(flags, w, n));
        CHECK(counter.count_U(w) == brute_U(flags, unipotents, w, n));
      }
  }
}

TEST_CASE("hand-computed braid counts") {
  const GroupSpec gl2(GroupFamily::GL, 2, 2);
  const auto a1 = gl2.weyl();
  for (std::uint32_t p : {2u, 3u, 5u}) CHECK(count_X_beta(BraidWord(a1, {1}), GroupSpec(GroupFamily::GL, 2, p)) == 0);
  CHECK(count_X_beta(braid_concat(BraidWord(a1, {1}), full_twist(a1)), gl2) == 6);
  CHECK(count_U_beta(BraidWord(a1, {1}), gl2) == 6);
  const GroupSpec gl2_3(GroupFamily::GL, 2, 3);
  CHECK(count_U_beta(BraidWord(a1, {1}), gl2_3) == 24);
  CHECK(count_U_beta(BraidWord(a1, {1, 1}), gl2_3) == 84);
  BraidCounter counter(2, 2);
  CHECK(counter.unipotent_count() == 4);
  CHECK_ERROR_KIND(counter.count_X(std::vector<int>(11, 1)), ErrorKind::SizeBound);
  CHECK_ERROR_KIND(counter.count_X({2}), ErrorKind::InvalidArgument);
  CHECK_ERROR_KIND(count_X_beta(BraidWord(CoxeterSystem::A(2), {1}), gl2), ErrorKind::SystemMismatch);
}

TEST_CASE("coset counts") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const GroupSpec sl2(GroupFamily::SL, 2, p);
    const Mat w0 = weyl_lift(sl2.weyl().longest(), sl2);
    CHECK(count_Ug(w0, sl2) == p - 1);
    CHECK(count_Vg(w0, sl2) == p - 1);
  }
  const GroupSpec sl3(GroupFamily::SL, 3, 2);
  const Mat w0 = weyl_lift(sl3.weyl().longest(), sl3);
  CHECK(count_Ug(w0, sl3) == 3);
  CHECK(count_Vg(w0, sl3) == 3);
  CHECK(count_Xg(w0, sl3) == 3);
  const GroupSpec sl2(GroupFamily::SL, 2, 3);
  CHECK(count_Xg(weyl_lift(sl2.weyl().longest(), sl2), sl2) == 2);
  const GroupSpec gl2(GroupFamily::GL, 2, 2);
  CHECK(count_Xg(Mat::identity(2, 2), gl2) == 2);
  // g in B₊: both sides are U₊.
  for (const auto& spec : {GroupSpec(GroupFamily::GL, 3, 3), GroupSpec(GroupFamily::SP4, 4, 3)}) {
    const auto c = count_coset(Mat::identity(spec.n(), spec.p()), spec);
    std::uint64_t upper = 1;
    for (int k = 0; k < spec.positive_roots(); ++k) upper *= spec.p();
    CHECK(c.unipotent == upper);
    CHECK(c.big_cell == upper);
  }
  CHECK_ERROR_KIND(count_Xg(Mat::identity(4, 3), GroupSpec(GroupFamily::SP4, 4, 3)), ErrorKind::InvalidArgument);
}

TEST_CASE("identity reports") {
  const GroupSpec sp4(GroupFamily::SP4, 4, 3);
  CHECK(kawanaka_check(sp4, sp4.weyl().from_word({1, 2, 1})).pass);
  for (const auto& spec : {GroupSpec(GroupFamily::SL, 3, 2), GroupSpec(GroupFamily::SL, 3, 3)})
    for (const auto& w : spec.weyl().enumerate()) CHECK(kawanaka_check(spec, w).pass);

  const auto st = steinberg_check(2, 3);
  CHECK(st.pass);
  CHECK(st.lhs == 9);

  const GroupSpec gl2(GroupFamily::GL, 2, 2);
  BraidCounter c2(2, 2);
  const auto cor = cor_check(BraidWord(gl2.weyl(), {1}), gl2, c2);
  CHECK(cor.pass);
  CHECK(cor.lhs == 6);
  const auto hecke = hecke_count_check(BraidWord(gl2.weyl(), {1}), gl2, TraceSign::Minus, c2);
  CHECK(hecke.pass);
  CHECK(hecke.lhs == 6);
  CHECK(hecke.rhs == 6);
  const auto prop = prop44_check(gl2.weyl().generator(1), gl2, c2);
  CHECK(prop.pass);
  CHECK(prop.extra["counts"]["U_g"] == 1);
  CHECK(prop.extra["counts"]["G"] == 6);
  CHECK(prop.extra["counts"]["U_sigma_w"] == 6);
  CHECK(prop.extra["counts"]["H_g"] == 1);
  CHECK(prop44_check(gl2.weyl().identity(), gl2, c2).pass);

  const GroupSpec sl3(GroupFamily::SL, 3, 2);
  const auto constancy = bruhat_constancy_check(sl3.weyl().longest(), sl3, 5, 9);
  CHECK(constancy.pass);
  CHECK(constancy.seed == 9u);
}

TEST_CASE("V_g to X_g map") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const GroupSpec sl2(GroupFamily::SL, 2, p);
    CHECK(v_to_x_check(sl2.weyl().longest(), sl2, p == 2).pass);
  }
  for (const auto& spec : {GroupSpec(GroupFamily::SL, 3, 2), GroupSpec(GroupFamily::GL, 3, 2)})
    for (const auto& word : {std::vector<int>{1, 2, 1}, std::vector<int>{1, 2}, std::vector<int>{2, 1}})
      CHECK(v_to_x_check(spec.weyl().from_word(word), spec, true).pass);
  const GroupSpec gl2(GroupFamily::GL, 2, 2);
  CHECK(v_to_x_check(gl2.weyl().longest(), gl2, true).pass);
  const Mat w0 = weyl_lift(gl2.weyl().longest(), gl2);
  CHECK_ERROR_KIND(v_to_x_map(Mat::identity(2, 2), w0, gl2), ErrorKind::NotInBigCell);
}

TEST_CASE("Phi equivariance") {
  for (const auto& spec : {GroupSpec(GroupFamily::SL, 2, 3), GroupSpec(GroupFamily::SL, 3, 2),
                           GroupSpec(GroupFamily::SL, 3, 3)})
    for (const auto& w : spec.weyl().enumerate()) CHECK(phi_equivariance_check(w, spec).pass);
}

TEST_CASE("report serialization") {
  const GroupSpec sl3(GroupFamily::SL, 3, 2);
  const auto j = kawanaka_check(sl3, sl3.weyl().longest()).to_json();
  CHECK(j.dump() == R"({"check":"kawanaka","params":{"group":"sl","n":3,"p":2,"w":[1,2,1]},"lhs":3,"rhs":3,"pass":true})");
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 25);
  CHECK(json_number(big) == "10000000000000000000000000");
  CHECK(json_number(mpq_class(3, 6)) == "1/2");
}
