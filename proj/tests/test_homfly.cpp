#include "support.hpp"
#include "unitwist/braid.hpp"
#include "unitwist/homfly.hpp"

using namespace unitwist;

namespace {
using P = LaurentPoly;
const P d = P::delta();
}  // namespace

TEST_CASE("extreme coefficient examples") {
  const auto a1 = CoxeterSystem::A(1);
  const auto unknot = extreme_coeff(BraidWord(a1, {1}), TraceSign::Minus);
  CHECK(unknot.numerator == -d);
  CHECK(unknot.denominator == -d);
  CHECK(unknot.a_degree == 0);
  CHECK(exact_value(unknot) == P(1));

  const auto trefoil = extreme_coeff(BraidWord(a1, {1, 1, 1}), TraceSign::Minus);
  CHECK(trefoil.a_degree == 2);
  CHECK(exact_value(trefoil) == P::monomial(2) + P::monomial(-2));

  const auto unlink = extreme_coeff(BraidWord(a1, {}), TraceSign::Plus);
  CHECK(unlink.numerator == 1);
  CHECK(unlink.a_degree == 1);
  CHECK_FALSE(exact_value(unlink));
}

TEST_CASE("denominators and degrees") {
  for (int n = 2; n <= 4; ++n) {
    const auto sys = CoxeterSystem::A(n - 1);
    const BraidWord beta(sys, {1, 1});
    for (auto sign : {TraceSign::Minus, TraceSign::Plus}) {
      const auto c = extreme_coeff(beta, sign);
      CHECK(c.denominator == (-d).pow(static_cast<unsigned>(n - 1)));
      CHECK(c.strands == n);
      CHECK(c.a_degree == (sign == TraceSign::Minus ? 2 - (n - 1) : 2 + (n - 1)));
    }
  }
}

TEST_CASE("coefficient equality") {
  const auto a1 = CoxeterSystem::A(1);
  const auto x = extreme_coeff(BraidWord(a1, {}), TraceSign::Plus);
  CHECK(coeff_equal(x, x));
  ExtremeCoeff y = x;
  y.numerator = -d;
  y.denominator = d * d;
  CHECK(coeff_equal(x, y));
  ExtremeCoeff one{P(1), P(1), 0, 2}, q{P::monomial(2), P(1), 0, 2};
  CHECK_FALSE(coeff_equal(one, q));
}

TEST_CASE("Kalman identity") {
  const auto a1 = CoxeterSystem::A(1);
  CHECK(kalman_check(BraidWord(a1, {})).pass);
  CHECK(kalman_check(BraidWord(CoxeterSystem::A(3), {})).pass);
  CHECK(kalman_check(BraidWord(a1, {1})).pass);
  for (int k = 0; k <= 5; ++k) {
    const auto r = kalman_check(BraidWord(a1, std::vector<int>(static_cast<std::size_t>(2 * k + 1), 1)));
    CHECK(r.pass);
    CHECK(r.degrees_aligned);
  }
  for (int k = 0; k <= 4; ++k)
    for (const auto& w : all_words(2, k)) CHECK(kalman_check(BraidWord(CoxeterSystem::A(2), w)).pass);
}

TEST_CASE("error paths") {
  CHECK_ERROR_KIND(extreme_coeff(BraidWord(CoxeterSystem::B(2), {1}), TraceSign::Minus), ErrorKind::InvalidArgument);
  CHECK_ERROR_KIND(kalman_check(BraidWord(CoxeterSystem::I2(5), {1})), ErrorKind::InvalidArgument);
}
