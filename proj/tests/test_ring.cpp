#include <random>

#include "doctest.h"
#include "unitwist/error.hpp"
#include "unitwist/ring.hpp"

using namespace unitwist;

namespace {

using P = LaurentPoly;

const P v = P::v();
const P vi = P::monomial(-1);

// Evaluation at an integer point v = x, scaled by x^shift so the result is integral.
mpz_class eval_at(const P& a, long x, int shift) {
  mpz_class out = 0;
  for (const auto& [e, c] : a.terms()) {
    mpz_class term;
    mpz_pow_ui(term.get_mpz_t(), mpz_class(x).get_mpz_t(), static_cast<unsigned long>(e + shift));
    out += c * term;
  }
  return out;
}

P random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-4, 4), coef(-5, 5), terms(0, 4);
  P out;
  for (int i = terms(rng); i > 0; --i) out.add_term(exp(rng), coef(rng));
  return out;
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK((v - vi) * (v + vi) == P::monomial(2) - P::monomial(-2));
  const P a = P::from_pairs({{3, 2}, {-1, -7}});
  CHECK((a + (-a)).is_zero());
  CHECK((a + (-a)).terms().empty());
  CHECK((v - vi).pow(2) == P::monomial(2) - 2 + P::monomial(-2));
  CHECK(P::delta() == v - vi);
}

TEST_CASE("bar involution") {
  CHECK(bar(v - vi) == vi - v);
  CHECK(bar(P(3)) == P(3));
  CHECK(bar(P::monomial(2) + 2 * v) == P::monomial(-2) + P::monomial(-1, 2));
}

TEST_CASE("evaluation at q") {
  CHECK(eval_q(P::monomial(2) - 1, 3) == 2);
  CHECK(eval_q(P::monomial(-2), 2) == mpq_class(1, 2));
  try {
    (void)eval_q(v, 4);
    FAIL("expected OddExponent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OddExponent);
  }
}

TEST_CASE("no zero coefficients are stored") {
  P a = P::from_pairs({{1, 2}, {1, -2}, {0, 0}});
  CHECK(a.is_zero());
  a.add_term(4, 3);
  a.add_term(4, -3);
  CHECK(a.is_zero());
}

TEST_CASE("exact division") {
  const P d = P::delta();
  const P trefoil = d.pow(3) + 2 * d;
  auto q = trefoil.div_exact(d);
  REQUIRE(q);
  CHECK(*q == P::monomial(2) + P::monomial(-2));
  CHECK_FALSE((v + 1).div_exact(v - 1));
  CHECK(P().div_exact(d) == P());
}

TEST_CASE("serialization") {
  CHECK(serialize(P::from_pairs({{-1, -1}, {1, 1}})) == "[[-1,-1],[1,1]]");
  CHECK(serialize(P()) == "[]");
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
  CHECK(serialize(P::monomial(0, big)) == "[[0,\"1000000000000000000000000000000\"]]");
}

TEST_CASE("evaluation homomorphism oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const P a = random_poly(rng), b = random_poly(rng);
    for (long x : {2L, 3L, -5L}) {
      // Shift by 8 per factor keeps all exponents non-negative.
      CHECK(eval_at(a * b, x, 16) == eval_at(a, x, 8) * eval_at(b, x, 8));
      CHECK(eval_at(a + b, x, 8) == eval_at(a, x, 8) + eval_at(b, x, 8));
    }
  }
}

TEST_CASE("big coefficients") {
  const P big = (P::delta() + 3).pow(80);
  CHECK_FALSE(big.coeff(0).fits_slong_p());
  // x^80 (x - 1/x + 3)^80 at x = 2 is 9^80.
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 9, 80);
  CHECK(eval_at(big, 2, 80) == expected);
}
