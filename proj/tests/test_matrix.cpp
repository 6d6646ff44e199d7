#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"
#include "unitwist/matrix.hpp"

using namespace unitwist;

namespace {

Mat random_mat(std::mt19937_64& rng, int n, std::uint32_t p) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  Mat m(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, dist(rng));
  return m;
}

// Leibniz expansion.
Entry det_oracle(const Mat& m) {
  const int n = m.n();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Fp total(0, m.p());
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    Fp term(inversions % 2 ? -1 : 1, m.p());
    for (int i = 0; i < n; ++i) term = term * m.at(i, perm[static_cast<std::size_t>(i)]);
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total.value();
}

}  // namespace

TEST_CASE("prime field basics") {
  CHECK(is_prime(2));
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(reduce_mod(-1, 5) == 4);
  CHECK(reduce_mod(-10, 5) == 0);
  for (Entry a = 1; a < 101; ++a) CHECK((Fp(a, 101) * Fp(a, 101).inv()).value() == 1);
  CHECK(Fp(3, 7).pow(6).value() == 1);
  CHECK_ERROR_KIND(inv_mod(0, 7), ErrorKind::Singular);
}

TEST_CASE("matrix examples") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Mat a = random_mat(rng, 3, 7);
    CHECK(a.transpose().transpose() == a);
    CHECK(a.pow(0) == Mat::identity(3, 7));
    if (a.det() != 0) {
      CHECK(a * a.inverse() == Mat::identity(3, 7));
      CHECK(a.inverse() * a == Mat::identity(3, 7));
      CHECK(a.rank() == 3);
    } else {
      CHECK_ERROR_KIND(a.inverse(), ErrorKind::Singular);
      CHECK(a.rank() < 3);
    }
  }
  const Mat m(5, {{1, 2}, {3, 4}});
  CHECK(m(1, 0) == 3);
  CHECK(m.pow(2) == m * m);
  CHECK(m.pow(5) == m * m * m * m * m);
  CHECK(Mat(5, {{-1}})(0, 0) == 4);
}

TEST_CASE("determinant against Leibniz expansion") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u, 5u, 101u})
    for (int n = 1; n <= 4; ++n)
      for (int i = 0; i < 250; ++i) {
        const Mat a = random_mat(rng, n, p), b = random_mat(rng, n, p);
        CHECK(a.det() == det_oracle(a));
        CHECK((a * b).det() == (Fp(a.det(), p) * Fp(b.det(), p)).value());
      }
}

TEST_CASE("shape predicates") {
  const Mat u(5, {{1, 3, 4}, {0, 1, 2}, {0, 0, 1}});
  CHECK(u.is_upper_triangular());
  CHECK(u.is_unit_upper());
  CHECK_FALSE(u.is_unit_lower());
  CHECK(u.transpose().is_unit_lower());
  CHECK(Mat::diagonal({2, 3, 4}, 5).is_diagonal());
  CHECK_FALSE(u.is_diagonal());
  CHECK(Mat(3, 3).is_zero());
}

TEST_CASE("error paths") {
  CHECK_ERROR_KIND(Mat(5, {{1, 2}, {3}}), ErrorKind::DimensionMismatch);
  CHECK_ERROR_KIND(Mat::identity(2, 5) * Mat::identity(3, 5), ErrorKind::DimensionMismatch);
  CHECK_ERROR_KIND(Mat::identity(2, 5) + Mat::identity(2, 7), ErrorKind::DimensionMismatch);
  CHECK_ERROR_KIND(Mat(5, {{1, 2}, {2, 4}}).inverse(), ErrorKind::Singular);
}
