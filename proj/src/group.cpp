#include "unitwist/group.hpp"

#include <vector>

#include "unitwist/error.hpp"

namespace unitwist {

std::string to_string(GroupFamily family) {
  switch (family) {
    case GroupFamily::GL: return "gl";
    case GroupFamily::SL: return "sl";
    case GroupFamily::SP4: return "sp4";
  }
  return "?";
}

GroupSpec::GroupSpec(GroupFamily family, int n, std::uint32_t p) : family_(family), n_(n), p_(p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (family == GroupFamily::SP4) {
    if (n != 4) throw Error(ErrorKind::InvalidArgument, "sp4 requires n = 4");
    if (p == 2) throw Error(ErrorKind::InvalidArgument, "sp4 requires odd characteristic");
  }
  if (n < 1 || n > 4) throw Error(ErrorKind::InvalidArgument, "matrix size must be between 1 and 4");
}

int GroupSpec::r() const noexcept {
  switch (family_) {
    case GroupFamily::GL: return n_;
    case GroupFamily::SL: return n_ - 1;
    case GroupFamily::SP4: return 2;
  }
  return n_;
}

int GroupSpec::torus_rank() const noexcept { return r(); }

int GroupSpec::positive_roots() const noexcept {
  return family_ == GroupFamily::SP4 ? 4 : n_ * (n_ - 1) / 2;
}

CoxeterSystem GroupSpec::weyl() const {
  if (family_ == GroupFamily::SP4) return CoxeterSystem::B(2);
  if (n_ < 2) throw Error(ErrorKind::InvalidArgument, "Weyl group of a rank-0 group");
  return CoxeterSystem::A(n_ - 1);
}

mpz_class GroupSpec::order() const {
  const mpz_class q = p_;
  if (family_ == GroupFamily::SP4) {
    mpz_class q2 = q * q;
    return q2 * q2 * (q2 - 1) * (q2 * q2 - 1);
  }
  mpz_class qn;
  mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n_));
  mpz_class out = 1;
  mpz_class qi = 1;
  for (int i = 0; i < n_; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  if (family_ == GroupFamily::SL) out /= q - 1;
  return out;
}

std::uint64_t GroupSpec::borel_size() const {
  std::uint64_t out = 1;
  for (int i = 0; i < torus_rank(); ++i) out *= p_ - 1;
  for (int i = 0; i < positive_roots(); ++i) out *= p_;
  return out;
}

std::string GroupSpec::name() const {
  switch (family_) {
    case GroupFamily::GL: return "GL" + std::to_string(n_) + "(F" + std::to_string(p_) + ")";
    case GroupFamily::SL: return "SL" + std::to_string(n_) + "(F" + std::to_string(p_) + ")";
    case GroupFamily::SP4: return "Sp4(F" + std::to_string(p_) + ")";
  }
  return "?";
}

Mat sp4_form(std::uint32_t p) { return Mat(p, {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}}); }

bool is_unipotent(const Mat& g) {
  return (g - Mat::identity(g.n(), g.p())).pow(static_cast<unsigned>(g.n())).is_zero();
}

bool in_group(const Mat& g, const GroupSpec& spec) {
  if (g.n() != spec.n() || g.p() != spec.p()) return false;
  switch (spec.family()) {
    case GroupFamily::GL: return g.det() != 0;
    case GroupFamily::SL: return g.det() == 1;
    case GroupFamily::SP4: {
      const Mat j = sp4_form(spec.p());
      return g.transpose() * j * g == j;
    }
  }
  return false;
}

std::optional<ULFactors> ul_factorize(const Mat& x) {
  // Reversing rows and columns turns x = U·L into y = L'·U' (Doolittle LU),
  // where unit diagonals on both factors force every pivot to be 1.
  const int n = x.n();
  const std::uint32_t p = x.p();
  auto rev = [n](int i) { return n - 1 - i; };
  Mat lo = Mat::identity(n, p);
  Mat up(n, p);
  for (int k = 0; k < n; ++k) {
    for (int j = k; j < n; ++j) {
      Fp s = x.at(rev(k), rev(j));
      for (int m = 0; m < k; ++m) s = s - lo.at(k, m) * up.at(m, j);
      up.set(k, j, s);
    }
    if (up(k, k) != 1) return std::nullopt;
    for (int i = k + 1; i < n; ++i) {
      Fp s = x.at(rev(i), rev(k));
      for (int m = 0; m < k; ++m) s = s - lo.at(i, m) * up.at(m, k);
      lo.set(i, k, s);
    }
  }
  ULFactors out{Mat(n, p), Mat(n, p)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.upper.set(i, j, lo(rev(i), rev(j)));
      out.lower.set(i, j, up(rev(i), rev(j)));
    }
  }
  return out;
}

BorelParts decompose_borel(const Mat& x) {
  if (!x.is_upper_triangular()) throw Error(ErrorKind::NotUpperTriangular, x.to_string());
  const int n = x.n();
  Mat t(n, x.p());
  Mat tinv(n, x.p());
  for (int i = 0; i < n; ++i) {
    if (x(i, i) == 0) throw Error(ErrorKind::Singular, "upper-triangular matrix with zero diagonal");
    t.set(i, i, x(i, i));
    tinv.set(i, i, inv_mod(x(i, i), x.p()));
  }
  return {t, x * tinv};
}

namespace {

Mat permutation_matrix(const CoxElement& w, std::uint32_t p) {
  const auto& code = w.code();
  const int n = static_cast<int>(code.size());
  Mat m(n, p);
  for (int i = 0; i < n; ++i) m.set(code[static_cast<std::size_t>(i)], i, 1);
  return m;
}

Mat sp4_generator_lift(int s, std::uint32_t p) {
  if (s == 1) return Mat(p, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  return Mat(p, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}});
}

}  // namespace

Mat weyl_lift(const CoxElement& w, const GroupSpec& spec) {
  const CoxeterSystem sys = spec.weyl();
  if (!sys.contains(w)) throw Error(ErrorKind::SystemMismatch, "element is not in the Weyl group of " + spec.name());
  switch (spec.family()) {
    case GroupFamily::GL:
      return permutation_matrix(w, spec.p());
    case GroupFamily::SL: {
      Mat m = permutation_matrix(w, spec.p());
      if (sys.length(w) % 2 == 1) {
        for (int i = 0; i < m.n(); ++i) m.set(i, 0, -static_cast<long long>(m(i, 0)));
      }
      return m;
    }
    case GroupFamily::SP4: {
      Mat m = Mat::identity(4, spec.p());
      for (int s : sys.reduced_word(w)) m = m * sp4_generator_lift(s, spec.p());
      return m;
    }
  }
  return Mat::identity(spec.n(), spec.p());
}

Mat sp4_upper(Fp a, Fp b, Fp c, Fp d) {
  Mat m = Mat::identity(4, a.modulus());
  m.set(0, 1, a);
  m.set(0, 2, b + a * d);
  m.set(0, 3, c);
  m.set(1, 2, 2 * d);
  m.set(1, 3, b - a * d);
  m.set(2, 3, -a);
  return m;
}

Mat sp4_lower(Fp a1, Fp b1, Fp c1, Fp d1) {
  Mat m = Mat::identity(4, a1.modulus());
  m.set(1, 0, a1);
  m.set(2, 0, b1 + a1 * d1);
  m.set(2, 1, 2 * d1);
  m.set(3, 0, c1);
  m.set(3, 1, b1 - a1 * d1);
  m.set(3, 2, -a1);
  return m;
}

namespace {

// Odometer over `count` digits each in [lo, p).
bool advance(std::vector<Entry>& digits, Entry lo, std::uint32_t p) {
  for (auto& d : digits) {
    if (++d < p) return true;
    d = lo;
  }
  return false;
}

}  // namespace

void for_each_upper_unipotent(const GroupSpec& spec, const std::function<void(const Mat&)>& visit) {
  const std::uint32_t p = spec.p();
  const int n = spec.n();
  std::vector<Entry> coords(static_cast<std::size_t>(spec.positive_roots()), 0);
  do {
    if (spec.family() == GroupFamily::SP4) {
      visit(sp4_upper(Fp(coords[0], p), Fp(coords[1], p), Fp(coords[2], p), Fp(coords[3], p)));
    } else {
      Mat u = Mat::identity(n, p);
      std::size_t k = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) u.set(i, j, coords[k++]);
      visit(u);
    }
  } while (advance(coords, 0, p));
}

void for_each_borel(const GroupSpec& spec, const std::function<void(const Mat&)>& visit, std::uint64_t max_points) {
  if (spec.borel_size() > max_points) {
    throw Error(ErrorKind::SizeBound, "|B+| = " + std::to_string(spec.borel_size()) + " exceeds budget");
  }
  const std::uint32_t p = spec.p();
  const int n = spec.n();
  std::vector<Entry> torus(static_cast<std::size_t>(spec.torus_rank()), 1);
  std::vector<Mat> tori;
  do {
    std::vector<Entry> diag(static_cast<std::size_t>(n));
    switch (spec.family()) {
      case GroupFamily::GL:
        diag = torus;
        break;
      case GroupFamily::SL: {
        std::uint64_t prod = 1;
        for (int i = 0; i + 1 < n; ++i) {
          diag[static_cast<std::size_t>(i)] = torus[static_cast<std::size_t>(i)];
          prod = prod * torus[static_cast<std::size_t>(i)] % p;
        }
        diag[static_cast<std::size_t>(n - 1)] = inv_mod(static_cast<Entry>(prod), p);
        break;
      }
      case GroupFamily::SP4:
        diag = {torus[0], torus[1], inv_mod(torus[1], p), inv_mod(torus[0], p)};
        break;
    }
    tori.push_back(Mat::diagonal(diag, p));
  } while (advance(torus, 1, p));
  for_each_upper_unipotent(spec, [&](const Mat& u) {
    for (const Mat& t : tori) visit(u * t);
  });
}

void enumerate_borel_coset(const Mat& g, const GroupSpec& spec, const std::function<void(const Mat&)>& visit,
                           std::uint64_t max_points) {
  for_each_borel(spec, [&](const Mat& b) { visit(g * b); }, max_points);
}

Mat random_upper_unipotent(const GroupSpec& spec, std::mt19937_64& rng) {
  const std::uint32_t p = spec.p();
  std::uniform_int_distribution<std::uint32_t> coord(0, p - 1);
  if (spec.family() == GroupFamily::SP4) {
    const auto a = coord(rng), b = coord(rng), c = coord(rng), d = coord(rng);
    return sp4_upper(Fp(a, p), Fp(b, p), Fp(c, p), Fp(d, p));
  }
  Mat u = Mat::identity(spec.n(), p);
  for (int i = 0; i < spec.n(); ++i)
    for (int j = i + 1; j < spec.n(); ++j) u.set(i, j, coord(rng));
  return u;
}

Mat random_borel(const GroupSpec& spec, std::mt19937_64& rng) {
  const std::uint32_t p = spec.p();
  std::uniform_int_distribution<std::uint32_t> unit(1, p - 1);
  const int n = spec.n();
  std::vector<Entry> diag(static_cast<std::size_t>(n));
  switch (spec.family()) {
    case GroupFamily::GL:
      for (auto& d : diag) d = unit(rng);
      break;
    case GroupFamily::SL: {
      std::uint64_t prod = 1;
      for (int i = 0; i + 1 < n; ++i) {
        diag[static_cast<std::size_t>(i)] = unit(rng);
        prod = prod * diag[static_cast<std::size_t>(i)] % p;
      }
      diag[static_cast<std::size_t>(n - 1)] = inv_mod(static_cast<Entry>(prod), p);
      break;
    }
    case GroupFamily::SP4: {
      const Entry x = unit(rng), y = unit(rng);
      diag = {x, y, inv_mod(y, p), inv_mod(x, p)};
      break;
    }
  }
  return random_upper_unipotent(spec, rng) * Mat::diagonal(diag, p);
}

Mat phi_apply(const Mat& upper, const Mat& lower) { return upper * lower * upper.inverse(); }

bool in_Hg(const Mat& b, const Mat& g) {
  if (!b.is_upper_triangular() || b.det() == 0) return false;
  return (g.inverse() * b * g).is_upper_triangular();
}

Mat action_Vg(const Mat& b, const Mat& x, const Mat& g) {
  if (!in_Hg(b, g)) throw Error(ErrorKind::NotInHg, b.to_string());
  auto factors = ul_factorize(x);
  if (!factors) throw Error(ErrorKind::NotInBigCell, x.to_string());
  const Mat t = decompose_borel(b).t;
  const Mat tinv = t.inverse();
  return (b * factors->upper * tinv) * (t * factors->lower * tinv);
}

}  // namespace unitwist
