#include "unitwist/closed_form.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>

#include "unitwist/error.hpp"
#include "unitwist/group.hpp"

namespace unitwist {

namespace {

using Rows = std::vector<std::vector<Fp>>;

Mat from_rows(std::uint32_t p, const Rows& rows) {
  Mat m(static_cast<int>(rows.size()), p);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
  return m;
}

Mat sl3_upper(Fp a, Fp b, Fp c) {
  const Fp o(1, a.modulus()), z(0, a.modulus());
  return from_rows(a.modulus(), {{o, a, b}, {z, o, c}, {z, z, o}});
}

Mat sl3_lower(Fp a1, Fp b1, Fp c1) {
  const Fp o(1, a1.modulus()), z(0, a1.modulus());
  return from_rows(a1.modulus(), {{o, z, z}, {a1, o, z}, {b1, c1, o}});
}

bool in_cell(const Mat& x, const CoxeterSystem& sys, std::vector<int> word, const GroupSpec& spec) {
  const Mat wdot = weyl_lift(sys.from_word(word), spec);
  return (wdot.inverse() * x).is_upper_triangular();
}

// One sample: returns true when every comparison matches. Zero denominators throw Singular.
using SampleFn = std::function<bool(std::mt19937_64&, std::uint32_t)>;

Fp draw(std::mt19937_64& rng, std::uint32_t p) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  return {dist(rng), p};
}

bool sl2_gen(std::mt19937_64& rng, std::uint32_t p) {
  const Fp b = draw(rng, p), b1 = draw(rng, p);
  const Fp o(1, p), z(0, p);
  const Mat phi = phi_apply(from_rows(p, {{o, b}, {z, o}}), from_rows(p, {{o, z}, {b1, o}}));
  return phi == from_rows(p, {{1 + b * b1, -(b * b * b1)}, {b1, 1 - b * b1}});
}

bool sl2_w0(std::mt19937_64& rng, std::uint32_t p) {
  const GroupSpec spec(GroupFamily::SL, 2, p);
  const Fp b1 = draw(rng, p);
  const Fp b = -(1 / b1);
  const Fp o(1, p), z(0, p);
  const Mat xp = from_rows(p, {{o, b}, {z, o}}), xm = from_rows(p, {{o, z}, {b1, o}});
  const Mat x = xp * xm;
  const Mat phi = phi_apply(xp, xm);
  const Fp X = b1;
  bool ok = x == from_rows(p, {{z, b}, {b1, o}});
  ok = ok && in_cell(x, spec.weyl(), {1}, spec);
  ok = ok && phi == from_rows(p, {{z, -(b * b * b1)}, {b1, Fp(2, p)}});
  ok = ok && phi == from_rows(p, {{z, -(1 / X)}, {X, Fp(2, p)}});
  return ok && is_unipotent(phi) && !X.is_zero();
}

bool sl3_gen(std::mt19937_64& rng, std::uint32_t p) {
  const Fp a = draw(rng, p), b = draw(rng, p), c = draw(rng, p);
  const Fp a1 = draw(rng, p), b1 = draw(rng, p), c1 = draw(rng, p);
  const Mat phi = phi_apply(sl3_upper(a, b, c), sl3_lower(a1, b1, c1));
  const Mat disp = from_rows(
      p, {{1 + a * a1 + b * b1, b * c1 - a * a * a1 - a * b * b1,
           -(a * b * a1) - b * b * b1 - b * c * c1 + a * a * c * a1 + a * b * c * b1},
          {a1 + c * b1, 1 - a * a1 + c * c1 - a * c * b1,
           -(b * a1) + a * c * a1 - b * c * b1 - c * c * c1 + a * c * c * b1},
          {b1, c1 - a * b1, 1 - b * b1 - c * c1 + a * c * b1}});
  return phi == disp;
}

bool sl3_ts(std::mt19937_64& rng, std::uint32_t p) {
  const GroupSpec spec(GroupFamily::SL, 3, p);
  const Fp a1 = draw(rng, p), b = draw(rng, p), c = draw(rng, p);
  const Fp a = -(1 / a1) + b / c, b1 = -(a1 / c), c1 = -(1 / c);
  const Fp o(1, p), z(0, p), three(3, p);
  const Mat xp = sl3_upper(a, b, c), xm = sl3_lower(a1, b1, c1);
  const Mat x = xp * xm;
  const Mat phi = phi_apply(xp, xm);
  const Fp Y = -(1 / a1), Z = c, C = b + c / a1;
  bool ok = x == from_rows(p, {{z, -(1 / a1), b}, {z, z, c}, {-(a1 / c), -(1 / c), o}});
  ok = ok && in_cell(x, spec.weyl(), {2, 1}, spec);
  ok = ok && phi == from_rows(p, {{z, -(1 / a1), b + c / a1}, {z, z, c}, {-(a1 / c), -((2 - b * a1 / c) / c), three}});
  ok = ok && phi == from_rows(p, {{z, Y, C}, {z, z, Z}, {1 / (Y * Z), -((3 + C / (Y * Z)) / Z), three}});
  return ok && is_unipotent(phi);
}

bool sl3_st(std::mt19937_64& rng, std::uint32_t p) {
  const GroupSpec spec(GroupFamily::SL, 3, p);
  const Fp b = draw(rng, p), a1 = draw(rng, p), c = draw(rng, p);
  const Fp a = -(1 / a1), b1(0, p), c1 = 1 / (b * a1);
  const Fp o(1, p), z(0, p);
  const Mat xp = sl3_upper(a, b, c), xm = sl3_lower(a1, b1, c1);
  const Mat x = xp * xm;
  const Mat phi = phi_apply(xp, xm);
  const Fp X = a1, Y = 1 / (b * a1), A = 2 + c / (b * a1);
  bool ok = x == from_rows(p, {{z, z, b}, {a1, 1 + c / (b * a1), c}, {z, 1 / (b * a1), o}});
  ok = ok && in_cell(x, spec.weyl(), {1, 2}, spec);
  ok = ok && phi == from_rows(p, {{z, z, b},
                                  {a1, 2 + c / (b * a1), -(b * a1 + c * c / (b * a1) + c)},
                                  {z, 1 / (b * a1), 1 - c / (b * a1)}});
  ok = ok && phi == from_rows(p, {{z, z, 1 / (X * Y)}, {X, A, -((3 - 3 * A + A * A) / Y)}, {z, Y, 3 - A}});
  return ok && is_unipotent(phi);
}

bool sl3_w0(std::mt19937_64& rng, std::uint32_t p) {
  const GroupSpec spec(GroupFamily::SL, 3, p);
  const Fp b = draw(rng, p), b1 = draw(rng, p), c = draw(rng, p);
  const Fp c1 = -((1 + b * b1) / (b * b1 * c));
  const Fp a1 = -(c * b1), a = -(b * c1);
  const Fp z(0, p), o(1, p);
  const Mat xp = sl3_upper(a, b, c), xm = sl3_lower(a1, b1, c1);
  const Mat x = xp * xm;
  const Mat phi = phi_apply(xp, xm);
  const Fp X = b1, Z = b, A = (1 + b * b1) * c1, C = (1 + 1 / (b * b1)) * c;
  bool ok = x == from_rows(p, {{z, z, b}, {z, 1 + c1 * c, c}, {b1, c1, o}});
  ok = ok && in_cell(x, spec.weyl(), {1, 2, 1}, spec);
  ok = ok && phi == from_rows(p, {{z, z, b}, {z, 1 + c * c1, (1 + 1 / (b * b1)) * c}, {b1, (1 + b * b1) * c1, 2 - c * c1}});
  ok = ok && phi == from_rows(p, {{z, z, Z}, {z, -(1 / (X * Z)), C}, {X, A, 3 + 1 / (X * Z)}});
  const Fp k = 1 + 1 / (X * Z);
  ok = ok && (k * k * k + A * C / (X * Z)).is_zero();
  return ok && is_unipotent(phi);
}

bool sp4_gen(std::mt19937_64& rng, std::uint32_t p) {
  const Fp a = draw(rng, p), b = draw(rng, p), c = draw(rng, p), d = draw(rng, p);
  const Fp a1 = draw(rng, p), b1 = draw(rng, p), c1 = draw(rng, p), d1 = draw(rng, p);
  const Mat phi = phi_apply(sp4_upper(a, b, c, d), sp4_lower(a1, b1, c1, d1));
  const Fp f1 = b * a1 * d1 + a * d * a1 * d1;
  const Fp g1 = a * a1 + b * b1 + c * c1 + a * d * b1;
  const Fp g2 = -(a * a1) + b * b1 + 4 * d * d1 - a * b * c1 - 3 * a * d * b1 + a * a * d * c1;
  const Fp f12 = -((c + a * b + a * a * d) * a1 * d1);
  const Fp g12 = 2 * b * d1 + c * b1 - a * (a * a1 + b * b1 + c * c1 - 2 * d * d1 + a * d * b1);
  const Fp f13 = -(c * a1) - b * (a * a1 + b * b1 + c * c1 + 4 * d * d1) - 2 * c * d * b1 +
                 a * d * (a * a1 + c * c1 - 4 * d * d1 + a * d * b1);
  const Fp g13 = -((b * b - 2 * c * d - a * a * d * d) * a1 * d1);
  const Fp f21 = 2 * d * a1 * d1;
  const Fp g21 = a1 + b * c1 + 2 * d * b1 - a * d * c1;
  const Fp f31 = b1 - a * c1;
  const Fp g31 = a1 * d1;
  const Fp h14 = -(c * (2 * a * a1 + 2 * b * b1 + c * c1)) - 2 * b * b * d1 - 2 * a * d * (c * b1 + 2 * b * d1 + a * d * d1);
  const Fp h23 =
      -(2 * b * a1) + 2 * d * (a * a1 - 2 * b * b1 - 4 * d * d1) - b * b * c1 + a * d * (2 * b * c1 + 4 * d * b1 - a * d * c1);
  const Fp h32 = 2 * d1 - 2 * a * b1 + a * a * c1;
  const Fp h41 = c1;
  const Mat disp = from_rows(p, {{1 + f1 + g1, f12 + g12, f13 + g13, h14},
                                 {f21 + g21, 1 - f1 + g2, h23, f13 - g13},
                                 {f31 + g31, h32, 1 - f1 - g2, f12 - g12},
                                 {h41, f31 - g31, f21 - g21, 1 + f1 - g1}});
  return phi == disp;
}

bool sp4_sts(std::mt19937_64& rng, std::uint32_t p) {
  const GroupSpec spec(GroupFamily::SP4, 4, p);
  const Fp a = draw(rng, p), a1 = draw(rng, p), c = draw(rng, p), d = draw(rng, p);
  const Fp u = 1 + a * a1;
  const Fp half = Fp(2, p).inv();
  const Fp b = -(a * d) + a1 * c;
  const Fp b1 = -(a * (a * a1 + 2) * half / (c * u));
  const Fp c1 = -(1 / c);
  const Fp d1 = -(a * a * half / (c * u));
  const Fp z(0, p), o(1, p);
  const Mat xp = sp4_upper(a, b, c, d), xm = sp4_lower(a1, b1, c1, d1);
  const Mat x = xp * xm;
  const Mat phi = phi_apply(xp, xm);
  bool ok = x == from_rows(p, {{z, z, z, c},
                               {z, 1 / u, 2 * u * d - c * a1 * a1, c * a1 - 2 * a * d},
                               {z, z, u, -a},
                               {-(1 / c), -(a / (c * u)), -a1, o}});
  ok = ok && in_cell(x, spec.weyl(), {1, 2, 1}, spec);
  ok = ok && phi == from_rows(p, {{z, z, z, c},
                                  {z, 1 / u, 2 * a * d * a1 * (2 + a * a1) / u - c * a1 * a1,
                                   2 * a * a * d * a1 - a * a * c * a1 * a1 * a1 / u},
                                  {z, z, u, a * a * a1},
                                  {-(1 / c), a * a * a1 / (c * u), -(2 * a * a * d * a1 / (c * u)), 3 - a * a1 - 1 / u}});
  const Fp X = 1 / c, Y = 1 / u, A = -(a * a * a1 / u);
  const Fp B = a * a * d * a1 * (u + 1 / u) - half * a * a * c * a1 * a1 * a1;
  const Fp D = a * d * a1 * (2 + a * a1) - half * c * a1 * a1 * u;
  ok = ok && phi == from_rows(p, {{z, z, z, 1 / X},
                                  {z, Y, 2 * Y * D, Y * (B - A * D)},
                                  {z, z, 1 / Y, -(A / Y)},
                                  {-X, -(X * A), -(X * (B + A * D)), 4 - Y - 1 / Y}});
  const Fp one_minus_y = 1 - Y;
  const Fp lhs = X * A * (Y * (B - A * D) - (B + A * D) / Y);
  ok = ok && lhs == one_minus_y.pow(4) / (Y * Y);
  return ok && is_unipotent(phi) && in_group(phi, spec);
}

struct CaseInfo {
  ClosedFormCase id;
  const char* name;
  SampleFn fn;
};

const std::vector<CaseInfo>& cases() {
  static const std::vector<CaseInfo> table = {
      {ClosedFormCase::SL2Gen, "SL2-gen", sl2_gen},  {ClosedFormCase::SL2W0, "SL2-w0", sl2_w0},
      {ClosedFormCase::SL3Gen, "SL3-gen", sl3_gen},  {ClosedFormCase::SL3TS, "SL3-ts", sl3_ts},
      {ClosedFormCase::SL3ST, "SL3-st", sl3_st},     {ClosedFormCase::SL3W0, "SL3-w0", sl3_w0},
      {ClosedFormCase::SP4Gen, "SP4-gen", sp4_gen},   {ClosedFormCase::SP4STS, "SP4-sts", sp4_sts},
  };
  return table;
}

const CaseInfo& info(ClosedFormCase c) {
  for (const auto& entry : cases())
    if (entry.id == c) return entry;
  throw Error(ErrorKind::InvalidArgument, "unknown closed-form case");
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return out;
}

}  // namespace

std::string to_string(ClosedFormCase c) { return info(c).name; }

ClosedFormCase parse_closed_form_case(std::string_view name) {
  for (const auto& entry : cases())
    if (lower(entry.name) == lower(name)) return entry.id;
  throw Error(ErrorKind::InvalidArgument, "unknown closed-form case '" + std::string(name) + "'");
}

std::vector<ClosedFormCase> all_closed_form_cases() {
  std::vector<ClosedFormCase> out;
  for (const auto& entry : cases()) out.push_back(entry.id);
  return out;
}

CountReport closed_form_check(ClosedFormCase c, std::uint32_t p, int samples, std::uint64_t seed) {
  const CaseInfo& ci = info(c);
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  if (p < 5) throw Error(ErrorKind::InvalidArgument, "closed-form checks need p >= 5");
  if (samples < 1) throw Error(ErrorKind::InvalidArgument, "samples must be positive");
  std::mt19937_64 rng(seed);
  std::uint64_t matched = 0, degenerate = 0;
  const std::uint64_t max_degenerate = 1000 + 100 * static_cast<std::uint64_t>(samples);
  for (int i = 0; i < samples;) {
    try {
      if (ci.fn(rng, p)) ++matched;
      ++i;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Singular) throw;
      if (++degenerate > max_degenerate) throw Error(ErrorKind::DegenerateSample, "too many degenerate samples");
    }
  }
  CountReport r;
  r.check = "phi-check";
  r.params["case"] = ci.name;
  r.params["p"] = p;
  r.params["samples"] = samples;
  r.lhs = matched;
  r.rhs = samples;
  r.seed = seed;
  r.extra["degenerate"] = degenerate;
  r.pass = matched == static_cast<std::uint64_t>(samples);
  return r;
}

}  // namespace unitwist
