#include "unitwist/varieties.hpp"

#include <set>

#include "unitwist/error.hpp"
#include "unitwist/hecke.hpp"

namespace unitwist {

namespace {

Json word_json(const std::vector<int>& word) { return Json(word); }

Json spec_params(const GroupSpec& spec) {
  Json j;
  j["group"] = to_string(spec.family());
  j["n"] = spec.n();
  j["p"] = spec.p();
  return j;
}

void require_type_a(const GroupSpec& spec, const char* what) {
  if (spec.family() == GroupFamily::SP4) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " is only available for gl/sl");
  }
}

void for_each_matrix(int n, std::uint32_t p, std::uint64_t max_scan, const std::function<void(const Mat&)>& visit) {
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= p;
    if (total > max_scan) throw Error(ErrorKind::SizeBound, "matrix scan over F_" + std::to_string(p) + " too large");
  }
  Mat m(n, p);
  std::vector<Entry> digits(static_cast<std::size_t>(n * n), 0);
  while (true) {
    for (int k = 0; k < n * n; ++k) m.set(k / n, k % n, digits[static_cast<std::size_t>(k)]);
    visit(m);
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
}

}  // namespace

CosetCounts count_coset(const Mat& g, const GroupSpec& spec) {
  CosetCounts out;
  enumerate_borel_coset(g, spec, [&](const Mat& x) {
    if (is_unipotent(x)) ++out.unipotent;
    if (ul_factorize(x)) ++out.big_cell;
  });
  return out;
}

std::uint64_t count_Ug(const Mat& g, const GroupSpec& spec) {
  std::uint64_t count = 0;
  enumerate_borel_coset(g, spec, [&](const Mat& x) { count += is_unipotent(x) ? 1 : 0; });
  return count;
}

std::uint64_t count_Vg(const Mat& g, const GroupSpec& spec) {
  std::uint64_t count = 0;
  enumerate_borel_coset(g, spec, [&](const Mat& x) { count += ul_factorize(x) ? 1 : 0; });
  return count;
}

std::uint64_t count_Xg(const Mat& g, const GroupSpec& spec, const FlagSpace& flags) {
  require_type_a(spec, "count_Xg");
  const CoxElement w0 = spec.weyl().longest();
  const Flag base = standard_flag(spec.n(), spec.p());
  const Flag target = act(g, base);
  std::uint64_t count = 0;
  for (const Flag& f : flags.flags()) {
    if (relative_position(base, f) == w0 && relative_position(f, target) == w0) ++count;
  }
  return count;
}

std::uint64_t count_Xg(const Mat& g, const GroupSpec& spec) {
  require_type_a(spec, "count_Xg");
  return count_Xg(g, spec, FlagSpace(spec.n(), spec.p()));
}

std::vector<Mat> enumerate_Hg(const Mat& g, const GroupSpec& spec) {
  const Mat ginv = g.inverse();
  std::vector<Mat> out;
  for_each_borel(spec, [&](const Mat& b) {
    if ((ginv * b * g).is_upper_triangular()) out.push_back(b);
  });
  return out;
}

Flag v_to_x_map(const Mat& x, const Mat& g, const GroupSpec& spec) {
  const Mat y = g.inverse() * x;
  if (!y.is_upper_triangular() || !ul_factorize(x)) throw Error(ErrorKind::NotInBigCell, "point is not in V_g");
  const BorelParts parts = decompose_borel(y);
  const Mat w0dot = weyl_lift(spec.weyl().longest(), spec);
  return flag_canonicalize(g * parts.u * w0dot);
}

std::vector<Mat> enumerate_unipotents(int n, std::uint32_t p, std::uint64_t max_scan) {
  std::vector<Mat> out;
  for_each_matrix(n, p, max_scan, [&](const Mat& m) {
    if (m.pow(static_cast<unsigned>(n)).is_zero()) out.push_back(m + Mat::identity(n, p));
  });
  return out;
}

BraidCounter::BraidCounter(int n, std::uint32_t p, int max_word) : flags_(n, p), max_word_(max_word) {}

std::vector<std::uint64_t> BraidCounter::transfer(const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) > max_word_) {
    throw Error(ErrorKind::SizeBound, "braid word of length " + std::to_string(word.size()) + " exceeds bound " +
                                          std::to_string(max_word_));
  }
  for (int s : word) {
    if (s < 1 || s >= flags_.n()) throw Error(ErrorKind::InvalidArgument, "letter " + std::to_string(s) + " out of range");
  }
  const std::size_t count = flags_.size();
  std::vector<std::uint64_t> out(count * count, 0);
  std::vector<std::uint64_t> cur(count), next(count);
  for (std::size_t start = 0; start < count; ++start) {
    std::fill(cur.begin(), cur.end(), 0);
    cur[start] = 1;
    for (int s : word) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t i = 0; i < count; ++i) {
        if (cur[i] == 0) continue;
        for (std::size_t j : flags_.neighbors(i, s)) next[j] += cur[i];
      }
      std::swap(cur, next);
    }
    std::copy(cur.begin(), cur.end(), out.begin() + static_cast<std::ptrdiff_t>(start * count));
  }
  return out;
}

std::uint64_t BraidCounter::count_X(const std::vector<int>& word) const {
  const auto t = transfer(word);
  const std::size_t count = flags_.size();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < count; ++i) total += t[i * count + i];
  return total;
}

void BraidCounter::load_unipotents() {
  if (!inv_action_.empty()) return;
  for (const Mat& u : enumerate_unipotents(flags_.n(), flags_.p())) {
    const Mat uinv = u.inverse();
    std::vector<std::uint32_t> perm(flags_.size());
    for (std::size_t i = 0; i < flags_.size(); ++i) perm[i] = static_cast<std::uint32_t>(flags_.act_index(uinv, i));
    inv_action_.push_back(std::move(perm));
  }
}

std::size_t BraidCounter::unipotent_count() {
  load_unipotents();
  return inv_action_.size();
}

std::uint64_t BraidCounter::count_U(const std::vector<int>& word) {
  load_unipotents();
  const auto t = transfer(word);
  const std::size_t count = flags_.size();
  std::uint64_t total = 0;
  for (const auto& perm : inv_action_) {
    for (std::size_t i = 0; i < count; ++i) total += t[perm[i] * count + i];
  }
  return total;
}

namespace {

void require_weyl_match(const BraidWord& beta, const GroupSpec& spec) {
  require_type_a(spec, "braid variety counts");
  if (!(beta.system() == spec.weyl())) {
    throw Error(ErrorKind::SystemMismatch, "braid over " + beta.system().name() + " but group " + spec.name());
  }
}

}  // namespace

std::uint64_t count_X_beta(const BraidWord& beta, const GroupSpec& spec) {
  require_weyl_match(beta, spec);
  return BraidCounter(spec.n(), spec.p()).count_X(beta.letters());
}

std::uint64_t count_U_beta(const BraidWord& beta, const GroupSpec& spec) {
  require_weyl_match(beta, spec);
  BraidCounter counter(spec.n(), spec.p());
  return counter.count_U(beta.letters());
}

CountReport kawanaka_check(const GroupSpec& spec, const CoxElement& w) {
  const CoxeterSystem sys = spec.weyl();
  const Mat g = weyl_lift(w, spec);
  const CosetCounts counts = count_coset(g, spec);
  CountReport r;
  r.check = "kawanaka";
  r.params = spec_params(spec);
  r.params["w"] = word_json(sys.reduced_word(w));
  r.lhs = counts.unipotent;
  r.rhs = counts.big_cell;
  r.pass = counts.unipotent == counts.big_cell;
  return r;
}

CountReport cor_check(const BraidWord& beta, const GroupSpec& spec, BraidCounter& counter) {
  require_weyl_match(beta, spec);
  const BraidWord twisted = braid_concat(beta, full_twist(beta.system()));
  CountReport r;
  r.check = "cor";
  r.params = spec_params(spec);
  r.params["beta"] = word_json(beta.letters());
  const std::uint64_t u = counter.count_U(beta.letters());
  const std::uint64_t x = counter.count_X(twisted.letters());
  r.lhs = u;
  r.rhs = x;
  r.pass = u == x;
  return r;
}

namespace {

CountReport hecke_prediction(const BraidWord& beta, const GroupSpec& spec, TraceSign sign, BraidCounter& counter,
                             bool normalize_flags) {
  require_weyl_match(beta, spec);
  const long q = spec.p();
  const std::uint64_t count =
      sign == TraceSign::Minus ? counter.count_U(beta.letters()) : counter.count_X(beta.letters());
  const LaurentPoly tau = sign == TraceSign::Minus ? tau_minus_braid(beta) : tau_plus(eval_braid(beta));
  const mpq_class weight = eval_q(tau.shifted(beta.size()), q);
  mpz_class torus;
  mpz_ui_pow_ui(torus.get_mpz_t(), static_cast<unsigned long>(q - 1), static_cast<unsigned long>(spec.r()));
  mpq_class predicted = mpq_class(spec.order()) * weight / mpq_class(torus);
  if (normalize_flags) {
    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(spec.positive_roots()));
    predicted /= mpq_class(qn);
  }
  predicted.canonicalize();
  CountReport r;
  r.check = normalize_flags ? "hecke-count-normalized" : "hecke-count";
  r.params = spec_params(spec);
  r.params["beta"] = word_json(beta.letters());
  r.params["sign"] = sign == TraceSign::Minus ? "-" : "+";
  r.params["r"] = spec.r();
  r.lhs = count;
  r.rhs = json_number(predicted);
  r.pass = mpq_class(mpz_class(static_cast<unsigned long>(count))) == predicted;
  r.extra["tau"] = json_poly(tau);
  return r;
}

}  // namespace

CountReport hecke_count_check(const BraidWord& beta, const GroupSpec& spec, TraceSign sign, BraidCounter& counter) {
  return hecke_prediction(beta, spec, sign, counter, false);
}

CountReport hecke_count_check_normalized(const BraidWord& beta, const GroupSpec& spec, BraidCounter& counter) {
  return hecke_prediction(beta, spec, TraceSign::Plus, counter, true);
}

CountReport prop44_check(const CoxElement& w, const GroupSpec& spec, BraidCounter& counter) {
  require_type_a(spec, "prop44_check");
  const CoxeterSystem sys = spec.weyl();
  const Mat g = weyl_lift(w, spec);
  const std::vector<int> word = sys.reduced_word(w);
  const BraidWord twisted = braid_concat(BraidWord(sys, word), full_twist(sys));

  const mpz_class group_order = spec.order();
  const mpz_class ug = static_cast<unsigned long>(count_Ug(g, spec));
  const mpz_class xg = static_cast<unsigned long>(count_Xg(g, spec, counter.flags()));
  const mpz_class hg = static_cast<unsigned long>(enumerate_Hg(g, spec).size());
  const mpz_class u_beta = static_cast<unsigned long>(counter.count_U(word));
  const mpz_class x_beta = static_cast<unsigned long>(counter.count_X(twisted.letters()));

  CountReport r;
  r.check = "prop44";
  r.params = spec_params(spec);
  r.params["w"] = word_json(word);
  r.lhs = json_number(mpz_class(ug * group_order));
  r.rhs = json_number(mpz_class(u_beta * hg));
  r.extra["x_lhs"] = json_number(mpz_class(xg * group_order));
  r.extra["x_rhs"] = json_number(mpz_class(x_beta * hg));
  r.extra["counts"] = {{"U_g", json_number(ug)}, {"X_g", json_number(xg)}, {"H_g", json_number(hg)},
                       {"U_sigma_w", json_number(u_beta)}, {"X_sigma_w_pi", json_number(x_beta)},
                       {"G", json_number(group_order)}};
  r.pass = ug * group_order == u_beta * hg && xg * group_order == x_beta * hg;
  return r;
}

CountReport bruhat_constancy_check(const CoxElement& w, const GroupSpec& spec, int samples, std::uint64_t seed) {
  const Mat wdot = weyl_lift(w, spec);
  const CosetCounts base = count_coset(wdot, spec);
  std::mt19937_64 rng(seed);
  Json sample_counts = Json::array();
  bool constant = true;
  for (int i = 0; i < samples; ++i) {
    const Mat g = random_upper_unipotent(spec, rng) * wdot * random_borel(spec, rng);
    const CosetCounts c = count_coset(g, spec);
    sample_counts.push_back(Json::array({c.unipotent, c.big_cell}));
    constant = constant && c.unipotent == base.unipotent && c.big_cell == base.big_cell;
  }
  CountReport r;
  r.check = "constancy";
  r.params = spec_params(spec);
  r.params["w"] = word_json(spec.weyl().reduced_word(w));
  r.params["samples"] = samples;
  r.lhs = base.unipotent;
  r.rhs = base.big_cell;
  r.seed = seed;
  r.extra["sample_counts"] = sample_counts;
  r.pass = constant && base.unipotent == base.big_cell;
  return r;
}

CountReport steinberg_check(int n, std::uint32_t p) {
  const std::uint64_t unipotents = enumerate_unipotents(n, p).size();
  std::uint64_t big_cell = 0;
  for_each_matrix(n, p, 5'000'000, [&](const Mat& m) { big_cell += ul_factorize(m) ? 1 : 0; });
  mpz_class predicted;
  mpz_ui_pow_ui(predicted.get_mpz_t(), p, static_cast<unsigned long>(n * (n - 1)));
  CountReport r;
  r.check = "steinberg";
  r.params = spec_params(GroupSpec(GroupFamily::GL, n, p));
  r.lhs = unipotents;
  r.rhs = big_cell;
  r.extra["predicted"] = json_number(predicted);
  r.pass = unipotents == big_cell && mpz_class(static_cast<unsigned long>(unipotents)) == predicted;
  return r;
}

CountReport v_to_x_check(const CoxElement& w, const GroupSpec& spec, bool check_equivariance) {
  require_type_a(spec, "v_to_x_check");
  const Mat g = weyl_lift(w, spec);
  const CoxElement w0 = spec.weyl().longest();
  const Flag base = standard_flag(spec.n(), spec.p());
  const Flag target = act(g, base);
  std::vector<Mat> points;
  enumerate_borel_coset(g, spec, [&](const Mat& x) {
    if (ul_factorize(x)) points.push_back(x);
  });
  std::set<Flag> image;
  bool lands = true;
  for (const Mat& x : points) {
    const Flag f = v_to_x_map(x, g, spec);
    lands = lands && relative_position(base, f) == w0 && relative_position(f, target) == w0;
    image.insert(f);
  }
  const std::uint64_t xg = count_Xg(g, spec);
  bool equivariant = true;
  std::uint64_t pairs = 0;
  if (check_equivariance) {
    for (const Mat& b : enumerate_Hg(g, spec)) {
      for (const Mat& x : points) {
        ++pairs;
        const Flag lhs = v_to_x_map(action_Vg(b, x, g), g, spec);
        const Flag rhs = act(b, v_to_x_map(x, g, spec));
        if (!(lhs == rhs)) equivariant = false;
      }
    }
  }
  CountReport r;
  r.check = "v-to-x";
  r.params = spec_params(spec);
  r.params["w"] = word_json(spec.weyl().reduced_word(w));
  r.lhs = image.size();
  r.rhs = xg;
  r.extra["V_g"] = points.size();
  r.extra["injective"] = image.size() == points.size();
  r.extra["lands_in_X_g"] = lands;
  if (check_equivariance) {
    r.extra["equivariant"] = equivariant;
    r.extra["pairs_checked"] = pairs;
  }
  r.pass = image.size() == points.size() && lands && image.size() == xg && equivariant;
  return r;
}

CountReport phi_equivariance_check(const CoxElement& w, const GroupSpec& spec) {
  const Mat g = weyl_lift(w, spec);
  const Mat ginv = g.inverse();
  std::vector<Mat> points;
  enumerate_borel_coset(g, spec, [&](const Mat& x) {
    if (ul_factorize(x)) points.push_back(x);
  });
  std::uint64_t total = 0, good = 0;
  for (const Mat& x : points) {
    const auto f = ul_factorize(x);
    const Mat phi = phi_apply(f->upper, f->lower);
    ++total;
    if (is_unipotent(phi) && (ginv * phi).is_upper_triangular()) ++good;
  }
  for (const Mat& b : enumerate_Hg(g, spec)) {
    const Mat binv = b.inverse();
    for (const Mat& x : points) {
      const Mat bx = action_Vg(b, x, g);
      const auto fb = ul_factorize(bx);
      const auto fx = ul_factorize(x);
      ++total;
      if (fb && (ginv * bx).is_upper_triangular() &&
          phi_apply(fb->upper, fb->lower) == b * phi_apply(fx->upper, fx->lower) * binv) {
        ++good;
      }
    }
  }
  CountReport r;
  r.check = "phi-equivariance";
  r.params = spec_params(spec);
  r.params["w"] = word_json(spec.weyl().reduced_word(w));
  r.lhs = good;
  r.rhs = total;
  r.pass = good == total;
  return r;
}

}  // namespace unitwist
