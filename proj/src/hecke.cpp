#include "unitwist/hecke.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "unitwist/error.hpp"

namespace unitwist {

HeckeElement HeckeElement::basis(const CoxeterSystem& sys, const CoxElement& w, const LaurentPoly& c) {
  HeckeElement h(sys);
  h.add(w, c);
  return h;
}

LaurentPoly HeckeElement::coeff(const CoxElement& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const CoxElement& w, const LaurentPoly& c) {
  if (!system_.contains(w)) throw Error(ErrorKind::SystemMismatch, "basis element outside " + system_.name());
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  if (!(system_ == other.system_)) throw Error(ErrorKind::SystemMismatch, "Hecke elements of different systems");
  for (const auto& [w, c] : other.coeffs_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  if (!(system_ == other.system_)) throw Error(ErrorKind::SystemMismatch, "Hecke elements of different systems");
  for (const auto& [w, c] : other.coeffs_) add(w, -c);
  return *this;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& c) const {
  HeckeElement out(system_);
  for (const auto& [w, x] : coeffs_) out.add(w, x * c);
  return out;
}

std::string HeckeElement::to_json() const {
  std::vector<std::pair<std::vector<int>, std::string>> rows;
  rows.reserve(coeffs_.size());
  for (const auto& [w, c] : coeffs_) rows.emplace_back(system_.reduced_word(w), serialize(c));
  std::sort(rows.begin(), rows.end());
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << (i ? "," : "") << "[[";
    for (std::size_t j = 0; j < rows[i].first.size(); ++j) os << (j ? "," : "") << rows[i].first[j];
    os << "]," << rows[i].second << "]";
  }
  os << "]";
  return os.str();
}

HeckeElement hecke_mul_gen(const HeckeElement& h, int s) {
  const CoxeterSystem& sys = h.system();
  const CoxElement gen = sys.generator(s);
  const LaurentPoly delta = LaurentPoly::delta();
  HeckeElement out(sys);
  for (const auto& [w, c] : h.coeffs()) {
    CoxElement ws = sys.mul(w, gen);
    const bool longer = sys.length(ws) > sys.length(w);
    out.add(ws, c);
    if (!longer) out.add(w, c * delta);
  }
  return out;
}

HeckeElement hecke_mul_gen_inv(const HeckeElement& h, int s) {
  HeckeElement out = hecke_mul_gen(h, s);
  out -= h.scaled(LaurentPoly::delta());
  return out;
}

HeckeElement eval_braid(const BraidWord& beta) {
  const CoxeterSystem& sys = beta.system();
  HeckeElement h = HeckeElement::basis(sys, sys.identity());
  for (int s : beta.letters()) h = hecke_mul_gen(h, s);
  return h;
}

LaurentPoly tau_plus(const HeckeElement& h) { return h.coeff(h.system().identity()); }

LaurentPoly tau_minus_braid(const BraidWord& beta) {
  const CoxeterSystem& sys = beta.system();
  HeckeElement h = HeckeElement::basis(sys, sys.identity());
  for (int s : beta.letters()) h = hecke_mul_gen_inv(h, s);
  return bar(tau_plus(h));
}

LaurentPoly tau_minus_oracle(const HeckeElement& h) {
  const CoxeterSystem& sys = h.system();
  if (sys.order() > 24) {
    throw Error(ErrorKind::SizeBound, "tau_minus_oracle supports |W| <= 24, got " + std::to_string(sys.order()));
  }
  std::vector<CoxElement> elements = sys.enumerate();
  std::stable_sort(elements.begin(), elements.end(),
                   [&](const CoxElement& a, const CoxElement& b) { return sys.length(a) < sys.length(b); });

  // Standard-basis expansion of σ_w^{-1}, built up by length: for w = s·u with
  // ℓ(w) = ℓ(u) + 1 we have σ_w = σ_s σ_u, hence σ_w^{-1} = σ_u^{-1} σ_s^{-1}
  // = σ_u^{-1} σ_s - δ σ_u^{-1}.
  const LaurentPoly delta = LaurentPoly::delta();
  std::map<CoxElement, HeckeElement> inverse;
  inverse.emplace(sys.identity(), HeckeElement::basis(sys, sys.identity()));
  for (const CoxElement& w : elements) {
    if (inverse.count(w)) continue;
    for (int s = 1; s <= sys.rank(); ++s) {
      if (!sys.left_descent(w, s)) continue;
      const CoxElement u = sys.mul(sys.generator(s), w);
      const HeckeElement& prev = inverse.at(u);
      HeckeElement next(sys);
      for (const auto& [y, c] : prev.coeffs()) {
        const CoxElement ys = sys.mul(y, sys.generator(s));
        if (sys.length(ys) > sys.length(y)) {
          next.add(ys, c);
        } else {
          next.add(ys, c);
          next.add(y, c * delta);
        }
      }
      next -= prev.scaled(delta);
      inverse.emplace(w, std::move(next));
      break;
    }
  }

  // σ_w^{-1} = σ_{w^{-1}} + (terms of smaller length): peel off from the longest element down.
  auto invert = [&](const CoxElement& w) {
    std::vector<int> word = sys.reduced_word(w);
    std::reverse(word.begin(), word.end());
    return sys.from_word(word);
  };
  HeckeElement rest = h;
  LaurentPoly answer;
  for (auto it = elements.rbegin(); it != elements.rend(); ++it) {
    const LaurentPoly c = rest.coeff(*it);
    if (c.is_zero()) continue;
    if (*it == sys.identity()) answer = c;  // σ_e^{-1} = 1
    rest -= inverse.at(invert(*it)).scaled(c);
  }
  return answer;
}

TwistResult twist_check(const BraidWord& beta) {
  const BraidWord twisted = braid_concat(beta, full_twist(beta.system()));
  TwistResult r{beta, tau_minus_braid(beta), tau_plus(eval_braid(twisted)), false};
  r.pass = r.tau_minus == r.tau_plus_twisted;
  return r;
}

}  // namespace unitwist
