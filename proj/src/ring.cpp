#include "unitwist/ring.hpp"

#include <sstream>

#include "unitwist/error.hpp"

namespace unitwist {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, const mpz_class& coeff) {
  LaurentPoly out;
  out.add_term(exponent, coeff);
  return out;
}

LaurentPoly LaurentPoly::delta() { return monomial(1) - monomial(-1); }

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<int, long>>& pairs) {
  LaurentPoly out;
  for (const auto& [e, c] : pairs) out.add_term(e, c);
  return out;
}

mpz_class LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

void LaurentPoly::add_term(int exponent, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
  return out;
}

std::optional<LaurentPoly> LaurentPoly::div_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const int dlead = divisor.max_exponent();
  const int dlow = divisor.min_exponent();
  const mpz_class& dcoeff = divisor.terms_.rbegin()->second;
  // Long division from the top; any remainder below the divisor's span means failure.
  while (!rem.is_zero()) {
    if (rem.max_exponent() - dlead < rem.min_exponent() - dlow) return std::nullopt;
    const mpz_class& top = rem.terms_.rbegin()->second;
    if (!mpz_divisible_p(top.get_mpz_t(), dcoeff.get_mpz_t())) return std::nullopt;
    const mpz_class factor = top / dcoeff;
    const int shift = rem.max_exponent() - dlead;
    quot.add_term(shift, factor);
    rem -= divisor.shifted(shift) * LaurentPoly::monomial(0, factor);
  }
  return quot;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    mpz_class c = it->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str();
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly bar(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, c] : a.terms()) out.add_term(-e, c);
  return out;
}

mpq_class eval_q(const LaurentPoly& a, long q) {
  if (q <= 0) throw Error(ErrorKind::InvalidArgument, "q must be positive");
  mpq_class sum = 0;
  for (const auto& [e, c] : a.terms()) {
    if (e % 2 != 0) throw Error(ErrorKind::OddExponent, "exponent " + std::to_string(e) + " in " + a.to_string());
    mpz_class qpow;
    const int k = e / 2;
    mpz_ui_pow_ui(qpow.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k < 0 ? -k : k));
    if (k >= 0) {
      sum += mpq_class(c * qpow);
    } else {
      mpq_class term(c, qpow);
      term.canonicalize();
      sum += term;
    }
  }
  sum.canonicalize();
  return sum;
}

std::string serialize(const LaurentPoly& a) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    if (!first) os << ",";
    first = false;
    os << "[" << e << ",";
    if (c.fits_slong_p()) {
      os << c.get_si();
    } else {
      os << "\"" << c.get_str() << "\"";
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace unitwist
