#include "unitwist/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "unitwist/error.hpp"

namespace unitwist {

std::size_t CoxElementHash::operator()(const CoxElement& e) const noexcept {
  std::size_t h = static_cast<std::size_t>(e.family()) * 131 + static_cast<std::size_t>(e.rank());
  for (int x : e.code()) h = h * 1000003U ^ static_cast<std::size_t>(x + 64);
  return h;
}

CoxeterSystem CoxeterSystem::A(int rank) {
  if (rank < 1) throw Error(ErrorKind::InvalidArgument, "A(n) needs n >= 1");
  return {Family::A, rank, 0};
}

CoxeterSystem CoxeterSystem::B(int rank) {
  if (rank < 2) throw Error(ErrorKind::InvalidArgument, "B(n) needs n >= 2");
  return {Family::B, rank, 0};
}

CoxeterSystem CoxeterSystem::I2(int m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "I2(m) needs m >= 2");
  return {Family::I2, 2, m};
}

int CoxeterSystem::coxeter_entry(int s, int t) const {
  if (!valid_generator(s) || !valid_generator(t)) throw Error(ErrorKind::InvalidArgument, "generator out of range");
  if (s == t) return 1;
  switch (family_) {
    case Family::A:
      return std::abs(s - t) == 1 ? 3 : 2;
    case Family::B:
      if (std::abs(s - t) != 1) return 2;
      return std::max(s, t) == rank_ ? 4 : 3;
    case Family::I2:
      return m_;
  }
  return 2;
}

std::vector<std::vector<int>> CoxeterSystem::coxeter_matrix() const {
  std::vector<std::vector<int>> out(rank_, std::vector<int>(rank_));
  for (int s = 1; s <= rank_; ++s)
    for (int t = 1; t <= rank_; ++t) out[s - 1][t - 1] = coxeter_entry(s, t);
  return out;
}

std::string CoxeterSystem::name() const {
  switch (family_) {
    case Family::A: return "A(" + std::to_string(rank_) + ")";
    case Family::B: return "B(" + std::to_string(rank_) + ")";
    case Family::I2: return "I2(" + std::to_string(m_) + ")";
  }
  return "?";
}

bool CoxeterSystem::contains(const CoxElement& a) const noexcept {
  return a.family_ == family_ && a.rank_ == rank_ && a.m_ == m_;
}

void CoxeterSystem::check(const CoxElement& a) const {
  if (!contains(a)) throw Error(ErrorKind::SystemMismatch, "element does not belong to " + name());
}

CoxElement CoxeterSystem::identity() const {
  std::vector<int> code;
  switch (family_) {
    case Family::A:
      code.resize(rank_ + 1);
      for (int i = 0; i <= rank_; ++i) code[i] = i;
      break;
    case Family::B:
      code.resize(rank_);
      for (int i = 0; i < rank_; ++i) code[i] = i + 1;
      break;
    case Family::I2:
      code = {0, 1};
      break;
  }
  return {family_, rank_, m_, std::move(code)};
}

CoxElement CoxeterSystem::generator(int s) const {
  if (!valid_generator(s)) throw Error(ErrorKind::InvalidArgument, "generator " + std::to_string(s) + " out of range for " + name());
  CoxElement g = identity();
  switch (family_) {
    case Family::A:
      std::swap(g.code_[s - 1], g.code_[s]);
      break;
    case Family::B:
      if (s < rank_) {
        std::swap(g.code_[s - 1], g.code_[s]);
      } else {
        g.code_[rank_ - 1] = -rank_;
      }
      break;
    case Family::I2:
      // s = r^0 s, t = r^{-1} s
      g.code_ = {s == 1 ? 0 : m_ - 1, -1};
      break;
  }
  return g;
}

CoxElement CoxeterSystem::mul(const CoxElement& a, const CoxElement& b) const {
  check(a);
  check(b);
  CoxElement out = a;
  switch (family_) {
    case Family::A:
      for (std::size_t i = 0; i < b.code_.size(); ++i) out.code_[i] = a.code_[b.code_[i]];
      break;
    case Family::B:
      for (std::size_t i = 0; i < b.code_.size(); ++i) {
        const int bi = b.code_[i];
        const int ai = a.code_[std::abs(bi) - 1];
        out.code_[i] = bi > 0 ? ai : -ai;
      }
      break;
    case Family::I2: {
      const int ka = a.code_[0], ea = a.code_[1];
      const int kb = b.code_[0], eb = b.code_[1];
      // r^a s r^b = r^{a-b} s
      const int k = ea > 0 ? ka + kb : ka - kb;
      out.code_ = {((k % m_) + m_) % m_, ea * eb};
      break;
    }
  }
  return out;
}

CoxElement CoxeterSystem::inv(const CoxElement& a) const {
  check(a);
  CoxElement out = a;
  switch (family_) {
    case Family::A:
      for (std::size_t i = 0; i < a.code_.size(); ++i) out.code_[a.code_[i]] = static_cast<int>(i);
      break;
    case Family::B:
      for (std::size_t i = 0; i < a.code_.size(); ++i) {
        const int ai = a.code_[i];
        out.code_[std::abs(ai) - 1] = ai > 0 ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1);
      }
      break;
    case Family::I2:
      if (a.code_[1] > 0) out.code_[0] = (m_ - a.code_[0]) % m_;
      break;
  }
  return out;
}

CoxElement CoxeterSystem::from_word(const std::vector<int>& word) const {
  CoxElement w = identity();
  for (int s : word) w = mul(w, generator(s));
  return w;
}

int CoxeterSystem::length(const CoxElement& a) const {
  check(a);
  const auto& c = a.code_;
  int len = 0;
  switch (family_) {
    case Family::A:
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) len += c[i] > c[j] ? 1 : 0;
      break;
    case Family::B: {
      // Number of positive roots e_i, e_i - e_j, e_i + e_j (i < j) sent to negative roots.
      const int n = rank_;
      for (int i = 0; i < n; ++i) {
        if (c[i] < 0) ++len;
        for (int j = i + 1; j < n; ++j) {
          const int ti = std::abs(c[i]), tj = std::abs(c[j]);
          const int si = c[i] > 0 ? 1 : -1, sj = c[j] > 0 ? 1 : -1;
          // e_i - e_j -> si e_ti - sj e_tj ; e_i + e_j -> si e_ti + sj e_tj
          const int lead_minus = ti < tj ? si : -sj;
          const int lead_plus = ti < tj ? si : sj;
          if (lead_minus < 0) ++len;
          if (lead_plus < 0) ++len;
        }
      }
      break;
    }
    case Family::I2: {
      const int k = c[0];
      len = c[1] > 0 ? std::min(2 * k, 2 * (m_ - k)) : std::min(2 * k + 1, 2 * (m_ - k) - 1);
      break;
    }
  }
  return len;
}

bool CoxeterSystem::right_descent(const CoxElement& a, int s) const {
  return length(mul(a, generator(s))) < length(a);
}

bool CoxeterSystem::left_descent(const CoxElement& a, int s) const {
  return length(mul(generator(s), a)) < length(a);
}

std::vector<int> CoxeterSystem::reduced_word(const CoxElement& a) const {
  std::deque<int> word;
  CoxElement w = a;
  int len = length(w);
  while (len > 0) {
    for (int s = 1; s <= rank_; ++s) {
      CoxElement ws = mul(w, generator(s));
      const int l2 = length(ws);
      if (l2 < len) {
        word.push_front(s);
        w = std::move(ws);
        len = l2;
        break;
      }
    }
  }
  return {word.begin(), word.end()};
}

std::vector<std::vector<int>> CoxeterSystem::all_reduced_words(const CoxElement& a) const {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  std::function<void(const CoxElement&, int)> rec = [&](const CoxElement& w, int len) {
    if (len == 0) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (int s = 1; s <= rank_; ++s) {
      CoxElement ws = mul(w, generator(s));
      if (length(ws) < len) {
        suffix.push_back(s);
        rec(ws, len - 1);
        suffix.pop_back();
      }
    }
  };
  rec(a, length(a));
  std::sort(out.begin(), out.end());
  return out;
}

CoxElement CoxeterSystem::longest() const {
  CoxElement w = identity();
  int len = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s = 1; s <= rank_; ++s) {
      CoxElement ws = mul(w, generator(s));
      const int l2 = length(ws);
      if (l2 > len) {
        w = std::move(ws);
        len = l2;
        grew = true;
        break;
      }
    }
  }
  return w;
}

std::size_t CoxeterSystem::order() const {
  std::size_t out = 1;
  switch (family_) {
    case Family::A:
      for (int i = 2; i <= rank_ + 1; ++i) out *= static_cast<std::size_t>(i);
      break;
    case Family::B:
      for (int i = 1; i <= rank_; ++i) out *= 2 * static_cast<std::size_t>(i);
      break;
    case Family::I2:
      out = 2 * static_cast<std::size_t>(m_);
      break;
  }
  return out;
}

std::vector<CoxElement> CoxeterSystem::enumerate(std::size_t max_size) const {
  if (order() > max_size) {
    throw Error(ErrorKind::SizeBound, name() + " has " + std::to_string(order()) + " elements, bound " + std::to_string(max_size));
  }
  std::vector<CoxElement> out{identity()};
  std::set<CoxElement> seen{identity()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int s = 1; s <= rank_; ++s) {
      CoxElement next = mul(out[head], generator(s));
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::string CoxeterSystem::element_to_string(const CoxElement& a) const {
  check(a);
  std::ostringstream os;
  if (family_ == Family::I2) {
    os << "r^" << a.code_[0] << (a.code_[1] < 0 ? " s" : "");
    return os.str();
  }
  os << "[";
  for (std::size_t i = 0; i < a.code_.size(); ++i) {
    if (i > 0) os << ",";
    os << (family_ == Family::A ? a.code_[i] + 1 : a.code_[i]);
  }
  os << "]";
  return os.str();
}

}  // namespace unitwist
