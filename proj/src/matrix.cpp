#include "unitwist/matrix.hpp"

#include <sstream>
#include <utility>

#include "unitwist/error.hpp"

namespace unitwist {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Entry reduce_mod(long long x, std::uint32_t p) {
  const long long r = x % static_cast<long long>(p);
  return static_cast<Entry>(r < 0 ? r + p : r);
}

Entry inv_mod(Entry a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorKind::Singular, "zero has no inverse mod " + std::to_string(p));
  long long t = 0, new_t = 1;
  long long r = p, new_r = a % p;
  while (new_r != 0) {
    const long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce_mod(t, p);
}

Fp Fp::pow(unsigned k) const {
  Fp result(1, p_);
  Fp base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    base = base * base;
    k >>= 1U;
  }
  return result;
}

Mat::Mat(int n, std::uint32_t p) : n_(n), p_(p), a_(static_cast<std::size_t>(n * n), 0) {}

Mat::Mat(std::uint32_t p, std::initializer_list<std::initializer_list<long long>> rows)
    : n_(static_cast<int>(rows.size())), p_(p), a_(rows.size() * rows.size(), 0) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "matrix rows must be square");
    int j = 0;
    for (long long x : row) set(i, j++, x);
    ++i;
  }
}

Mat Mat::identity(int n, std::uint32_t p) {
  Mat m(n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::diagonal(const std::vector<Entry>& diag, std::uint32_t p) {
  Mat m(static_cast<int>(diag.size()), p);
  for (int i = 0; i < m.n_; ++i) m.set(i, i, diag[static_cast<std::size_t>(i)]);
  return m;
}

static void require_compatible(const Mat& a, const Mat& b) {
  if (a.n() != b.n() || a.p() != b.p()) throw Error(ErrorKind::DimensionMismatch, "matrix size or field mismatch");
}

Mat operator*(const Mat& a, const Mat& b) {
  require_compatible(a, b);
  const int n = a.n_;
  Mat out(n, a.p_);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) {
        auto& dst = out.a_[static_cast<std::size_t>(i * n + j)];
        dst = static_cast<Entry>((dst + aik * b(k, j)) % a.p_);
      }
    }
  }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_compatible(a, b);
  Mat out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = (a.a_[i] + b.a_[i]) % a.p_;
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  require_compatible(a, b);
  Mat out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = (a.a_[i] + a.p_ - b.a_[i]) % a.p_;
  return out;
}

Mat Mat::transpose() const {
  Mat out(n_, p_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.set(i, j, (*this)(j, i));
  return out;
}

Mat Mat::inverse() const {
  Mat work = *this;
  Mat inv = identity(n_, p_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if (work(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error(ErrorKind::Singular, "matrix is not invertible mod " + std::to_string(p_));
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) {
        std::swap(work.a_[static_cast<std::size_t>(pivot * n_ + j)], work.a_[static_cast<std::size_t>(col * n_ + j)]);
        std::swap(inv.a_[static_cast<std::size_t>(pivot * n_ + j)], inv.a_[static_cast<std::size_t>(col * n_ + j)]);
      }
    }
    const std::uint64_t scale = inv_mod(work(col, col), p_);
    for (int j = 0; j < n_; ++j) {
      work.set(col, j, static_cast<long long>(work(col, j) * scale % p_));
      inv.set(col, j, static_cast<long long>(inv(col, j) * scale % p_));
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || work(r, col) == 0) continue;
      const std::uint64_t f = work(r, col);
      for (int j = 0; j < n_; ++j) {
        work.set(r, j, static_cast<long long>(work(r, j)) - static_cast<long long>(f * work(col, j) % p_));
        inv.set(r, j, static_cast<long long>(inv(r, j)) - static_cast<long long>(f * inv(col, j) % p_));
      }
    }
  }
  return inv;
}

Mat Mat::pow(unsigned k) const {
  Mat result = identity(n_, p_);
  Mat base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Entry Mat::det() const {
  Mat work = *this;
  std::uint64_t d = 1;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if (work(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n_; ++j)
        std::swap(work.a_[static_cast<std::size_t>(pivot * n_ + j)], work.a_[static_cast<std::size_t>(col * n_ + j)]);
      d = (p_ - d) % p_;
    }
    d = d * work(col, col) % p_;
    const std::uint64_t inv = inv_mod(work(col, col), p_);
    for (int r = col + 1; r < n_; ++r) {
      if (work(r, col) == 0) continue;
      const std::uint64_t f = work(r, col) * inv % p_;
      for (int j = col; j < n_; ++j)
        work.set(r, j, static_cast<long long>(work(r, j)) - static_cast<long long>(f * work(col, j) % p_));
    }
  }
  return static_cast<Entry>(d);
}

int Mat::rank() const {
  Mat work = *this;
  int rank = 0;
  for (int col = 0; col < n_ && rank < n_; ++col) {
    int pivot = -1;
    for (int r = rank; r < n_; ++r) {
      if (work(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < n_; ++j)
      std::swap(work.a_[static_cast<std::size_t>(pivot * n_ + j)], work.a_[static_cast<std::size_t>(rank * n_ + j)]);
    const std::uint64_t inv = inv_mod(work(rank, col), p_);
    for (int r = rank + 1; r < n_; ++r) {
      if (work(r, col) == 0) continue;
      const std::uint64_t f = work(r, col) * inv % p_;
      for (int j = col; j < n_; ++j)
        work.set(r, j, static_cast<long long>(work(r, j)) - static_cast<long long>(f * work(rank, j) % p_));
    }
    ++rank;
  }
  return rank;
}

bool Mat::is_zero() const {
  for (Entry x : a_)
    if (x != 0) return false;
  return true;
}

bool Mat::is_upper_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

bool Mat::is_unit_upper() const {
  if (!is_upper_triangular()) return false;
  for (int i = 0; i < n_; ++i)
    if ((*this)(i, i) != 1) return false;
  return true;
}

bool Mat::is_unit_lower() const { return transpose().is_unit_upper(); }

bool Mat::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? "," : "") << "[";
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::size_t MatHash::operator()(const Mat& m) const noexcept {
  std::size_t h = static_cast<std::size_t>(m.n()) * 31 + m.p();
  for (Entry x : m.data()) h = h * 1099511628211ULL ^ x;
  return h;
}

}  // namespace unitwist
