#include "unitwist/flag.hpp"

#include "unitwist/error.hpp"

namespace unitwist {

Flag flag_canonicalize(const Mat& m) {
  const int n = m.n();
  Mat c = m;
  std::vector<int> pivots;
  for (int j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const int r = pivots[k];
      const Fp f = c.at(r, j);
      if (f.is_zero()) continue;
      for (int i = 0; i < n; ++i) c.set(i, j, c.at(i, j) - f * c.at(i, static_cast<int>(k)));
    }
    int pivot = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (c(i, j) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw Error(ErrorKind::Singular, "flag matrix must be invertible");
    const Fp scale = c.at(pivot, j).inv();
    for (int i = 0; i < n; ++i) c.set(i, j, c.at(i, j) * scale);
    pivots.push_back(pivot);
  }
  return Flag(std::move(c));
}

Flag standard_flag(int n, std::uint32_t p) { return flag_canonicalize(Mat::identity(n, p)); }

Flag act(const Mat& g, const Flag& f) { return flag_canonicalize(g * f.matrix()); }

CoxElement relative_position(const Flag& a, const Flag& b) {
  if (a.n() != b.n() || a.p() != b.p()) throw Error(ErrorKind::DimensionMismatch, "flags of different spaces");
  const int n = a.n();
  const std::uint32_t p = a.p();
  // d[i][j] = dim(A_i ∩ B_j) = i + j - rank[A_1..A_i | B_1..B_j]
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i + j == 0) continue;
      // Rank of an n × (i+j) matrix, computed on its transpose rows.
      std::vector<std::vector<Entry>> rows;
      for (int k = 0; k < i; ++k) {
        std::vector<Entry> r(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) r[static_cast<std::size_t>(x)] = a.matrix()(x, k);
        rows.push_back(std::move(r));
      }
      for (int k = 0; k < j; ++k) {
        std::vector<Entry> r(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) r[static_cast<std::size_t>(x)] = b.matrix()(x, k);
        rows.push_back(std::move(r));
      }
      int rank = 0;
      for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
          if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
            piv = r;
            break;
          }
        }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(rank)]);
        const auto& prow = rows[static_cast<std::size_t>(rank)];
        const Fp inv = Fp(prow[static_cast<std::size_t>(col)], p).inv();
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
          auto& row = rows[static_cast<std::size_t>(r)];
          const Fp f = Fp(row[static_cast<std::size_t>(col)], p) * inv;
          if (f.is_zero()) continue;
          for (int x = col; x < n; ++x) {
            row[static_cast<std::size_t>(x)] =
                (Fp(row[static_cast<std::size_t>(x)], p) - f * Fp(prow[static_cast<std::size_t>(x)], p)).value();
          }
        }
        ++rank;
      }
      d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i + j - rank;
    }
  }
  std::vector<int> code(static_cast<std::size_t>(n), -1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      if (d[ui][uj] - d[ui - 1][uj] - d[ui][uj - 1] + d[ui - 1][uj - 1] == 1) code[uj - 1] = i - 1;
    }
  }
  return CoxElement(Family::A, n - 1, 0, std::move(code));
}

std::uint64_t flag_count(int n, std::uint32_t p) {
  std::uint64_t out = 1;
  std::uint64_t qk = 1;
  for (int k = 1; k <= n; ++k) {
    qk *= p;
    out *= (qk - 1) / (p - 1);
  }
  return out;
}

FlagSpace::FlagSpace(int n, std::uint32_t p, std::size_t max_flags) : n_(n), p_(p) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "flag space needs n >= 2");
  if (flag_count(n, p) > max_flags) {
    throw Error(ErrorKind::SizeBound, std::to_string(flag_count(n, p)) + " flags exceed budget");
  }
  // Flags s-adjacent to gB₊ are g·x_s(a)·ṡ·B₊ for a ∈ F_p, where x_s(a) = 1 + a E_{s,s+1}.
  std::vector<std::vector<Mat>> steps(static_cast<std::size_t>(n - 1));
  for (int s = 1; s < n; ++s) {
    Mat sdot = Mat::identity(n, p);
    sdot.set(s - 1, s - 1, 0);
    sdot.set(s, s, 0);
    sdot.set(s - 1, s, 1);
    sdot.set(s, s - 1, 1);
    for (std::uint32_t a = 0; a < p; ++a) {
      Mat x = Mat::identity(n, p);
      x.set(s - 1, s, a);
      steps[static_cast<std::size_t>(s - 1)].push_back(x * sdot);
    }
  }
  auto intern = [&](Flag f) {
    auto [it, inserted] = index_.try_emplace(f.matrix(), flags_.size());
    if (inserted) flags_.push_back(std::move(f));
    return it->second;
  };
  intern(standard_flag(n, p));
  for (std::size_t head = 0; head < flags_.size(); ++head) {
    std::vector<std::vector<std::size_t>> adj(static_cast<std::size_t>(n - 1));
    for (int s = 1; s < n; ++s) {
      for (const Mat& step : steps[static_cast<std::size_t>(s - 1)]) {
        const Mat base = flags_[head].matrix();
        adj[static_cast<std::size_t>(s - 1)].push_back(intern(flag_canonicalize(base * step)));
      }
    }
    adjacency_.push_back(std::move(adj));
  }
}

std::size_t FlagSpace::index_of(const Flag& f) const {
  auto it = index_.find(f.matrix());
  if (it == index_.end()) throw Error(ErrorKind::DimensionMismatch, "flag not in this flag space");
  return it->second;
}

std::size_t FlagSpace::act_index(const Mat& g, std::size_t i) const { return index_of(act(g, flags_[i])); }

}  // namespace unitwist
