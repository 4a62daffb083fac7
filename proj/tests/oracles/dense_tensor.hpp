#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// library's tensor, spectral or canonical code.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::vector<int>>;

inline std::vector<int> degrees(int n, const EdgeList& edges) {
  std::vector<int> d(n, 0);
  for (const auto& e : edges)
    for (int v : e) ++d[v];
  return d;
}

// Per-edge weights recomputed from the definitions.
inline std::vector<double> abc_weights(int n, int k, const EdgeList& edges) {
  const auto d = degrees(n, edges);
  std::vector<double> w;
  for (const auto& e : edges) {
    double sum = 0.0, prod = 1.0;
    for (int v : e) {
      sum += d[v];
      prod *= d[v];
    }
    w.push_back(std::pow((sum - k) / prod, 1.0 / k));
  }
  return w;
}

inline std::vector<double> randic_weights(int n, int k, const EdgeList& edges) {
  const auto d = degrees(n, edges);
  std::vector<double> w;
  for (const auto& e : edges) {
    double prod = 1.0;
    for (int v : e) prod *= d[v];
    w.push_back(std::pow(prod, -1.0 / k));
  }
  return w;
}

// Full order-k, dimension-n tensor: entry (i_1..i_k) = w_e / (k-1)! for
// every ordering of every edge e, zero elsewhere.
class DenseTensor {
 public:
  DenseTensor(int n, int k, const EdgeList& edges, const std::vector<double>& w) : n_(n), k_(k) {
    std::size_t size = 1;
    for (int i = 0; i < k; ++i) size *= static_cast<std::size_t>(n);
    data_.assign(size, 0.0);
    double fact = 1.0;
    for (int i = 2; i < k; ++i) fact *= i;
    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
      auto perm = edges[ei];
      std::sort(perm.begin(), perm.end());
      do {
        data_[flat(perm)] += w[ei] / fact;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  int n() const { return n_; }
  int k() const { return k_; }

  // (T x^{k-1})_i by summing over every index tuple.
  std::vector<double> apply(const std::vector<double>& x) const {
    std::vector<double> out(n_, 0.0);
    std::vector<int> idx(k_, 0);
    for (std::size_t f = 0; f < data_.size(); ++f) {
      unflat(f, idx);
      if (data_[f] == 0.0) continue;
      double p = data_[f];
      for (int j = 1; j < k_; ++j) p *= x[idx[j]];
      out[idx[0]] += p;
    }
    return out;
  }

  // T x^k.
  double form(const std::vector<double>& x) const {
    double acc = 0.0;
    std::vector<int> idx(k_, 0);
    for (std::size_t f = 0; f < data_.size(); ++f) {
      unflat(f, idx);
      double p = data_[f];
      for (int j = 0; j < k_; ++j) p *= x[idx[j]];
      acc += p;
    }
    return acc;
  }

  double at(const std::vector<int>& idx) const { return data_[flat(idx)]; }

 private:
  std::size_t flat(const std::vector<int>& idx) const {
    std::size_t f = 0;
    for (int v : idx) f = f * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    return f;
  }
  void unflat(std::size_t f, std::vector<int>& idx) const {
    for (int j = k_ - 1; j >= 0; --j) {
      idx[j] = static_cast<int>(f % static_cast<std::size_t>(n_));
      f /= static_cast<std::size_t>(n_);
    }
  }

  int n_;
  int k_;
  std::vector<double> data_;
};

// Plain NQZ iteration on the dense tensor plus identity shift, Collatz-Wielandt
// bracket. Returns {lower, upper}.
inline std::pair<double, double> dense_spectral_radius(const DenseTensor& t, double tol = 1e-12, int max_iters = 500000) {
  const int n = t.n(), k = t.k();
  std::vector<double> x(n, 1.0);
  double lo = 0.0, hi = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    auto y = t.apply(x);
    lo = INFINITY;
    hi = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = y[i] / std::pow(x[i], k - 1);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (hi - lo <= tol * std::max(1.0, hi)) break;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] = std::pow(y[i] + std::pow(x[i], k - 1), 1.0 / (k - 1));
      s += y[i];
    }
    for (int i = 0; i < n; ++i) x[i] = y[i] / s;
  }
  return {lo, hi};
}

// Edge multiset after relabeling, as a canonical comparable form.
inline std::multiset<std::vector<int>> relabeled(const EdgeList& edges, const std::vector<int>& perm) {
  std::multiset<std::vector<int>> out;
  for (const auto& e : edges) {
    std::vector<int> f;
    for (int v : e) f.push_back(perm[v]);
    std::sort(f.begin(), f.end());
    out.insert(f);
  }
  return out;
}

// Isomorphism by trying every vertex permutation. n must be small.
inline bool isomorphic(int n_a, const EdgeList& a, int n_b, const EdgeList& b) {
  if (n_a != n_b || a.size() != b.size()) return false;
  auto da = degrees(n_a, a), db = degrees(n_b, b);
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  const auto target = relabeled(b, [&] {
    std::vector<int> id(n_b);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }());
  std::vector<int> perm(n_a);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n_a && ok; ++v) ok = da[v] == db[perm[v]];
    if (ok && relabeled(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
