#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperabc/hypergraph.hpp"

namespace hyperabc {

enum class Weighting { adjacency, abc, randic };

inline const char* to_string(Weighting w) {
  switch (w) {
    case Weighting::adjacency: return "adj";
    case Weighting::abc: return "abc";
    case Weighting::randic: return "randic";
  }
  return "abc";
}

inline std::optional<Weighting> parse_weighting(std::string_view s) {
  if (s == "abc") return Weighting::abc;
  if (s == "adj" || s == "adjacency") return Weighting::adjacency;
  if (s == "randic") return Weighting::randic;
  return std::nullopt;
}

namespace detail {

// Product of degrees in e, or nullopt on int64 overflow.
inline std::optional<std::int64_t> degree_product(const UniformHypergraph& g, const Edge& e) {
  std::int64_t prod = 1;
  for (Vertex v : e) {
    if (__builtin_mul_overflow(prod, static_cast<std::int64_t>(g.degree(v)), &prod)) return std::nullopt;
  }
  return prod;
}

inline long double degree_product_ld(const UniformHypergraph& g, const Edge& e) {
  long double prod = 1.0L;
  for (Vertex v : e) prod *= static_cast<long double>(g.degree(v));
  return prod;
}

}  // namespace detail

// (sum_{i in e} d_i - k) / prod_{i in e} d_i
inline double omega(const UniformHypergraph& g, std::size_t e) {
  const Edge& edge = g.edge(e);
  std::int64_t sum = 0;
  for (Vertex v : edge) sum += g.degree(v);
  const std::int64_t num = sum - g.k();
  if (num == 0) return 0.0;
  if (auto prod = detail::degree_product(g, edge)) {
    return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(*prod));
  }
  return static_cast<double>(static_cast<long double>(num) / detail::degree_product_ld(g, edge));
}

// Per-edge weight with the (k-1)! tensor normalization absorbed.
inline double edge_weight(const UniformHypergraph& g, std::size_t e, Weighting w) {
  const double k = static_cast<double>(g.k());
  switch (w) {
    case Weighting::adjacency:
      return 1.0;
    case Weighting::abc:
      return std::pow(omega(g, e), 1.0 / k);
    case Weighting::randic: {
      const Edge& edge = g.edge(e);
      if (auto prod = detail::degree_product(g, edge)) return std::pow(static_cast<double>(*prod), -1.0 / k);
      return static_cast<double>(std::pow(detail::degree_product_ld(g, edge), -1.0L / static_cast<long double>(k)));
    }
  }
  return 0.0;
}

// Implicit symmetric tensor over a hypergraph: apply_i = sum_{e ∋ i} w_e prod_{j in e\i} x_j.
class TensorOperator {
 public:
  TensorOperator(const UniformHypergraph& g, Weighting w) : g_(g) {
    weights_.reserve(static_cast<std::size_t>(g.m()));
    for (std::size_t e = 0; e < static_cast<std::size_t>(g.m()); ++e) weights_.push_back(edge_weight(g, e, w));
  }

  // Arbitrary nonnegative per-edge weights, one per stored edge.
  static TensorOperator from_weights(const UniformHypergraph& g, std::vector<double> weights) {
    if (weights.size() != static_cast<std::size_t>(g.m())) throw ParameterError("need exactly one weight per edge");
    for (double w : weights) {
      if (!(w >= 0.0) || !std::isfinite(w)) throw ParameterError("edge weights must be finite and nonnegative");
    }
    return TensorOperator(g, std::move(weights));
  }

  const UniformHypergraph& hypergraph() const noexcept { return g_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  int n() const noexcept { return g_.n(); }
  int k() const noexcept { return g_.k(); }

  bool is_zero() const {
    for (double w : weights_) {
      if (w != 0.0) return false;
    }
    return true;
  }

  void apply(const std::vector<double>& x, std::vector<double>& out) const {
    check_length(x);
    out.assign(x.size(), 0.0);
    const auto& edges = g_.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const double w = weights_[e];
      if (w == 0.0) continue;
      const Edge& edge = edges[e];
      for (std::size_t a = 0; a < edge.size(); ++a) {
        double p = w;
        for (std::size_t b = 0; b < edge.size(); ++b) {
          if (b != a) p *= x[static_cast<std::size_t>(edge[b])];
        }
        out[static_cast<std::size_t>(edge[a])] += p;
      }
    }
  }

  std::vector<double> apply(const std::vector<double>& x) const {
    std::vector<double> out;
    apply(x, out);
    return out;
  }

  // x^T (T x^{k-1}) = k * sum_e w_e prod_{j in e} x_j
  double form(const std::vector<double>& x) const {
    check_length(x);
    double total = 0.0;
    const auto& edges = g_.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      double p = weights_[e];
      for (Vertex v : edges[e]) p *= x[static_cast<std::size_t>(v)];
      total += p;
    }
    return static_cast<double>(g_.k()) * total;
  }

 private:
  TensorOperator(const UniformHypergraph& g, std::vector<double> weights) : g_(g), weights_(std::move(weights)) {}

  void check_length(const std::vector<double>& x) const {
    if (x.size() != static_cast<std::size_t>(g_.n())) {
      throw ParameterError("vector length " + std::to_string(x.size()) + " does not match n=" + std::to_string(g_.n()));
    }
  }

  UniformHypergraph g_;
  std::vector<double> weights_;
};

inline std::vector<double> apply(const UniformHypergraph& g, Weighting w, const std::vector<double>& x) {
  return TensorOperator(g, w).apply(x);
}

inline double form(const UniformHypergraph& g, Weighting w, const std::vector<double>& x) {
  return TensorOperator(g, w).form(x);
}

// (1/(k-1)!) * sum_e omega(e)^{1/k}
inline double abc_index(const UniformHypergraph& g) {
  double sum = 0.0;
  for (std::size_t e = 0; e < static_cast<std::size_t>(g.m()); ++e) sum += edge_weight(g, e, Weighting::abc);
  double fact = 1.0;
  for (int i = 2; i < g.k(); ++i) fact *= i;
  return sum / fact;
}

}  // namespace hyperabc
