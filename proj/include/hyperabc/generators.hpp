#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyperabc/canonical.hpp"
#include "hyperabc/hypergraph.hpp"

namespace hyperabc {

// Pendant-edge counts per anchor vertex of a base edge.
using Composition = std::vector<int>;

namespace detail {

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw ParameterError(msg);
}

inline void append_pendant(std::vector<Edge>& edges, int& n, int k, Vertex v) {
  Edge e{v};
  for (int j = 0; j < k - 1; ++j) e.push_back(n++);
  edges.push_back(std::move(e));
}

inline Edge iota_edge(int from, int k) {
  Edge e(static_cast<std::size_t>(k));
  std::iota(e.begin(), e.end(), from);
  return e;
}

}  // namespace detail

// G plus {v, n, ..., n+k-2}.
inline UniformHypergraph attach_pendant_edge(const UniformHypergraph& g, Vertex v) {
  detail::require(v >= 0 && v < g.n(), "attach vertex " + std::to_string(v) + " outside [0, n)");
  std::vector<Edge> edges = g.edges();
  int n = g.n();
  detail::append_pendant(edges, n, g.k(), v);
  return UniformHypergraph::build(g.k(), n, std::move(edges));
}

// S_{m,k}; the center is vertex 0.
inline UniformHypergraph hyperstar(int m, int k) {
  detail::require(m >= 1, "hyperstar needs m >= 1");
  detail::require(k >= 2, "hyperstar needs k >= 2");
  std::vector<Edge> edges{detail::iota_edge(0, k)};
  int n = k;
  for (int i = 1; i < m; ++i) detail::append_pendant(edges, n, k, 0);
  return UniformHypergraph::build(k, n, std::move(edges));
}

// P_{m,k}; each new edge hangs off the last vertex of the previous one.
inline UniformHypergraph hyperpath(int m, int k) {
  detail::require(m >= 1, "hyperpath needs m >= 1");
  detail::require(k >= 2, "hyperpath needs k >= 2");
  std::vector<Edge> edges{detail::iota_edge(0, k)};
  int n = k;
  for (int i = 1; i < m; ++i) detail::append_pendant(edges, n, k, n - 1);
  return UniformHypergraph::build(k, n, std::move(edges));
}

// C_{g,k}: e_i = {v_{i(k-1)}, ..., v_{i(k-1)+k-1}} with indices mod g(k-1).
// Edge e_1 = {0, ..., k-1}, so its two junction vertices are 0 and k-1.
// For k = 2 this is the ordinary cycle and needs g >= 3.
inline UniformHypergraph hypercycle(int g, int k) {
  detail::require(k >= 2, "hypercycle needs k >= 2");
  detail::require(g >= 2, "hypercycle needs g >= 2");
  detail::require(k >= 3 || g >= 3, "a 2-uniform cycle needs g >= 3");
  const int n = g * (k - 1);
  std::vector<Edge> edges;
  for (int i = 0; i < g; ++i) {
    Edge e;
    for (int j = 0; j < k; ++j) e.push_back((i * (k - 1) + j) % n);
    edges.push_back(std::move(e));
  }
  return UniformHypergraph::build(k, n, std::move(edges));
}

inline constexpr long long kCompleteEdgeBudget = 20000;

// K_n^{(k)}: all k-subsets of [n].
inline UniformHypergraph complete(int n, int k, long long edge_budget = kCompleteEdgeBudget) {
  detail::require(k >= 2, "complete needs k >= 2");
  detail::require(n > k, "complete needs n > k");
  long long count = 1;
  for (int i = 0; i < k; ++i) {
    count = count * (n - i) / (i + 1);
    if (count > edge_budget) break;
  }
  if (count > edge_budget) {
    throw BudgetExceeded("complete(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds " +
                         std::to_string(edge_budget) + " edges");
  }
  std::vector<Edge> edges;
  Edge e = detail::iota_edge(0, k);
  while (true) {
    edges.push_back(e);
    int i = k - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++e[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) e[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j - 1)] + 1;
  }
  return UniformHypergraph::build(k, n, std::move(edges));
}

// G^k: edge number i (in stored order) gains fresh vertices n + i(k-r) ... .
inline UniformHypergraph power(const UniformHypergraph& g, int k) {
  detail::require(k > g.k(), "power needs target k greater than the base uniformity");
  const int pad = k - g.k();
  std::vector<Edge> edges;
  int n = g.n();
  for (const Edge& e : g.edges()) {
    Edge p = e;
    for (int j = 0; j < pad; ++j) p.push_back(n++);
    edges.push_back(std::move(p));
  }
  return UniformHypergraph::build(k, n, std::move(edges));
}

// D_{m,a}: centers 0 (a leaves) and 1 (m-1-a leaves) joined by an edge.
inline UniformHypergraph double_star(int m, int a) {
  detail::require(m >= 3, "double star needs m >= 3");
  detail::require(a >= 1 && 2 * a <= m - 1, "double star needs 1 <= a <= (m-1)/2");
  std::vector<Edge> edges{{0, 1}};
  int n = 2;
  for (int i = 0; i < a; ++i) detail::append_pendant(edges, n, 2, 0);
  for (int i = 0; i < m - 1 - a; ++i) detail::append_pendant(edges, n, 2, 1);
  return UniformHypergraph::build(2, n, std::move(edges));
}

// S_{m,k;a_1..a_k}: base edge {0..k-1} with a[i] pendant edges at vertex i.
inline UniformHypergraph s_composition(int m, int k, const Composition& a) {
  detail::require(k >= 2, "s-composition needs k >= 2");
  detail::require(m >= 1, "s-composition needs m >= 1");
  detail::require(static_cast<int>(a.size()) == k, "composition must have exactly k entries");
  detail::require(std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; }), "composition entries must be >= 0");
  detail::require(std::accumulate(a.begin(), a.end(), 0) == m - 1, "composition must sum to m-1");
  std::vector<Edge> edges{detail::iota_edge(0, k)};
  int n = k;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < a[static_cast<std::size_t>(i)]; ++j) detail::append_pendant(edges, n, k, i);
  }
  return UniformHypergraph::build(k, n, std::move(edges));
}

// U_{m,k,g}(a): hypercycle C_{g,k} whose edge {0..k-1} (u_1 = 0, u_2 = k-1)
// carries a[i] pendant edges at vertex i.
inline UniformHypergraph unicyclic_family(int m, int k, int g, const Composition& a) {
  detail::require(g == 2 || g == 3, "unicyclic family needs g in {2, 3}");
  detail::require(k >= 3, "unicyclic family needs k >= 3");
  detail::require(m >= g, "unicyclic family needs m >= g");
  detail::require(static_cast<int>(a.size()) == k, "composition must have exactly k entries");
  detail::require(std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; }), "composition entries must be >= 0");
  detail::require(std::accumulate(a.begin(), a.end(), 0) == m - g, "composition must sum to m-g");
  const UniformHypergraph cycle = hypercycle(g, k);
  std::vector<Edge> edges = cycle.edges();
  int n = cycle.n();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < a[static_cast<std::size_t>(i)]; ++j) detail::append_pendant(edges, n, k, i);
  }
  return UniformHypergraph::build(k, n, std::move(edges));
}

namespace detail {

// Vertices of degree 1 in edge e, ascending.
inline std::vector<Vertex> pendant_vertices(const UniformHypergraph& g, const Edge& e) {
  std::vector<Vertex> out;
  for (Vertex v : e) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

// First pendant edge at v (an edge through v whose other vertices all have degree 1).
inline const Edge& pendant_edge_at(const UniformHypergraph& g, Vertex v) {
  for (int ei : g.incident(v)) {
    const Edge& e = g.edge(static_cast<std::size_t>(ei));
    if (std::all_of(e.begin(), e.end(), [&](Vertex u) { return u == v || g.degree(u) == 1; })) return e;
  }
  throw ParameterError("no pendant edge at vertex " + std::to_string(v));
}

}  // namespace detail

// The four 3-uniform trees T_{m,1..4}.
//   1: S_{m,3;m-4,2,1}
//   2: S_{m-1,3;m-4,1,1} plus a pendant edge at a pendant vertex of a pendant
//      edge at the degree-(m-3) vertex
//   3: D_{m-2,1}^3 plus one pendant edge at each of the two pendant vertices
//      of the pendant edge at the degree-2 center
//   4: S_{m-1,3;m-4,1,1} plus a pendant edge at a pendant vertex of the
//      pendant edge at a degree-2 vertex
inline UniformHypergraph t_family(int m, int idx) {
  detail::require(idx >= 1 && idx <= 4, "t-family index must be 1..4");
  detail::require(m >= (idx == 1 ? 6 : 5), idx == 1 ? "T_{m,1} needs m >= 6" : "T_{m,idx} needs m >= 5");
  switch (idx) {
    case 1:
      return s_composition(m, 3, {m - 4, 2, 1});
    case 2: {
      const auto base = s_composition(m - 1, 3, {m - 4, 1, 1});
      const Edge& pe = detail::pendant_edge_at(base, 0);
      return attach_pendant_edge(base, detail::pendant_vertices(base, pe).front());
    }
    case 3: {
      const auto base = power(double_star(m - 2, 1), 3);
      const auto leaves = detail::pendant_vertices(base, detail::pendant_edge_at(base, 0));
      return attach_pendant_edge(attach_pendant_edge(base, leaves.at(0)), leaves.at(1));
    }
    default: {
      const auto base = s_composition(m - 1, 3, {m - 4, 1, 1});
      const Edge& pe = detail::pendant_edge_at(base, 1);
      return attach_pendant_edge(base, detail::pendant_vertices(base, pe).front());
    }
  }
}

// H_1 (from S_{2,3}) and H_2 (from S_{3,4}): one new pendant edge at every
// pendant vertex of the star.
inline UniformHypergraph example_h(int idx) {
  detail::require(idx == 1 || idx == 2, "example index must be 1 or 2");
  const auto star = idx == 1 ? hyperstar(2, 3) : hyperstar(3, 4);
  auto g = star;
  for (Vertex v = 0; v < star.n(); ++v) {
    if (star.degree(v) == 1) g = attach_pendant_edge(g, v);
  }
  return g;
}

// Largest m for which enumerate_hypertrees runs without an explicit override.
inline int hypertree_enumeration_limit(int k) {
  if (k <= 2) return 10;
  if (k == 3) return 6;
  if (k == 4) return 5;
  return 4;
}

namespace detail {

// Grow every class by one pendant edge, keeping one representative per code.
inline std::vector<UniformHypergraph> grow_classes(const std::vector<UniformHypergraph>& level) {
  std::map<CanonicalCode, UniformHypergraph> next;
  for (const auto& g : level) {
    for (Vertex v = 0; v < g.n(); ++v) {
      auto h = attach_pendant_edge(g, v);
      auto code = canonical_code(h);
      next.try_emplace(std::move(code), std::move(h));
    }
  }
  std::vector<UniformHypergraph> out;
  out.reserve(next.size());
  for (auto& [_, h] : next) out.push_back(std::move(h));
  return out;
}

}  // namespace detail

// One representative per isomorphism class of k-uniform hypertrees with m
// edges, ordered by canonical code. max_m < 0 means hypertree_enumeration_limit(k).
inline std::vector<UniformHypergraph> enumerate_hypertrees(int m, int k, int max_m = -1) {
  detail::require(m >= 1, "enumeration needs m >= 1");
  detail::require(k >= 2, "enumeration needs k >= 2");
  const int limit = max_m < 0 ? hypertree_enumeration_limit(k) : max_m;
  if (m > limit) {
    throw BudgetExceeded("hypertree enumeration limited to m <= " + std::to_string(limit) + " for k=" +
                         std::to_string(k));
  }
  std::vector<UniformHypergraph> level{hyperstar(1, k)};
  for (int i = 1; i < m; ++i) level = detail::grow_classes(level);
  return level;
}

// All k-uniform unicyclic hypergraphs with m edges reachable from a
// hypercycle C_{g,k} (2 <= g <= m) by pendant-edge attachment. Small sizes only.
inline std::vector<UniformHypergraph> enumerate_unicyclic(int m, int k, int max_m = 4) {
  detail::require(k >= 3, "unicyclic enumeration needs k >= 3");
  detail::require(m >= 2, "unicyclic enumeration needs m >= 2");
  if (m > max_m) throw BudgetExceeded("unicyclic enumeration limited to m <= " + std::to_string(max_m));
  std::map<CanonicalCode, UniformHypergraph> all;
  for (int g = 2; g <= m; ++g) {
    std::vector<UniformHypergraph> level{hypercycle(g, k)};
    for (int i = g; i < m; ++i) level = detail::grow_classes(level);
    for (auto& h : level) {
      auto code = canonical_code(h);
      all.try_emplace(std::move(code), std::move(h));
    }
  }
  std::vector<UniformHypergraph> out;
  for (auto& [_, h] : all) out.push_back(std::move(h));
  return out;
}

// Uniform attachment: each new edge hangs off a uniformly chosen existing vertex.
inline UniformHypergraph random_hypertree(int m, int k, std::uint64_t seed) {
  detail::require(m >= 1 && k >= 2, "random hypertree needs m >= 1, k >= 2");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges{detail::iota_edge(0, k)};
  int n = k;
  for (int i = 1; i < m; ++i) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    detail::append_pendant(edges, n, k, pick(rng));
  }
  return UniformHypergraph::build(k, n, std::move(edges));
}

// A random hypertree with m_tree edges plus `extra` distinct random k-subsets
// of its vertex set. Always connected.
inline UniformHypergraph random_connected_hypergraph(int m_tree, int extra, int k, std::uint64_t seed) {
  detail::require(extra >= 0, "extra edge count must be >= 0");
  const auto tree = random_hypertree(m_tree, k, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::set<Edge> have(tree.edges().begin(), tree.edges().end());
  std::vector<Edge> edges = tree.edges();
  std::vector<Vertex> pool(static_cast<std::size_t>(tree.n()));
  std::iota(pool.begin(), pool.end(), 0);
  int added = 0;
  for (int attempt = 0; added < extra && attempt < 100 * (extra + 1); ++attempt) {
    std::shuffle(pool.begin(), pool.end(), rng);
    Edge e(pool.begin(), pool.begin() + k);
    std::sort(e.begin(), e.end());
    if (have.insert(e).second) {
      edges.push_back(std::move(e));
      ++added;
    }
  }
  return UniformHypergraph::build(k, tree.n(), std::move(edges));
}

}  // namespace hyperabc
