#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperabc/hypergraph.hpp"

namespace hyperabc {

// Opaque isomorphism-class identifier. Equal codes iff isomorphic hypergraphs.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (unsigned char c : bytes_) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 15]);
    }
    return out;
  }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

struct CanonicalOptions {
  int max_vertices = 64;
};

namespace detail {

// Individualization-refinement over the vertex/edge incidence graph.
// Nodes [0, n) are vertices, [n, n+m) are edges. Only vertex nodes are
// individualized; once vertices are discrete, edges are determined because
// no two edges share a vertex set.
class Canonizer {
 public:
  explicit Canonizer(const UniformHypergraph& g) : g_(g), n_(g.n()), m_(g.m()) {
    adj_.resize(static_cast<std::size_t>(n_ + m_));
    for (int e = 0; e < m_; ++e) {
      for (Vertex v : g.edge(static_cast<std::size_t>(e))) {
        adj_[static_cast<std::size_t>(v)].push_back(n_ + e);
        adj_[static_cast<std::size_t>(n_ + e)].push_back(v);
      }
    }
  }

  std::vector<Vertex> run() {
    std::vector<int> colors(static_cast<std::size_t>(n_ + m_), 0);
    for (int e = 0; e < m_; ++e) colors[static_cast<std::size_t>(n_ + e)] = 1;
    refine(colors);
    std::vector<Vertex> path;
    dfs(colors, path);
    return best_lab_;
  }

  const std::vector<Edge>& best_certificate() const noexcept { return best_cert_; }

 private:
  static constexpr int kNone = -1;

  // Recolor by (own color, sorted neighbour colors) until stable.
  void refine(std::vector<int>& colors) const {
    const std::size_t total = colors.size();
    std::size_t classes = count_classes(colors);
    std::vector<std::pair<std::vector<int>, std::size_t>> keys(total);
    while (true) {
      for (std::size_t u = 0; u < total; ++u) {
        auto& key = keys[u].first;
        key.clear();
        key.push_back(colors[u]);
        const std::size_t mark = key.size();
        for (int w : adj_[u]) key.push_back(colors[static_cast<std::size_t>(w)]);
        std::sort(key.begin() + static_cast<std::ptrdiff_t>(mark), key.end());
        keys[u].second = u;
      }
      std::vector<std::size_t> order(total);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a].first < keys[b].first; });
      int rank = -1;
      for (std::size_t i = 0; i < total; ++i) {
        if (i == 0 || keys[order[i]].first != keys[order[i - 1]].first) ++rank;
        colors[order[i]] = rank;
      }
      const std::size_t next = static_cast<std::size_t>(rank + 1);
      if (next == classes) return;
      classes = next;
    }
  }

  static std::size_t count_classes(const std::vector<int>& colors) {
    std::vector<int> c(colors);
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  std::vector<int> individualize(const std::vector<int>& colors, Vertex v) const {
    std::vector<int> out(colors.size());
    for (std::size_t u = 0; u < colors.size(); ++u) out[u] = 2 * colors[u] + 1;
    out[static_cast<std::size_t>(v)] = 2 * colors[static_cast<std::size_t>(v)];
    refine(out);
    return out;
  }

  // Smallest non-singleton vertex cell, ties to the lowest color.
  std::optional<int> target_cell(const std::vector<int>& colors) const {
    std::vector<int> size(static_cast<std::size_t>(n_ + m_), 0);
    for (int v = 0; v < n_; ++v) ++size[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
    std::optional<int> best;
    for (int c = 0; c < n_ + m_; ++c) {
      const int s = size[static_cast<std::size_t>(c)];
      if (s > 1 && (!best || s < size[static_cast<std::size_t>(*best)])) best = c;
    }
    return best;
  }

  // Canonical position of each vertex (vertex -> label).
  std::vector<Vertex> labeling(const std::vector<int>& colors) const {
    std::vector<Vertex> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return colors[static_cast<std::size_t>(a)] < colors[static_cast<std::size_t>(b)];
    });
    std::vector<Vertex> lab(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) lab[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    return lab;
  }

  std::vector<Edge> certificate(const std::vector<Vertex>& lab) const {
    std::vector<Edge> cert;
    cert.reserve(static_cast<std::size_t>(m_));
    for (const Edge& e : g_.edges()) {
      Edge r;
      r.reserve(e.size());
      for (Vertex v : e) r.push_back(lab[static_cast<std::size_t>(v)]);
      std::sort(r.begin(), r.end());
      cert.push_back(std::move(r));
    }
    std::sort(cert.begin(), cert.end());
    return cert;
  }

  // gamma(v) = the vertex that `to` labels the same as `from` labels v.
  std::vector<Vertex> automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) const {
    std::vector<Vertex> inv(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inv[static_cast<std::size_t>(to[static_cast<std::size_t>(v)])] = v;
    std::vector<Vertex> gamma(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) gamma[static_cast<std::size_t>(v)] = inv[static_cast<std::size_t>(from[static_cast<std::size_t>(v)])];
    return gamma;
  }

  static int common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  // Orbit representative of every vertex under generators fixing `prefix`.
  std::vector<int> orbits(const std::vector<Vertex>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& gamma : gens_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](Vertex p) { return gamma[static_cast<std::size_t>(p)] == p; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v), b = find(gamma[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  // Returns the depth to resume at, or kNone to continue normally.
  int dfs(const std::vector<int>& colors, std::vector<Vertex>& path) {
    const auto cell = target_cell(colors);
    const int depth = static_cast<int>(path.size());
    if (!cell) return leaf(colors, path);

    std::vector<Vertex> members;
    for (int v = 0; v < n_; ++v) {
      if (colors[static_cast<std::size_t>(v)] == *cell) members.push_back(v);
    }
    std::vector<Vertex> explored;
    for (Vertex w : members) {
      if (!explored.empty()) {
        const auto orb = orbits(path);
        const bool redundant = std::any_of(explored.begin(), explored.end(), [&](Vertex u) {
          return orb[static_cast<std::size_t>(u)] == orb[static_cast<std::size_t>(w)];
        });
        if (redundant) continue;
      }
      const auto next = individualize(colors, w);
      path.push_back(w);
      const int resume = dfs(next, path);
      path.pop_back();
      explored.push_back(w);
      if (resume != kNone && resume < depth) return resume;
    }
    return kNone;
  }

  int leaf(const std::vector<int>& colors, const std::vector<Vertex>& path) {
    auto lab = labeling(colors);
    auto cert = certificate(lab);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = lab;
      first_cert_ = best_cert_ = cert;
      first_path_ = best_path_ = path;
      return kNone;
    }
    if (cert == first_cert_) {
      gens_.push_back(automorphism(first_lab_, lab));
      return common_prefix(path, first_path_);
    }
    if (cert == best_cert_) {
      gens_.push_back(automorphism(best_lab_, lab));
      return common_prefix(path, best_path_);
    }
    if (cert < best_cert_) {
      best_lab_ = std::move(lab);
      best_cert_ = std::move(cert);
      best_path_ = path;
    }
    return kNone;
  }

  const UniformHypergraph& g_;
  int n_;
  int m_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<Vertex>> gens_;
  std::vector<Vertex> first_lab_, best_lab_;
  std::vector<Edge> first_cert_, best_cert_;
  std::vector<Vertex> first_path_, best_path_;
};

inline void put_u16(std::string& out, int value) {
  out.push_back(static_cast<char>((value >> 8) & 0xff));
  out.push_back(static_cast<char>(value & 0xff));
}

}  // namespace detail

// Vertex relabeling that maps g onto its canonical form (vertex -> label).
inline std::vector<Vertex> canonical_labeling(const UniformHypergraph& g, const CanonicalOptions& opts = {}) {
  if (g.n() > opts.max_vertices) {
    throw BudgetExceeded("canonical labeling supports at most " + std::to_string(opts.max_vertices) +
                         " vertices, got " + std::to_string(g.n()));
  }
  return detail::Canonizer(g).run();
}

inline CanonicalCode canonical_code(const UniformHypergraph& g, const CanonicalOptions& opts = {}) {
  if (g.n() > opts.max_vertices) {
    throw BudgetExceeded("canonical code supports at most " + std::to_string(opts.max_vertices) +
                         " vertices, got " + std::to_string(g.n()));
  }
  detail::Canonizer canon(g);
  canon.run();
  std::string bytes;
  detail::put_u16(bytes, g.k());
  detail::put_u16(bytes, g.n());
  detail::put_u16(bytes, g.m());
  for (const Edge& e : canon.best_certificate()) {
    for (Vertex v : e) detail::put_u16(bytes, v);
  }
  return CanonicalCode(std::move(bytes));
}

inline bool isomorphic(const UniformHypergraph& a, const UniformHypergraph& b) {
  if (a.k() != b.k() || a.n() != b.n() || a.m() != b.m()) return false;
  return canonical_code(a) == canonical_code(b);
}

// Rebuild g with vertex v renamed perm[v].
inline UniformHypergraph relabel(const UniformHypergraph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw ParameterError("permutation length must equal n");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.m()));
  for (const Edge& e : g.edges()) {
    Edge r;
    for (Vertex v : e) r.push_back(perm[static_cast<std::size_t>(v)]);
    edges.push_back(std::move(r));
  }
  return UniformHypergraph::build(g.k(), g.n(), std::move(edges));
}

}  // namespace hyperabc
