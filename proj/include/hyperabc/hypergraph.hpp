#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperabc {

using Vertex = std::int32_t;
using Edge = std::vector<Vertex>;

// Base class of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generator / operation precondition violated.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A desk-scale budget (enumeration size, canonical-code cap, ...) was exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

enum class HypergraphErrc {
  bad_uniformity,      // k < 2
  too_few_vertices,    // n < k
  empty_edge_list,     // m == 0
  wrong_cardinality,   // |e| != k
  repeated_vertex,     // e has a vertex twice
  vertex_out_of_range, // id outside [0, n)
  duplicate_edge,      // same vertex set appears twice
};

inline const char* to_string(HypergraphErrc c) {
  switch (c) {
    case HypergraphErrc::bad_uniformity: return "bad-uniformity";
    case HypergraphErrc::too_few_vertices: return "too-few-vertices";
    case HypergraphErrc::empty_edge_list: return "empty-edge-list";
    case HypergraphErrc::wrong_cardinality: return "wrong-cardinality";
    case HypergraphErrc::repeated_vertex: return "repeated-vertex";
    case HypergraphErrc::vertex_out_of_range: return "vertex-out-of-range";
    case HypergraphErrc::duplicate_edge: return "duplicate-edge";
  }
  return "unknown";
}

// Rejected input to UniformHypergraph::build. edge_index() refers to the
// position in the caller's edge list, not the sorted internal order.
class HypergraphError : public Error {
 public:
  HypergraphError(HypergraphErrc code, std::optional<std::size_t> edge_index, const std::string& what)
      : Error(what), code_(code), edge_index_(edge_index) {}

  HypergraphErrc code() const noexcept { return code_; }
  std::optional<std::size_t> edge_index() const noexcept { return edge_index_; }

 private:
  HypergraphErrc code_;
  std::optional<std::size_t> edge_index_;
};

struct DegreeVector {
  std::vector<int> degrees;
  int max_degree = 0;
  int min_degree = 0;
};

// A validated k-uniform hypergraph on vertices [0, n). Edges are stored with
// ascending vertex ids and the edge list is sorted lexicographically, so two
// builds from the same edge set compare equal regardless of input order.
class UniformHypergraph {
 public:
  static UniformHypergraph build(int k, int n, std::vector<Edge> edges) {
    if (k < 2) {
      throw HypergraphError(HypergraphErrc::bad_uniformity, std::nullopt,
                            "edge cardinality k must be at least 2, got " + std::to_string(k));
    }
    if (n < k) {
      throw HypergraphError(HypergraphErrc::too_few_vertices, std::nullopt,
                            "vertex count n=" + std::to_string(n) + " is smaller than k=" + std::to_string(k));
    }
    if (edges.empty()) {
      throw HypergraphError(HypergraphErrc::empty_edge_list, std::nullopt, "hypergraph has no edges");
    }
    std::vector<std::pair<Edge, std::size_t>> tagged;
    tagged.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      Edge& e = edges[i];
      const std::string where = "edge " + std::to_string(i);
      if (static_cast<int>(e.size()) != k) {
        throw HypergraphError(HypergraphErrc::wrong_cardinality, i,
                              where + " has " + std::to_string(e.size()) + " vertices, expected " +
                                  std::to_string(k));
      }
      for (Vertex v : e) {
        if (v < 0 || v >= n) {
          throw HypergraphError(HypergraphErrc::vertex_out_of_range, i,
                                where + " uses vertex " + std::to_string(v) + " outside [0, " +
                                    std::to_string(n) + ")");
        }
      }
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
        throw HypergraphError(HypergraphErrc::repeated_vertex, i, where + " repeats a vertex");
      }
      tagged.emplace_back(std::move(e), i);
    }
    std::sort(tagged.begin(), tagged.end());
    for (std::size_t i = 1; i < tagged.size(); ++i) {
      if (tagged[i].first == tagged[i - 1].first) {
        const std::size_t later = std::max(tagged[i].second, tagged[i - 1].second);
        const std::size_t earlier = std::min(tagged[i].second, tagged[i - 1].second);
        throw HypergraphError(HypergraphErrc::duplicate_edge, later,
                              "edge " + std::to_string(later) + " duplicates edge " + std::to_string(earlier));
      }
    }
    UniformHypergraph g;
    g.k_ = k;
    g.n_ = n;
    g.edges_.reserve(tagged.size());
    for (auto& [e, _] : tagged) g.edges_.push_back(std::move(e));
    g.index();
    return g;
  }

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  // Indices of the edges containing v, ascending.
  std::span<const int> incident(Vertex v) const {
    const auto& inc = incidence_.at(static_cast<std::size_t>(v));
    return {inc.data(), inc.size()};
  }

  int degree(Vertex v) const { return static_cast<int>(incidence_.at(static_cast<std::size_t>(v)).size()); }

  // Index of an edge given as a vertex set (any order), if present.
  std::optional<std::size_t> find_edge(Edge e) const {
    std::sort(e.begin(), e.end());
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  UniformHypergraph() = default;

  void index() {
    incidence_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      for (Vertex v : edges_[e]) incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
    }
  }

  int k_ = 0;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

inline DegreeVector degrees(const UniformHypergraph& g) {
  DegreeVector dv;
  dv.degrees.resize(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) dv.degrees[static_cast<std::size_t>(v)] = g.degree(v);
  auto [lo, hi] = std::minmax_element(dv.degrees.begin(), dv.degrees.end());
  dv.min_degree = *lo;
  dv.max_degree = *hi;
  return dv;
}

inline bool is_regular(const UniformHypergraph& g) {
  const DegreeVector dv = degrees(g);
  return dv.min_degree == dv.max_degree;
}

// Reachability over shared-edge incidence.
inline bool is_connected(const UniformHypergraph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<char> used(static_cast<std::size_t>(g.m()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (int e : g.incident(v)) {
      if (used[static_cast<std::size_t>(e)]) continue;
      used[static_cast<std::size_t>(e)] = 1;
      for (Vertex w : g.edge(static_cast<std::size_t>(e))) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
  }
  return reached == g.n();
}

// Every pair of distinct edges shares at most one vertex.
inline bool is_linear(const UniformHypergraph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        const Edge& ea = g.edge(static_cast<std::size_t>(inc[a]));
        const Edge& eb = g.edge(static_cast<std::size_t>(inc[b]));
        // Count shared vertices other than v; a second one breaks linearity.
        for (Vertex w : ea) {
          if (w != v && std::binary_search(eb.begin(), eb.end(), w)) return false;
        }
      }
    }
  }
  return true;
}

enum class StructureKind { hypertree, unicyclic, other };

inline const char* to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::hypertree: return "hypertree";
    case StructureKind::unicyclic: return "unicyclic";
    case StructureKind::other: return "other";
  }
  return "other";
}

enum class GirthStatus { acyclic, found, undetermined };

struct StructureReport {
  bool connected = false;
  StructureKind kind = StructureKind::other;
  bool linear = false;
  GirthStatus girth_status = GirthStatus::acyclic;
  std::optional<int> girth;            // set iff girth_status == found
  std::optional<bool> power_hypertree; // set iff kind == hypertree and k >= 3
};

struct ClassifyOptions {
  // Upper bound on nodes visited by the shortest-cycle search.
  std::size_t girth_node_budget = 2'000'000;
};

namespace detail {

// Depth-first search for a cycle of exactly `len` edges:
// distinct vertices v_1..v_len, distinct edges e_1..e_len with
// {v_i, v_{i+1}} in e_i (indices cyclic) and cyclically non-consecutive
// edges disjoint. v_1 is taken as the smallest vertex of the cycle.
class CycleSearch {
 public:
  CycleSearch(const UniformHypergraph& g, std::size_t budget) : g_(g), budget_(budget) {}

  // Returns true if found; sets exhausted() when the budget ran out.
  bool has_cycle_of_length(int len) {
    len_ = len;
    verts_.clear();
    edges_.clear();
    for (Vertex start = 0; start < g_.n(); ++start) {
      verts_.assign(1, start);
      if (extend()) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  bool exhausted() const noexcept { return exhausted_; }

 private:
  static bool disjoint(const Edge& a, const Edge& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      if (a[i] < b[j]) ++i; else ++j;
    }
    return true;
  }

  bool edge_admissible(int e) const {
    if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) return false;
    const int pos = static_cast<int>(edges_.size());  // 0-based position of the new edge
    const Edge& ne = g_.edge(static_cast<std::size_t>(e));
    for (int j = 0; j + 1 < pos; ++j) {
      const bool wraps = (j == 0 && pos == len_ - 1);
      if (!wraps && !disjoint(ne, g_.edge(static_cast<std::size_t>(edges_[static_cast<std::size_t>(j)])))) return false;
    }
    return true;
  }

  bool extend() {
    if (++visited_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const Vertex cur = verts_.back();
    const int pos = static_cast<int>(edges_.size());
    for (int e : g_.incident(cur)) {
      if (!edge_admissible(e)) continue;
      const Edge& ed = g_.edge(static_cast<std::size_t>(e));
      edges_.push_back(e);
      if (pos == len_ - 1) {
        if (std::binary_search(ed.begin(), ed.end(), verts_.front())) return true;
      } else {
        for (Vertex w : ed) {
          if (w <= verts_.front()) continue;
          if (std::find(verts_.begin(), verts_.end(), w) != verts_.end()) continue;
          verts_.push_back(w);
          if (extend()) return true;
          verts_.pop_back();
          if (exhausted_) return false;
        }
      }
      edges_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  const UniformHypergraph& g_;
  std::size_t budget_;
  std::size_t visited_ = 0;
  bool exhausted_ = false;
  int len_ = 0;
  std::vector<Vertex> verts_;
  std::vector<int> edges_;
};

}  // namespace detail

// Shortest cycle length, found by iterative deepening over cycle length.
inline std::pair<GirthStatus, std::optional<int>> girth(const UniformHypergraph& g,
                                                        std::size_t node_budget = ClassifyOptions{}.girth_node_budget) {
  detail::CycleSearch search(g, node_budget);
  const int max_len = std::min(g.m(), g.n());
  for (int len = 2; len <= max_len; ++len) {
    if (search.has_cycle_of_length(len)) return {GirthStatus::found, len};
    if (search.exhausted()) return {GirthStatus::undetermined, std::nullopt};
  }
  return {GirthStatus::acyclic, std::nullopt};
}

inline StructureReport classify(const UniformHypergraph& g, const ClassifyOptions& opts = {}) {
  StructureReport r;
  r.connected = is_connected(g);
  const long long excess = static_cast<long long>(g.m()) * (g.k() - 1);
  if (r.connected && g.n() == excess + 1) {
    r.kind = StructureKind::hypertree;
  } else if (r.connected && g.n() == excess) {
    r.kind = StructureKind::unicyclic;
  }
  r.linear = is_linear(g);
  auto [status, len] = girth(g, opts.girth_node_budget);
  r.girth_status = status;
  r.girth = len;
  if (r.kind == StructureKind::hypertree && g.k() >= 3) {
    bool power = true;
    for (const Edge& e : g.edges()) {
      const auto pendant = std::count_if(e.begin(), e.end(), [&](Vertex v) { return g.degree(v) == 1; });
      if (pendant < g.k() - 2) {
        power = false;
        break;
      }
    }
    r.power_hypertree = power;
  }
  return r;
}

}  // namespace hyperabc
