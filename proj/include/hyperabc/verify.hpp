#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hyperabc/canonical.hpp"
#include "hyperabc/closed_forms.hpp"
#include "hyperabc/generators.hpp"
#include "hyperabc/hypergraph.hpp"
#include "hyperabc/spectral.hpp"
#include "hyperabc/tensor.hpp"

namespace hyperabc {

enum class CheckStatus { holds, equality_attained, violated, inconclusive };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::equality_attained: return "equality-attained";
    case CheckStatus::violated: return "violated";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

// margin > 0 means the claim holds with that much room; for identities it is
// minus the observed gap.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::inconclusive;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::string detail;

  bool ok() const { return status != CheckStatus::violated; }
};

struct VerifyOptions {
  SolveOptions solve{};
  // Relative slack applied to exactly computed bound values and to solver
  // brackets before declaring two quantities separated.
  double slack = 1e-12;
};

namespace detail {

// Closed interval with outward slack.
struct Interval {
  double lo, hi;
};

inline Interval point(double v, double slack) {
  const double pad = slack * std::max(1.0, std::abs(v)) + 1e-300;
  return {v - pad, v + pad};
}

inline Interval bracket(const SpectralEstimate& e, double slack) {
  return {e.lower - slack * std::max(1.0, std::abs(e.lower)), e.upper + slack * std::max(1.0, std::abs(e.upper))};
}

inline bool overlap(Interval a, Interval b) { return a.lo <= b.hi && b.lo <= a.hi; }

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string describe(const UniformHypergraph& g) {
  return "k=" + std::to_string(g.k()) + " n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m());
}

inline bool all_equal(const std::vector<long long>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

// lo_bound <= x <= hi_bound, x given by a solver bracket.
inline CheckStatus sandwich(const SpectralEstimate& x, double lo_bound, double hi_bound, bool equality_condition,
                            double slack) {
  const Interval xb = bracket(x, slack);
  const Interval lo = point(lo_bound, slack), hi = point(hi_bound, slack);
  if (xb.hi < lo.lo || xb.lo > hi.hi) return CheckStatus::violated;
  if (equality_condition && (overlap(xb, lo) || overlap(xb, hi))) return CheckStatus::equality_attained;
  return CheckStatus::holds;
}

}  // namespace detail

// min_e (sum_{i in e} d_i - k)^{1/k} <= rho_ABC <= max_e (...)^{1/k}
inline CheckResult check_edge_sum_bounds(const UniformHypergraph& g, const VerifyOptions& opts = {}) {
  const auto est = spectral_radius(g, Weighting::abc, opts.solve);
  std::vector<long long> sums;
  for (const Edge& e : g.edges()) {
    long long s = 0;
    for (Vertex v : e) s += g.degree(v);
    sums.push_back(s - g.k());
  }
  const auto [mn, mx] = std::minmax_element(sums.begin(), sums.end());
  const double lo = std::pow(static_cast<double>(*mn), 1.0 / g.k());
  const double hi = std::pow(static_cast<double>(*mx), 1.0 / g.k());
  const bool constant = detail::all_equal(sums);
  CheckResult r;
  r.name = "edge-sum-bounds";
  r.status = detail::sandwich(est, lo, hi, constant, opts.slack);
  r.lhs = est.rho;
  r.rhs = hi;
  r.margin = std::min(est.rho - lo, hi - est.rho);
  r.detail = detail::describe(g) + " lower=" + detail::fmt(lo) + " upper=" + detail::fmt(hi) +
             " constant_edge_sums=" + (constant ? "true" : "false");
  return r;
}

// (k delta - k)^{1/k} <= rho_ABC <= (k Delta - k)^{1/k}
inline CheckResult check_regular_corollary(const UniformHypergraph& g, const VerifyOptions& opts = {}) {
  const auto est = spectral_radius(g, Weighting::abc, opts.solve);
  const DegreeVector dv = degrees(g);
  const double k = g.k();
  const double lo = std::pow(k * dv.min_degree - k, 1.0 / k);
  const double hi = std::pow(k * dv.max_degree - k, 1.0 / k);
  const bool regular = dv.min_degree == dv.max_degree;
  CheckResult r;
  r.name = "regular-corollary";
  r.status = detail::sandwich(est, lo, hi, regular, opts.slack);
  r.lhs = est.rho;
  r.rhs = hi;
  r.margin = std::min(est.rho - lo, hi - est.rho);
  r.detail = detail::describe(g) + " lower=" + detail::fmt(lo) + " upper=" + detail::fmt(hi) +
             " regular=" + (regular ? "true" : "false");
  return r;
}

// rho_ABC >= n^{-1} k! sigma_ABC = (k/n) sum_e omega(e)^{1/k}
inline CheckResult check_mean_bound(const UniformHypergraph& g, const VerifyOptions& opts = {}) {
  const TensorOperator op(g, Weighting::abc);
  const auto est = spectral_radius(op, opts.solve);
  const std::vector<double> ones(static_cast<std::size_t>(g.n()), 1.0);
  const auto rows = op.apply(ones);
  double total = 0.0;
  for (double w : op.weights()) total += w;
  const double bound = static_cast<double>(g.k()) * total / g.n();
  const auto [mn, mx] = std::minmax_element(rows.begin(), rows.end());
  const bool constant = *mx - *mn <= opts.slack * std::max(1.0, *mx);
  const detail::Interval xb = detail::bracket(est, opts.slack), b = detail::point(bound, opts.slack);
  CheckResult r;
  r.name = "mean-bound";
  if (xb.hi < b.lo) {
    r.status = CheckStatus::violated;
  } else if (constant && detail::overlap(xb, b)) {
    r.status = CheckStatus::equality_attained;
  } else {
    r.status = CheckStatus::holds;
  }
  r.lhs = est.rho;
  r.rhs = bound;
  r.margin = est.rho - bound;
  r.detail = detail::describe(g) + " constant_row_sums=" + (constant ? "true" : "false");
  return r;
}

// rho_ABC <= ((Delta-1)/Delta)^{1/k} rho_A; needs Delta >= 2.
inline CheckResult check_delta_bound(const UniformHypergraph& g, const VerifyOptions& opts = {}) {
  const DegreeVector dv = degrees(g);
  if (dv.max_degree < 2) throw ParameterError("delta bound needs maximum degree >= 2");
  const auto abc = spectral_radius(g, Weighting::abc, opts.solve);
  const auto adj = spectral_radius(g, Weighting::adjacency, opts.solve);
  const long long delta = dv.max_degree;
  const double factor = std::pow(static_cast<double>(delta - 1) / static_cast<double>(delta), 1.0 / g.k());
  bool all_extreme = true;
  for (const Edge& e : g.edges()) {
    long long sum = 0;
    long double prod = 1.0L;
    for (Vertex v : e) {
      sum += g.degree(v);
      prod *= g.degree(v);
    }
    // omega(e) == (Delta-1)/Delta  <=>  (sum - k) * Delta == (Delta - 1) * prod
    if (static_cast<long double>((sum - g.k()) * delta) != static_cast<long double>(delta - 1) * prod) {
      all_extreme = false;
      break;
    }
  }
  const detail::Interval lhs = detail::bracket(abc, opts.slack);
  const detail::Interval base = detail::bracket(adj, opts.slack);
  const detail::Interval rhs{base.lo * factor * (1 - opts.slack), base.hi * factor * (1 + opts.slack)};
  CheckResult r;
  r.name = "delta-bound";
  if (lhs.lo > rhs.hi) {
    r.status = CheckStatus::violated;
  } else if (all_extreme && detail::overlap(lhs, rhs)) {
    r.status = CheckStatus::equality_attained;
  } else {
    r.status = CheckStatus::holds;
  }
  r.lhs = abc.rho;
  r.rhs = factor * adj.rho;
  r.margin = r.rhs - r.lhs;
  r.detail = detail::describe(g) + " Delta=" + std::to_string(delta) + " rho_A=" + detail::fmt(adj.rho) +
             " all_edges_extreme=" + (all_extreme ? "true" : "false");
  return r;
}

// rho_ABC(G^k) == rho_ABC(G)^{r/k}
inline CheckResult check_power_relation(const UniformHypergraph& g, int k, const VerifyOptions& opts = {}) {
  const auto lifted = power(g, k);
  const auto base = spectral_radius(g, Weighting::abc, opts.solve);
  const auto top = spectral_radius(lifted, Weighting::abc, opts.solve);
  const double e = static_cast<double>(g.k()) / k;
  const detail::Interval b = detail::bracket(base, opts.slack);
  const detail::Interval predicted{std::pow(std::max(b.lo, 0.0), e) * (1 - opts.slack),
                                   std::pow(b.hi, e) * (1 + opts.slack)};
  CheckResult r;
  r.name = "power-relation";
  r.lhs = top.rho;
  r.rhs = std::pow(base.rho, e);
  r.margin = -std::abs(r.lhs - r.rhs);
  r.status = detail::overlap(detail::bracket(top, opts.slack), predicted) ? CheckStatus::holds : CheckStatus::violated;
  r.detail = detail::describe(g) + " lifted to k=" + std::to_string(k);
  return r;
}

// rho(R(G)) == 1, and x_i = d_i^{1/k} is an exact eigenvector.
inline CheckResult check_randic_unit(const UniformHypergraph& g, const VerifyOptions& opts = {}) {
  const TensorOperator op(g, Weighting::randic);
  const auto est = spectral_radius(op, opts.solve);
  std::vector<double> x(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) x[static_cast<std::size_t>(v)] = std::pow(static_cast<double>(g.degree(v)), 1.0 / g.k());
  const double explicit_residual = residual(op, 1.0, x);
  double scale = 0.0;
  for (double v : x) scale = std::max(scale, std::pow(v, g.k() - 1));
  const bool exact = explicit_residual <= 64 * 1e-16 * std::max(1.0, scale) * g.m();
  CheckResult r;
  r.name = "randic-unit";
  r.lhs = est.rho;
  r.rhs = 1.0;
  r.margin = -std::abs(est.rho - 1.0);
  r.status = detail::overlap(detail::bracket(est, opts.slack), detail::point(1.0, opts.slack)) && exact
                 ? CheckStatus::holds
                 : CheckStatus::violated;
  r.detail = detail::describe(g) + " degree_vector_residual=" + detail::fmt(explicit_residual);
  return r;
}

struct ScanRow {
  std::string label;  // family name when recognized, else empty
  std::string code;   // canonical code, hex
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::optional<bool> power;
};

struct ScanReport {
  std::vector<CheckResult> checks;
  std::vector<ScanRow> table;  // sorted by rho, descending

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
  }
};

namespace detail {

struct Ranked {
  UniformHypergraph g;
  CanonicalCode code;
  SpectralEstimate est;
  std::string label;
  std::optional<bool> power;
};

inline void sort_ranked(std::vector<Ranked>& v) {
  std::stable_sort(v.begin(), v.end(), [](const Ranked& a, const Ranked& b) {
    if (a.est.rho != b.est.rho) return a.est.rho > b.est.rho;
    return a.code < b.code;
  });
}

inline std::vector<ScanRow> table_of(const std::vector<Ranked>& v) {
  std::vector<ScanRow> out;
  for (const auto& r : v) out.push_back({r.label, r.code.hex(), r.est.rho, r.est.lower, r.est.upper, r.power});
  return out;
}

// Rank `pos` of `v` is the expected class, strictly above rank pos+1 by more
// than `gap`, and matches `closed` within 1e-7 relative.
inline CheckResult rank_check(const std::string& name, const std::vector<Ranked>& v, std::size_t pos,
                              const CanonicalCode& expected, double closed, double gap, double slack) {
  CheckResult r;
  r.name = name;
  if (v.size() <= pos) {
    r.status = CheckStatus::inconclusive;
    r.detail = "fewer than " + std::to_string(pos + 1) + " classes";
    return r;
  }
  const auto& top = v[pos];
  r.lhs = top.est.rho;
  r.rhs = closed;
  const bool right_class = top.code == expected;
  const bool matches = std::abs(top.est.rho - closed) <= 1e-7 * std::max(1.0, std::abs(closed));
  bool separated = true;
  double margin = INFINITY;
  if (v.size() > pos + 1) {
    const auto& next = v[pos + 1];
    margin = top.est.rho - next.est.rho;
    separated = margin > gap && bracket(top.est, slack).lo > bracket(next.est, slack).hi;
  }
  r.margin = margin;
  r.status = right_class && matches && separated ? CheckStatus::holds : CheckStatus::violated;
  r.detail = std::string("class=") + (right_class ? "expected" : "unexpected:" + top.label) +
             " closed_form_match=" + (matches ? "true" : "false") + " gap=" + fmt(margin);
  return r;
}

}  // namespace detail

inline constexpr double kRankGap = 1e-9;

// Enumerates all k-uniform hypertrees with m edges and checks the top of
// the ABC ordering: S_{m,k} first, D_{m,1}^k second, and S_{m,k;m-3,1,1}
// first among non-power trees (k >= 3, m >= 4).
inline ScanReport extremal_scan_hypertrees(int m, int k, const VerifyOptions& opts = {}) {
  ScanReport rep;
  std::vector<UniformHypergraph> trees;
  try {
    trees = enumerate_hypertrees(m, k);
  } catch (const BudgetExceeded& e) {
    rep.checks.push_back({"hypertree-scan", CheckStatus::inconclusive, 0, 0, 0, e.what()});
    return rep;
  }
  const auto lift = [k](const UniformHypergraph& g) { return g.k() == k ? g : power(g, k); };
  std::map<CanonicalCode, std::string> known;
  known[canonical_code(hyperstar(m, k))] = "hyperstar";
  known.try_emplace(canonical_code(hyperpath(m, k)), "hyperpath");
  if (m >= 3) known.try_emplace(canonical_code(lift(double_star(m, 1))), "double-star1");
  if (k >= 3 && m >= 3) known.try_emplace(canonical_code(s_composition(m, k, detail::padded({m - 3, 1, 1}, k))), "s311");

  std::vector<detail::Ranked> ranked;
  for (auto& g : trees) {
    detail::Ranked r{g, canonical_code(g), spectral_radius(g, Weighting::abc, opts.solve), {}, {}};
    if (auto it = known.find(r.code); it != known.end()) r.label = it->second;
    r.power = classify(g).power_hypertree;
    ranked.push_back(std::move(r));
  }
  detail::sort_ranked(ranked);

  rep.checks.push_back(detail::rank_check("hypertree-max-hyperstar", ranked, 0, canonical_code(hyperstar(m, k)),
                                          rho_abc_hyperstar(m, k), kRankGap, opts.slack));
  if (m >= 3) {
    rep.checks.push_back(detail::rank_check("hypertree-second-double-star1", ranked, 1,
                                            canonical_code(lift(double_star(m, 1))), rho_abc_double_star1(m, k),
                                            kRankGap, opts.slack));
  }
  if (k >= 3 && m >= 4) {
    std::vector<detail::Ranked> non_power;
    for (const auto& r : ranked) {
      if (r.power && !*r.power) non_power.push_back(r);
    }
    rep.checks.push_back(detail::rank_check("hypertree-nonpower-max-s311", non_power, 0,
                                            canonical_code(s_composition(m, k, detail::padded({m - 3, 1, 1}, k))),
                                            rho_abc_s311(m, k), kRankGap, opts.slack));
  }
  for (auto& c : rep.checks) c.detail += " m=" + std::to_string(m) + " k=" + std::to_string(k);
  rep.table = detail::table_of(ranked);
  return rep;
}

namespace detail {

inline void compositions(int total, int parts, std::vector<int>& cur, std::vector<Composition>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int x = total; x >= 0; --x) {
    cur.push_back(x);
    compositions(total - x, parts, cur, out);
    cur.pop_back();
  }
}

inline std::string composition_label(const Composition& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

}  // namespace detail

// Every U_{m,k,g}(a) over all compositions a of m-g; isomorphic members are
// merged. The maximum must be the class of a = (m-g, 0, ..., 0) and match the
// closed form for U_{m,g}.
inline ScanReport extremal_scan_unicyclic_family(int m, int k, int g, const VerifyOptions& opts = {}) {
  if (g != 2 && g != 3) throw ParameterError("unicyclic scan needs g in {2, 3}");
  if (k < 3 || m < g) throw ParameterError("unicyclic scan needs k >= 3 and m >= g");
  std::vector<Composition> comps;
  std::vector<int> cur;
  detail::compositions(m - g, k, cur, comps);
  if (comps.size() > 5000) {
    ScanReport rep;
    rep.checks.push_back({"unicyclic-family-scan", CheckStatus::inconclusive, 0, 0, 0, "too many compositions"});
    return rep;
  }
  std::map<CanonicalCode, detail::Ranked> classes;
  for (const auto& a : comps) {
    auto h = unicyclic_family(m, k, g, a);
    auto code = canonical_code(h);
    auto it = classes.find(code);
    if (it == classes.end()) {
      auto est = spectral_radius(h, Weighting::abc, opts.solve);
      classes.emplace(code, detail::Ranked{std::move(h), code, std::move(est), detail::composition_label(a), {}});
    } else {
      it->second.label += " " + detail::composition_label(a);
    }
  }
  std::vector<detail::Ranked> ranked;
  for (auto& [_, r] : classes) ranked.push_back(std::move(r));
  detail::sort_ranked(ranked);

  ScanReport rep;
  const auto expected = canonical_code(unicyclic_family(m, k, g, detail::padded({m - g}, k)));
  const double closed = g == 2 ? rho_abc_u2(m, k) : rho_abc_u3(m, k);
  rep.checks.push_back(detail::rank_check("unicyclic-family-max-g" + std::to_string(g), ranked, 0, expected, closed,
                                          kRankGap, opts.slack));
  rep.checks.back().detail += " m=" + std::to_string(m) + " k=" + std::to_string(k) +
                              " classes=" + std::to_string(ranked.size());
  rep.table = detail::table_of(ranked);
  return rep;
}

// All unicyclic hypergraphs grown from hypercycles (small m): the overall
// maximum is U_{m,2}^{(k)} and the linear maximum is U_{m,3}^{(k)}.
inline ScanReport extremal_scan_unicyclic(int m, int k, const VerifyOptions& opts = {}) {
  ScanReport rep;
  std::vector<UniformHypergraph> all;
  try {
    all = enumerate_unicyclic(m, k);
  } catch (const BudgetExceeded& e) {
    rep.checks.push_back({"unicyclic-scan", CheckStatus::inconclusive, 0, 0, 0, e.what()});
    return rep;
  }
  std::vector<detail::Ranked> ranked, linear;
  for (auto& h : all) {
    detail::Ranked r{h, canonical_code(h), spectral_radius(h, Weighting::abc, opts.solve), {}, {}};
    if (is_linear(h)) {
      r.label = "linear";
      linear.push_back(r);
    }
    ranked.push_back(std::move(r));
  }
  detail::sort_ranked(ranked);
  detail::sort_ranked(linear);
  rep.checks.push_back(detail::rank_check("unicyclic-max-u2", ranked, 0,
                                          canonical_code(unicyclic_family(m, k, 2, detail::padded({m - 2}, k))),
                                          rho_abc_u2(m, k), kRankGap, opts.slack));
  if (m >= 3) {
    rep.checks.push_back(detail::rank_check("unicyclic-linear-max-u3", linear, 0,
                                            canonical_code(unicyclic_family(m, k, 3, detail::padded({m - 3}, k))),
                                            rho_abc_u3(m, k), kRankGap, opts.slack));
  }
  for (auto& c : rep.checks) c.detail += " m=" + std::to_string(m) + " k=" + std::to_string(k);
  rep.table = detail::table_of(ranked);
  return rep;
}

// Reduced eigen-equation functions of the two worked examples.
inline double example_h1_f(double t) { return t * t * t - std::sqrt(0.75) * std::pow(t, 1.5) - 0.5; }
inline double example_h2_f(double t) { return std::pow(t, 4) - std::cbrt(5.0 / 8.0) * std::pow(t, 8.0 / 3.0) - 0.5; }

namespace detail {

inline CheckResult printed_value(const std::string& name, double computed, double printed) {
  CheckResult r;
  r.name = name;
  r.lhs = computed;
  r.rhs = printed;
  r.margin = 5e-5 - std::abs(computed - printed);
  r.status = r.margin >= 0 ? CheckStatus::holds : CheckStatus::violated;
  r.detail = "tolerance 5e-05";
  return r;
}

inline CheckResult strictly_below(const std::string& name, const SpectralEstimate& x, double bound, double slack,
                                  const std::string& detail_text) {
  CheckResult r;
  r.name = name;
  r.lhs = x.rho;
  r.rhs = bound;
  r.margin = bound - x.rho;
  r.status = bracket(x, slack).hi < point(bound, slack).lo ? CheckStatus::holds : CheckStatus::violated;
  r.detail = detail_text;
  return r;
}

// Max residual of the three-class eigen-equations
//   rho x1^{k-1} = w_p x1^{k-2} x2
//   rho x2^{k-1} = w_p x1^{k-1} + w_c x2^{k-2} x3
//   rho x3^{k-1} = w_c c x2^{k-1}
// where c is the center degree, evaluated at the solver's eigenvector.
inline double class_equation_residual(const UniformHypergraph& g, const SpectralEstimate& est, double wp, double wc,
                                      int c) {
  const int k = g.k();
  // Center: the unique vertex of degree c whose neighbors all have degree 2.
  Vertex center = -1, mid = -1, leaf = -1;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == c && center < 0) {
      bool ok = true;
      for (int e : g.incident(v)) {
        for (Vertex u : g.edge(static_cast<std::size_t>(e))) ok = ok && (u == v || g.degree(u) == 2);
      }
      if (ok) center = v;
    }
  }
  if (center < 0) return INFINITY;
  for (Vertex u : g.edge(static_cast<std::size_t>(g.incident(center)[0]))) {
    if (u != center) mid = u;
  }
  for (int e : g.incident(mid)) {
    for (Vertex u : g.edge(static_cast<std::size_t>(e))) {
      if (g.degree(u) == 1) leaf = u;
    }
  }
  const auto& x = est.eigenvector;
  const double x1 = x[static_cast<std::size_t>(leaf)], x2 = x[static_cast<std::size_t>(mid)],
               x3 = x[static_cast<std::size_t>(center)];
  const double rho = est.rho;
  const double r1 = rho * std::pow(x1, k - 1) - wp * std::pow(x1, k - 2) * x2;
  const double r2 = rho * std::pow(x2, k - 1) - (wp * std::pow(x1, k - 1) + wc * std::pow(x2, k - 2) * x3);
  const double r3 = rho * std::pow(x3, k - 1) - wc * c * std::pow(x2, k - 1);
  return std::max({std::abs(r1), std::abs(r2), std::abs(r3)});
}

}  // namespace detail

inline std::vector<CheckResult> run_worked_examples(const VerifyOptions& opts = {}) {
  std::vector<CheckResult> out;
  const double c8 = std::cos(std::numbers::pi / 8), c14 = std::cos(std::numbers::pi / 14);
  const double p63 = std::cbrt(2 * c8 * c8);
  const double p12_4 = std::pow(2 * c14 * c14, 0.25);
  const double p12_3 = std::cbrt(2 * c14 * c14);

  out.push_back(detail::printed_value("example-h1-f-at-1", example_h1_f(1.0), -0.366025));
  out.push_back(detail::printed_value("example-h1-f-at-path", example_h1_f(p63), 0.07559));
  out.push_back(detail::printed_value("example-h2-f-at-1", example_h2_f(1.0), -0.35499));
  out.push_back(detail::printed_value("example-h2-f-at-path", example_h2_f(p12_4), 0.08894));

  const auto h1 = example_h(1), h2 = example_h(2);
  const auto e1 = spectral_radius(h1, Weighting::abc, opts.solve);
  const auto e2 = spectral_radius(h2, Weighting::abc, opts.solve);

  // The reduced equations must vanish at the computed radius.
  {
    const double res = detail::class_equation_residual(h1, e1, std::cbrt(0.5), std::cbrt(3.0 / 8.0), 2);
    CheckResult r{"example-h1-reduction", CheckStatus::holds, example_h1_f(e1.rho), 0.0, 0.0, {}};
    r.margin = -std::abs(r.lhs);
    if (std::abs(r.lhs) > 1e-8 || res > 1e-8) r.status = CheckStatus::violated;
    r.detail = "f(rho)=" + detail::fmt(r.lhs) + " class_equation_residual=" + detail::fmt(res);
    out.push_back(r);
  }
  {
    // Central edges of H_2 have degrees (3,2,2,2), so omega = 5/24.
    const double actual = detail::class_equation_residual(h2, e2, std::pow(0.5, 0.25), std::pow(5.0 / 24, 0.25), 3);
    const double printed = detail::class_equation_residual(h2, e2, std::pow(0.5, 0.25), std::pow(1.0 / 3, 0.25), 3);
    CheckResult r{"example-h2-reduction", CheckStatus::holds, example_h2_f(e2.rho), 0.0, 0.0, {}};
    r.margin = -std::abs(r.lhs);
    if (std::abs(r.lhs) > 1e-8 || actual > 1e-8) r.status = CheckStatus::violated;
    r.detail = "f(rho)=" + detail::fmt(r.lhs) + " residual_with_omega_5/24=" + detail::fmt(actual) +
               " residual_with_printed_1/3=" + detail::fmt(printed);
    out.push_back(r);
  }

  const auto path63 = spectral_radius(hyperpath(6, 3), Weighting::abc, opts.solve);
  out.push_back(detail::strictly_below("example-h1-below-p63", e1, std::min(p63, path63.lower), opts.slack,
                                       "rho(P_{6,3})=" + detail::fmt(path63.rho)));
  out.push_back(detail::strictly_below("example-h2-below-p12-4", e2, p12_4, opts.slack,
                                       "(2cos^2(pi/14))^{1/4}, the 4-uniform reading"));
  out.push_back(detail::strictly_below("example-h2-below-p12-3", e2, p12_3, opts.slack,
                                       "(2cos^2(pi/14))^{1/3}, the 3-uniform reading"));
  return out;
}

// A named family instance.
struct NamedHypergraph {
  std::string name;
  UniformHypergraph g;
};

// Every generator family that accepts (m, k), with m reused as the cycle
// length for hypercycles and as n for complete hypergraphs.
inline std::vector<NamedHypergraph> named_families(int m, int k) {
  std::vector<NamedHypergraph> out;
  const auto lift = [k](const UniformHypergraph& g) { return g.k() == k ? g : power(g, k); };
  const auto add = [&](std::string name, auto&& make) {
    try {
      out.push_back({std::move(name), make()});
    } catch (const ParameterError&) {
    } catch (const BudgetExceeded&) {
    }
  };
  const std::string tag = "(m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")";
  add("hyperstar" + tag, [&] { return hyperstar(m, k); });
  add("hyperpath" + tag, [&] { return hyperpath(m, k); });
  add("hypercycle" + tag, [&] { return hypercycle(m, k); });
  add("complete" + tag, [&] { return complete(m, k); });
  add("double-star1" + tag, [&] { return lift(double_star(m, 1)); });
  add("double-star2" + tag, [&] { return lift(double_star(m, 2)); });
  if (k >= 3) {
    add("s311" + tag, [&] { return s_composition(m, k, detail::padded({m - 3, 1, 1}, k)); });
    add("s421" + tag, [&] { return s_composition(m, k, detail::padded({m - 4, 2, 1}, k)); });
    add("u2" + tag, [&] { return unicyclic_family(m, k, 2, detail::padded({m - 2}, k)); });
    add("u3" + tag, [&] { return unicyclic_family(m, k, 3, detail::padded({m - 3}, k)); });
    for (int idx = 1; idx <= 4; ++idx) {
      add("t" + std::to_string(idx) + tag, [&] { return lift(t_family(m, idx)); });
    }
  }
  if (k >= 4) add("s4-1111" + tag, [&] { return s_composition(m, k, detail::padded({m - 4, 1, 1, 1}, k)); });
  if (k == 3 && m == 6) add("example-h1", [] { return example_h(1); });
  if (k == 4 && m == 12) add("example-h2", [] { return example_h(2); });
  return out;
}

namespace detail {

inline void tag_with(std::vector<CheckResult>& v, const std::string& label) {
  for (auto& c : v) c.detail = label + " " + c.detail;
}

inline void append_scan(std::vector<CheckResult>& out, const ScanReport& rep) {
  out.insert(out.end(), rep.checks.begin(), rep.checks.end());
}

}  // namespace detail

// Bound checks on every named family at (m, k), Randic and power checks,
// the scans that fit the desk budget, and the worked examples. Sorted by
// name, then detail.
inline std::vector<CheckResult> run_all(int m, int k, const VerifyOptions& opts = {}) {
  std::vector<CheckResult> out;
  for (const auto& [name, g] : named_families(m, k)) {
    std::vector<CheckResult> local;
    local.push_back(check_edge_sum_bounds(g, opts));
    local.push_back(check_regular_corollary(g, opts));
    local.push_back(check_mean_bound(g, opts));
    if (degrees(g).max_degree >= 2) local.push_back(check_delta_bound(g, opts));
    local.push_back(check_randic_unit(g, opts));
    if (g.k() < 5) local.push_back(check_power_relation(g, g.k() + 1, opts));
    detail::tag_with(local, name);
    out.insert(out.end(), local.begin(), local.end());
  }
  if (m <= hypertree_enumeration_limit(k)) detail::append_scan(out, extremal_scan_hypertrees(m, k, opts));
  if (k >= 3 && m <= 7) {
    for (int g : {2, 3}) {
      if (m >= g) detail::append_scan(out, extremal_scan_unicyclic_family(m, k, g, opts));
    }
  }
  if (k == 3 && m >= 2 && m <= 4) detail::append_scan(out, extremal_scan_unicyclic(m, k, opts));
  const auto ex = run_worked_examples(opts);
  out.insert(out.end(), ex.begin(), ex.end());
  std::stable_sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.name, a.detail) < std::tie(b.name, b.detail);
  });
  return out;
}

}  // namespace hyperabc
