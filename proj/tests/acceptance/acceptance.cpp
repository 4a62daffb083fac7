// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperabc/hyperabc.hpp"
#include "oracles/dense_tensor.hpp"

using namespace hyperabc;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1. Hyperstar ABC radius equals (m-1)^{1/k}.
Outcome hyperstar_exactness() {
  Outcome o;
  double worst = 0.0;
  for (int k = 2; k <= 4; ++k) {
    for (int m = 1; m <= 12; ++m) {
      const double expect = std::pow(m - 1.0, 1.0 / k);
      const double err = std::abs(spectral_radius(hyperstar(m, k), Weighting::abc).rho - expect);
      worst = std::max(worst, err);
      if (err > 1e-7) o.fail("m=" + std::to_string(m) + " k=" + std::to_string(k) + " err=" + fmt(err));
    }
  }
  if (o.pass) o.note = "36 cases, max abs err " + fmt(worst);
  return o;
}

// 2. Closed forms against power iteration on their generating hypergraphs.
Outcome closed_forms_vs_oracle() {
  Outcome o;
  const std::vector<std::string> names{"double-star1", "adj-double-star2", "u2", "u3", "s311", "t1", "t2",
                                       "t3", "t4", "s4-1111", "hyperpath", "complete-bound"};
  int cases = 0;
  double worst = 0.0;
  for (const auto& name : names) {
    const auto* cf = find_closed_form(name);
    if (!cf) {
      o.fail("missing closed form " + name);
      continue;
    }
    int local = 0;
    for (int k = 2; k <= 4; ++k) {
      for (int m = 1; m <= 10; ++m) {
        if (!cf->valid(m, k)) continue;
        const double err = rel(spectral_radius(cf->generate(m, k), cf->weighting).rho, cf->value(m, k));
        worst = std::max(worst, err);
        ++local;
        if (err > 1e-7) o.fail(name + " m=" + std::to_string(m) + " k=" + std::to_string(k) + " rel=" + fmt(err));
      }
    }
    if (local == 0) o.fail(name + " has an empty grid");
    cases += local;
  }
  if (o.pass) o.note = std::to_string(cases) + " cases, max rel err " + fmt(worst);
  return o;
}

std::vector<NamedHypergraph> family_grid() {
  std::vector<NamedHypergraph> out;
  for (int k = 2; k <= 4; ++k) {
    for (int m = 1; m <= 8; ++m) {
      for (auto& f : named_families(m, k)) out.push_back(std::move(f));
    }
  }
  for (auto& f : named_families(6, 3)) out.push_back(std::move(f));
  for (auto& f : named_families(12, 4)) out.push_back(std::move(f));
  return out;
}

// 3. Randic radius is 1 on every connected hypergraph.
Outcome randic_unit() {
  Outcome o;
  int cases = 0;
  double worst = 0.0;
  auto probe = [&](const std::string& name, const UniformHypergraph& g) {
    const double err = std::abs(spectral_radius(g, Weighting::randic).rho - 1.0);
    worst = std::max(worst, err);
    ++cases;
    if (err > 1e-8) o.fail(name + " err=" + fmt(err));
  };
  for (int i = 0; i < 50; ++i) {
    const int k = 3 + i % 2;
    const int m = 1 + i % 10;
    probe("random-hypertree#" + std::to_string(i), random_hypertree(m, k, 7000u + static_cast<unsigned>(i)));
  }
  for (const auto& [name, g] : family_grid()) probe(name, g);
  if (o.pass) o.note = std::to_string(cases) + " hypergraphs, max abs err " + fmt(worst);
  return o;
}

// 4. Bound suite never violated; the listed equality cases are attained.
Outcome bound_suite() {
  Outcome o;
  int cases = 0, equalities = 0;
  auto run = [&](const std::string& name, const UniformHypergraph& g) {
    const bool star = name.rfind("hyperstar", 0) == 0 && g.m() >= 2;
    const bool cycle = name.rfind("hypercycle", 0) == 0;
    const bool full = name.rfind("complete", 0) == 0;
    auto expect = [&](const CheckResult& c, bool equality) {
      ++cases;
      if (c.status == CheckStatus::violated || c.status == CheckStatus::inconclusive) {
        o.fail(name + " " + c.name + " " + to_string(c.status) + " " + c.detail);
      } else if (equality) {
        ++equalities;
        if (c.status != CheckStatus::equality_attained) o.fail(name + " " + c.name + " expected equality-attained");
      }
    };
    expect(check_edge_sum_bounds(g), star || cycle || full);
    expect(check_regular_corollary(g), full);
    expect(check_mean_bound(g), full);
    if (degrees(g).max_degree >= 2) expect(check_delta_bound(g), star || cycle);
  };
  for (const auto& [name, g] : family_grid()) run(name, g);
  for (int i = 0; i < 100; ++i) {
    const int k = 2 + i % 3;
    const int m_tree = 2 + i % 6;
    const int extra = i % 4;
    run("random#" + std::to_string(i), random_connected_hypergraph(m_tree, extra, k, 9000u + static_cast<unsigned>(i)));
  }
  if (o.pass) o.note = std::to_string(cases) + " checks, " + std::to_string(equalities) + " required equalities";
  return o;
}

// 5. rho(G^k) = rho(G)^{r/k}.
Outcome power_lift() {
  Outcome o;
  const auto tri = UniformHypergraph::build(2, 3, {{0, 1}, {1, 2}, {0, 2}});
  const std::vector<std::pair<std::string, UniformHypergraph>> bases{
      {"C_3", tri},
      {"D_{5,1}", double_star(5, 1)},
      {"D_{7,2}", double_star(7, 2)},
      {"P_{5,2}", hyperpath(5, 2)},
      {"S_{4,3;1,1,1}", s_composition(4, 3, {1, 1, 1})},
  };
  double worst = 0.0;
  int cases = 0;
  for (const auto& [name, g] : bases) {
    const double base = spectral_radius(g, Weighting::abc).rho;
    for (int k = 3; k <= 5; ++k) {
      // A 3-uniform base is its own 3rd power.
      const auto lifted = k == g.k() ? g : power(g, k);
      const double err = std::abs(spectral_radius(lifted, Weighting::abc).rho - std::pow(base, static_cast<double>(g.k()) / k));
      worst = std::max(worst, err);
      ++cases;
      if (err > 1e-7) o.fail(name + " k=" + std::to_string(k) + " err=" + fmt(err));
    }
  }
  if (o.pass) o.note = std::to_string(cases) + " cases, max abs err " + fmt(worst);
  return o;
}

// 6. Hypertree orderings at the top.
Outcome extremal_hypertrees() {
  Outcome o;
  int scans = 0;
  double min_gap = INFINITY;
  const std::vector<std::pair<int, int>> grid{{4, 3}, {5, 3}, {6, 3}, {4, 4}, {5, 4}};
  for (const auto& [m, k] : grid) {
    const auto rep = extremal_scan_hypertrees(m, k);
    ++scans;
    std::vector<std::string> want{"hypertree-max-hyperstar", "hypertree-second-double-star1", "hypertree-nonpower-max-s311"};
    for (const auto& w : want) {
      bool seen = false;
      for (const auto& c : rep.checks) {
        if (c.name != w) continue;
        seen = true;
        min_gap = std::min(min_gap, c.margin);
        if (c.status != CheckStatus::holds || !(c.margin > 1e-9)) o.fail(w + " " + to_string(c.status) + " " + c.detail);
      }
      if (!seen) o.fail(w + " missing at m=" + std::to_string(m) + " k=" + std::to_string(k));
    }
    if (rep.table.empty() || std::abs(rep.table.front().rho - std::pow(m - 1.0, 1.0 / k)) > 1e-7) {
      o.fail("top of table is not (m-1)^{1/k} at m=" + std::to_string(m));
    }
  }
  if (o.pass) o.note = std::to_string(scans) + " scans, min rank gap " + fmt(min_gap);
  return o;
}

// 7. Unicyclic family maximizer a = (m-g, 0, ..., 0).
Outcome unicyclic_scans() {
  Outcome o;
  int scans = 0;
  for (int g : {2, 3}) {
    for (int m = 3; m <= 7; ++m) {
      const auto rep = extremal_scan_unicyclic_family(m, 3, g);
      ++scans;
      const std::string tag = " m=" + std::to_string(m) + " g=" + std::to_string(g);
      for (const auto& c : rep.checks) {
        if (c.status != CheckStatus::holds) o.fail(c.name + tag + " " + c.detail);
      }
      if (rep.table.empty()) {
        o.fail("empty scan" + tag);
        continue;
      }
      const auto& top = rep.table.front();
      const std::string label = "(" + std::to_string(m - g) + ",0,0)";
      if (top.label.find(label) == std::string::npos) o.fail("top class " + top.label + tag);
      const double closed = g == 2 ? rho_abc_u2(m, 3) : rho_abc_u3(m, 3);
      if (rel(top.rho, closed) > 1e-7) o.fail("closed form mismatch" + tag);
      if (rep.table.size() > 1 && !(top.rho - rep.table[1].rho > 1e-9)) o.fail("maximizer not unique" + tag);
    }
  }
  if (o.pass) o.note = std::to_string(scans) + " scans";
  return o;
}

// 8. Worked examples.
Outcome worked_numerics() {
  Outcome o;
  const double p63 = std::cbrt(2 * std::pow(std::cos(std::numbers::pi / 8), 2));
  const double p124 = std::pow(2 * std::pow(std::cos(std::numbers::pi / 14), 2), 0.25);
  const std::vector<std::pair<double, double>> printed{
      {example_h1_f(1.0), -0.366025}, {example_h1_f(p63), 0.07559}, {example_h2_f(1.0), -0.35499}, {example_h2_f(p124), 0.08894}};
  for (std::size_t i = 0; i < printed.size(); ++i) {
    if (std::abs(printed[i].first - printed[i].second) > 5e-5) {
      o.fail("value " + std::to_string(i + 1) + " = " + fmt(printed[i].first));
    }
  }
  const auto h1 = spectral_radius(example_h(1), Weighting::abc);
  const auto path = spectral_radius(hyperpath(6, 3), Weighting::abc);
  if (!(h1.upper * (1 + 1e-12) < path.lower * (1 - 1e-12))) o.fail("rho(H_1) < rho(P_{6,3}) not interval-safe");
  const auto h2 = spectral_radius(example_h(2), Weighting::abc);
  if (!(h2.upper * (1 + 1e-12) < p124 * (1 - 1e-12))) o.fail("rho(H_2) < (2cos^2(pi/14))^{1/4} not interval-safe");
  for (const auto& c : run_worked_examples()) {
    if (c.status != CheckStatus::holds) o.fail(c.name + " " + to_string(c.status));
  }
  if (o.pass) {
    std::ostringstream s;
    s.precision(9);
    s << "rho(H_1)=" << h1.rho << " < " << path.rho << ", rho(H_2)=" << h2.rho << " < " << p124;
    o.note = s.str();
  }
  return o;
}

// 9. form() against the dense n^k contraction.
Outcome dense_oracle() {
  Outcome o;
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  double worst = 0.0;
  int cases = 0;
  for (std::uint64_t seed = 0; cases < 20; ++seed) {
    const int m_tree = 1 + static_cast<int>(seed % 3);
    const auto g = random_connected_hypergraph(m_tree, static_cast<int>(seed % 3), 3, 400u + seed);
    if (g.n() > 8) continue;
    std::vector<double> x(static_cast<std::size_t>(g.n()));
    for (auto& v : x) v = u(rng);
    for (auto w : {Weighting::adjacency, Weighting::abc, Weighting::randic}) {
      std::vector<double> weights;
      if (w == Weighting::abc) weights = oracle::abc_weights(g.n(), 3, g.edges());
      else if (w == Weighting::randic) weights = oracle::randic_weights(g.n(), 3, g.edges());
      else weights.assign(static_cast<std::size_t>(g.m()), 1.0);
      const oracle::DenseTensor t(g.n(), 3, g.edges(), weights);
      const double err = std::abs(form(g, w, x) - t.form(x));
      worst = std::max(worst, err);
      if (err > 1e-10) o.fail("seed " + std::to_string(seed) + " " + to_string(w) + " err=" + fmt(err));
    }
    ++cases;
  }
  if (o.pass) o.note = std::to_string(cases) + " pairs x 3 weightings, max abs err " + fmt(worst);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;  // 0 = no runtime limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "hyperstar exactness", 5.0, hyperstar_exactness},
      {2, "closed forms vs power iteration", 60.0, closed_forms_vs_oracle},
      {3, "randic unit radius", 0.0, randic_unit},
      {4, "bound suite", 0.0, bound_suite},
      {5, "power lift", 0.0, power_lift},
      {6, "hypertree extremal scans", 600.0, extremal_hypertrees},
      {7, "unicyclic family scans", 0.0, unicyclic_scans},
      {8, "worked examples", 0.0, worked_numerics},
      {9, "dense tensor oracle", 0.0, dense_oracle},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) o.fail("runtime " + fmt(secs) + " s over limit " + fmt(c.limit_s) + " s");
    std::printf("%s %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.note.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
