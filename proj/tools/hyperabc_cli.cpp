// hyperabc: generate hypergraph families, solve for spectral radii, evaluate
// closed forms and run the verification suite.
//
// Exit status: 0 success, 1 violated check or numerical failure, 2 usage or
// input error. With --json every result or error is one JSON document on stdout.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperabc/hyperabc.hpp"

namespace {

using hyperabc::UniformHypergraph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// A failure that maps to a specific exit code and error kind.
struct CliError {
  int code;
  std::string kind;
  std::string message;
  std::optional<std::size_t> line;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct FamilyArgs {
  std::string input;
  std::string family;
  std::string base;
  int m = 0;
  int k = 3;
  int g = 3;
  int n = 0;
  int idx = 1;
  int base_k = 2;
  std::vector<int> a;
  std::optional<std::uint64_t> seed;
};

void add_family_flags(CLI::App* cmd, FamilyArgs& f, bool positional_input) {
  if (positional_input) cmd->add_option("input", f.input, "UHG v1 file ('-' for stdin)");
  cmd->add_option("--family", f.family,
                  "hyperstar|hyperpath|hypercycle|complete|double-star|power|s-comp|unicyclic|t-family|example-h|"
                  "random-hypertree");
  cmd->add_option("--m", f.m, "edge count (m)");
  cmd->add_option("--k", f.k, "edge cardinality (k); the target uniformity for power");
  cmd->add_option("--g", f.g, "cycle length (hypercycle, unicyclic)");
  cmd->add_option("--n", f.n, "vertex count (complete)");
  cmd->add_option("--idx", f.idx, "family index (t-family 1..4, example-h 1..2)");
  cmd->add_option("--a", f.a, "composition entries or double-star a")->delimiter(',');
  cmd->add_option("--base", f.base, "base family for power");
  cmd->add_option("--base-k", f.base_k, "base uniformity for power (default 2)");
  cmd->add_option("--seed", f.seed, "seed for random-hypertree");
}

UniformHypergraph make_family(const std::string& family, const FamilyArgs& f, int k) {
  using namespace hyperabc;
  if (family == "hyperstar") return hyperstar(f.m, k);
  if (family == "hyperpath") return hyperpath(f.m, k);
  if (family == "hypercycle") return hypercycle(f.g, k);
  if (family == "complete") return complete(f.n, k);
  if (family == "double-star") {
    if (f.a.size() != 1) throw ParameterError("double-star needs a single --a value");
    return double_star(f.m, f.a.front());
  }
  if (family == "s-comp") return s_composition(f.m, k, f.a);
  if (family == "unicyclic") return unicyclic_family(f.m, k, f.g, f.a);
  if (family == "t-family") return t_family(f.m, f.idx);
  if (family == "example-h") return example_h(f.idx);
  if (family == "random-hypertree") {
    if (!f.seed) throw ParameterError("random-hypertree needs an explicit --seed");
    return random_hypertree(f.m, k, *f.seed);
  }
  if (family == "power") {
    if (f.base.empty() || f.base == "power") throw ParameterError("power needs --base <family>");
    return power(make_family(f.base, f, f.base_k), k);
  }
  throw ParameterError("unknown family '" + family + "'");
}

UniformHypergraph load_input(const FamilyArgs& f) {
  if (!f.input.empty() && !f.family.empty()) throw hyperabc::ParameterError("give either an input file or --family, not both");
  if (!f.family.empty()) return make_family(f.family, f, f.k);
  if (f.input.empty()) throw hyperabc::ParameterError("no input: give a UHG file or --family");
  if (f.input == "-") return hyperabc::read_uhg(std::cin);
  return hyperabc::load_uhg(f.input);
}

json graph_json(const UniformHypergraph& g) {
  return {{"k", g.k()}, {"n", g.n()}, {"m", g.m()}, {"edges", g.edges()}};
}

json check_json(const hyperabc::CheckResult& c) {
  return {{"name", c.name},
          {"status", hyperabc::to_string(c.status)},
          {"lhs", c.lhs},
          {"rhs", c.rhs},
          {"margin", c.margin},
          {"detail", c.detail}};
}

json scan_table_json(const std::vector<hyperabc::ScanRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row{{"label", r.label}, {"code", r.code}, {"rho", r.rho}, {"lower", r.lower}, {"upper", r.upper}};
    row["power_hypertree"] = r.power ? json(*r.power) : json(nullptr);
    out.push_back(row);
  }
  return out;
}

void print_check_text(const hyperabc::CheckResult& c) {
  std::cout << c.name << ' ' << hyperabc::to_string(c.status) << " lhs=" << num(c.lhs) << " rhs=" << num(c.rhs)
            << " margin=" << num(c.margin) << ' ' << c.detail << '\n';
}

struct Context {
  bool json_out = false;
};

int cmd_gen(const Context& ctx, const FamilyArgs& f) {
  if (f.family.empty()) throw hyperabc::ParameterError("gen needs --family");
  const auto g = make_family(f.family, f, f.k);
  if (ctx.json_out) {
    json out = graph_json(g);
    out["command"] = "gen";
    out["family"] = f.family;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << hyperabc::to_uhg(g, "family " + f.family);
  }
  return kExitOk;
}

struct RhoArgs {
  std::string weighting = "abc";
  double tol = 1e-10;
  long max_iters = 200000;
  double shift = 1.0;
  std::string init = "uniform";
};

int cmd_rho(const Context& ctx, const FamilyArgs& f, const RhoArgs& r) {
  const auto g = load_input(f);
  const auto w = hyperabc::parse_weighting(r.weighting);
  if (!w) throw hyperabc::ParameterError("unknown weighting '" + r.weighting + "'");
  hyperabc::SolveOptions opts;
  opts.tol = r.tol;
  opts.max_iters = r.max_iters;
  opts.shift = r.shift;
  if (r.init == "random") {
    if (!f.seed) throw hyperabc::ParameterError("--init random needs an explicit --seed");
    opts.initial = hyperabc::InitialVector::seeded_random;
    opts.seed = *f.seed;
  } else if (r.init != "uniform") {
    throw hyperabc::ParameterError("unknown --init '" + r.init + "'");
  }
  const auto est = hyperabc::spectral_radius(g, *w, opts);
  if (ctx.json_out) {
    json out{{"command", "rho"},       {"weighting", hyperabc::to_string(*w)},
             {"k", g.k()},             {"n", g.n()},
             {"m", g.m()},             {"rho", est.rho},
             {"lower", est.lower},     {"upper", est.upper},
             {"iters", est.iters},     {"residual", est.residual},
             {"eigenvector", est.eigenvector}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "rho " << num(est.rho) << "\nlower " << num(est.lower) << "\nupper " << num(est.upper) << "\niters "
              << est.iters << "\nresidual " << num(est.residual) << '\n';
  }
  return kExitOk;
}

int cmd_index(const Context& ctx, const FamilyArgs& f) {
  const auto g = load_input(f);
  const double idx = hyperabc::abc_index(g);
  if (ctx.json_out) {
    std::cout << json{{"command", "index"}, {"k", g.k()}, {"n", g.n()}, {"m", g.m()}, {"abc_index", idx}}.dump() << '\n';
  } else {
    std::cout << num(idx) << '\n';
  }
  return kExitOk;
}

struct ClosedArgs {
  std::string name;
  int m = 0;
  int k = 3;
  int n = 0;
  bool check = false;
};

int cmd_closed_form(const Context& ctx, const ClosedArgs& c) {
  const auto* cf = hyperabc::find_closed_form(c.name);
  if (!cf) {
    std::string names;
    for (const auto& x : hyperabc::closed_forms()) names += (names.empty() ? "" : ", ") + x.name;
    throw hyperabc::ParameterError("unknown closed form '" + c.name + "' (known: " + names + ")");
  }
  const int first = cf->name == "complete-bound" ? c.n : c.m;
  if (!cf->valid(first, c.k)) throw hyperabc::ParameterError("parameters outside the domain of '" + cf->name + "'");
  const double value = cf->value(first, c.k);
  json out{{"command", "closed-form"}, {"name", cf->name}, {"family", cf->family}, {"k", c.k}, {"value", value}};
  out[cf->name == "complete-bound" ? "n" : "m"] = first;
  int code = kExitOk;
  std::optional<hyperabc::SpectralEstimate> est;
  double rel = 0.0;
  if (c.check) {
    est = hyperabc::spectral_radius(cf->generate(first, c.k), cf->weighting);
    rel = std::abs(est->rho - value) / std::max(1.0, std::abs(value));
    out["oracle"] = {{"rho", est->rho}, {"lower", est->lower}, {"upper", est->upper}, {"relative_error", rel},
                     {"agrees", rel <= 1e-7}};
    if (rel > 1e-7) code = kExitFailed;
  }
  if (ctx.json_out) {
    std::cout << out.dump() << '\n';
  } else {
    std::cout << num(value) << '\n';
    if (est) std::cout << "oracle " << num(est->rho) << " relative_error " << num(rel) << (rel <= 1e-7 ? " agrees" : " DISAGREES") << '\n';
  }
  return code;
}

struct VerifyArgs {
  std::string target = "all";
  int to_k = 0;
};

int cmd_verify(const Context& ctx, const FamilyArgs& f, const VerifyArgs& v) {
  using namespace hyperabc;
  std::vector<CheckResult> checks;
  std::optional<ScanReport> scan;
  const std::string& t = v.target;
  const int m = f.m > 0 ? f.m : 5;
  if (t == "all") {
    checks = run_all(m, f.k);
  } else if (t == "worked-examples") {
    checks = run_worked_examples();
  } else if (t == "hypertree-scan") {
    scan = extremal_scan_hypertrees(m, f.k);
  } else if (t == "unicyclic-family-scan") {
    scan = extremal_scan_unicyclic_family(m, f.k, f.g);
  } else if (t == "unicyclic-scan") {
    scan = extremal_scan_unicyclic(m, f.k);
  } else {
    const auto g = load_input(f);
    if (t == "edge-sum-bounds") checks.push_back(check_edge_sum_bounds(g));
    else if (t == "regular-corollary") checks.push_back(check_regular_corollary(g));
    else if (t == "mean-bound") checks.push_back(check_mean_bound(g));
    else if (t == "delta-bound") checks.push_back(check_delta_bound(g));
    else if (t == "randic-unit") checks.push_back(check_randic_unit(g));
    else if (t == "power-relation") checks.push_back(check_power_relation(g, v.to_k > 0 ? v.to_k : g.k() + 1));
    else throw ParameterError("unknown check '" + t + "'");
  }
  if (scan) checks = scan->checks;
  std::size_t violated = 0;
  for (const auto& c : checks) violated += c.ok() ? 0 : 1;
  if (ctx.json_out) {
    json out{{"command", "verify"}, {"target", t}, {"violated", violated}};
    json arr = json::array();
    for (const auto& c : checks) arr.push_back(check_json(c));
    out["checks"] = arr;
    if (scan) out["table"] = scan_table_json(scan->table);
    std::cout << out.dump() << '\n';
  } else {
    for (const auto& c : checks) print_check_text(c);
    if (scan) {
      for (const auto& r : scan->table) {
        std::cout << "  " << num(r.rho) << ' ' << (r.label.empty() ? "-" : r.label) << ' ' << r.code << '\n';
      }
    }
    std::cout << checks.size() << " checks, " << violated << " violated\n";
  }
  return violated ? kExitFailed : kExitOk;
}

int cmd_classify(const Context& ctx, const FamilyArgs& f, std::size_t budget) {
  const auto g = load_input(f);
  hyperabc::ClassifyOptions opts;
  opts.girth_node_budget = budget;
  const auto r = hyperabc::classify(g, opts);
  const auto dv = hyperabc::degrees(g);
  const char* girth_status = r.girth_status == hyperabc::GirthStatus::found      ? "found"
                             : r.girth_status == hyperabc::GirthStatus::acyclic ? "acyclic"
                                                                                 : "undetermined";
  if (ctx.json_out) {
    json out{{"command", "classify"}, {"k", g.k()},           {"n", g.n()},           {"m", g.m()},
             {"connected", r.connected}, {"kind", hyperabc::to_string(r.kind)}, {"linear", r.linear},
             {"girth_status", girth_status}, {"max_degree", dv.max_degree}, {"min_degree", dv.min_degree}};
    out["girth"] = r.girth ? json(*r.girth) : json(nullptr);
    out["power_hypertree"] = r.power_hypertree ? json(*r.power_hypertree) : json(nullptr);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "connected " << (r.connected ? "true" : "false") << "\nkind " << hyperabc::to_string(r.kind)
              << "\nlinear " << (r.linear ? "true" : "false") << "\ngirth "
              << (r.girth ? std::to_string(*r.girth) : std::string(girth_status)) << '\n';
    if (r.power_hypertree) std::cout << "power_hypertree " << (*r.power_hypertree ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int report(const CliError& e, bool json_out) {
  if (json_out) {
    json err{{"error", {{"kind", e.kind}, {"message", e.message}, {"exit_code", e.code}}}};
    if (e.line) err["error"]["line"] = *e.line;
    std::cout << err.dump() << '\n';
  } else {
    std::cerr << "hyperabc: " << e.kind << ": " << e.message << '\n';
  }
  return e.code;
}

}  // namespace

int main(int argc, char** argv) {
  bool json_requested = false;
  for (int i = 1; i < argc; ++i) json_requested = json_requested || std::string(argv[i]) == "--json";

  CLI::App app{"Spectral radii of uniform hypergraphs under adjacency, ABC and Randic weightings"};
  app.require_subcommand(1);
  Context ctx;
  FamilyArgs fam;
  RhoArgs rho;
  ClosedArgs closed;
  VerifyArgs ver;
  std::size_t girth_budget = hyperabc::ClassifyOptions{}.girth_node_budget;

  auto* gen = app.add_subcommand("gen", "write a family member as UHG v1");
  add_family_flags(gen, fam, false);
  gen->add_flag("--json", ctx.json_out, "emit JSON");

  auto* rho_cmd = app.add_subcommand("rho", "spectral radius by shifted power iteration");
  add_family_flags(rho_cmd, fam, true);
  rho_cmd->add_option("--weighting", rho.weighting, "abc|adj|randic")->capture_default_str();
  rho_cmd->add_option("--tol", rho.tol, "relative bracket width")->capture_default_str();
  rho_cmd->add_option("--max-iters", rho.max_iters, "iteration budget")->capture_default_str();
  rho_cmd->add_option("--shift", rho.shift, "diagonal shift")->capture_default_str();
  rho_cmd->add_option("--init", rho.init, "uniform|random (random needs --seed)")->capture_default_str();
  rho_cmd->add_flag("--json", ctx.json_out, "emit JSON");

  auto* index_cmd = app.add_subcommand("index", "ABC index");
  add_family_flags(index_cmd, fam, true);
  index_cmd->add_flag("--json", ctx.json_out, "emit JSON");

  auto* cf = app.add_subcommand("closed-form", "evaluate a closed-form spectral radius");
  cf->add_option("name", closed.name, "closed form name")->required();
  cf->add_option("--m", closed.m, "edge count");
  cf->add_option("--k", closed.k, "edge cardinality")->capture_default_str();
  cf->add_option("--n", closed.n, "vertex count (complete-bound)");
  cf->add_flag("--check", closed.check, "compare against power iteration");
  cf->add_flag("--json", ctx.json_out, "emit JSON");

  auto* ver_cmd = app.add_subcommand("verify", "run bound and extremality checks");
  ver_cmd->add_option("target", ver.target,
                      "all|worked-examples|hypertree-scan|unicyclic-family-scan|unicyclic-scan|edge-sum-bounds|"
                      "regular-corollary|mean-bound|delta-bound|randic-unit|power-relation")
      ->capture_default_str();
  add_family_flags(ver_cmd, fam, false);
  ver_cmd->add_option("--input", fam.input, "UHG v1 file for single-hypergraph checks");
  ver_cmd->add_option("--to-k", ver.to_k, "target uniformity for power-relation");
  ver_cmd->add_flag("--json", ctx.json_out, "emit JSON");

  auto* cls = app.add_subcommand("classify", "structure report");
  add_family_flags(cls, fam, true);
  cls->add_option("--girth-budget", girth_budget, "node budget for the girth search")->capture_default_str();
  cls->add_flag("--json", ctx.json_out, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report({kExitUsage, "usage", e.what(), std::nullopt}, json_requested);
  }

  try {
    if (*gen) return cmd_gen(ctx, fam);
    if (*rho_cmd) return cmd_rho(ctx, fam, rho);
    if (*index_cmd) return cmd_index(ctx, fam);
    if (*cf) return cmd_closed_form(ctx, closed);
    if (*ver_cmd) return cmd_verify(ctx, fam, ver);
    if (*cls) return cmd_classify(ctx, fam, girth_budget);
  } catch (const hyperabc::UhgParseError& e) {
    return report({kExitUsage, "parse", e.message(), e.line()}, ctx.json_out);
  } catch (const hyperabc::UhgOpenError& e) {
    return report({kExitUsage, "io", e.what(), std::nullopt}, ctx.json_out);
  } catch (const hyperabc::HypergraphError& e) {
    return report({kExitUsage, std::string("hypergraph:") + hyperabc::to_string(e.code()), e.what(), std::nullopt},
                  ctx.json_out);
  } catch (const hyperabc::ParameterError& e) {
    return report({kExitUsage, "parameter", e.what(), std::nullopt}, ctx.json_out);
  } catch (const hyperabc::BudgetExceeded& e) {
    return report({kExitUsage, "budget", e.what(), std::nullopt}, ctx.json_out);
  } catch (const hyperabc::NotConnected& e) {
    return report({kExitUsage, "not-connected", e.what(), std::nullopt}, ctx.json_out);
  } catch (const hyperabc::NonConvergence& e) {
    return report({kExitFailed, "non-convergence", e.what(), std::nullopt}, ctx.json_out);
  } catch (const hyperabc::Error& e) {
    return report({kExitFailed, "error", e.what(), std::nullopt}, ctx.json_out);
  }
  return kExitUsage;
}
