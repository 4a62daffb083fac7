#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperabc/generators.hpp"
#include "hyperabc/polynomial.hpp"
#include "hyperabc/tensor.hpp"

namespace hyperabc {

namespace detail {

inline double kth_root(double x, int k) { return std::pow(x, 1.0 / k); }

inline void require_mk(bool ok, const char* what) {
  if (!ok) throw ParameterError(what);
}

// Fallback interval: every real root lies within the Cauchy bound.
inline PolynomialSpec with_bracket(PolynomialSpec p, std::optional<std::pair<double, double>> stated) {
  if (stated) {
    p.lo = stated->first;
    p.hi = stated->second;
  } else {
    const double b = cauchy_bound(p.coeffs);
    p.lo = -b;
    p.hi = b;
  }
  return p;
}

}  // namespace detail

// eta(t) for S_{m,k;m-3,1,1}; m >= 3.
inline PolynomialSpec eta_polynomial(int m) {
  detail::require_mk(m >= 3, "eta needs m >= 3");
  const double d = 4.0 * (m - 2);
  PolynomialSpec p{"eta",
                   {-(m - 3.0) * (m - 3.0) / d, (4.0 * m * m - 23.0 * m + 34) / d, -(4.0 * m * m - 19.0 * m + 27) / d, 1.0},
                   0, 0, "rho_ABC(S_{m,k;m-3,1,1})^k"};
  return detail::with_bracket(std::move(p), std::nullopt);
}

// f(t) for U_{m,3}; the root a_m gives rho = a_m^{2/k}.
inline PolynomialSpec u3_polynomial(int m) {
  detail::require_mk(m >= 3, "u3 cubic needs m >= 3");
  const double r2 = std::numbers::sqrt2;
  const double d = m - 1.0;
  PolynomialSpec p{"u3-cubic",
                   {r2 * (m * m - 5.0 * m + 6) / (2 * d), -(m * m - 4.0 * m + 5) / d, -r2 / 2, 1.0},
                   0, 0, "rho_ABC(U_{m,3})"};
  std::optional<std::pair<double, double>> b;
  // (sqrt(m-2), sqrt(m-1)) fails from m = 6 on: f(sqrt(m-2)) > 0 there.
  if (m == 4 || m == 5) b = {{std::sqrt(m - 2.0), std::sqrt(m - 1.0)}};
  return detail::with_bracket(std::move(p), b);
}

// h_1..h_4 for T_{m,1..4}; the root is rho_ABC(T_{m,idx})^3.
inline PolynomialSpec t_polynomial(int m, int idx) {
  detail::require_mk(idx >= 1 && idx <= 4, "t polynomial index must be 1..4");
  detail::require_mk(m >= (idx == 1 ? 6 : 5), "t polynomial needs m >= 6 (idx 1) or m >= 5");
  const double mm = static_cast<double>(m) * m;
  const double q = m - 3.0;
  PolynomialSpec p;
  p.name = "h" + std::to_string(idx);
  p.describes = "rho_ABC(T_{m," + std::to_string(idx) + "})^3";
  std::optional<std::pair<double, double>> b;
  switch (idx) {
    case 1:
      p.coeffs = {-(2 * mm - 16.0 * m + 32) / (3 * q), (11 * mm - 84.0 * m + 164) / (6 * q),
                  -(3 * mm - 18.0 * m + 31) / (3 * q), 1.0};
      if (m == 6) b = {{2.0, 3.0}};
      if (m >= 7) b = {{m - 5.0, m - 4.0}};
      break;
    case 2:
      p.coeffs = {-(mm - 9.0 * m + 20) / (4 * q), (2 * mm - 17.0 * m + 37) / (2 * q),
                  -(4 * mm - 29.0 * m + 60) / (4 * q), 1.0};
      if (m >= 6 && m <= 8) b = {{m - 5.0, m - 4.0}};
      if (m >= 9) b = {{m - 6.0, m - 4.0}};
      break;
    case 3:
      p.coeffs = {-(2 * mm - 15.0 * m + 29) / (8 * q), (11 * mm - 82.0 * m + 158) / (8 * q),
                  -(8 * mm - 49.0 * m + 83) / (8 * q), 1.0};
      if (m == 6) b = {{2.0, 3.0}};
      if (m >= 7) b = {{m - 5.0, m - 4.0}};
      break;
    default: {
      // (2t - 1)(4(m-3)t^2 - (4m^2-27m+50)t + 4m^2-32m+64) / (8(m-3))
      const std::vector<double> lin{-1.0, 2.0};
      const std::vector<double> quad{4 * mm - 32.0 * m + 64, -(4 * mm - 27.0 * m + 50), 4 * q};
      p.coeffs = poly_mul(lin, quad);
      for (double& c : p.coeffs) c /= 8 * q;
      if (m >= 7) b = {{m - 5.0, m - 4.0}};
      break;
    }
  }
  return detail::with_bracket(std::move(p), b);
}

// Quartic h(t) for S_{m,4;m-4,1,1,1}; the root is rho^4.
inline PolynomialSpec s4_polynomial(int m) {
  detail::require_mk(m >= 4, "quartic needs m >= 4");
  const double mm = static_cast<double>(m) * m;
  const double q = m - 3.0;
  PolynomialSpec p{"s4-quartic",
                   {(mm - 8.0 * m + 16) / (8 * q), -(6 * mm - 47.0 * m + 93) / (8 * q), (6 * mm - 45.0 * m + 87) / (4 * q),
                    -(8 * mm - 51.0 * m + 91) / (8 * q), 1.0},
                   0, 0, "rho_ABC(S_{m,4;m-4,1,1,1})^4"};
  std::optional<std::pair<double, double>> b;
  if (m == 5) b = {{1.0, 2.0}};
  if (m >= 6) b = {{m - 5.0, m - 4.0}};
  return detail::with_bracket(std::move(p), b);
}

// t^3 - m t^2 + (3m-10) t - 2m + 8 for the adjacency radius of S_{m,k;m-4,2,1}.
// The interval (m-3, m-2) needs h(m-2) = m^2-10m+20 > 0, i.e. m >= 8.
inline PolynomialSpec s421_adjacency_polynomial(int m) {
  detail::require_mk(m >= 4, "adjacency cubic needs m >= 4");
  PolynomialSpec p{"s421-adjacency-cubic", {-2.0 * m + 8, 3.0 * m - 10, -static_cast<double>(m), 1.0}, 0, 0,
                   "rho_A(S_{m,k;m-4,2,1})^k"};
  std::optional<std::pair<double, double>> b;
  if (m >= 8) b = {{m - 3.0, m - 2.0}};
  return detail::with_bracket(std::move(p), b);
}

inline double rho_abc_hyperstar(int m, int k) {
  detail::require_mk(m >= 1 && k >= 2, "hyperstar needs m >= 1, k >= 2");
  return detail::kth_root(m - 1.0, k);
}

inline double rho_abc_double_star1(int m, int k) {
  detail::require_mk(m >= 3 && k >= 2, "double star needs m >= 3, k >= 2");
  const double a = m - 1.0, b = m - 2.0;
  const double radicand = (m * m - 3.0 * m + 3 + std::sqrt(a * a + b * b * b * b)) / (2 * a);
  return detail::kth_root(radicand, k);
}

inline double rho_adj_double_star2(int m, int k) {
  detail::require_mk(m >= 5 && k >= 2, "D_{m,2} needs m >= 5, k >= 2");
  return detail::kth_root((m + std::sqrt(m * m - 8.0 * m + 24)) / 2, k);
}

inline double rho_abc_u2(int m, int k) {
  detail::require_mk(m >= 2 && k >= 3, "U_{m,2} needs m >= 2, k >= 3");
  return detail::kth_root(m - 1.0 + 2.0 / m, k);
}

inline double rho_abc_u3(int m, int k) {
  detail::require_mk(m >= 3 && k >= 3, "U_{m,3} needs m >= 3, k >= 3");
  const double a = largest_real_root(u3_polynomial(m));
  return std::pow(a, 2.0 / k);
}

inline double rho_abc_s311(int m, int k) {
  detail::require_mk(m >= 3 && k >= 3, "S_{m,k;m-3,1,1} needs m >= 3, k >= 3");
  return detail::kth_root(largest_real_root(eta_polynomial(m)), k);
}

// T_{m,idx} is 3-uniform; for k > 3 the value is that of T_{m,idx}^k.
inline double rho_abc_t(int m, int idx, int k = 3) {
  detail::require_mk(k >= 3, "T family needs k >= 3");
  return detail::kth_root(largest_real_root(t_polynomial(m, idx)), k);
}

// S_{m,4;m-4,1,1,1}; for k > 4 the value is that of its k-th power.
inline double rho_abc_s4_1111(int m, int k = 4) {
  detail::require_mk(k >= 4, "S_{m,k;m-4,1,1,1} needs k >= 4");
  return detail::kth_root(largest_real_root(s4_polynomial(m)), k);
}

inline double rho_abc_hyperpath(int m, int k) {
  detail::require_mk(m >= 2 && k >= 2, "hyperpath closed form needs m >= 2, k >= 2");
  const double c = std::cos(std::numbers::pi / (m + 2));
  return detail::kth_root(2 * c * c, k);
}

inline double rho_abc_complete_bound(int n, int k) {
  detail::require_mk(k >= 2 && n > k, "complete bound needs n > k >= 2");
  double binom = 1.0;
  for (int i = 1; i <= k - 1; ++i) binom = binom * (n - k + i) / i;
  return detail::kth_root(k * binom - k, k);
}

inline double rho_adj_s421(int m, int k) {
  detail::require_mk(m >= 5 && k >= 3, "S_{m,k;m-4,2,1} needs m >= 5, k >= 3");
  return detail::kth_root(largest_real_root(s421_adjacency_polynomial(m)), k);
}

// A closed form together with the hypergraph it describes.
struct ClosedForm {
  std::string name;
  Weighting weighting;
  std::string family;  // human-readable generating hypergraph
  std::function<bool(int, int)> valid;
  std::function<double(int, int)> value;
  std::function<UniformHypergraph(int, int)> generate;
};

namespace detail {

inline Composition padded(std::vector<int> head, int k) {
  head.resize(static_cast<std::size_t>(k), 0);
  return head;
}

inline UniformHypergraph lift(const UniformHypergraph& g, int k) { return k == g.k() ? g : power(g, k); }

}  // namespace detail

// Every closed form, keyed by name. For complete-bound the first
// parameter is the vertex count n.
inline const std::vector<ClosedForm>& closed_forms() {
  static const std::vector<ClosedForm> table = [] {
    std::vector<ClosedForm> t;
    t.push_back({"hyperstar", Weighting::abc, "S_{m,k}", [](int m, int k) { return m >= 1 && k >= 2; },
                 rho_abc_hyperstar, hyperstar});
    t.push_back({"double-star1", Weighting::abc, "D_{m,1}^k", [](int m, int k) { return m >= 3 && k >= 2; },
                 rho_abc_double_star1, [](int m, int k) { return detail::lift(double_star(m, 1), k); }});
    t.push_back({"adj-double-star2", Weighting::adjacency, "D_{m,2}^k", [](int m, int k) { return m >= 5 && k >= 2; },
                 rho_adj_double_star2, [](int m, int k) { return detail::lift(double_star(m, 2), k); }});
    t.push_back({"u2", Weighting::abc, "U_{m,2}^{(k)}", [](int m, int k) { return m >= 2 && k >= 3; }, rho_abc_u2,
                 [](int m, int k) { return unicyclic_family(m, k, 2, detail::padded({m - 2}, k)); }});
    t.push_back({"u3", Weighting::abc, "U_{m,3}^{(k)}", [](int m, int k) { return m >= 3 && k >= 3; }, rho_abc_u3,
                 [](int m, int k) { return unicyclic_family(m, k, 3, detail::padded({m - 3}, k)); }});
    t.push_back({"s311", Weighting::abc, "S_{m,k;m-3,1,1}", [](int m, int k) { return m >= 3 && k >= 3; },
                 rho_abc_s311, [](int m, int k) { return s_composition(m, k, detail::padded({m - 3, 1, 1}, k)); }});
    for (int idx = 1; idx <= 4; ++idx) {
      const int lo = idx == 1 ? 6 : 5;
      t.push_back({"t" + std::to_string(idx), Weighting::abc, "T_{m," + std::to_string(idx) + "}^k",
                   [lo](int m, int k) { return m >= lo && k >= 3; },
                   [idx](int m, int k) { return rho_abc_t(m, idx, k); },
                   [idx](int m, int k) { return detail::lift(t_family(m, idx), k); }});
    }
    t.push_back({"s4-1111", Weighting::abc, "S_{m,k;m-4,1,1,1}", [](int m, int k) { return m >= 4 && k >= 4; },
                 [](int m, int k) { return rho_abc_s4_1111(m, k); },
                 [](int m, int k) { return s_composition(m, k, detail::padded({m - 4, 1, 1, 1}, k)); }});
    t.push_back({"hyperpath", Weighting::abc, "P_{m,k}", [](int m, int k) { return m >= 2 && k >= 2; },
                 rho_abc_hyperpath, hyperpath});
    t.push_back({"complete-bound", Weighting::abc, "K_n^{(k)}",
                 [](int n, int k) { return k >= 2 && n > k; }, rho_abc_complete_bound,
                 [](int n, int k) { return complete(n, k); }});
    t.push_back({"adj-s421", Weighting::adjacency, "S_{m,k;m-4,2,1}", [](int m, int k) { return m >= 5 && k >= 3; },
                 rho_adj_s421, [](int m, int k) { return s_composition(m, k, detail::padded({m - 4, 2, 1}, k)); }});
    return t;
  }();
  return table;
}

inline const ClosedForm* find_closed_form(std::string_view name) {
  for (const auto& cf : closed_forms()) {
    if (cf.name == name) return &cf;
  }
  return nullptr;
}

}  // namespace hyperabc
