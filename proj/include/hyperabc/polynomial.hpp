#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "hyperabc/hypergraph.hpp"

namespace hyperabc {

class RootNotFound : public Error {
 public:
  using Error::Error;
};

// Real polynomial, coefficients ascending by degree. [lo, hi] is the interval
// the largest real root is claimed to lie in; it is checked, not trusted.
struct PolynomialSpec {
  std::string name;
  std::vector<double> coeffs;
  double lo = 0.0;
  double hi = 0.0;
  std::string describes;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

inline double evaluate(const std::vector<double>& c, double t) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

inline double evaluate(const PolynomialSpec& p, double t) { return evaluate(p.coeffs, t); }

inline std::vector<double> derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(static_cast<double>(i) * c[i]);
  return d;
}

// Multiply two ascending coefficient lists.
inline std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

namespace detail {

inline std::vector<double> trimmed(std::vector<double> c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  return c;
}

// Root of c in [a, b] given a sign change (or a zero endpoint).
inline double bisect(const std::vector<double>& c, double a, double b, double tol) {
  double fa = evaluate(c, a);
  if (fa == 0.0) return a;
  if (evaluate(c, b) == 0.0) return b;
  for (int i = 0; i < 400 && b - a > tol * std::max(1.0, std::abs(b)); ++i) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = evaluate(c, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Sorted real roots in [lo, hi]: the critical points of c split the interval
// into monotone pieces, each holding at most one root.
inline std::vector<double> real_roots(const std::vector<double>& c, double lo, double hi, double tol) {
  const auto p = trimmed(c);
  if (p.size() <= 1) return {};
  if (p.size() == 2) {
    const double r = -p[0] / p[1];
    if (r >= lo && r <= hi) return {r};
    return {};
  }
  std::vector<double> knots{lo};
  for (double r : real_roots(derivative(p), lo, hi, tol)) {
    if (r > knots.back()) knots.push_back(r);
  }
  if (hi > knots.back()) knots.push_back(hi);
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = knots[i], b = knots[i + 1];
    const double fa = evaluate(p, a), fb = evaluate(p, b);
    if (fa == 0.0) {
      if (roots.empty() || roots.back() != a) roots.push_back(a);
    } else if (fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
      roots.push_back(bisect(p, a, b, tol));
    }
  }
  if (evaluate(p, knots.back()) == 0.0 && (roots.empty() || roots.back() != knots.back())) roots.push_back(knots.back());
  return roots;
}

// Every real root has modulus below 1 + max |c_i / c_n|.
inline double cauchy_bound(const std::vector<double>& c) {
  const auto p = trimmed(c);
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) worst = std::max(worst, std::abs(p[i] / p.back()));
  return 1.0 + worst;
}

}  // namespace detail

// All real roots, ascending.
inline std::vector<double> real_roots(const std::vector<double>& coeffs, double tol = 1e-15) {
  const auto p = detail::trimmed(coeffs);
  if (p.size() <= 1) return {};
  const double b = detail::cauchy_bound(p);
  return detail::real_roots(p, -b, b, tol);
}

inline double largest_real_root(const std::vector<double>& coeffs, double tol = 1e-15) {
  const auto roots = real_roots(coeffs, tol);
  if (roots.empty()) throw RootNotFound("polynomial has no real root");
  return roots.back();
}

inline double largest_real_root(const PolynomialSpec& p, double tol = 1e-15) {
  try {
    return largest_real_root(p.coeffs, tol);
  } catch (const RootNotFound&) {
    throw RootNotFound("polynomial '" + p.name + "' has no real root");
  }
}

// Whether the largest real root lies strictly inside (lo, hi).
inline bool bracket_holds(const PolynomialSpec& p) {
  const double r = largest_real_root(p);
  return p.lo < r && r < p.hi;
}

}  // namespace hyperabc
