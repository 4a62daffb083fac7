#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hyperabc/hypergraph.hpp"
#include "hyperabc/tensor.hpp"

namespace hyperabc {

class NotConnected : public Error {
 public:
  NotConnected() : Error("hypergraph is not connected; the spectral solver needs a weakly irreducible tensor") {}
};

// Iteration budget ran out before the bracket closed.
class NonConvergence : public Error {
 public:
  NonConvergence(double lower, double upper, long iters)
      : Error("no convergence after " + std::to_string(iters) + " iterations; bracket [" + fmt(lower) + ", " +
              fmt(upper) + "]"),
        lower_(lower),
        upper_(upper),
        iters_(iters) {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  long iters() const noexcept { return iters_; }

 private:
  static std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

  double lower_, upper_;
  long iters_;
};

enum class InitialVector { uniform, seeded_random };

struct SolveOptions {
  double tol = 1e-10;
  long max_iters = 200000;
  double shift = 1.0;
  InitialVector initial = InitialVector::uniform;
  std::uint64_t seed = 0;
};

struct SpectralEstimate {
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> eigenvector;  // k-unit, positive
  long iters = 0;
  double residual = 0.0;
};

// max_i |(T x^{k-1})_i - rho x_i^{k-1}|
inline double residual(const TensorOperator& op, double rho, const std::vector<double>& x) {
  const auto tx = op.apply(x);
  const double km1 = static_cast<double>(op.k() - 1);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(tx[i] - rho * std::pow(x[i], km1)));
  return worst;
}

inline double residual(const UniformHypergraph& g, Weighting w, double rho, const std::vector<double>& x) {
  return residual(TensorOperator(g, w), rho, x);
}

namespace detail {

inline void normalize_k(std::vector<double>& x, int k) {
  double s = 0.0;
  for (double v : x) s += std::pow(v, k);
  const double scale = std::pow(s, -1.0 / k);
  for (double& v : x) v *= scale;
}

}  // namespace detail

// Shifted power iteration y = T x^{k-1} + s x^{[k-1]} with the Collatz-Wielandt
// bracket min/max_i y_i / x_i^{k-1} enclosing rho + s at every step.
inline SpectralEstimate spectral_radius(const TensorOperator& op, const SolveOptions& opts = {}) {
  if (!(opts.tol > 0.0)) throw ParameterError("tol must be positive");
  if (opts.max_iters < 1) throw ParameterError("max_iters must be at least 1");
  if (!(opts.shift >= 0.0) || !std::isfinite(opts.shift)) throw ParameterError("shift must be finite and nonnegative");
  const UniformHypergraph& g = op.hypergraph();
  if (!is_connected(g)) throw NotConnected();
  if (opts.shift == 0.0 && !is_regular(g)) throw ParameterError("shift must be positive for non-regular hypergraphs");

  const int k = g.k();
  const std::size_t n = static_cast<std::size_t>(g.n());
  const double km1 = static_cast<double>(k - 1);
  const double s = opts.shift;

  SpectralEstimate est;
  std::vector<double> x(n, std::pow(static_cast<double>(n), -1.0 / k));
  if (opts.initial == InitialVector::seeded_random) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> dist(0.5, 1.5);
    for (double& v : x) v = dist(rng);
    detail::normalize_k(x, k);
  }
  if (op.is_zero()) {
    est.eigenvector = x;
    return est;
  }

  std::vector<double> y(n), xk1(n);
  double lower = 0.0, upper = 0.0;
  for (long it = 1; it <= opts.max_iters; ++it) {
    op.apply(x, y);
    double lo = INFINITY, hi = -INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
      xk1[i] = std::pow(x[i], km1);
      y[i] += s * xk1[i];
      const double r = y[i] / xk1[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    lower = std::max(lo - s, 0.0);
    upper = hi - s;
    if (upper - lower <= opts.tol * std::max(1.0, upper)) {
      est.rho = 0.5 * (lower + upper);
      est.lower = lower;
      est.upper = upper;
      est.iters = it;
      est.eigenvector = x;
      est.residual = residual(op, est.rho, x);
      return est;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = std::pow(y[i], 1.0 / km1);
    detail::normalize_k(x, k);
  }
  throw NonConvergence(lower, upper, opts.max_iters);
}

inline SpectralEstimate spectral_radius(const UniformHypergraph& g, Weighting w, const SolveOptions& opts = {}) {
  return spectral_radius(TensorOperator(g, w), opts);
}

}  // namespace hyperabc
