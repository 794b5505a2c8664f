#pragma once

// Numerical quadrature of int_0^1 R(x) log^p x dx, independent of the closed forms.
//
// Primary rule: tanh-sinh, x = (1 + tanh((pi/2) sinh t)) / 2, trapezoid in t with
// the step halved per level. Secondary rule: u = -log x, composite Gauss-Legendre
// on [0, U] with U from the tail bound max|R| * Gamma(p+1, U).

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "logint/errors.hpp"
#include "logint/rational_function.hpp"
#include "logint/specfun.hpp"

namespace logint {

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;
  int levels_used = 0;
  long long evaluations = 0;
};

inline constexpr double kDefaultRelTol = 1e-11;

namespace detail {

struct TanhSinhNode {
  double x;
  double weight;  // dx/dt
};

inline constexpr int kTanhSinhMaxLevel = 12;
inline constexpr double kTanhSinhTMax = 6.2;
inline constexpr double kSmallestAbscissa = 1e-300;

inline TanhSinhNode tanh_sinh_node(double t) {
  const double u = 0.5 * specfun::kPi * std::sinh(t);
  // x = 1/(1+e^{-2u}), 1-x = 1/(1+e^{2u}); pick the form that does not overflow.
  double x, one_minus_x;
  if (u >= 0) {
    const double e = std::exp(-2 * u);
    x = 1 / (1 + e);
    one_minus_x = e / (1 + e);
  } else {
    const double e = std::exp(2 * u);
    x = e / (1 + e);
    one_minus_x = 1 / (1 + e);
  }
  return {x, specfun::kPi * std::cosh(t) * x * one_minus_x};
}

/// nodes[level]: abscissas first used at that level (all of t = k for level 0,
/// odd multiples of 2^-level afterwards). Built once.
inline const std::vector<std::vector<TanhSinhNode>>& tanh_sinh_nodes() {
  static const auto table = [] {
    std::vector<std::vector<TanhSinhNode>> levels(kTanhSinhMaxLevel + 1);
    for (int level = 0; level <= kTanhSinhMaxLevel; ++level) {
      const double h = std::ldexp(1.0, -level);
      const int step = level == 0 ? 1 : 2;
      const int start = level == 0 ? 0 : 1;
      for (long k = start; k * h <= kTanhSinhTMax; k += step) {
        for (int side = 0; side < (k == 0 ? 1 : 2); ++side) {
          TanhSinhNode n = tanh_sinh_node(side == 0 ? k * h : -k * h);
          if (n.x < kSmallestAbscissa || n.weight == 0.0) continue;
          levels[static_cast<std::size_t>(level)].push_back(n);
        }
      }
    }
    return levels;
  }();
  return table;
}

inline void check_rel_tol(double rel_tol) {
  if (!(rel_tol >= 1e-13 && rel_tol <= 1e-6))
    throw DomainError("rel_tol must lie in [1e-13, 1e-6], got " + std::to_string(rel_tol));
}

}  // namespace detail

/// Runs tanh-sinh level by level, handing each level's result to `observe`;
/// stops when observe returns true or the levels run out. Returns the last result.
template <class Observer>
QuadratureResult tanh_sinh_levels(const std::function<double(double)>& integrand, Observer&& observe) {
  const auto& nodes = detail::tanh_sinh_nodes();
  specfun::CompensatedSum sum;
  double abs_sum = 0.0;
  double previous = 0.0;
  QuadratureResult r;
  for (int level = 0; level <= detail::kTanhSinhMaxLevel; ++level) {
    for (const auto& n : nodes[static_cast<std::size_t>(level)]) {
      const double term = n.weight * integrand(n.x);
      sum += term;
      abs_sum += std::abs(term);
      ++r.evaluations;
    }
    const double h = std::ldexp(1.0, -level);
    r.value = h * sum.value();
    r.levels_used = level + 1;
    const double roundoff = 8 * std::numeric_limits<double>::epsilon() * h * abs_sum;
    const double diff = level == 0 ? std::abs(r.value) + roundoff : std::abs(r.value - previous);
    r.est_error = std::max(diff, roundoff);
    previous = r.value;
    if (observe(r)) break;
  }
  return r;
}

/// Every level's result, for inspecting convergence.
inline std::vector<QuadratureResult> tanh_sinh_trace(const std::function<double(double)>& integrand, double rel_tol) {
  std::vector<QuadratureResult> trace;
  tanh_sinh_levels(integrand, [&](const QuadratureResult& r) {
    trace.push_back(r);
    return r.levels_used >= 4 && r.est_error <= rel_tol * (1 + std::abs(r.value));
  });
  return trace;
}

inline QuadratureResult tanh_sinh(const std::function<double(double)>& integrand, double rel_tol = kDefaultRelTol) {
  detail::check_rel_tol(rel_tol);
  bool converged = false;
  QuadratureResult r = tanh_sinh_levels(integrand, [&](const QuadratureResult& q) {
    converged = q.levels_used >= 4 && q.est_error <= rel_tol * (1 + std::abs(q.value));
    return converged;
  });
  if (!converged || !std::isfinite(r.value))
    throw NoConvergence("tanh-sinh did not converge: estimate " + std::to_string(r.value) + ", error " +
                        std::to_string(r.est_error));
  return r;
}

namespace detail {

inline void check_no_pole(const RationalFunction& f) {
  if (count_real_roots(f.denominator, Rational(0), Rational(1)) > 0)
    throw PoleDetected("denominator " + f.denominator.str() + " vanishes in [0, 1]");
}

/// R(x) with the near-pole guard.
inline double guarded_eval(const RationalFunction& f, double x) {
  if (std::abs(f.denominator.eval(x)) < 1e-12)
    throw PoleDetected("denominator nearly vanishes at x = " + std::to_string(x));
  return eval_at(f, x);
}

inline double int_pow(double base, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= base;
  return r;
}

}  // namespace detail

/// int_0^1 f(x) log^p x dx by tanh-sinh.
inline QuadratureResult integrate_log_power(const RationalFunction& f, int p, double rel_tol = kDefaultRelTol) {
  if (p < 0) throw DomainError("log power must be >= 0");
  detail::check_rel_tol(rel_tol);
  detail::check_no_pole(f);
  return tanh_sinh([&](double x) { return detail::guarded_eval(f, x) * detail::int_pow(std::log(x), p); }, rel_tol);
}

/// Upper incomplete gamma Gamma(p+1, U) = p! e^{-U} sum_{k<=p} U^k/k!.
inline double upper_gamma_integer(int p, double U) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= p; ++k) {
    term *= U / k;
    sum += term;
  }
  return std::tgamma(p + 1.0) * std::exp(-U) * sum;
}

/// int_0^inf R(e^{-u}) (-u)^p e^{-u} du by composite 30-point Gauss-Legendre on
/// [0, U]; the dropped tail is bounded by max|R| * Gamma(p+1, U).
inline QuadratureResult integrate_log_power_substituted(const RationalFunction& f, int p,
                                                        double rel_tol = kDefaultRelTol) {
  if (p < 0) throw DomainError("log power must be >= 0");
  detail::check_rel_tol(rel_tol);
  detail::check_no_pole(f);
  using Rule = boost::math::quadrature::gauss<double, 30>;

  // Crude bound on |R| near 0 where the tail lives, padded by 2.
  double bound = 0.0;
  for (int i = 0; i <= 256; ++i) bound = std::max(bound, std::abs(detail::guarded_eval(f, 0.5 * i / 256.0)));
  bound = 2 * bound + 1e-300;
  double U = 1.0;
  while (bound * upper_gamma_integer(p, U) >= 0.1 * rel_tol) U += 1.0;
  const double tail = bound * upper_gamma_integer(p, U);

  long long evaluations = 0;
  auto g = [&](double u) {
    ++evaluations;
    const double x = std::exp(-u);
    return detail::guarded_eval(f, x) * detail::int_pow(-u, p) * x;
  };
  auto composite = [&](int panels) {
    specfun::CompensatedSum sum;
    const double width = U / panels;
    for (int i = 0; i < panels; ++i) sum += Rule::integrate(g, i * width, (i + 1) * width);
    return sum.value();
  };

  QuadratureResult r;
  int panels = static_cast<int>(std::ceil(U));
  double previous = composite(panels);
  for (int level = 1; level <= 8; ++level) {
    panels *= 2;
    const double current = composite(panels);
    const double diff = std::abs(current - previous);
    r = {current, diff + tail, level + 1, evaluations};
    if (diff <= 0.1 * rel_tol * (1 + std::abs(current))) return r;
    previous = current;
  }
  throw NoConvergence("Gauss-Legendre panels did not converge");
}

}  // namespace logint
