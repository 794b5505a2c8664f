#pragma once

// Closed forms for  I(R, p) = int_0^1 R(x) log^p x dx,  p >= 1.
//
// After partial fractions every piece reduces to one of
//   int_0^1 x^m log^p x dx                 = (-1)^p p! / (m+1)^{p+1}
//   int_0^1 log^p x / (x + r) dx            = (-1)^{p+1} p! Li_{p+1}(-1/r)
//   int_0^1 x^m log^p x / (x^2-2ax+1) dx    = (-1)^p p! sum_{k>=0} U_k(a) / (k+m+1)^{p+1}
// and with a = cos t, U_k(a) = sin((k+1) t) / sin t.

#include <cmath>
#include <string>

#include "logint/canonicalize.hpp"
#include "logint/factorize.hpp"
#include "logint/oracle.hpp"
#include "logint/series_reduction.hpp"
#include "logint/symbolic.hpp"

namespace logint {

namespace detail {

inline Rational signed_factorial(int p) {
  Rational f(factorial(static_cast<unsigned>(p)));
  return p % 2 ? -f : f;
}

}  // namespace detail

inline SymbolicValue monomial_term(int m, int p) {
  if (m < 0 || p < 0) throw DomainError("monomial_term requires m, p >= 0");
  return SymbolicValue::rational(detail::signed_factorial(p) * pow(Rational(1, m + 1), static_cast<unsigned>(p + 1)));
}

inline SymbolicValue linear_term(const Rational& r, int p) {
  if (p < 1) throw UnsupportedPower("closed forms need a logarithm power p >= 1");
  if (r < Rational(1)) throw UnsupportedPole("pole at x = " + (-r).str() + " lies outside the closed-form family (need r >= 1)");
  SymbolicValue v(-detail::signed_factorial(p), symbol::PolyLogRational{p + 1, -r.inverse()});
  return canonicalize(v);
}

inline SymbolicValue quadratic_term(const Rational& a, int m, int p) {
  if (p < 1) throw UnsupportedPower("closed forms need a logarithm power p >= 1");
  if (m != 0 && m != 1) throw DomainError("quadratic_term numerator power must be 0 or 1");
  if (a.abs() >= Rational(1)) throw DomainError("quadratic x^2 - 2ax + 1 needs |a| < 1");
  const int weight = p + 1;
  const AlgebraicScalar sign_fact(detail::signed_factorial(p));

  if (auto angle = rational_angle(a)) {
    SinePeriodProfile profile = sine_profile(*angle);
    PeriodicSum sum = periodic_sum(profile, weight, m + 1);
    AlgebraicScalar prefactor = sign_fact * sin_pi(*angle)->inverse();
    SymbolicValue v;
    for (const auto& t : sum.combo.terms) v.add(t.coeff * prefactor, symbol::HurwitzZeta{weight, t.q});
    v.add(-(sum.subtracted_total() * prefactor), symbol::One{});
    return canonicalize(v);
  }

  // sum_{n>=m+1} sin((n-m) t)/n^w: Im Li_w for m = 0; cos t Im Li_w - sin t Re Li_w for m = 1.
  const symbol::UnitCircleLiIm im{weight, a};
  const symbol::UnitCircleLiRe re{weight, a};
  const Rational sin_squared = Rational(1) - a * a;
  auto sin_t = sqrt_rational(sin_squared);
  if (!sin_t) {
    double s = std::sqrt(sin_squared.to_double());
    double value = sign_fact.to_double() / s *
                   (m == 0 ? numeric_value(ConstantSymbol(im))
                           : a.to_double() * numeric_value(ConstantSymbol(im)) - s * numeric_value(ConstantSymbol(re)));
    throw UnsupportedQuadratic("sin t = sqrt(" + sin_squared.str() + ") is outside Q(sqrt 2, sqrt 3) for a = " + a.str(),
                               value);
  }
  AlgebraicScalar inv_sin = sin_t->inverse();
  SymbolicValue v;
  if (m == 0) {
    v.add(sign_fact * inv_sin, im);
  } else {
    v.add(sign_fact * inv_sin * a, im);
    v.add(-sign_fact, re);
  }
  return v;
}

/// Exact closed form of int_0^1 f(x) log^p x dx for admissible f and p >= 1.
inline SymbolicValue integrate_closed_form(const RationalFunction& f, int p) {
  if (p < 1) throw UnsupportedPower("closed forms need a logarithm power p >= 1");
  PartialFractionForm pf = partial_fractions(f);
  for (const auto& t : pf.linear_terms)
    if (t.factor.r < Rational(1))
      throw UnsupportedPole("pole at x = " + t.factor.root().str() + " lies in (-1, 0); the polylogarithm argument leaves the unit disk");

  SymbolicValue total;
  const auto& poly = pf.polynomial_part.coefficients();
  for (std::size_t m = 0; m < poly.size(); ++m)
    if (!poly[m].is_zero()) total += monomial_term(static_cast<int>(m), p) * AlgebraicScalar(poly[m]);
  for (const auto& t : pf.linear_terms) total += linear_term(t.factor.r, p) * AlgebraicScalar(t.A);
  for (const auto& t : pf.quadratic_terms) {
    if (!t.B.is_zero()) total += quadratic_term(t.factor.a, 1, p) * AlgebraicScalar(t.B);
    if (!t.C.is_zero()) total += quadratic_term(t.factor.a, 0, p) * AlgebraicScalar(t.C);
  }
  return canonicalize(total);
}

struct EvaluationReport {
  RationalFunction input;
  int power = 0;
  SymbolicValue closed_form;
  double numeric = 0.0;
  double oracle = 0.0;
  double abs_disagreement = 0.0;
};

/// Closed form, its value, and the quadrature value side by side.
inline EvaluationReport evaluate(const RationalFunction& f, int p, double rel_tol = kDefaultRelTol) {
  EvaluationReport r;
  r.input = f;
  r.power = p;
  r.closed_form = integrate_closed_form(f, p);
  r.numeric = numeric_value(r.closed_form);
  r.oracle = integrate_log_power(f, p, rel_tol).value;
  r.abs_disagreement = std::abs(r.numeric - r.oracle);
  return r;
}

}  // namespace logint
