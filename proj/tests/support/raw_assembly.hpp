#pragma once

#include "logint/engine.hpp"

namespace logint::fixtures {

/// Closed form assembled straight from the partial fractions and sine profiles,
/// before any canonical rewriting. Needs rational-angle quadratics only.
inline SymbolicValue raw_closed_form(const RationalFunction& f, int p) {
  PartialFractionForm pf = partial_fractions(f);
  const Rational sign_fact = detail::signed_factorial(p);
  SymbolicValue raw;
  const auto& poly = pf.polynomial_part.coefficients();
  for (std::size_t m = 0; m < poly.size(); ++m)
    raw.add(poly[m] * sign_fact * pow(Rational(1, static_cast<long>(m) + 1), static_cast<unsigned>(p + 1)),
            symbol::One{});
  for (const auto& t : pf.linear_terms)
    raw.add(-(t.A * sign_fact), symbol::PolyLogRational{p + 1, -t.factor.r.inverse()});
  for (const auto& t : pf.quadratic_terms)
    for (auto [coeff, m] : {std::pair{t.B, 1}, std::pair{t.C, 0}}) {
      if (coeff.is_zero()) continue;
      PeriodicSum s = periodic_sum(sine_profile(t.factor.angle.value()), p + 1, m + 1);
      AlgebraicScalar pre = sin_pi(*t.factor.angle)->inverse() * (sign_fact * coeff);
      for (const auto& c : s.combo.terms) raw.add(c.coeff * pre, symbol::HurwitzZeta{p + 1, c.q});
      raw.add(-(s.subtracted_total() * pre), symbol::One{});
    }
  return raw;
}

}  // namespace logint::fixtures
