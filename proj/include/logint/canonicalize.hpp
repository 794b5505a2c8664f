#pragma once

// Rewriting of Hurwitz zeta values at q in {1/6, 1/4, 1/3, 1/2, 2/3, 3/4, 5/6, 1}
// onto the basis {pi^w, zeta(odd w), zeta(even w, 1/3), zeta(even w, 1/4)}.
//
// Rules, for integer weight w >= 2:
//   reflection      (-1)^{w-1} zeta(w,q) - zeta(w,1-q) = pi^w P_{w-1}(cot pi q) / (w-1)!
//   multiplication  sum_{j<n} zeta(w, q + j/n) = n^w zeta(w, n q)
//   special values  zeta(w,1) = zeta(w), zeta(w,1/2) = (2^w - 1) zeta(w),
//                   zeta(2k) = |B_2k| 2^{2k-1} / (2k)! pi^{2k},
//                   Li_w(-1) = -(1 - 2^{1-w}) zeta(w)
// where d^n/dt^n cot t = P_n(cot t), P_0(c) = c, P_{n+1}(c) = -(1 + c^2) P_n'(c).

#include <optional>

#include "logint/polynomial.hpp"
#include "logint/series_reduction.hpp"
#include "logint/symbolic.hpp"

namespace logint {

/// P_n with d^n/dt^n cot t = P_n(cot t).
inline Polynomial cot_derivative_polynomial(int n) {
  Polynomial p = Polynomial::x();
  const Polynomial factor({-1, 0, -1});
  for (int k = 0; k < n; ++k) p = p.derivative() * factor;
  return p;
}

/// Evaluates a rational polynomial at an algebraic scalar; the result must stay a
/// single q*sqrt(d), which holds for polynomials of definite parity.
inline AlgebraicScalar evaluate_at(const Polynomial& p, const AlgebraicScalar& x) {
  const int d = x.radicand();
  Rational even_part, odd_part;  // value = even_part + odd_part * sqrt(d)
  Rational xpow = 1;             // (q sqrt d)^k without the trailing sqrt(d)
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const Rational& c = p.coefficients()[k];
    if (k % 2 == 0) {
      even_part += c * xpow;
    } else {
      odd_part += c * xpow;
    }
    xpow *= x.rational();
    if (k % 2 == 1) xpow *= Rational(d);
  }
  if (d == 1) return AlgebraicScalar(even_part + odd_part);
  if (!odd_part.is_zero() && !even_part.is_zero())
    throw UnsupportedRadical("polynomial value mixes rational and sqrt parts");
  return even_part.is_zero() ? AlgebraicScalar(odd_part, d) : AlgebraicScalar(even_part);
}

/// K with (-1)^{w-1} zeta(w,q) - zeta(w,1-q) = K * pi^w, for q in {1/6, 1/4, 1/3}
/// (and their complements).
inline std::optional<AlgebraicScalar> reflection_constant(int weight, const Rational& q) {
  auto s = sin_pi(q);
  auto c = cos_pi(q);
  if (!s || !c || s->is_zero()) return std::nullopt;
  AlgebraicScalar cot = *c * s->inverse();
  Polynomial p = cot_derivative_polynomial(weight - 1);
  return evaluate_at(p, cot) * Rational(BigInt(1), factorial(static_cast<unsigned>(weight - 1)));
}

/// zeta(2k) / pi^{2k}
inline Rational even_zeta_over_pi_power(int weight) {
  const auto& b = specfun::bernoulli_numbers().at(static_cast<std::size_t>(weight));
  return b.abs() * pow(Rational(2), static_cast<unsigned>(weight - 1)) / Rational(factorial(static_cast<unsigned>(weight)));
}

/// zeta(weight) in canonical form: pi power for even weights.
inline SymbolicValue canonical_zeta(int weight) {
  if (weight % 2 == 0) return {AlgebraicScalar(even_zeta_over_pi_power(weight)), symbol::PiPow{weight}};
  return {AlgebraicScalar(1), symbol::Zeta{weight}};
}

/// Basis expression for zeta(weight, q), or nullopt when q is outside the reducible set.
inline std::optional<SymbolicValue> reduce_hurwitz(int weight, const Rational& q) {
  const int w = weight;
  const Rational two_w = pow(Rational(2), static_cast<unsigned>(w));
  const Rational three_w = pow(Rational(3), static_cast<unsigned>(w));
  const SymbolicValue Z = canonical_zeta(w);
  auto kappa = [&](const Rational& at) { return SymbolicValue(*reflection_constant(w, at), symbol::PiPow{w}); };
  auto one = [](const Rational& r) { return AlgebraicScalar(r); };

  if (q == Rational(1)) return Z;
  if (q == Rational(1, 2)) return Z * one(two_w - 1);

  const SymbolicValue H3(AlgebraicScalar(1), symbol::HurwitzZeta{w, Rational(1, 3)});
  const SymbolicValue H4(AlgebraicScalar(1), symbol::HurwitzZeta{w, Rational(1, 4)});
  const Rational half(1, 2);

  if (w % 2 == 0) {
    if (q == Rational(1, 3)) return H3;
    if (q == Rational(2, 3)) return (H3 + kappa(Rational(1, 3))) * one(-1);
    if (q == Rational(1, 6)) return H3 * one(two_w + 1) + kappa(Rational(1, 3));
    if (q == Rational(5, 6)) return (H3 * one(two_w + 1) + kappa(Rational(1, 3)) + kappa(Rational(1, 6))) * one(-1);
    if (q == Rational(1, 4)) return H4;
    if (q == Rational(3, 4)) return (H4 + kappa(Rational(1, 4))) * one(-1);
    return std::nullopt;
  }

  // Odd weight: reflection fixes the differences, multiplication the sums.
  const SymbolicValue third = (Z * one(three_w - 1) + kappa(Rational(1, 3))) * one(half);
  const SymbolicValue two_thirds = (Z * one(three_w - 1) - kappa(Rational(1, 3))) * one(half);
  if (q == Rational(1, 3)) return third;
  if (q == Rational(2, 3)) return two_thirds;
  if (q == Rational(1, 6)) return third * one(two_w) - two_thirds;
  if (q == Rational(5, 6)) return two_thirds * one(two_w) - third;
  const SymbolicValue quarter_sum = Z * one(two_w * (two_w - 1));
  if (q == Rational(1, 4)) return (quarter_sum + kappa(Rational(1, 4))) * one(half);
  if (q == Rational(3, 4)) return (quarter_sum - kappa(Rational(1, 4))) * one(half);
  return std::nullopt;
}

/// Rewrites every reducible symbol onto the canonical basis. Idempotent.
inline SymbolicValue canonicalize(const SymbolicValue& v) {
  SymbolicValue out;
  for (const auto& t : v.terms()) {
    if (const auto* z = std::get_if<symbol::Zeta>(&t.symbol)) {
      out += canonical_zeta(z->weight) * t.coeff;
    } else if (const auto* h = std::get_if<symbol::HurwitzZeta>(&t.symbol)) {
      if (auto r = reduce_hurwitz(h->weight, h->q)) {
        out += *r * t.coeff;
      } else {
        out.add(t.coeff, t.symbol);
      }
    } else if (const auto* l = std::get_if<symbol::PolyLogRational>(&t.symbol); l && l->arg == Rational(-1)) {
      // Li_w(-1) = -(1 - 2^{1-w}) zeta(w)
      Rational eta = Rational(1) - pow(Rational(1, 2), static_cast<unsigned>(l->weight - 1));
      out += canonical_zeta(l->weight) * (t.coeff * -eta);
    } else {
      out.add(t.coeff, t.symbol);
    }
  }
  return out;
}

}  // namespace logint
