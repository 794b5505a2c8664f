#pragma once

// Classification of a denominator into rational linear factors x + r and
// unit-circle quadratics x^2 - 2a x + 1, and exact partial fractions over them.

#include <optional>
#include <string>
#include <vector>

#include "logint/errors.hpp"
#include "logint/rational_function.hpp"

namespace logint {

struct LinearFactor {
  Rational r;  // x + r
  int multiplicity = 1;

  Polynomial polynomial() const { return Polynomial({r, 1}); }
  Rational root() const { return -r; }
  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

struct QuadraticFactor {
  Rational a;  // x^2 - 2a x + 1, |a| < 1
  int multiplicity = 1;
  /// t / pi for the root angle t = arccos(a), present only when a is 0 or +-1/2.
  std::optional<Rational> angle;

  Polynomial polynomial() const { return Polynomial({1, Rational(-2) * a, 1}); }
  friend bool operator==(const QuadraticFactor&, const QuadraticFactor&) = default;
};

/// Exact angle t/pi for a = cos t, when a is one of the three rational cosines of rational angles.
inline std::optional<Rational> rational_angle(const Rational& a) {
  if (a.is_zero()) return Rational(1, 2);
  if (a == Rational(1, 2)) return Rational(1, 3);
  if (a == Rational(-1, 2)) return Rational(2, 3);
  return std::nullopt;
}

inline QuadraticFactor make_quadratic(const Rational& a, int multiplicity = 1) {
  return {a, multiplicity, rational_angle(a)};
}

struct DenominatorFactorization {
  Rational constant = 1;
  std::vector<LinearFactor> linears;
  std::vector<QuadraticFactor> quadratics;
  Polynomial residual = Polynomial::constant(1);

  Polynomial product() const {
    Polynomial p = Polynomial::constant(constant) * residual;
    for (const auto& l : linears) p = p * pow(l.polynomial(), static_cast<unsigned>(l.multiplicity));
    for (const auto& q : quadratics) p = p * pow(q.polynomial(), static_cast<unsigned>(q.multiplicity));
    return p;
  }
};

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n) {
  n = boost::multiprecision::abs(n);
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline int strip_factor(Polynomial& p, const Polynomial& factor) {
  int m = 0;
  while (p.degree() >= factor.degree()) {
    auto [q, r] = divmod(p, factor);
    if (!r.is_zero()) break;
    p = std::move(q);
    ++m;
  }
  return m;
}

inline std::vector<Rational> rational_root_candidates(const Polynomial& p) {
  std::vector<Rational> out;
  auto ints = primitive_integer_form(p);
  if (ints.empty()) return out;
  // Zero roots are handled by the caller.
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low + 1 >= ints.size()) return out;
  for (const auto& num : positive_divisors(ints[low]))
    for (const auto& den : positive_divisors(ints.back())) {
      out.emplace_back(num, den);
      out.emplace_back(BigInt(-num), den);
    }
  return out;
}

}  // namespace detail

/// Extracts every rational root and every quadratic factor x^2 - 2a x + 1
/// with rational |a| < 1, with exact multiplicities. Anything left over is
/// returned as the (monic) residual.
inline DenominatorFactorization factor_denominator(const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZeroPoly("cannot factor the zero polynomial");
  DenominatorFactorization out;
  out.constant = den.leading();
  Polynomial rest = den.monic();

  if (int m = detail::strip_factor(rest, Polynomial::x()); m > 0) out.linears.push_back({0, m});
  for (const Rational& root : detail::rational_root_candidates(rest)) {
    if (rest.degree() < 1) break;
    if (!rest(root).is_zero()) continue;
    LinearFactor lf{-root, 0};
    lf.multiplicity = detail::strip_factor(rest, lf.polynomial());
    out.linears.push_back(lf);
  }

  // Candidates alpha x^2 + beta x + alpha in primitive integer form (Gauss's lemma):
  // alpha divides both the leading and the constant coefficient, |beta| < 2 alpha.
  if (rest.degree() >= 2) {
    auto ints = primitive_integer_form(rest);
    BigInt p_at_one = 0, p_at_minus_one = 0;
    for (std::size_t k = 0; k < ints.size(); ++k) {
      p_at_one += ints[k];
      p_at_minus_one += (k % 2 ? -ints[k] : ints[k]);
    }
    for (const BigInt& alpha : detail::positive_divisors(gcd(ints.front(), ints.back()))) {
      for (BigInt beta = -2 * alpha + 1; beta < 2 * alpha; ++beta) {
        if (rest.degree() < 2) break;
        BigInt q1 = 2 * alpha + beta, qm1 = 2 * alpha - beta;
        if (p_at_one != 0 && p_at_one % q1 != 0) continue;
        if (p_at_minus_one != 0 && p_at_minus_one % qm1 != 0) continue;
        Rational a = Rational(BigInt(-beta), BigInt(2 * alpha));
        QuadraticFactor qf = make_quadratic(a, 0);
        qf.multiplicity = detail::strip_factor(rest, qf.polynomial());
        if (qf.multiplicity == 0) continue;
        out.quadratics.push_back(qf);
        ints = primitive_integer_form(rest);
        p_at_one = p_at_minus_one = 0;
        for (std::size_t k = 0; k < ints.size(); ++k) {
          p_at_one += ints[k];
          p_at_minus_one += (k % 2 ? -ints[k] : ints[k]);
        }
      }
    }
  }
  out.residual = rest;
  return out;
}

struct LinearTerm {
  Rational A;  // A / (x + r)
  LinearFactor factor;
  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

struct QuadraticTerm {
  Rational B;  // (B x + C) / (x^2 - 2a x + 1)
  Rational C;
  QuadraticFactor factor;
  friend bool operator==(const QuadraticTerm&, const QuadraticTerm&) = default;
};

struct PartialFractionForm {
  Polynomial polynomial_part;
  std::vector<LinearTerm> linear_terms;
  std::vector<QuadraticTerm> quadratic_terms;
};

/// Rejects denominators outside the closed-form family: poles in [0,1],
/// repeated factors, or a non-trivial residual.
inline void check_admissible(const DenominatorFactorization& fac) {
  for (const auto& l : fac.linears) {
    Rational root = l.root();
    if (root >= Rational(0) && root <= Rational(1))
      throw PoleInUnitInterval("pole at x = " + root.str() + " inside closed interval");
  }
  if (!fac.residual.is_constant()) {
    if (count_real_roots(fac.residual, 0, 1) > 0) throw PoleInUnitInterval("pole inside closed interval [0, 1]");
    throw UnsupportedFactor("denominator factor " + fac.residual.str() + " is not of the form x + r or x^2 - 2ax + 1");
  }
  for (const auto& l : fac.linears)
    if (l.multiplicity > 1) throw UnsupportedMultiplicity("repeated factor " + l.polynomial().str());
  for (const auto& q : fac.quadratics)
    if (q.multiplicity > 1) throw UnsupportedMultiplicity("repeated factor " + q.polynomial().str());
}

inline PartialFractionForm partial_fractions(const RationalFunction& input) {
  RationalFunction f = normalize(input);
  PartialFractionForm out;
  if (f.numerator.is_zero()) return out;

  DenominatorFactorization fac = factor_denominator(f.denominator);
  check_admissible(fac);

  auto [quot, rem] = divmod(scaled_numerator(f), f.denominator);
  out.polynomial_part = quot;

  // Numerator over factor F: rem * (D/F)^{-1} mod F.
  auto numerator_over = [&](const Polynomial& factor) {
    Polynomial cofactor = divmod(f.denominator, factor).quotient;
    ExtendedGcd eg = poly_extended_gcd(cofactor, factor);
    return divmod(rem * eg.s, factor).remainder;
  };
  for (const auto& l : fac.linears) out.linear_terms.push_back({numerator_over(l.polynomial()).coefficient(0), l});
  for (const auto& q : fac.quadratics) {
    Polynomial n = numerator_over(q.polynomial());
    out.quadratic_terms.push_back({n.coefficient(1), n.coefficient(0), q});
  }
  return out;
}

inline RationalFunction recombine(const PartialFractionForm& p) {
  RationalFunction sum = from_polynomial(p.polynomial_part);
  for (const auto& t : p.linear_terms)
    sum = sum + make_rational_function(Polynomial::constant(t.A), t.factor.polynomial());
  for (const auto& t : p.quadratic_terms)
    sum = sum + make_rational_function(Polynomial({t.C, t.B}), t.factor.polynomial());
  return sum;
}

}  // namespace logint
