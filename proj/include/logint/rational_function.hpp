#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "logint/errors.hpp"
#include "logint/polynomial.hpp"

namespace logint {

/// scale * numerator / denominator. After normalize(): numerator and
/// denominator are coprime and monic, scale carries both leading
/// coefficients (sign included). The zero function is 0 / 1 with scale 0.
struct RationalFunction {
  Polynomial numerator = Polynomial::constant(0);
  Polynomial denominator = Polynomial::constant(1);
  Rational scale = 1;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

inline RationalFunction normalize(const RationalFunction& f) {
  if (f.denominator.is_zero()) throw DivisionByZeroPoly("denominator is the zero polynomial");
  if (f.numerator.is_zero() || f.scale.is_zero()) return {Polynomial{}, Polynomial::constant(1), 0};
  Polynomial g = poly_gcd(f.numerator, f.denominator);
  Polynomial num = divmod(f.numerator, g).quotient;
  Polynomial den = divmod(f.denominator, g).quotient;
  Rational scale = f.scale * num.leading() / den.leading();
  return {num.monic(), den.monic(), scale};
}

inline RationalFunction make_rational_function(const Polynomial& num, const Polynomial& den) {
  return normalize({num, den, 1});
}

inline RationalFunction from_polynomial(const Polynomial& p) { return make_rational_function(p, Polynomial::constant(1)); }

/// Numerator with the scale folded in.
inline Polynomial scaled_numerator(const RationalFunction& f) { return f.numerator * f.scale; }

inline RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return make_rational_function(scaled_numerator(a) * b.denominator + scaled_numerator(b) * a.denominator,
                                a.denominator * b.denominator);
}
inline RationalFunction operator-(const RationalFunction& a) { return {a.numerator, a.denominator, -a.scale}; }
inline RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
inline RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return make_rational_function(scaled_numerator(a) * scaled_numerator(b), a.denominator * b.denominator);
}
inline RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  Polynomial den = scaled_numerator(b);
  if (den.is_zero()) throw DivisionByZeroPoly("division by the zero rational function");
  return make_rational_function(scaled_numerator(a) * b.denominator, a.denominator * den);
}
inline RationalFunction pow(const RationalFunction& f, unsigned exponent) {
  return make_rational_function(pow(scaled_numerator(f), exponent), pow(f.denominator, exponent));
}

/// Horner evaluation of both polynomials times the scale.
inline double eval_at(const RationalFunction& f, double x) {
  double den = f.denominator.eval(x);
  if (std::abs(den) < 1e-300) throw PoleEvaluation("evaluation at a pole, x = " + std::to_string(x));
  return f.scale.to_double() * f.numerator.eval(x) / den;
}

}  // namespace logint
