#pragma once

// Dense univariate polynomials over the rationals.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "logint/errors.hpp"
#include "logint/rational.hpp"

namespace logint {

class Polynomial {
 public:
  Polynomial() = default;
  /// Coefficients indexed by power of x; trailing zeros are dropped.
  explicit Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({0, 1}); }
  static Polynomial monomial(std::size_t power, const Rational& c = 1) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree; the zero polynomial reports -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Rational(static_cast<std::int64_t>(k)));
    return Polynomial(std::move(d));
  }

  Rational operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation in double precision.
  double eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = std::fma(acc, x, it->to_double());
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(Polynomial a, const Rational& s) {
    if (s.is_zero()) return {};
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return std::move(a) * s; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial b = base;
  while (exponent) {
    if (exponent & 1U) result = result * b;
    b = b * b;
    exponent >>= 1U;
  }
  return result;
}

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};

inline PolyDivision divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
  const Rational lead_inv = b.leading().inverse();
  for (int k = da - db; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + db)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coefficient(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

inline bool divides(const Polynomial& d, const Polynomial& p) { return divmod(p, d).remainder.is_zero(); }

/// Monic greatest common divisor.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

struct ExtendedGcd {
  Polynomial gcd;  // monic
  Polynomial s;    // s*a + t*b = gcd
  Polynomial t;
};

inline ExtendedGcd poly_extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1{};
  Polynomial t0{}, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  Rational inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Multiplies through by the lcm of denominators and divides by the content,
/// giving integer coefficients with gcd 1 and positive leading coefficient.
inline std::vector<BigInt> primitive_integer_form(const Polynomial& p) {
  BigInt den = 1;
  for (const auto& c : p.coefficients()) den = lcm(den, c.denominator());
  std::vector<BigInt> out;
  BigInt content = 0;
  for (const auto& c : p.coefficients()) {
    BigInt v = c.numerator() * (den / c.denominator());
    content = gcd(content, v);
    out.push_back(v);
  }
  if (content == 0) return out;
  if (p.leading().sign() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

/// Number of distinct real roots in the closed interval [lo, hi], by an exact Sturm sequence.
inline int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  Polynomial q = divmod(p, poly_gcd(p, p.derivative())).quotient;
  int endpoint_roots = 0;
  for (const Rational& e : {lo, hi}) {
    if (q.degree() > 0 && q(e).is_zero()) {
      q = divmod(q, Polynomial({-e, 1})).quotient;
      ++endpoint_roots;
    }
  }
  if (q.degree() <= 0) return endpoint_roots;
  std::vector<Polynomial> chain{q, q.derivative()};
  while (chain.back().degree() > 0) {
    Polynomial r = -divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  auto variations = [&](const Rational& x) {
    int count = 0, last = 0;
    for (const auto& c : chain) {
      int s = c(x).sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return endpoint_roots + variations(lo) - variations(hi);
}

inline std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    bool unit = mag == Rational(1);
    if (k == 0 || !unit) out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace logint
