#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <string>

#include "logint/errors.hpp"
#include "logint/rational.hpp"

namespace logint {

/// q * sqrt(d) with d squarefree in {1, 2, 3}; zero is stored as (0, 1).
class AlgebraicScalar {
 public:
  AlgebraicScalar() = default;
  AlgebraicScalar(Rational q) : q_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  AlgebraicScalar(std::int64_t q) : q_(q) {}         // NOLINT(google-explicit-constructor)
  AlgebraicScalar(Rational q, int d) : q_(std::move(q)), d_(d) {
    if (d != 1 && d != 2 && d != 3) throw UnsupportedRadical("sqrt(" + std::to_string(d) + ") is outside Q(sqrt 2, sqrt 3)");
    if (q_.is_zero()) d_ = 1;
  }

  const Rational& rational() const { return q_; }
  int radicand() const { return d_; }
  bool is_zero() const { return q_.is_zero(); }
  double to_double() const { return q_.to_double() * std::sqrt(static_cast<double>(d_)); }

  AlgebraicScalar operator-() const { return {-q_, d_}; }

  friend AlgebraicScalar operator*(const AlgebraicScalar& a, const AlgebraicScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.d_ == b.d_) return {a.q_ * b.q_ * Rational(a.d_), 1};
    if (a.d_ == 1) return {a.q_ * b.q_, b.d_};
    if (b.d_ == 1) return {a.q_ * b.q_, a.d_};
    throw UnsupportedRadical("product sqrt(" + std::to_string(a.d_) + ")*sqrt(" + std::to_string(b.d_) +
                             ") leaves Q(sqrt 2, sqrt 3) scalars");
  }
  friend AlgebraicScalar operator*(const AlgebraicScalar& a, const Rational& r) { return {a.q_ * r, a.d_}; }

  AlgebraicScalar inverse() const {
    // 1/(q sqrt d) = sqrt(d) / (q d)
    if (is_zero()) throw DomainError("inverse of zero algebraic scalar");
    return {(q_ * Rational(d_)).inverse(), d_};
  }

  /// Sum of two scalars sharing a radicand (or where one is zero).
  friend AlgebraicScalar operator+(const AlgebraicScalar& a, const AlgebraicScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.d_ != b.d_) throw UnsupportedRadical("sum of scalars with different radicands");
    return {a.q_ + b.q_, a.d_};
  }
  friend AlgebraicScalar operator-(const AlgebraicScalar& a, const AlgebraicScalar& b) { return a + (-b); }

  friend bool operator==(const AlgebraicScalar&, const AlgebraicScalar&) = default;

  std::string str() const {
    if (d_ == 1) return q_.str();
    return "(" + q_.str() + ")*sqrt(" + std::to_string(d_) + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& s) { return os << s.str(); }

 private:
  Rational q_;
  int d_ = 1;
};

/// sqrt(u) for rational u >= 0 when it lies in the supported field.
inline std::optional<AlgebraicScalar> sqrt_rational(const Rational& u) {
  if (u.sign() < 0) return std::nullopt;
  if (u.is_zero()) return AlgebraicScalar{};
  // sqrt(n/m) = sqrt(n m) / m
  BigInt nm = u.numerator() * u.denominator();
  for (int d : {1, 2, 3}) {
    if (nm % d != 0) continue;
    BigInt rest = nm / d;
    BigInt root = boost::multiprecision::sqrt(rest);
    if (root * root == rest) return AlgebraicScalar(Rational(root, u.denominator()), d);
  }
  return std::nullopt;
}

}  // namespace logint
