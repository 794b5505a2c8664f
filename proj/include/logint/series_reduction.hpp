#pragma once

// Chebyshev U values and the regrouping of periodic sine sums
//   sum_{k>=0} sin((k+1) t) / (k + shift)^w
// into Hurwitz zeta values zeta(w, j/P) for the rational angles t = pi/2, pi/3, 2pi/3.

#include <map>
#include <optional>
#include <vector>

#include "logint/algebraic_scalar.hpp"
#include "logint/errors.hpp"
#include "logint/rational.hpp"
#include "logint/specfun.hpp"

namespace logint {

/// U_k(a) by U_{k+1} = 2a U_k - U_{k-1}.
inline Rational chebyshev_u(int k, const Rational& a) {
  if (k < 0) throw DomainError("chebyshev_u requires k >= 0");
  Rational prev = 1;
  if (k == 0) return prev;
  Rational cur = Rational(2) * a;
  for (int j = 1; j < k; ++j) {
    Rational next = Rational(2) * a * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Exact sin(pi r) when r is a multiple of 1/4 or 1/6.
inline std::optional<AlgebraicScalar> sin_pi(const Rational& r) {
  BigInt two_den = 2 * r.denominator();
  BigInt num = r.numerator() % two_den;
  if (num < 0) num += two_den;
  Rational x(num, r.denominator());  // [0, 2)
  int sign = 1;
  if (x >= Rational(1)) {
    sign = -1;
    x -= 1;
  }
  if (x > Rational(1, 2)) x = Rational(1) - x;  // sin(pi - y) = sin y
  AlgebraicScalar v;
  if (x.is_zero()) {
    v = AlgebraicScalar{};
  } else if (x == Rational(1, 6)) {
    v = AlgebraicScalar(Rational(1, 2));
  } else if (x == Rational(1, 4)) {
    v = AlgebraicScalar(Rational(1, 2), 2);
  } else if (x == Rational(1, 3)) {
    v = AlgebraicScalar(Rational(1, 2), 3);
  } else if (x == Rational(1, 2)) {
    v = AlgebraicScalar(1);
  } else {
    return std::nullopt;
  }
  return sign < 0 ? -v : v;
}

inline std::optional<AlgebraicScalar> cos_pi(const Rational& r) { return sin_pi(r + Rational(1, 2)); }

struct SinePeriodProfile {
  Rational angle;  // t = pi * angle
  int period = 0;
  std::vector<AlgebraicScalar> values;  // values[j-1] = sin(j t), j = 1..period

  const AlgebraicScalar& at(long long j) const {
    long long p = period;
    long long idx = ((j % p) + p) % p;  // sin(0) = sin(P t) = values[P-1]
    return values[static_cast<std::size_t>(idx == 0 ? p - 1 : idx - 1)];
  }
};

inline SinePeriodProfile sine_profile(const Rational& angle) {
  if (angle != Rational(1, 2) && angle != Rational(1, 3) && angle != Rational(2, 3))
    throw UnsupportedAngle("exact sine profile only for t = pi/2, pi/3, 2pi/3; got t = pi*" + angle.str());
  SinePeriodProfile p;
  p.angle = angle;
  BigInt n = angle.numerator(), d = angle.denominator();
  p.period = static_cast<int>(2 * d / gcd(n, BigInt(2)));
  for (int j = 1; j <= p.period; ++j) p.values.push_back(*sin_pi(angle * Rational(j)));
  return p;
}

struct HurwitzComboTerm {
  AlgebraicScalar coeff;
  Rational q;  // in (0, 1]
  friend bool operator==(const HurwitzComboTerm&, const HurwitzComboTerm&) = default;
};

/// sum coeff * zeta(weight, q)
struct HurwitzCombo {
  int weight = 2;
  std::vector<HurwitzComboTerm> terms;

  double evaluate() const {
    specfun::CompensatedSum sum;
    for (const auto& t : terms) sum += t.coeff.to_double() * specfun::hurwitz_zeta(weight, t.q);
    return sum.value();
  }
};

struct SubtractedTerm {
  int n;                  // the index n of c(n)/n^w
  AlgebraicScalar value;  // c(n)/n^w, exact
};

/// combo - sum(subtracted)
struct PeriodicSum {
  HurwitzCombo combo;
  std::vector<SubtractedTerm> subtracted;

  AlgebraicScalar subtracted_total() const {
    AlgebraicScalar total;
    for (const auto& s : subtracted) total = total + s.value;
    return total;
  }
  double evaluate() const { return combo.evaluate() - subtracted_total().to_double(); }
};

/// sum_{k>=0} sin((k+1) t) / (k + shift)^weight, i.e. sum_{n>=shift} c(n)/n^w with
/// c(n) = sin((n - shift + 1) t). Residue classes n = j (mod P) give
/// P^{-w} sum_j c(j) zeta(w, j/P); the terms n < shift are subtracted exactly.
inline PeriodicSum periodic_sum(const SinePeriodProfile& profile, int weight, int shift) {
  if (weight < 2) throw DomainError("periodic_sum requires weight >= 2");
  if (shift < 1) throw DomainError("periodic_sum requires shift >= 1");
  const int P = profile.period;
  PeriodicSum out;
  out.combo.weight = weight;
  const Rational scale = pow(Rational(1, P), static_cast<unsigned>(weight));
  std::map<Rational, AlgebraicScalar> by_q;
  for (int j = 1; j <= P; ++j) {
    const AlgebraicScalar& c = profile.at(j - shift + 1);
    if (c.is_zero()) continue;
    Rational q(j, P);
    by_q[q] = by_q[q] + c * scale;
  }
  for (auto& [q, c] : by_q)
    if (!c.is_zero()) out.combo.terms.push_back({c, q});
  for (int n = 1; n < shift; ++n) {
    const AlgebraicScalar& c = profile.at(n - shift + 1);
    if (c.is_zero()) continue;
    out.subtracted.push_back({n, c * pow(Rational(1, n), static_cast<unsigned>(weight))});
  }
  return out;
}

}  // namespace logint
