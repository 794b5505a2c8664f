#pragma once

// Double-precision special functions: polylogarithms, Clausen's Cl2,
// Hurwitz zeta and polygamma at rational arguments.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "logint/errors.hpp"
#include "logint/rational.hpp"

namespace logint::specfun {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Neumaier's compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  ComplexCompensatedSum& operator+=(Complex z) {
    re_ += z.real();
    im_ += z.imag();
    return *this;
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

inline constexpr int kMaxBernoulli = 120;

/// Exact Bernoulli numbers B_0..B_kMaxBernoulli (B_1 = -1/2).
inline const std::vector<Rational>& bernoulli_numbers() {
  static const std::vector<Rational> table = [] {
    // Akiyama-Tanigawa; yields B_1 = +1/2, flipped below.
    std::vector<Rational> out(kMaxBernoulli + 1);
    std::vector<Rational> a(kMaxBernoulli + 1);
    for (int m = 0; m <= kMaxBernoulli; ++m) {
      a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
      for (int j = m; j >= 1; --j) {
        auto uj = static_cast<std::size_t>(j);
        a[uj - 1] = Rational(j) * (a[uj - 1] - a[uj]);
      }
      out[static_cast<std::size_t>(m)] = a[0];
    }
    out[1] = Rational(-1, 2);
    return out;
  }();
  return table;
}

/// B_n / n! in double precision.
inline double bernoulli_over_factorial(int n) {
  static const std::vector<double> table = [] {
    std::vector<double> out;
    const auto& b = bernoulli_numbers();
    for (int k = 0; k <= kMaxBernoulli; ++k)
      out.push_back((b[static_cast<std::size_t>(k)] / Rational(factorial(static_cast<unsigned>(k)))).to_double());
    return out;
  }();
  return table.at(static_cast<std::size_t>(n));
}

namespace detail {

/// Euler-Maclaurin for sum_{k>=0} (k+q)^{-s}, s > 1, q > 0.
inline double hurwitz_euler_maclaurin(double s, double q) {
  constexpr int kCorrections = 7;  // B_2 .. B_14
  for (int n = 30;; n *= 2) {
    const double x = n + q;
    CompensatedSum sum;
    for (int k = n - 1; k >= 0; --k) sum += std::pow(k + q, -s);
    sum += std::pow(x, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(x, -s);
    // (s)_{2j-1} x^{-s-2j+1} B_{2j}/(2j)!
    double rising = s;
    double xpow = std::pow(x, -s - 1.0);
    for (int j = 1; j <= kCorrections; ++j) {
      sum += bernoulli_over_factorial(2 * j) * rising * xpow;
      rising *= (s + 2 * j - 1) * (s + 2 * j);
      xpow /= x * x;
    }
    const double remainder = std::abs(bernoulli_over_factorial(2 * kCorrections + 2) * rising * xpow);
    const double value = sum.value();
    if (remainder <= 1e-16 * std::abs(value) || n > 4096) return value;
  }
}

inline const std::vector<double>& zeta_table() {
  static const std::vector<double> table = [] {
    std::vector<double> out(kMaxBernoulli + 2, 0.0);
    for (int m = 2; m <= kMaxBernoulli; ++m) {
      if (m % 2 == 0) {
        // zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!)
        double mag = std::abs(bernoulli_over_factorial(m)) * std::pow(2 * kPi, m) / 2.0;
        out[static_cast<std::size_t>(m)] = mag;
      } else if (m < 60) {
        out[static_cast<std::size_t>(m)] = hurwitz_euler_maclaurin(m, 1.0);
      } else {
        out[static_cast<std::size_t>(m)] = 1.0 + std::pow(2.0, -m) + std::pow(3.0, -m);
      }
    }
    return out;
  }();
  return table;
}

}  // namespace detail

/// Riemann zeta at an integer m >= 2; even arguments via the Bernoulli closed form.
inline double zeta(int m) {
  if (m < 2) throw DomainError("zeta(m) requires m >= 2");
  if (m == 2) return kPi * kPi / 6.0;
  if (m == 4) return std::pow(kPi, 4) / 90.0;
  if (m == 6) return std::pow(kPi, 6) / 945.0;
  if (m <= kMaxBernoulli) return detail::zeta_table()[static_cast<std::size_t>(m)];
  return 1.0 + std::pow(2.0, -m);
}

/// zeta at any integer, including zeta(0) = -1/2 and zeta(-n) = -B_{n+1}/(n+1).
inline double zeta_any(int m) {
  if (m >= 2) return zeta(m);
  if (m == 1) throw PoleError("zeta(1)");
  int n = -m;
  if (n == 0) return -0.5;
  if (n + 1 > kMaxBernoulli) throw DomainError("zeta at too negative an argument");
  return -(bernoulli_numbers()[static_cast<std::size_t>(n + 1)] / Rational(n + 1)).to_double();
}

inline double hurwitz_zeta(int s, double q) {
  if (s < 2 || !(q > 0.0)) throw DomainError("hurwitz_zeta requires s >= 2 and q > 0");
  return detail::hurwitz_euler_maclaurin(s, q);
}

/// zeta(s, q) = sum_{k>=0} (k+q)^{-s} for integer s >= 2 and rational q in (0, 1].
inline double hurwitz_zeta(int s, const Rational& q) {
  if (s < 2) throw DomainError("hurwitz_zeta requires s >= 2");
  if (q <= Rational(0) || q > Rational(1)) throw DomainError("hurwitz_zeta requires 0 < q <= 1, got " + q.str());
  if (q == Rational(1)) return zeta(s);
  return detail::hurwitz_euler_maclaurin(s, q.to_double());
}

/// psi^{(m)}(q) = (-1)^{m+1} m! zeta(m+1, q).
inline double polygamma(int m, const Rational& q) {
  if (m < 1) throw DomainError("polygamma order must be >= 1");
  double sign = (m % 2 == 1) ? 1.0 : -1.0;
  return sign * std::tgamma(m + 1.0) * hurwitz_zeta(m + 1, q);
}

/// Cl2(theta) = sum sin(k theta)/k^2.
inline double clausen2(double theta) {
  double t = std::fmod(theta, 2 * kPi);
  if (t > kPi) t -= 2 * kPi;
  if (t <= -kPi) t += 2 * kPi;
  double sign = 1.0;
  if (t < 0) {
    sign = -1.0;
    t = -t;
  }
  if (t == 0.0) return 0.0;
  // theta - theta log theta + sum |B_2k| theta^{2k+1} / (2k (2k+1)!)
  CompensatedSum sum;
  sum += t;
  sum += -t * std::log(t);
  const double t2 = t * t;
  double tp = t * t2;
  for (int k = 1; 2 * k + 1 <= kMaxBernoulli; ++k) {
    double term = std::abs(bernoulli_over_factorial(2 * k)) * tp / (2.0 * k * (2 * k + 1));
    sum += term;
    if (term < 1e-18 * std::abs(sum.value())) break;
    tp *= t2;
  }
  return sign * sum.value();
}

/// Cl2(pi * r) with the angle reduced exactly modulo 2.
inline double clausen2_pi(const Rational& r) {
  BigInt two_den = 2 * r.denominator();
  BigInt num = r.numerator() % two_den;  // in (-2d, 2d)
  if (num < 0) num += two_den;            // [0, 2d)
  Rational reduced(num, r.denominator()); // [0, 2)
  if (reduced.is_zero() || reduced == Rational(1)) return 0.0;
  if (reduced > Rational(1)) return -clausen2(kPi * (Rational(2) - reduced).to_double());
  return clausen2(kPi * reduced.to_double());
}

inline double catalan() {
  static const double value = clausen2_pi(Rational(1, 2));
  return value;
}

namespace detail {

/// sum_{n>=0} B_n u^{n+1}/(n+1)! = Li2(1 - e^{-u}).
inline Complex dilog_bernoulli_series(Complex u) {
  ComplexCompensatedSum sum;
  sum += u;
  sum += -0.25 * u * u;
  const Complex u2 = u * u;
  Complex up = u * u2;
  for (int k = 1; 2 * k + 1 <= kMaxBernoulli; ++k) {
    Complex term = bernoulli_over_factorial(2 * k) / (2 * k + 1) * up;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum.value())) break;
    up *= u2;
  }
  return sum.value();
}

inline void check_disk(Complex z) {
  if (std::abs(z) > 1.0 + 1e-12) throw DomainError("polylogarithm argument outside the closed unit disk");
}

}  // namespace detail

inline Complex dilog(Complex z) {
  detail::check_disk(z);
  if (z == Complex(0.0)) return 0.0;
  if (z == Complex(1.0)) return kPi * kPi / 6.0;
  if (z.real() <= 0.5) return detail::dilog_bernoulli_series(-std::log(1.0 - z));
  // Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z)
  Complex w = 1.0 - z;
  return kPi * kPi / 6.0 - std::log(z) * std::log(w) - detail::dilog_bernoulli_series(-std::log(z));
}

/// Li_s(z) for integer s >= 1 and |z| <= 1.
inline Complex polylog(int s, Complex z) {
  if (s < 1) throw DomainError("polylog weight must be >= 1");
  detail::check_disk(z);
  if (s == 1) {
    if (z == Complex(1.0)) throw PoleError("Li1 at z = 1");
    return -std::log(1.0 - z);
  }
  if (s == 2) return dilog(z);
  if (z == Complex(0.0)) return 0.0;
  if (z == Complex(1.0)) return zeta(s);

  if (std::abs(z) < 0.75) {
    ComplexCompensatedSum sum;
    Complex zk = z;
    for (int k = 1; k < 400; ++k) {
      Complex term = zk / std::pow(static_cast<double>(k), s);
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum.value())) break;
      zk *= z;
    }
    return sum.value();
  }

  // Li_s(e^mu) = sum_{k != s-1} zeta(s-k) mu^k/k! + mu^{s-1}/(s-1)! (H_{s-1} - log(-mu))
  const Complex mu = std::log(z);
  double harmonic = 0.0;
  for (int j = 1; j < s; ++j) harmonic += 1.0 / j;
  ComplexCompensatedSum sum;
  Complex power = 1.0;  // mu^k / k!
  for (int k = 0; k + 1 - s <= kMaxBernoulli - 1; ++k) {
    if (k > 0) power *= mu / static_cast<double>(k);
    if (k == s - 1) {
      sum += power * (harmonic - std::log(-mu));
      continue;
    }
    double zv = zeta_any(s - k);
    if (zv == 0.0) continue;
    Complex term = zv * power;
    sum += term;
    if (k > s && std::abs(term) < 1e-18 * std::abs(sum.value())) break;
  }
  return sum.value();
}

}  // namespace logint::specfun
