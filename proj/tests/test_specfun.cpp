#include <gtest/gtest.h>

#include <random>

#include "logint/specfun.hpp"

using namespace logint;
using namespace logint::specfun;

namespace {

constexpr double kCatalan = 0.915965594177219015;
constexpr double kTrigamma13 = 10.095597125427094;  // psi'(1/3)

void expect_complex_near(Complex a, Complex b, double tol) {
  EXPECT_NEAR(a.real(), b.real(), tol);
  EXPECT_NEAR(a.imag(), b.imag(), tol);
}

double hurwitz_direct(int s, double q) {
  constexpr int n = 100000;
  CompensatedSum sum;
  for (int k = n - 1; k >= 0; --k) sum += std::pow(k + q, -s);
  const double a = n + q;
  sum += std::pow(a, 1 - s) / (s - 1) + 0.5 * std::pow(a, -s) + s * std::pow(a, -s - 1) / 12;
  return sum.value();
}

}  // namespace

TEST(Dilog, Examples) {
  expect_complex_near(dilog(Complex(0, 0)), Complex(0, 0), 0);
  EXPECT_NEAR(dilog(Complex(-1, 0)).real(), -kPi * kPi / 12, 1e-15);
  expect_complex_near(dilog(std::polar(1.0, kPi / 3)), Complex(kPi * kPi / 36, 1.0149416064096536), 1e-14);
  EXPECT_THROW(dilog(Complex(1.1, 0)), DomainError);
  EXPECT_NEAR(dilog(Complex(-0.5, 0)).real(), -0.448414206923646202, 1e-15);
}

TEST(Polylog, Examples) {
  EXPECT_NEAR(polylog(3, Complex(-1, 0)).real(), -0.75 * zeta(3), 1e-15);
  EXPECT_NEAR(polylog(3, Complex(-1, 0)).imag(), 0.0, 1e-15);
  expect_complex_near(polylog(2, Complex(0, 1)), Complex(-kPi * kPi / 48, kCatalan), 1e-14);
  expect_complex_near(polylog(4, Complex(0, 0)), Complex(0, 0), 0);
  expect_complex_near(polylog(1, Complex(-1, 0)), Complex(-std::log(2.0), 0), 1e-15);
  EXPECT_THROW(polylog(1, Complex(1, 0)), PoleError);
  EXPECT_NEAR(polylog(3, Complex(-0.5, 0)).real(), -0.472597844658896874, 1e-15);
  // Li_3 at 0.9 e^{2i}, from a 50-digit reference
  expect_complex_near(polylog(3, std::polar(0.9, 2.0)), Complex(-0.41843684777976937, 0.74143526516044805), 1e-13);
}

TEST(Clausen, Examples) {
  EXPECT_EQ(clausen2(0.0), 0.0);
  EXPECT_NEAR(clausen2(kPi / 2), kCatalan, 1e-15);
  EXPECT_NEAR(clausen2(2 * kPi / 3), 0.67662773760643603, 1e-14);
  EXPECT_NEAR(catalan(), kCatalan, 1e-16);
  EXPECT_NEAR(clausen2_pi(Rational(1, 3)), 1.0149416064096536, 1e-15);
  EXPECT_NEAR(clausen2(-1.0), -clausen2(1.0), 1e-15);
  EXPECT_NEAR(clausen2(1.0 + 2 * kPi), clausen2(1.0), 1e-13);
}

TEST(HurwitzZeta, Examples) {
  EXPECT_NEAR(hurwitz_zeta(2, Rational(1)), kPi * kPi / 6, 1e-15);
  EXPECT_NEAR(hurwitz_zeta(2, Rational(1, 2)), kPi * kPi / 2, 1e-14);
  EXPECT_NEAR(hurwitz_zeta(2, Rational(1, 3)), kTrigamma13, 1e-13);
  EXPECT_THROW(hurwitz_zeta(2, Rational(0)), DomainError);
  EXPECT_THROW(hurwitz_zeta(2, Rational(3, 2)), DomainError);
  EXPECT_THROW(hurwitz_zeta(1, Rational(1, 2)), DomainError);
}

TEST(Polygamma, Examples) {
  EXPECT_NEAR(polygamma(1, Rational(1, 3)), kTrigamma13, 1e-13);
  const double psi16 = polygamma(1, Rational(1, 6));
  EXPECT_NEAR(psi16 - (5 * kTrigamma13 - 4 * kPi * kPi / 3), 0.0, 1e-10);
  EXPECT_NEAR(polygamma(1, Rational(1, 2)), kPi * kPi / 2, 1e-14);
  EXPECT_NEAR(polygamma(2, Rational(1)), -2 * zeta(3), 1e-14);
}

TEST(Zeta, Examples) {
  EXPECT_NEAR(zeta(2), 1.6449340668482264, 1e-15);
  EXPECT_NEAR(zeta(3), 1.2020569031595943, 1e-15);
  EXPECT_NEAR(zeta(4), std::pow(kPi, 4) / 90, 1e-15);
  EXPECT_NEAR(zeta(5), 1.0369277551433699, 1e-15);
  EXPECT_NEAR(zeta(7), 1.0083492773819228, 1e-15);
}

TEST(SpecfunProperties, PolylogDuplication) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> radius(0.0, 1.0), angle(-kPi, kPi);
  for (int i = 0; i < 100; ++i) {
    Complex z = std::polar(std::sqrt(radius(rng)), angle(rng));
    for (int s : {2, 3, 4}) {
      Complex lhs = polylog(s, z * z);
      Complex rhs = std::pow(2.0, s - 1) * (polylog(s, z) + polylog(s, -z));
      expect_complex_near(lhs, rhs, 1e-11);
    }
  }
}

TEST(SpecfunProperties, ClausenDuplication) {
  for (int i = 1; i < 50; ++i) {
    double theta = i * (kPi / 2) / 50;
    EXPECT_NEAR(clausen2(2 * theta), 2 * clausen2(theta) - 2 * clausen2(kPi - theta), 1e-11);
  }
}

TEST(SpecfunProperties, TrigammaReflection) {
  for (Rational q : {Rational(1, 6), Rational(1, 4), Rational(1, 3)}) {
    double s = std::sin(kPi * q.to_double());
    EXPECT_NEAR(polygamma(1, q) + polygamma(1, Rational(1) - q), kPi * kPi / (s * s), 1e-10);
  }
}

TEST(SpecfunProperties, HurwitzDecomposition) {
  for (int s : {2, 3, 4})
    for (Rational q : {Rational(1, 6), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(5, 6), Rational(1)})
      EXPECT_NEAR(hurwitz_zeta(s, q), hurwitz_direct(s, q.to_double()), 1e-12) << s << " " << q;
}

TEST(SpecfunProperties, ClausenHurwitzIdentities) {
  const double sqrt3 = std::sqrt(3.0);
  const double z2 = zeta(2);
  EXPECT_NEAR(clausen2(2 * kPi / 3), sqrt3 * ((1.0 / 9 - 1) / 2 * z2 + hurwitz_zeta(2, Rational(1, 3)) / 9), 1e-11);
  EXPECT_NEAR(clausen2(kPi / 3),
              sqrt3 * ((1.0 / 9 - 1) / 2 * z2 +
                       (hurwitz_zeta(2, Rational(1, 6)) + hurwitz_zeta(2, Rational(1, 3))) / 36),
              1e-11);
}

TEST(SpecfunProperties, DilogImaginaryPartIsClausen) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(1e-3, 2 * kPi - 1e-3);
  for (int i = 0; i < 50; ++i) {
    double theta = angle(rng);
    EXPECT_NEAR(dilog(std::polar(1.0, theta)).imag(), clausen2(theta), 1e-11);
  }
}
