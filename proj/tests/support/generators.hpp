#pragma once

#include <random>
#include <vector>

#include "logint/factorize.hpp"
#include "logint/rational_function.hpp"

namespace logint::fixtures {

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(lo, hi);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& v : c) v = coeff(rng);
  return Polynomial(c);
}

/// Numerator and denominator of degree <= 6, coefficients in [-9, 9], no pole in [0, 1].
inline RationalFunction random_rational_function(std::mt19937_64& rng) {
  Polynomial num = random_polynomial(rng, 6);
  Polynomial den;
  do {
    den = random_polynomial(rng, 6);
  } while (den.is_zero() || count_real_roots(den, 0, 1) > 0);
  return make_rational_function(num, den);
}

/// Denominators from the closed-form family, pole-free on [0, 1].
inline const std::vector<Polynomial>& admissible_factors() {
  static const std::vector<Polynomial> factors = {
      Polynomial({1, 1}),                   // 1 + x
      Polynomial({2, 1}),                   // x + 2
      Polynomial({Rational(3, 2), 1}),      // x + 3/2
      Polynomial({1, 0, 1}),                // x^2 + 1
      Polynomial({1, 1, 1}),                // x^2 + x + 1
      Polynomial({1, -1, 1}),               // x^2 - x + 1
  };
  return factors;
}

/// Squarefree product of a non-empty subset of admissible_factors over a random
/// numerator of degree <= deg(den) + 1.
inline RationalFunction random_admissible(std::mt19937_64& rng) {
  const auto& factors = admissible_factors();
  std::uniform_int_distribution<unsigned> mask_dist(1, (1u << factors.size()) - 1);
  Polynomial den = Polynomial::constant(1);
  const unsigned mask = mask_dist(rng);
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (mask & (1u << i)) den = den * factors[i];
  Polynomial num;
  do {
    num = random_polynomial(rng, den.degree() + 1, -5, 5);
  } while (num.is_zero());
  return make_rational_function(num, den);
}

}  // namespace logint::fixtures
