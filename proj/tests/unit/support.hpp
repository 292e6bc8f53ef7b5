#pragma once

#include <cstdint>
#include <random>

#include "pasep/poly.hpp"

namespace testing_support {

/// Random polynomial with up to `max_terms` terms, exponents in [0, max_exp], coefficients in [-9, 9].
inline pasep::Polynomial random_polynomial(std::mt19937_64& rng, int max_terms = 6, int max_exp = 3) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coef(-9, 9);
  pasep::Polynomial p;
  for (int t = terms(rng); t > 0; --t) {
    p += pasep::Polynomial::monomial({exp(rng), exp(rng), exp(rng)}, pasep::Integer(coef(rng)));
  }
  return p;
}

/// Nonzero rational with numerator and denominator in [1, 12] and a random sign.
inline pasep::Rational random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> part(1, 12);
  std::bernoulli_distribution negative(0.3);
  pasep::Rational r(negative(rng) ? -part(rng) : part(rng), part(rng));
  r.canonicalize();
  return r;
}

/// Rational in (0, 1] with denominator at most 9.
inline pasep::Rational random_unit_rational(std::mt19937_64& rng, bool allow_zero) {
  std::uniform_int_distribution<int> den(1, 9);
  const int d = den(rng);
  std::uniform_int_distribution<int> num(allow_zero ? 0 : 1, d);
  pasep::Rational r(num(rng), d);
  r.canonicalize();
  return r;
}

}  // namespace testing_support
