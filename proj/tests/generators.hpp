#pragma once

// Seeded random inputs for the property tests.

#include <random>
#include <vector>

#include "gsigma/bipoly.hpp"

namespace gsigma::testgen {

inline constexpr unsigned kSeed = 20240611;

inline Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  return make_rational(num(rng), den(rng));
}

/// Up to `terms` monomials with exponents below `deg`.
inline BiPoly random_poly(std::mt19937& rng, int terms = 4, unsigned deg = 4) {
  std::uniform_int_distribution<unsigned> e(0, deg - 1);
  BiPoly p;
  for (int k = 0; k < terms; ++k) p += BiPoly::monomial(e(rng), e(rng), small_rational(rng));
  return p;
}

inline BiPoly random_nonzero_poly(std::mt19937& rng, int terms = 4, unsigned deg = 4) {
  for (;;) {
    BiPoly p = random_poly(rng, terms, deg);
    if (!p.is_zero()) return p;
  }
}

}  // namespace gsigma::testgen
