#pragma once

#include <gmpxx.h>

#include <string>

namespace gsigma {

using Integer = mpz_class;
using Rational = mpq_class;  // gmpxx keeps results of arithmetic canonical

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q" with q > 0, also for integers ("3/1").
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Shortest form: "3" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return to_fraction_string(q);
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace gsigma
