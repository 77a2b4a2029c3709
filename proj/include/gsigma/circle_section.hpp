#pragma once

#include <complex>
#include <string>

#include "gsigma/bipoly.hpp"

namespace gsigma {

/// num / sigma^dexp with sigma = 1 + x_+ x_-.
///
/// Normal form: sigma does not divide num unless dexp == 0, and zero is
/// stored as 0 / sigma^0. Reduction happens on construction, so equality of
/// functions is equality of (num, dexp).
class CircleSection {
 public:
  CircleSection() = default;
  CircleSection(BiPoly num, unsigned dexp = 0);  // NOLINT: polynomials are sections
  CircleSection(long c) : CircleSection(BiPoly(c)) {}  // NOLINT

  /// c * sigma^k for any integer k.
  static CircleSection sigma_power(long k, const Rational& c = 1);

  const BiPoly& num() const noexcept { return num_; }
  unsigned dexp() const noexcept { return dexp_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return dexp_ == 0; }

  CircleSection operator-() const { return {-num_, dexp_}; }
  friend CircleSection operator+(const CircleSection& s, const CircleSection& u);
  friend CircleSection operator-(const CircleSection& s, const CircleSection& u) { return s + (-u); }
  friend CircleSection operator*(const CircleSection& s, const CircleSection& u);
  friend CircleSection operator*(const CircleSection& s, const Rational& c);
  friend CircleSection operator*(const Rational& c, const CircleSection& s) { return s * c; }
  CircleSection& operator+=(const CircleSection& o) { return *this = *this + o; }
  CircleSection& operator-=(const CircleSection& o) { return *this = *this - o; }
  CircleSection& operator*=(const CircleSection& o) { return *this = *this * o; }
  friend bool operator==(const CircleSection&, const CircleSection&) = default;

  std::complex<double> evaluate(std::complex<double> xp) const;
  std::string to_string() const;

 private:
  void reduce();

  BiPoly num_;
  unsigned dexp_ = 0;
};

CircleSection conj(const CircleSection& s);
CircleSection partial(const CircleSection& s, Direction dir);

/// s / u, exact. Uses the closed form when u.num() is a constant times a
/// power of sigma; otherwise requires u.num() to divide s.num() exactly.
CircleSection divide(const CircleSection& s, const CircleSection& u);

/// s == c * sigma^k (k may be negative).
struct SectionPower {
  Rational coeff;
  long exponent = 0;
};
std::optional<SectionPower> match_sigma_power(const CircleSection& s);

}  // namespace gsigma
