#pragma once

#include <compare>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsigma/rational.hpp"

namespace gsigma {

/// Exponent pair of x_+^a x_-^b. Ordered lexicographically, x_+ major.
struct Monomial {
  unsigned a = 0;
  unsigned b = 0;
  auto operator<=>(const Monomial&) const = default;
};

enum class Direction { Plus, Minus };

/// Sparse polynomial in x_+ and x_- with exact rational coefficients.
///
/// Terms are kept sorted by Monomial with no zero coefficients, so two
/// polynomials are equal iff their term vectors are equal.
class BiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  BiPoly() = default;
  BiPoly(const Rational& c);  // NOLINT: constants convert implicitly
  BiPoly(long c) : BiPoly(Rational(c)) {}  // NOLINT

  static BiPoly monomial(unsigned a, unsigned b, const Rational& c = 1);
  static BiPoly from_terms(std::vector<Term> terms);
  static BiPoly x_plus() { return monomial(1, 0); }
  static BiPoly x_minus() { return monomial(0, 1); }
  /// t = x_+ x_- = |x|^2
  static BiPoly t() { return monomial(1, 1); }
  /// sigma = 1 + x_+ x_-
  static BiPoly sigma();

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational coefficient(Monomial m) const;
  /// Largest term in the lexicographic order. Requires !is_zero().
  const Term& leading() const { return terms_.back(); }
  const Term& trailing() const { return terms_.front(); }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly p, const BiPoly& q) { return p += q; }
  friend BiPoly operator-(BiPoly p, const BiPoly& q) { return p -= q; }
  friend BiPoly operator*(const BiPoly& p, const BiPoly& q);
  friend BiPoly operator*(BiPoly p, const Rational& c) { return p *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly p) { return p *= c; }
  friend BiPoly operator*(BiPoly p, long c) { return p *= Rational(c); }
  friend BiPoly operator*(long c, BiPoly p) { return p *= Rational(c); }
  friend bool operator==(const BiPoly& p, const BiPoly& q) { return p.terms_ == q.terms_; }

  BiPoly pow(unsigned k) const;

  std::complex<double> evaluate(std::complex<double> xp, std::complex<double> xm) const;
  /// Evaluate on the real slice x_- = conj(x_+).
  std::complex<double> evaluate(std::complex<double> xp) const { return evaluate(xp, std::conj(xp)); }

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Complex conjugation x_+ <-> x_- (coefficients are real).
BiPoly conj(const BiPoly& p);
BiPoly partial(const BiPoly& p, Direction dir);

/// Quotient q with p == d * q, or nothing when d does not divide p.
std::optional<BiPoly> divide_exact(const BiPoly& p, const BiPoly& d);

/// p(x_+, -1/x_+) == 0, i.e. (1 + x_+ x_-) divides p.
bool divisible_by_sigma(const BiPoly& p);

struct SigmaPower {
  Rational coeff;
  unsigned exponent = 0;
  friend bool operator==(const SigmaPower&, const SigmaPower&) = default;
};

/// Detects p == c * sigma^r exactly (c != 0).
std::optional<SigmaPower> match_sigma_power(const BiPoly& p);

/// d_+ d_- ln p as the unreduced pair (p d_+d_- p - d_+p d_-p, p^2).
struct LogLaplacian {
  BiPoly num;
  BiPoly den;
};
LogLaplacian laplace_log(const BiPoly& p);

/// Positive rational c such that p / c has coprime integer coefficients.
Rational content(const BiPoly& p);

}  // namespace gsigma
