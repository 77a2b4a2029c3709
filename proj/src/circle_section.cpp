#include "gsigma/circle_section.hpp"

#include <algorithm>

#include "gsigma/error.hpp"

namespace gsigma {

namespace {

const BiPoly& sigma_poly() {
  static const BiPoly s = BiPoly::sigma();
  return s;
}

BiPoly sigma_pow(unsigned k) {
  if (k == 0) return BiPoly(1);
  std::vector<BiPoly::Term> terms;
  terms.reserve(k + 1);
  for (unsigned i = 0; i <= k; ++i) terms.emplace_back(Monomial{i, i}, Rational(binomial(k, i)));
  return BiPoly::from_terms(std::move(terms));
}

}  // namespace

CircleSection::CircleSection(BiPoly num, unsigned dexp) : num_(std::move(num)), dexp_(dexp) { reduce(); }

void CircleSection::reduce() {
  if (num_.is_zero()) {
    dexp_ = 0;
    return;
  }
  while (dexp_ > 0 && divisible_by_sigma(num_)) {
    auto q = divide_exact(num_, sigma_poly());
    if (!q) throw Error(ErrorCode::Internal, "sigma divisibility test disagrees with long division");
    num_ = std::move(*q);
    --dexp_;
  }
}

CircleSection CircleSection::sigma_power(long k, const Rational& c) {
  if (k >= 0) return {sigma_pow(static_cast<unsigned>(k)) * c, 0};
  return {BiPoly(c), static_cast<unsigned>(-k)};
}

CircleSection operator+(const CircleSection& s, const CircleSection& u) {
  if (s.is_zero()) return u;
  if (u.is_zero()) return s;
  const unsigned d = std::max(s.dexp_, u.dexp_);
  BiPoly num = s.num_ * sigma_pow(d - s.dexp_) + u.num_ * sigma_pow(d - u.dexp_);
  return {std::move(num), d};
}

CircleSection operator*(const CircleSection& s, const CircleSection& u) {
  if (s.is_zero() || u.is_zero()) return {};
  return {s.num_ * u.num_, s.dexp_ + u.dexp_};
}

CircleSection operator*(const CircleSection& s, const Rational& c) {
  if (sgn(c) == 0) return {};
  CircleSection r = s;
  r.num_ *= c;
  return r;
}

std::complex<double> CircleSection::evaluate(std::complex<double> xp) const {
  const double sig = 1.0 + std::norm(xp);
  return num_.evaluate(xp) / std::pow(sig, static_cast<double>(dexp_));
}

std::string CircleSection::to_string() const {
  if (dexp_ == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/s^" + std::to_string(dexp_);
}

CircleSection conj(const CircleSection& s) { return {conj(s.num()), s.dexp()}; }

CircleSection partial(const CircleSection& s, Direction dir) {
  // d(N / s^d) = (dN * s - d * N * ds) / s^(d+1), with d_+ s = x_-, d_- s = x_+.
  const BiPoly dn = partial(s.num(), dir);
  if (s.dexp() == 0) return dn;
  const BiPoly ds = dir == Direction::Plus ? BiPoly::x_minus() : BiPoly::x_plus();
  BiPoly num = dn * sigma_poly() - s.num() * ds * Rational(s.dexp());
  return {std::move(num), s.dexp() + 1};
}

CircleSection divide(const CircleSection& s, const CircleSection& u) {
  if (u.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero section");
  if (s.is_zero()) return {};
  // s/u = (S / sigma^a) / (U / sigma^b) = S sigma^b / (U sigma^a)
  if (auto m = match_sigma_power(u.num())) {
    const long k = static_cast<long>(u.dexp()) - static_cast<long>(m->exponent) - static_cast<long>(s.dexp());
    const Rational inv = 1 / m->coeff;
    if (k >= 0) return {s.num() * sigma_pow(static_cast<unsigned>(k)) * inv, 0};
    return {s.num() * inv, static_cast<unsigned>(-k)};
  }
  auto q = divide_exact(s.num(), u.num());
  if (!q) throw Error(ErrorCode::NotDivisible, "section quotient leaves the sigma-denominator ring");
  const long k = static_cast<long>(u.dexp()) - static_cast<long>(s.dexp());
  if (k >= 0) return {*q * sigma_pow(static_cast<unsigned>(k)), 0};
  return {std::move(*q), static_cast<unsigned>(-k)};
}

std::optional<SectionPower> match_sigma_power(const CircleSection& s) {
  auto m = match_sigma_power(s.num());
  if (!m) return std::nullopt;
  return SectionPower{m->coeff, static_cast<long>(m->exponent) - static_cast<long>(s.dexp())};
}

}  // namespace gsigma
