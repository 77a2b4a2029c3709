#include "gsigma/bipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gsigma/error.hpp"

namespace gsigma {

namespace {

using TermMap = std::map<Monomial, Rational>;

BiPoly from_map(const TermMap& m) {
  std::vector<BiPoly::Term> terms;
  terms.reserve(m.size());
  for (const auto& [k, c] : m)
    if (sgn(c) != 0) terms.emplace_back(k, c);
  return BiPoly::from_terms(std::move(terms));
}

// Merge two sorted term lists with q scaled by sign.
std::vector<BiPoly::Term> merge(const std::vector<BiPoly::Term>& p, const std::vector<BiPoly::Term>& q,
                                bool subtract) {
  std::vector<BiPoly::Term> out;
  out.reserve(p.size() + q.size());
  auto i = p.begin();
  auto j = q.begin();
  while (i != p.end() || j != q.end()) {
    if (j == q.end() || (i != p.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == p.end() || j->first < i->first) {
      out.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
      ++j;
    } else {
      Rational c = subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
      if (sgn(c) != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

BiPoly::BiPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(Monomial{}, c);
}

BiPoly BiPoly::monomial(unsigned a, unsigned b, const Rational& c) {
  BiPoly p;
  if (sgn(c) != 0) p.terms_.emplace_back(Monomial{a, b}, c);
  return p;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  BiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
    } else if (sgn(t.second) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

BiPoly BiPoly::sigma() { return BiPoly(1) + t(); }

bool BiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

Rational BiPoly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

BiPoly BiPoly::operator-() const {
  BiPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) { return *this = *this * o; }

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

BiPoly operator*(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  if (q.size() == 1 && q.terms_[0].first == Monomial{}) return p * q.terms_[0].second;
  if (p.size() == 1 && p.terms_[0].first == Monomial{}) return q * p.terms_[0].second;
  TermMap acc;
  Rational prod;
  for (const auto& [kp, cp] : p.terms_) {
    for (const auto& [kq, cq] : q.terms_) {
      mpq_mul(prod.get_mpq_t(), cp.get_mpq_t(), cq.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(Monomial{kp.a + kq.a, kp.b + kq.b}, prod);
      if (!inserted) it->second += prod;
    }
  }
  return from_map(acc);
}

BiPoly BiPoly::pow(unsigned k) const {
  BiPoly result(1);
  BiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::complex<double> BiPoly::evaluate(std::complex<double> xp, std::complex<double> xm) const {
  std::complex<double> sum = 0;
  for (const auto& [k, c] : terms_) sum += c.get_d() * std::pow(xp, static_cast<int>(k.a)) * std::pow(xm, static_cast<int>(k.b));
  return sum;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = mag == 1 && (k.a != 0 || k.b != 0);
    if (!unit) os << gsigma::to_string(mag);
    auto var = [&](const char* name, unsigned e) {
      if (e == 0) return;
      if (!unit) os << '*';
      unit = false;
      os << name;
      if (e > 1) os << '^' << e;
    };
    var("x+", k.a);
    var("x-", k.b);
    first = false;
  }
  return os.str();
}

BiPoly conj(const BiPoly& p) {
  std::vector<BiPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [k, c] : p.terms()) terms.emplace_back(Monomial{k.b, k.a}, c);
  return BiPoly::from_terms(std::move(terms));
}

BiPoly partial(const BiPoly& p, Direction dir) {
  std::vector<BiPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [k, c] : p.terms()) {
    if (dir == Direction::Plus && k.a > 0) terms.emplace_back(Monomial{k.a - 1, k.b}, c * k.a);
    if (dir == Direction::Minus && k.b > 0) terms.emplace_back(Monomial{k.a, k.b - 1}, c * k.b);
  }
  return BiPoly::from_terms(std::move(terms));
}

std::optional<BiPoly> divide_exact(const BiPoly& p, const BiPoly& d) {
  if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (p.is_zero()) return BiPoly{};
  TermMap rem;
  for (const auto& [k, c] : p.terms()) rem.emplace(k, c);
  const auto& [lead_k, lead_c] = d.leading();
  std::vector<BiPoly::Term> quot;
  Rational factor;
  Rational prod;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Monomial k = top->first;
    if (k.a < lead_k.a || k.b < lead_k.b) return std::nullopt;
    factor = top->second / lead_c;
    const Monomial shift{k.a - lead_k.a, k.b - lead_k.b};
    for (const auto& [dk, dc] : d.terms()) {
      const Monomial key{dk.a + shift.a, dk.b + shift.b};
      mpq_mul(prod.get_mpq_t(), factor.get_mpq_t(), dc.get_mpq_t());
      auto [it, inserted] = rem.try_emplace(key, -prod);
      if (!inserted) {
        it->second -= prod;
        if (sgn(it->second) == 0) rem.erase(it);
      }
    }
    quot.emplace_back(shift, factor);
  }
  return BiPoly::from_terms(std::move(quot));
}

bool divisible_by_sigma(const BiPoly& p) {
  // Substituting x_- = -1/x_+ collapses x_+^a x_-^b onto x_+^(a-b) with sign (-1)^b.
  std::map<long, Rational> collapsed;
  for (const auto& [k, c] : p.terms()) {
    auto& slot = collapsed[static_cast<long>(k.a) - static_cast<long>(k.b)];
    if (k.b % 2 == 0)
      slot += c;
    else
      slot -= c;
  }
  return std::all_of(collapsed.begin(), collapsed.end(), [](const auto& kv) { return sgn(kv.second) == 0; });
}

std::optional<SigmaPower> match_sigma_power(const BiPoly& p) {
  if (p.is_zero()) return std::nullopt;
  const auto& [lk, lc] = p.leading();
  if (lk.a != lk.b) return std::nullopt;
  const unsigned r = lk.a;
  if (p.size() != r + 1) return std::nullopt;
  unsigned k = 0;
  for (const auto& [mk, mc] : p.terms()) {
    if (mk.a != k || mk.b != k) return std::nullopt;
    if (mc != lc * binomial(r, k)) return std::nullopt;
    ++k;
  }
  return SigmaPower{lc, r};
}

LogLaplacian laplace_log(const BiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::LogOfZero, "log of zero");
  const BiPoly dp = partial(p, Direction::Plus);
  const BiPoly dm = partial(p, Direction::Minus);
  const BiPoly dpm = partial(dp, Direction::Minus);
  return {p * dpm - dp * dm, p * p};
}

Rational content(const BiPoly& p) {
  if (p.is_zero()) return 1;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [k, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

}  // namespace gsigma
