#include "gsigma/frames.hpp"

#include <map>
#include <mutex>

#include "gsigma/error.hpp"

namespace gsigma {

void check_dimension(int n, int max_n) {
  if (n < 2 || n > max_n)
    throw Error(ErrorCode::DimensionBound,
                "dimension bound: n = " + std::to_string(n) + " outside [2, " + std::to_string(max_n) + "]");
}

SqrtVector::SqrtVector(std::vector<Integer> weights, std::vector<CircleSection> comps)
    : weights_(std::move(weights)), comps_(std::move(comps)) {
  if (weights_.size() != comps_.size())
    throw Error(ErrorCode::IncompatibleVectors, "incompatible vectors: weight and component counts differ");
  for (const auto& w : weights_)
    if (w <= 0) throw Error(ErrorCode::InvalidArgument, "radicand weights must be positive");
}

bool SqrtVector::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

namespace {

void require_compatible(const SqrtVector& v, const SqrtVector& w) {
  if (v.dim() != w.dim() || v.weights() != w.weights())
    throw Error(ErrorCode::IncompatibleVectors, "incompatible vectors");
}

}  // namespace

SqrtVector operator-(const SqrtVector& v, const SqrtVector& w) {
  require_compatible(v, w);
  std::vector<CircleSection> comps;
  comps.reserve(v.dim());
  for (std::size_t r = 0; r < v.dim(); ++r) comps.push_back(v.comps_[r] - w.comps_[r]);
  return {v.weights_, std::move(comps)};
}

SqrtVector operator*(const CircleSection& s, const SqrtVector& v) {
  std::vector<CircleSection> comps;
  comps.reserve(v.dim());
  for (const auto& c : v.comps_) comps.push_back(s * c);
  return {v.weights_, std::move(comps)};
}

SqrtVector veronese(int n, int max_n) {
  check_dimension(n, max_n);
  std::vector<Integer> weights;
  std::vector<CircleSection> comps;
  for (int r = 0; r < n; ++r) {
    weights.push_back(binomial(n - 1, r));
    comps.emplace_back(BiPoly::monomial(r, 0));
  }
  return {std::move(weights), std::move(comps)};
}

CircleSection inner(const SqrtVector& v, const SqrtVector& w) {
  require_compatible(v, w);
  CircleSection sum;
  for (std::size_t r = 0; r < v.dim(); ++r) {
    if (v.comp(r).is_zero() || w.comp(r).is_zero()) continue;
    sum += conj(v.comp(r)) * w.comp(r) * Rational(v.weights()[r]);
  }
  return sum;
}

SqrtVector partial(const SqrtVector& v, Direction dir) {
  std::vector<CircleSection> comps;
  comps.reserve(v.dim());
  for (const auto& c : v.comps()) comps.push_back(partial(c, dir));
  return {v.weights(), std::move(comps)};
}

SqrtVector pplus(const SqrtVector& v) {
  const CircleSection nsq = norm_squared(v);
  if (nsq.is_zero()) throw Error(ErrorCode::ZeroVector, "cannot project from zero");
  const SqrtVector dv = partial(v, Direction::Plus);
  const CircleSection coeff = divide(inner(v, dv), nsq);
  return dv - coeff * v;
}

TowerCache build_tower(int n, int max_n) {
  check_dimension(n, max_n);
  TowerCache cache;
  cache.n = n;
  cache.levels.push_back(veronese(n, max_n));
  cache.normsq.push_back(norm_squared(cache.levels.back()));
  for (int i = 1; i < n; ++i) {
    cache.levels.push_back(pplus(cache.levels.back()));
    cache.normsq.push_back(norm_squared(cache.levels.back()));
  }
  return cache;
}

std::shared_ptr<const TowerCache> tower(int n, int max_n) {
  check_dimension(n, max_n);
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const TowerCache>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const TowerCache>(build_tower(n, max_n));
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(built)).first->second;
}

SectionPower tower_norm_closed_form(int n, int i) {
  if (n < 1 || i < 0 || i > n - 1) throw Error(ErrorCode::InvalidArgument, "tower level out of range");
  Rational c(factorial(n - 1) * factorial(i));
  c /= Rational(factorial(n - 1 - i));
  return {c, static_cast<long>(n - 1 - 2 * i)};
}

Matrix<CircleSection> gram(int n, int i, int max_n) {
  check_dimension(n, max_n);
  if (i < 0 || i > n) throw Error(ErrorCode::InvalidArgument, "gram order out of range");
  std::vector<SqrtVector> derivs;
  derivs.push_back(veronese(n, max_n));
  for (int a = 1; a < i; ++a) derivs.push_back(partial(derivs.back(), Direction::Plus));
  Matrix<CircleSection> g(i, i);
  for (int a = 0; a < i; ++a)
    for (int b = 0; b < i; ++b) g(a, b) = inner(derivs[a], derivs[b]);
  return g;
}

}  // namespace gsigma
