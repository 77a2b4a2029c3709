#pragma once

#include <memory>
#include <vector>

#include "gsigma/circle_section.hpp"
#include "gsigma/matrix.hpp"

namespace gsigma {

inline constexpr int kDefaultMaxDimension = 16;

/// Vector field whose component r is sqrt(weights[r]) * comps[r].
///
/// The square roots are never taken: inner products pair them up, so every
/// quantity derived from a SqrtVector stays rational.
class SqrtVector {
 public:
  SqrtVector(std::vector<Integer> weights, std::vector<CircleSection> comps);

  std::size_t dim() const noexcept { return comps_.size(); }
  const std::vector<Integer>& weights() const noexcept { return weights_; }
  const std::vector<CircleSection>& comps() const noexcept { return comps_; }
  const CircleSection& comp(std::size_t r) const { return comps_.at(r); }
  bool is_zero() const;

  friend SqrtVector operator-(const SqrtVector& v, const SqrtVector& w);
  friend SqrtVector operator*(const CircleSection& s, const SqrtVector& v);
  friend bool operator==(const SqrtVector&, const SqrtVector&) = default;

 private:
  std::vector<Integer> weights_;
  std::vector<CircleSection> comps_;
};

/// Veronese curve f(n): component r is sqrt(C(n-1, r)) x_+^r.
SqrtVector veronese(int n, int max_n = kDefaultMaxDimension);

/// sum_r weights[r] conj(v_r) w_r
CircleSection inner(const SqrtVector& v, const SqrtVector& w);
inline CircleSection norm_squared(const SqrtVector& v) { return inner(v, v); }

SqrtVector partial(const SqrtVector& v, Direction dir);

/// P_+ v = d_+ v - (v^dagger d_+ v / |v|^2) v
SqrtVector pplus(const SqrtVector& v);

/// levels[i] = P_+^i f(n) and normsq[i] = |P_+^i f(n)|^2 for 0 <= i < n.
struct TowerCache {
  int n = 0;
  std::vector<SqrtVector> levels;
  std::vector<CircleSection> normsq;
};

TowerCache build_tower(int n, int max_n = kDefaultMaxDimension);

/// Memoized build_tower; safe to call from several threads.
std::shared_ptr<const TowerCache> tower(int n, int max_n = kDefaultMaxDimension);

/// (n-1)! i! / (n-1-i)! sigma^(n-1-2i), the known closed form of |P_+^i f(n)|^2.
SectionPower tower_norm_closed_form(int n, int i);

/// i x i matrix of (d_+^a f)^dagger (d_+^b f), built from plain derivatives.
Matrix<CircleSection> gram(int n, int i, int max_n = kDefaultMaxDimension);

void check_dimension(int n, int max_n);

}  // namespace gsigma
