#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsigma/frames.hpp"

namespace gsigma {

inline constexpr int kMaxComboDimension = 31;

/// Choice of m levels of the Veronese tower in dimension n (bit i = alpha_i).
class ProjectorCombo {
 public:
  ProjectorCombo(int n, std::uint32_t bits);

  /// "101000": character i is alpha_i.
  static ProjectorCombo from_mask(std::string_view mask);
  static ProjectorCombo from_indices(int n, std::span<const int> indices);
  /// Accepts either an alpha mask of length n or a comma separated index list.
  static ProjectorCombo parse(int n, std::string_view text);

  int n() const noexcept { return n_; }
  std::uint32_t bits() const noexcept { return bits_; }
  bool alpha(int i) const noexcept { return i >= 0 && i < n_ && ((bits_ >> i) & 1U) != 0; }
  int m() const noexcept;
  std::vector<int> indices() const;
  /// Number of maximal runs of consecutive selected levels.
  int runs() const;

  /// Level i <-> n-1-i (complex conjugation).
  ProjectorCombo reversed() const;
  /// alpha -> 1 - alpha (duality G(m,n) ~ G(n-m,n)).
  ProjectorCombo complemented() const;
  bool is_holomorphic() const noexcept;
  bool is_antiholomorphic() const noexcept;

  std::string mask_string() const;
  /// r_i for a single level or a consecutive pair, r_ijk... otherwise.
  std::string label() const;

  /// Orders by n, then lexicographically by index list.
  std::strong_ordering operator<=>(const ProjectorCombo& o) const;
  bool operator==(const ProjectorCombo& o) const = default;

 private:
  int n_;
  std::uint32_t bits_;
};

/// Curvature integer r together with the Gaussian curvature K = 4/r.
struct RValue {
  long r = 0;
  Rational curvature;
  friend bool operator==(const RValue&, const RValue&) = default;
};
RValue make_rvalue(long r);

/// Lagrangian density 1/2 sum (alpha_{i-1} - alpha_i)^2 |P^i f|^2 / |P^{i-1} f|^2,
/// cross-checked against 1/2 d_+d_- ln prod M_i^{(alpha_{i-1} - alpha_i)^2}.
CircleSection density(const ProjectorCombo& combo, int max_n = kDefaultMaxDimension);

/// Multiplies out prod M_i^{(alpha_{i-1} - alpha_i)^2} and reads r off c sigma^r.
RValue extract_r(const ProjectorCombo& combo, int max_n = kDefaultMaxDimension);

/// r = sum_i i(n-i)(alpha_{i-1} - alpha_i)^2
RValue closed_form_r(const ProjectorCombo& combo);

/// Constant K with d_+d_- ln L = -K L, reported as 4/r.
RValue curvature_certificate(const CircleSection& density);

enum class RFamily {
  CP,                ///< (n, i): r_i(1,n)
  G2Split,           ///< (n, i, j), j > i+1
  G2Consecutive,     ///< (n, i): levels i, i+1
  G3Isolated,        ///< (n, i, j, k), j > i+1, k > j+1
  G3PairAfter,       ///< (n, i, j): levels i, j, j+1 with j > i+1
  G3PairBefore,      ///< (n, i, k): levels i, i+1, k with k > i+2
  G3Block,           ///< (n, i): levels i, i+1, i+2
  Block,             ///< (n, m, i): levels i .. i+m-1
};

long r_formula(RFamily family, std::span<const int> params);

long r_cp(int n, int i);
long r_g2_split(int n, int i, int j);
long r_g2_consecutive(int n, int i);
long r_g3_isolated(int n, int i, int j, int k);
long r_g3_pair_after(int n, int i, int j);
long r_g3_pair_before(int n, int i, int k);
long r_g3_block(int n, int i);
long r_block(int m, int n, int i);

enum class BoundFamily { CP, G2, G3, Gm };

/// Largest curvature integer of G(m,n), n >= 2m-1, for n = 2p or 2p+1.
long bound_formula(BoundFamily family, int n, int m);
/// The alternating level pattern that attains bound_formula.
std::vector<int> bound_pattern(int m, int n);

}  // namespace gsigma
