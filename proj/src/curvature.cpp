#include "gsigma/curvature.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "gsigma/error.hpp"
#include "gsigma/grammian.hpp"

namespace gsigma {

namespace {

[[noreturn]] void invalid_pattern(const std::string& what) {
  throw Error(ErrorCode::InvalidIndexPattern, "invalid index pattern: " + what);
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::InvalidArgument, "malformed combo: '" + std::string(s) + "'");
  return v;
}

}  // namespace

ProjectorCombo::ProjectorCombo(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n < 2 || n > kMaxComboDimension)
    throw Error(ErrorCode::DimensionBound, "dimension bound: combo dimension " + std::to_string(n));
  if (n < 32 && (bits >> n) != 0) throw Error(ErrorCode::InvalidArgument, "combo selects levels beyond n");
  const int m = std::popcount(bits);
  if (m < 1 || m > n - 1)
    throw Error(ErrorCode::InvalidArgument,
                "combo must select between 1 and n-1 levels, got " + std::to_string(m) + " of " + std::to_string(n));
}

ProjectorCombo ProjectorCombo::from_mask(std::string_view mask) {
  std::uint32_t bits = 0;
  if (mask.size() > static_cast<std::size_t>(kMaxComboDimension))
    throw Error(ErrorCode::DimensionBound, "dimension bound: mask too long");
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] == '1')
      bits |= 1U << i;
    else if (mask[i] != '0')
      throw Error(ErrorCode::InvalidArgument, "malformed mask: '" + std::string(mask) + "'");
  }
  return {static_cast<int>(mask.size()), bits};
}

ProjectorCombo ProjectorCombo::from_indices(int n, std::span<const int> indices) {
  if (n < 2 || n > kMaxComboDimension) throw Error(ErrorCode::DimensionBound, "dimension bound: combo dimension");
  std::uint32_t bits = 0;
  for (int i : indices) {
    if (i < 0 || i >= n) throw Error(ErrorCode::InvalidArgument, "level " + std::to_string(i) + " outside [0, n-1]");
    if ((bits >> i) & 1U) throw Error(ErrorCode::InvalidArgument, "level " + std::to_string(i) + " repeated");
    bits |= 1U << i;
  }
  return {n, bits};
}

ProjectorCombo ProjectorCombo::parse(int n, std::string_view text) {
  const bool binary = !text.empty() && text.find_first_not_of("01") == std::string_view::npos;
  if (binary && text.size() == static_cast<std::size_t>(n)) return from_mask(text);
  // Below n = 11 no single level index has two binary digits.
  if (binary && text.size() > 1 && n <= 10)
    throw Error(ErrorCode::InvalidArgument, "mask " + std::string(text) + " has length " +
                                                std::to_string(text.size()) + ", expected n = " + std::to_string(n));
  std::vector<int> idx;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    idx.push_back(parse_int(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return from_indices(n, idx);
}

int ProjectorCombo::m() const noexcept { return std::popcount(bits_); }

std::vector<int> ProjectorCombo::indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (alpha(i)) out.push_back(i);
  return out;
}

int ProjectorCombo::runs() const {
  int count = 0;
  for (int i = 0; i < n_; ++i)
    if (alpha(i) && !alpha(i - 1)) ++count;
  return count;
}

ProjectorCombo ProjectorCombo::reversed() const {
  std::uint32_t bits = 0;
  for (int i = 0; i < n_; ++i)
    if (alpha(i)) bits |= 1U << (n_ - 1 - i);
  return {n_, bits};
}

ProjectorCombo ProjectorCombo::complemented() const {
  const std::uint32_t all = n_ == 32 ? ~0U : ((1U << n_) - 1U);
  return {n_, all & ~bits_};
}

bool ProjectorCombo::is_holomorphic() const noexcept { return bits_ == (1U << m()) - 1U; }

bool ProjectorCombo::is_antiholomorphic() const noexcept { return reversed().is_holomorphic(); }

std::string ProjectorCombo::mask_string() const {
  std::string s(n_, '0');
  for (int i = 0; i < n_; ++i)
    if (alpha(i)) s[i] = '1';
  return s;
}

std::string ProjectorCombo::label() const {
  const auto idx = indices();
  if (idx.size() == 1 || (idx.size() == 2 && idx[1] == idx[0] + 1)) return "r_" + std::to_string(idx[0]);
  const bool wide = idx.back() >= 10;
  std::string s = "r_";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (wide && k > 0) s += '_';
    s += std::to_string(idx[k]);
  }
  return s;
}

std::strong_ordering ProjectorCombo::operator<=>(const ProjectorCombo& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  const auto a = indices();
  const auto b = o.indices();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

RValue make_rvalue(long r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "curvature integer must be positive");
  Rational k(4, r);
  k.canonicalize();
  return {r, k};
}

namespace {

int jump(const ProjectorCombo& c, int i) { return c.alpha(i - 1) != c.alpha(i) ? 1 : 0; }

}  // namespace

CircleSection density(const ProjectorCombo& combo, int max_n) {
  const int n = combo.n();
  const auto tw = tower(n, max_n);
  CircleSection sum;
  BiPoly product(1);
  for (int i = 1; i < n; ++i) {
    if (jump(combo, i) == 0) continue;
    sum += divide(tw->normsq[i], tw->normsq[i - 1]);
    product *= mdet_table(n, max_n)[i];
  }
  sum = sum * Rational(1, 2);

  // Second route: sum == 1/2 num/den  <=>  2 sum.num den == num sigma^dexp
  const LogLaplacian ll = laplace_log(product);
  if (sum.num() * ll.den * Rational(2) != ll.num * BiPoly::sigma().pow(sum.dexp()))
    throw Error(ErrorCode::Internal, "density routes disagree for combo " + combo.mask_string());
  return sum;
}

RValue extract_r(const ProjectorCombo& combo, int max_n) {
  const int n = combo.n();
  const auto& mdets = mdet_table(n, max_n);
  BiPoly product(1);
  for (int i = 1; i < n; ++i)
    if (jump(combo, i) != 0) product *= mdets[i];
  auto match = match_sigma_power(product);
  if (!match) throw Error(ErrorCode::NotConstantCurvature, "not constant curvature: " + combo.mask_string());
  return make_rvalue(match->exponent);
}

RValue closed_form_r(const ProjectorCombo& combo) {
  const int n = combo.n();
  long r = 0;
  for (int i = 1; i < n; ++i) r += static_cast<long>(i) * (n - i) * jump(combo, i);
  return make_rvalue(r);
}

RValue curvature_certificate(const CircleSection& density) {
  // L = N / s^d:  d+d- ln L = ll.num / N^2 - d / s^2, and K L = -d+d- ln L
  // becomes K N^3 s^2 = -(ll.num s^2 - d N^2) s^d.
  const BiPoly& N = density.num();
  const LogLaplacian ll = laplace_log(N);
  const BiPoly s2 = BiPoly::sigma().pow(2);
  const BiPoly lhs_unit = N * N * N * s2;
  const BiPoly rhs = -(ll.num * s2 - ll.den * Rational(density.dexp())) * BiPoly::sigma().pow(density.dexp());
  if (rhs.is_zero()) throw Error(ErrorCode::NotConstantCurvature, "flat density has no curvature integer");
  const Rational k = rhs.leading().second / lhs_unit.leading().second;
  if (lhs_unit * k != rhs) throw Error(ErrorCode::NotConstantCurvature, "non-constant curvature");
  if (sgn(k) <= 0) throw Error(ErrorCode::NotConstantCurvature, "non-positive curvature " + to_string(k));
  const Rational r = Rational(4) / k;
  if (r.get_den() != 1)
    throw Error(ErrorCode::NotConstantCurvature, "curvature " + to_string(k) + " is not 4/r for integer r");
  return make_rvalue(r.get_num().get_si());
}

long r_cp(int n, int i) {
  if (n < 2 || i < 0 || i > n - 1) invalid_pattern("r_i(1,n) needs 0 <= i <= n-1");
  return (n - 1) + 2L * i * (n - 1 - i);
}

long r_g2_split(int n, int i, int j) {
  if (i < 0 || j <= i + 1 || j > n - 1) invalid_pattern("r_ij(2,n) needs 0 <= i, i+1 < j <= n-1");
  return r_cp(n, i) + r_cp(n, j);
}

long r_g2_consecutive(int n, int i) {
  if (n < 3 || i < 0 || i > n - 2) invalid_pattern("r_i(2,n) needs 0 <= i <= n-2");
  return 2L * (n - 2 + static_cast<long>(i) * (n - 2 - i));
}

long r_g3_isolated(int n, int i, int j, int k) {
  if (i < 0 || j <= i + 1 || k <= j + 1 || k > n - 1) invalid_pattern("r_ijk(3,n) needs j > i+1, k > j+1");
  return 3L * (n - 1) + 2L * i * (n - 1 - i) + 2L * j * (n - 1 - j) + 2L * k * (n - 1 - k);
}

long r_g3_pair_after(int n, int i, int j) {
  if (i < 0 || j <= i + 1 || j + 1 > n - 1) invalid_pattern("levels (i, j, j+1) need j > i+1, j+1 <= n-1");
  return 3L * n - 5 + 2L * i * (n - 1 - i) + 2L * j * (n - 2 - j);
}

long r_g3_pair_before(int n, int i, int k) {
  if (i < 0 || k <= i + 2 || k > n - 1) invalid_pattern("levels (i, i+1, k) need k > i+2, k <= n-1");
  return 3L * n - 5 + 2L * i * (n - 2 - i) + 2L * k * (n - 1 - k);
}

long r_g3_block(int n, int i) {
  if (i < 0 || i + 2 > n - 1) invalid_pattern("levels (i, i+1, i+2) need i+2 <= n-1");
  return 3L * (n - 3) + 2L * i * (n - 3 - i);
}

long r_block(int m, int n, int i) {
  if (m < 1 || m > n - 1 || i < 0 || i + m - 1 > n - 1) invalid_pattern("block of m levels must fit in [0, n-1]");
  return static_cast<long>(m) * (n - m) + 2L * i * (n - m - i);
}

long r_formula(RFamily family, std::span<const int> p) {
  auto need = [&](std::size_t k) {
    if (p.size() != k) invalid_pattern("expected " + std::to_string(k) + " parameters");
  };
  switch (family) {
    case RFamily::CP: need(2); return r_cp(p[0], p[1]);
    case RFamily::G2Split: need(3); return r_g2_split(p[0], p[1], p[2]);
    case RFamily::G2Consecutive: need(2); return r_g2_consecutive(p[0], p[1]);
    case RFamily::G3Isolated: need(4); return r_g3_isolated(p[0], p[1], p[2], p[3]);
    case RFamily::G3PairAfter: need(3); return r_g3_pair_after(p[0], p[1], p[2]);
    case RFamily::G3PairBefore: need(3); return r_g3_pair_before(p[0], p[1], p[2]);
    case RFamily::G3Block: need(2); return r_g3_block(p[0], p[1]);
    case RFamily::Block: need(3); return r_block(p[1], p[0], p[2]);
  }
  invalid_pattern("unknown family");
}

long bound_formula(BoundFamily family, int n, int m) {
  switch (family) {
    case BoundFamily::CP: m = 1; break;
    case BoundFamily::G2: m = 2; break;
    case BoundFamily::G3: m = 3; break;
    case BoundFamily::Gm: break;
  }
  if (m < 1 || n <= m || n < 2 * m - 1)
    throw Error(ErrorCode::BoundInapplicable, "bound formula inapplicable: needs n >= 2m-1 and n > m");
  const long p = n / 2;
  const bool even = n % 2 == 0;
  switch (family) {
    case BoundFamily::CP: return even ? 2 * p * p - 1 : 2 * p * (p + 1);
    case BoundFamily::G2: return even ? 2 * (2 * p * p - 3) : 4 * (p * p + p - 1);
    case BoundFamily::G3: return even ? 6 * p * p - 19 : 6 * p * p + 6 * p - 16;
    case BoundFamily::Gm: {
      const long mm = m;
      return even ? mm * (6 * p * p - 2 * mm * mm - 1) / 3 : 2 * mm * (1 - mm * mm + 3 * p * (1 + p)) / 3;
    }
  }
  return 0;
}

std::vector<int> bound_pattern(int m, int n) {
  if (m < 1 || n <= m || n < 2 * m - 1)
    throw Error(ErrorCode::BoundInapplicable, "bound formula inapplicable: needs n >= 2m-1 and n > m");
  const int p = n / 2;
  const int first = n % 2 == 0 ? p - m : p - m + 1;
  std::vector<int> idx;
  for (int k = 0; k < m; ++k) idx.push_back(first + 2 * k);
  return idx;
}

}  // namespace gsigma
