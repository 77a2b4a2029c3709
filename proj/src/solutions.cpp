#include "gsigma/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <json.hpp>

#include "gsigma/error.hpp"

namespace gsigma {

namespace {

using cd = std::complex<double>;

// v = s^2 q with q squarefree, v > 0.
std::pair<Integer, Integer> squarefree_split(Integer v) {
  Integer s = 1;
  Integer q = 1;
  for (unsigned long p = 2; v > 1 && Integer(p) * p <= v; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
      ++e;
    }
    for (int k = 0; k + 1 < e; k += 2) s *= p;
    if (e % 2 == 1) q *= p;
  }
  q *= v;
  return {s, q};
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// sqrt(num/den) = s sqrt(q) / den for positive integers.
std::pair<Rational, Integer> sqrt_ratio(const Integer& num, const Integer& den) {
  auto [s, q] = squarefree_split(num * den);
  return {ratio(s, den), q};
}

ZEntry make_entry(Rational coeff, Integer radicand, BiPoly poly, Rational halfdexp) {
  if (poly.is_zero() || sgn(coeff) == 0) return {0, 1, BiPoly(), 0};
  const Rational ct = content(poly);
  poly *= Rational(1 / ct);
  coeff *= ct;
  if (sgn(poly.trailing().second) < 0) {
    poly = -poly;
    coeff = -coeff;
  }
  return {std::move(coeff), std::move(radicand), std::move(poly), std::move(halfdexp)};
}

// Raise every nonzero entry to the largest denominator exponent it shares an
// integer offset with, so the matrix can be printed over one prefactor.
void lift_entries(Matrix<ZEntry>& e) {
  std::map<bool, Rational> top;  // keyed by whether 2h is odd
  for (std::size_t r = 0; r < e.rows(); ++r)
    for (std::size_t c = 0; c < e.cols(); ++c) {
      if (e(r, c).is_zero()) continue;
      const bool odd = !is_integral(e(r, c).halfdexp);
      auto it = top.find(odd);
      if (it == top.end() || it->second < e(r, c).halfdexp) top[odd] = e(r, c).halfdexp;
    }
  for (std::size_t r = 0; r < e.rows(); ++r)
    for (std::size_t c = 0; c < e.cols(); ++c) {
      auto& x = e(r, c);
      if (x.is_zero()) continue;
      const Rational target = top[!is_integral(x.halfdexp)];
      const Rational diff = target - x.halfdexp;
      if (sgn(diff) == 0) continue;
      x.poly = x.poly * BiPoly::sigma().pow(static_cast<unsigned>(diff.get_num().get_ui()));
      x.halfdexp = target;
    }
}

void apply_phase(SolutionMatrix& z, PhaseConvention phase) {
  z.column_phase.assign(z.m, 1);
  if (phase != PhaseConvention::PositiveLeading) return;
  for (int c = 0; c < z.m; ++c) {
    for (int r = 0; r < z.n; ++r) {
      const auto& x = z.entries(r, c);
      if (x.is_zero()) continue;
      if (sgn(x.coeff) < 0) z.column_phase[c] = -1;
      break;
    }
    if (z.column_phase[c] < 0)
      for (int r = 0; r < z.n; ++r) z.entries(r, c).coeff = -z.entries(r, c).coeff;
  }
}

// Column of normalized tower level i of f(n), entries indexed from row 0.
std::vector<ZEntry> tower_column(int n, int i, int max_n) {
  const auto tw = tower(n, max_n);
  const SectionPower cf = tower_norm_closed_form(n, i);
  if (tw->normsq[i] != CircleSection::sigma_power(cf.exponent, cf.coeff))
    throw Error(ErrorCode::Internal, "tower norm differs from its closed form at level " + std::to_string(i));
  const Integer c = cf.coeff.get_num();
  const auto& level = tw->levels[i];
  std::vector<ZEntry> col;
  for (int r = 0; r < n; ++r) {
    const CircleSection& comp = level.comp(r);
    auto [scale, rad] = sqrt_ratio(level.weights()[r], c);
    const Rational h = Rational(comp.dexp()) + ratio(cf.exponent, 2);
    col.push_back(make_entry(scale, rad, comp.num(), h));
  }
  return col;
}

// Double-precision copy of a polynomial for repeated evaluation.
struct DPoly {
  std::vector<std::tuple<unsigned, unsigned, double>> terms;
  explicit DPoly(const BiPoly& p) {
    for (const auto& [mono, c] : p.terms()) terms.emplace_back(mono.a, mono.b, c.get_d());
  }
  cd operator()(cd xp, cd xm) const {
    cd sum = 0;
    for (const auto& [a, b, c] : terms) sum += c * std::pow(xp, static_cast<int>(a)) * std::pow(xm, static_cast<int>(b));
    return sum;
  }
};

// K P sigma^-H and its derivatives, written as K Q sigma^-(H+k).
struct NumericEntry {
  int row = 0;
  int col = 0;
  double k = 0;
  double h = 0;
  DPoly p, qp, qm, qpm;

  NumericEntry(int r, int c, const ZEntry& e)
      : row(r),
        col(c),
        k(e.coeff.get_d() * std::sqrt(e.radicand.get_d())),
        h(e.halfdexp.get_d()),
        p(e.poly),
        qp(first(e.poly, e.halfdexp, Direction::Plus)),
        qm(first(e.poly, e.halfdexp, Direction::Minus)),
        qpm(first(first(e.poly, e.halfdexp, Direction::Minus), e.halfdexp + 1, Direction::Plus)) {}

  // d(P sigma^-H) = (sigma dP - H x_other P) sigma^-(H+1)
  static BiPoly first(const BiPoly& p, const Rational& h, Direction dir) {
    const BiPoly other = dir == Direction::Plus ? BiPoly::x_minus() : BiPoly::x_plus();
    return BiPoly::sigma() * partial(p, dir) - (other * p) * h;
  }
};

struct FieldValues {
  Eigen::MatrixXcd z, zp, zm, zpm;
};

class NumericField {
 public:
  explicit NumericField(const SolutionMatrix& s) : n_(s.n), m_(s.m) {
    for (int r = 0; r < s.n; ++r)
      for (int c = 0; c < s.m; ++c)
        if (!s.entries(r, c).is_zero()) entries_.emplace_back(r, c, s.entries(r, c));
  }

  FieldValues at(cd x) const {
    if (!std::isfinite(std::abs(x)) || std::abs(x) > 1e6)
      throw Error(ErrorCode::InvalidArgument, "sample point outside |x| <= 1e6");
    FieldValues f{Eigen::MatrixXcd::Zero(n_, m_), Eigen::MatrixXcd::Zero(n_, m_), Eigen::MatrixXcd::Zero(n_, m_),
                  Eigen::MatrixXcd::Zero(n_, m_)};
    const cd xm = std::conj(x);
    const double sigma = 1.0 + std::norm(x);
    for (const auto& e : entries_) {
      const double s0 = e.k * std::pow(sigma, -e.h);
      f.z(e.row, e.col) = s0 * e.p(x, xm);
      f.zp(e.row, e.col) = s0 / sigma * e.qp(x, xm);
      f.zm(e.row, e.col) = s0 / sigma * e.qm(x, xm);
      f.zpm(e.row, e.col) = s0 / (sigma * sigma) * e.qpm(x, xm);
    }
    return f;
  }

  double residual(cd x) const {
    const FieldValues f = at(x);
    const Eigen::MatrixXcd zd = f.z.adjoint();
    const Eigen::MatrixXcd dm = f.zm - f.z * (zd * f.zm);
    const Eigen::MatrixXcd dp_dm = f.zpm - (f.zp * zd + f.z * f.zm.adjoint()) * f.zm - f.z * (zd * f.zpm);
    const Eigen::MatrixXcd cov = dp_dm - dm * (zd * f.zp);
    const Eigen::MatrixXcd res = cov + f.z * (dm.adjoint() * dm);
    return res.cwiseAbs().maxCoeff();
  }

  double density(cd x) const {
    const FieldValues f = at(x);
    const Eigen::MatrixXcd zd = f.z.adjoint();
    const Eigen::MatrixXcd dp = f.zp - f.z * (zd * f.zp);
    const Eigen::MatrixXcd dm = f.zm - f.z * (zd * f.zm);
    return 0.5 * (dp.squaredNorm() + dm.squaredNorm());
  }

 private:
  int n_;
  int m_;
  std::vector<NumericEntry> entries_;
};

double halton(std::size_t index, unsigned base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

SqrtVector pad(const SqrtVector& v, const std::vector<Integer>& weights, std::size_t offset) {
  std::vector<CircleSection> comps(weights.size());
  for (std::size_t r = 0; r < v.dim(); ++r) comps[offset + r] = v.comp(r);
  return {weights, std::move(comps)};
}

void check_direct_sum(int k, int i, int l, int j, int max_n) {
  if (k < 2 || l < 2) throw Error(ErrorCode::InvalidArgument, "direct sum blocks need k, l >= 2");
  if (i < 0 || i >= k || j < 0 || j >= l) throw Error(ErrorCode::InvalidArgument, "index out of range");
  check_dimension(k + l, max_n);
}

std::string latex_power(const std::string& base, unsigned e) {
  if (e == 0) return "";
  if (e == 1) return base;
  const std::string digits = std::to_string(e);
  return base + "^" + (digits.size() == 1 ? digits : "{" + digits + "}");
}

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_poly(const BiPoly& p) {
  const bool radial =
      std::all_of(p.terms().begin(), p.terms().end(), [](const BiPoly::Term& t) { return t.first.a == t.first.b; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    const std::string vars = radial ? (mono.a == 0 ? "" : mono.a == 1 ? "|x|^2" : "|x|^{" + std::to_string(2 * mono.a) + "}")
                                    : latex_power("x_+", mono.a) + latex_power("x_-", mono.b);
    const Rational mag = abs(c);
    if (sgn(c) < 0) os << '-';
    else if (!first) os << '+';
    if (mag != 1 || vars.empty()) os << latex_rational(mag);
    os << vars;
    first = false;
  }
  return os.str();
}

std::string latex_entry(const ZEntry& e) {
  if (e.is_zero()) return "0";
  unsigned a0 = e.poly.terms().front().first.a;
  unsigned b0 = e.poly.terms().front().first.b;
  for (const auto& [mono, c] : e.poly.terms()) {
    a0 = std::min(a0, mono.a);
    b0 = std::min(b0, mono.b);
  }
  const unsigned t0 = std::min(a0, b0);
  std::vector<BiPoly::Term> rest;
  for (const auto& [mono, c] : e.poly.terms()) rest.push_back({{mono.a - a0 + t0, mono.b - b0 + t0}, c});
  BiPoly q = BiPoly::from_terms(std::move(rest));
  Rational coeff = e.coeff;
  if (q.size() == 1) {
    coeff *= q.terms().front().second;
    q = BiPoly::monomial(q.terms().front().first.a, q.terms().front().first.b);
  }
  const std::string mono = latex_power("x_+", a0 - t0) + latex_power("x_-", b0 - t0);

  std::string out = sgn(coeff) < 0 ? "-" : "";
  std::string prefix;
  if (abs(coeff) != 1) prefix += latex_rational(abs(coeff));
  if (e.radicand != 1) prefix += "\\sqrt{" + e.radicand.get_str() + "}";
  prefix += mono;
  const bool constant_q = q.is_constant();
  if (q.size() > 1) {
    out += prefix;
    out += prefix.empty() && out.empty() ? latex_poly(q) : "(" + latex_poly(q) + ")";
  } else {
    const std::string body = constant_q ? "" : latex_poly(q);
    out += prefix + body;
    if (prefix.empty() && body.empty()) out += "1";
  }
  return out;
}

std::string latex_sigma(const Rational& h) {
  if (h.get_den() == 1 && h.get_num() == 1) return "(1+|x|^2)";
  return "(1+|x|^2)^{" + to_string(h) + "}";
}

std::string z_name(const SolutionMatrix& z) {
  if (const auto* c = std::get_if<ProjectorCombo>(&z.source)) {
    std::string idx;
    for (int i : c->indices()) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    return "Z_{" + idx + "}^{(" + std::to_string(c->n()) + ")}";
  }
  const auto& d = std::get<DirectSumSpec>(z.source);
  return "Z_{" + std::to_string(d.i) + "}^{(" + std::to_string(d.k) + ")}\\oplus Z_{" + std::to_string(d.j) + "}^{(" +
         std::to_string(d.l) + ")}";
}

}  // namespace

SolutionMatrix build_Z(const ProjectorCombo& combo, PhaseConvention phase, int max_n) {
  check_dimension(combo.n(), max_n);
  SolutionMatrix z;
  z.n = combo.n();
  z.m = combo.m();
  z.entries = Matrix<ZEntry>(z.n, z.m);
  z.source = combo;
  const auto idx = combo.indices();
  for (int c = 0; c < z.m; ++c) {
    auto col = tower_column(z.n, idx[c], max_n);
    for (int r = 0; r < z.n; ++r) z.entries(r, c) = std::move(col[r]);
  }
  lift_entries(z.entries);
  apply_phase(z, phase);
  return z;
}

SolutionMatrix direct_sum(int k, int i, int l, int j, PhaseConvention phase, int max_n) {
  check_direct_sum(k, i, l, j, max_n);
  SolutionMatrix z;
  z.n = k + l;
  z.m = 2;
  z.entries = Matrix<ZEntry>(z.n, 2);
  for (int r = 0; r < z.n; ++r)
    for (int c = 0; c < 2; ++c) z.entries(r, c) = make_entry(0, 1, BiPoly(), 0);
  z.source = DirectSumSpec{k, i, l, j};
  auto first = tower_column(k, i, max_n);
  auto second = tower_column(l, j, max_n);
  for (int r = 0; r < k; ++r) z.entries(r, 0) = std::move(first[r]);
  for (int r = 0; r < l; ++r) z.entries(k + r, 1) = std::move(second[r]);
  lift_entries(z.entries);
  apply_phase(z, phase);
  return z;
}

bool UnitaryReport::passed() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const UnitaryPair& p) { return p.passed; });
}

std::optional<std::pair<int, int>> UnitaryReport::first_failure() const {
  for (const auto& p : pairs)
    if (!p.passed) return std::pair{p.j, p.k};
  return std::nullopt;
}

UnitaryReport check_unitary(const SolutionMatrix& z) {
  UnitaryReport rep;
  for (int j = 0; j < z.m; ++j)
    for (int k = j; k < z.m; ++k) {
      // (squarefree radicand, 2(h_j + h_k) odd) -> exact partial sum
      std::map<std::pair<Integer, bool>, CircleSection> groups;
      for (int r = 0; r < z.n; ++r) {
        const auto& a = z.entries(r, j);
        const auto& b = z.entries(r, k);
        if (a.is_zero() || b.is_zero()) continue;
        auto [s, q] = squarefree_split(a.radicand * b.radicand);
        Rational e = a.halfdexp + b.halfdexp;
        const bool odd = !is_integral(e);
        if (odd) e -= Rational(1, 2);
        const BiPoly prod = conj(a.poly) * b.poly * Rational(a.coeff * b.coeff * s);
        groups[{q, odd}] += CircleSection(prod) * CircleSection::sigma_power(-e.get_num().get_si());
      }
      bool ok = true;
      for (const auto& [key, val] : groups) {
        const bool unit_slot = j == k && key.first == 1 && !key.second;
        if (unit_slot ? val != CircleSection(1) : !val.is_zero()) ok = false;
      }
      if (j == k && !groups.contains({Integer(1), false})) ok = false;
      rep.pairs.push_back({j, k, ok});
    }
  return rep;
}

std::vector<NumericPoint> sample_points(std::size_t count, unsigned seed, double radius) {
  std::vector<NumericPoint> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t index = static_cast<std::size_t>(seed) + k + 1;
    const double rho = radius * std::sqrt(halton(index, 2));
    const double theta = 2.0 * std::numbers::pi * halton(index, 3);
    out.push_back({std::polar(rho, theta)});
  }
  return out;
}

double el_residual(const SolutionMatrix& z, const std::vector<NumericPoint>& points) {
  const NumericField field(z);
  double worst = 0;
  for (const auto& p : points) worst = std::max(worst, field.residual(p.x_plus));
  return worst;
}

double numeric_density(const SolutionMatrix& z, std::complex<double> x_plus) {
  return NumericField(z).density(x_plus);
}

CircleSection exact_density(const SolutionMatrix& z, int max_n) {
  if (const auto* c = std::get_if<ProjectorCombo>(&z.source)) return density(*c, max_n);
  const auto& d = std::get<DirectSumSpec>(z.source);
  return density(ProjectorCombo(d.k, 1U << d.i), max_n) + density(ProjectorCombo(d.l, 1U << d.j), max_n);
}

DensityReport density_of_Z(const SolutionMatrix& z, const std::vector<NumericPoint>& points, int max_n) {
  const NumericField field(z);
  const CircleSection exact = exact_density(z, max_n);
  DensityReport rep;
  for (const auto& p : points) {
    const double num = field.density(p.x_plus);
    const double ex = exact.evaluate(p.x_plus).real();
    rep.numeric.push_back(num);
    rep.exact.push_back(ex);
    const double dev = std::abs(num - ex);
    rep.max_abs_deviation = std::max(rep.max_abs_deviation, dev);
    if (ex != 0) rep.max_rel_deviation = std::max(rep.max_rel_deviation, dev / std::abs(ex));
  }
  return rep;
}

CircleSection exact_lagrangian(const std::vector<SqrtVector>& columns) {
  std::vector<CircleSection> normsq;
  for (const auto& v : columns) {
    normsq.push_back(norm_squared(v));
    if (normsq.back().is_zero()) throw Error(ErrorCode::ZeroVector, "zero column");
  }
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t d = c + 1; d < columns.size(); ++d)
      if (!inner(columns[c], columns[d]).is_zero())
        throw Error(ErrorCode::IncompatibleVectors, "columns are not orthogonal");

  CircleSection total;
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (Direction dir : {Direction::Plus, Direction::Minus}) {
      const SqrtVector dv = partial(columns[c], dir);
      CircleSection part = norm_squared(dv);
      for (std::size_t d = 0; d < columns.size(); ++d) {
        const CircleSection ip = inner(columns[d], dv);
        if (!ip.is_zero()) part -= divide(conj(ip) * ip, normsq[d]);
      }
      total += divide(part, normsq[c]);
    }
  return total * Rational(1, 2);
}

DirectSumCertificate verify_direct_sum(int k, int i, int l, int j, int max_n) {
  check_direct_sum(k, i, l, j, max_n);
  DirectSumCertificate cert;
  cert.spec = {k, i, l, j};
  cert.expected_r = r_cp(k, i) + r_cp(l, j);

  std::vector<Integer> weights;
  for (int r = 0; r < k; ++r) weights.push_back(binomial(k - 1, r));
  for (int r = 0; r < l; ++r) weights.push_back(binomial(l - 1, r));
  const auto tk = tower(k, max_n);
  const auto tl = tower(l, max_n);
  const CircleSection lag = exact_lagrangian({pad(tk->levels[i], weights, 0), pad(tl->levels[j], weights, k)});

  cert.additive = lag == density(ProjectorCombo(k, 1U << i), max_n) + density(ProjectorCombo(l, 1U << j), max_n);
  cert.certified = curvature_certificate(lag);
  return cert;
}

double action_integral(const SolutionMatrix& z, double tolerance) {
  using boost::math::quadrature::gauss_kronrod;
  const NumericField field(z);
  // s = rho^2 / (1 + rho^2) maps the plane's radial direction onto [0, 1) and
  // dx dy = (1/2) ds dtheta / (1 - s)^2.
  auto radial = [&](double s) {
    const double rho = std::sqrt(s / (1.0 - s));
    auto angular = [&](double theta) { return field.density(std::polar(rho, theta)); };
    const double ring = gauss_kronrod<double, 15>::integrate(angular, 0.0, 2.0 * std::numbers::pi, 10, tolerance);
    return 0.5 * ring / ((1.0 - s) * (1.0 - s));
  };
  return 4.0 * gauss_kronrod<double, 15>::integrate(radial, 0.0, 1.0, 15, tolerance);
}

std::string to_latex(const SolutionMatrix& z) {
  std::optional<Rational> common;
  bool shared = true;
  for (int r = 0; r < z.n; ++r)
    for (int c = 0; c < z.m; ++c) {
      const auto& e = z.entries(r, c);
      if (e.is_zero()) continue;
      if (!common) common = e.halfdexp;
      else if (*common != e.halfdexp) shared = false;
    }

  std::ostringstream os;
  os << z_name(z) << '=';
  if (shared && common && sgn(*common) != 0) os << "\\frac{1}{" << latex_sigma(*common) << '}';
  os << "\\left(\\begin{array}{" << std::string(z.m, 'c') << "}\n";
  for (int r = 0; r < z.n; ++r) {
    for (int c = 0; c < z.m; ++c) {
      const auto& e = z.entries(r, c);
      std::string cell = latex_entry(e);
      if (!shared && !e.is_zero() && sgn(e.halfdexp) != 0)
        cell = "\\frac{" + cell + "}{" + latex_sigma(e.halfdexp) + "}";
      os << (c ? " & " : "") << cell;
    }
    os << (r + 1 < z.n ? "\\\\\n" : "\n");
  }
  os << "\\end{array}\\right)\n";
  return os.str();
}

std::string to_json(const SolutionMatrix& z, const std::optional<SolutionChecks>& checks) {
  nlohmann::ordered_json j;
  j["n"] = z.n;
  j["m"] = z.m;
  if (const auto* c = std::get_if<ProjectorCombo>(&z.source)) {
    j["combo"] = c->mask_string();
    j["label"] = c->label();
  } else {
    const auto& d = std::get<DirectSumSpec>(z.source);
    j["combo"] = nullptr;
    j["direct_sum"] = {{"k", d.k}, {"i", d.i}, {"l", d.l}, {"j", d.j}};
  }
  std::optional<Rational> common;
  for (int r = 0; r < z.n; ++r)
    for (int c = 0; c < z.m; ++c) {
      const auto& e = z.entries(r, c);
      if (e.is_zero()) continue;
      if (!common) common = e.halfdexp;
      else if (*common != e.halfdexp) common = Rational(-1);
    }
  if (common && sgn(*common) >= 0) j["prefactor_halfdexp"] = to_fraction_string(*common);
  else j["prefactor_halfdexp"] = nullptr;
  j["phases"] = z.column_phase;
  auto rows = nlohmann::ordered_json::array();
  for (int r = 0; r < z.n; ++r) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < z.m; ++c) {
      const auto& e = z.entries(r, c);
      auto poly = nlohmann::ordered_json::array();
      for (const auto& [mono, coef] : e.poly.terms())
        poly.push_back({{"a", mono.a}, {"b", mono.b}, {"c", to_fraction_string(coef)}});
      row.push_back({{"coeff", to_fraction_string(e.coeff)},
                     {"radicand", e.radicand.get_si()},
                     {"poly", poly},
                     {"halfdexp", to_fraction_string(e.halfdexp)}});
    }
    rows.push_back(row);
  }
  j["entries"] = rows;
  if (checks) {
    j["checks"] = {{"unitary", checks->unitary},
                   {"el_residual", checks->el_residual},
                   {"density_deviation", checks->density_deviation},
                   {"points", checks->points},
                   {"seed", checks->seed},
                   {"tolerance", checks->tolerance}};
  }
  return j.dump(2) + "\n";
}

}  // namespace gsigma
