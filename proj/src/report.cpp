#include "gsigma/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "gsigma/error.hpp"

namespace gsigma {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kActionTolerance = 1e-6;

[[noreturn]] void unsupported(Format f, std::string_view command) {
  throw Error(ErrorCode::InvalidArgument,
              "format " + std::string(format_name(f)) + " is not supported by " + std::string(command));
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fixed(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  return buf;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string model(int m, int n) { return "G(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

std::string plain_entry(const ZEntry& e) {
  if (e.is_zero()) return "0";
  std::string out;
  if (e.coeff == -1) out = "-";
  else if (e.coeff != 1) out = to_string(e.coeff);
  if (e.radicand != 1) out += (out.empty() || out == "-" ? "" : "*") + ("sqrt(" + e.radicand.get_str() + ")");
  const bool bare = out.empty() || out == "-";
  if (e.poly.is_constant()) return bare ? out + "1" : out;
  std::string p = e.poly.to_string();
  if (e.poly.size() > 1) p = "(" + p + ")";
  return out + (bare ? "" : "*") + p;
}

std::string sigma_factor(const Rational& h) {
  if (h == 1) return "(1+|x|^2)";
  return "(1+|x|^2)^(" + to_string(h) + ")";
}

std::string render_matrix_text(const SolutionMatrix& z) {
  std::ostringstream os;
  std::optional<Rational> common;
  bool shared = true;
  for (int r = 0; r < z.n; ++r)
    for (int c = 0; c < z.m; ++c) {
      const auto& e = z.entries(r, c);
      if (e.is_zero()) continue;
      if (!common) common = e.halfdexp;
      else if (*common != e.halfdexp) shared = false;
    }
  if (shared && common) os << "Z = M / " << sigma_factor(*common) << ", M =\n";
  else os << "Z =\n";
  for (int r = 0; r < z.n; ++r) {
    os << "  [";
    for (int c = 0; c < z.m; ++c) {
      const auto& e = z.entries(r, c);
      os << (c ? " | " : " ") << plain_entry(e);
      if (!shared && !e.is_zero()) os << " / " << sigma_factor(e.halfdexp);
    }
    os << " ]\n";
  }
  os << "column phases:";
  for (int p : z.column_phase) os << ' ' << (p > 0 ? "+1" : "-1");
  os << '\n';
  return os.str();
}

std::string unitary_line(const UnitaryReport& u) {
  std::string s = "unitary (exact Z^dagger Z = I): " + std::string(verdict(u.passed()));
  if (auto f = u.first_failure()) s += " at (" + std::to_string(f->first) + "," + std::to_string(f->second) + ")";
  return s;
}

std::string el_line(const SolutionReport& s, const RunConfig& cfg) {
  return "euler-lagrange residual: " + std::string(verdict(s.el_residual < cfg.tolerance)) + " (max " +
         sci(s.el_residual) + " at " + std::to_string(cfg.num_points) + " points, seed " + std::to_string(cfg.seed) +
         ")";
}

std::string density_line(const SolutionReport& s, const RunConfig& cfg) {
  return "density vs exact: " + std::string(verdict(s.density.max_rel_deviation < cfg.tolerance)) + " (max rel " +
         sci(s.density.max_rel_deviation) + ")";
}

SolutionChecks checks_of(const SolutionReport& s, const RunConfig& cfg) {
  return {s.unitary.passed(), s.el_residual, s.density.max_rel_deviation,
          static_cast<std::size_t>(cfg.num_points), cfg.seed, cfg.tolerance};
}

std::string latex_fraction(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string bounds_family(int m) {
  return m == 1 ? "CP" : m == 2 ? "G2" : m == 3 ? "G3" : "Gm";
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "latex") return Format::Latex;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Latex: return "latex";
  }
  return "text";
}

void validate(const RunConfig& cfg) {
  if (cfg.max_n < 2) throw Error(ErrorCode::InvalidArgument, "max_n must be at least 2");
  if (!(cfg.tolerance > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (cfg.num_points < 1) throw Error(ErrorCode::InvalidArgument, "points must be at least 1");
}

VerifyReport verify_combo(int n, std::string_view combo, int max_n) {
  const ProjectorCombo c = ProjectorCombo::parse(n, combo);
  check_dimension(n, max_n);
  return {c, extract_r(c, max_n), closed_form_r(c), curvature_certificate(density(c, max_n))};
}

bool SolutionReport::passed(double tolerance) const {
  return unitary.passed() && el_residual < tolerance && density.max_rel_deviation < tolerance;
}

SolutionReport solve(int n, std::string_view combo, const RunConfig& cfg) {
  validate(cfg);
  const ProjectorCombo c = ProjectorCombo::parse(n, combo);
  SolutionReport s{build_Z(c, cfg.phase, cfg.max_n), {}, 0, {}};
  const auto points = sample_points(static_cast<std::size_t>(cfg.num_points), cfg.seed);
  s.unitary = check_unitary(s.z);
  s.el_residual = el_residual(s.z, points);
  s.density = density_of_Z(s.z, points, cfg.max_n);
  return s;
}

bool SumReport::passed(double tolerance) const {
  return certificate.passed() && solution.passed(tolerance) &&
         std::abs(action - action_expected) <= kActionTolerance * action_expected;
}

SumReport solve_sum(int k, int i, int l, int j, const RunConfig& cfg) {
  validate(cfg);
  SumReport rep;
  rep.certificate = verify_direct_sum(k, i, l, j, cfg.max_n);
  auto& s = rep.solution;
  s.z = direct_sum(k, i, l, j, cfg.phase, cfg.max_n);
  const auto points = sample_points(static_cast<std::size_t>(cfg.num_points), cfg.seed);
  s.unitary = check_unitary(s.z);
  s.el_residual = el_residual(s.z, points);
  s.density = density_of_Z(s.z, points, cfg.max_n);
  rep.action = action_integral(s.z);
  rep.action_expected = 2 * std::numbers::pi * static_cast<double>(rep.certificate.certified.r);
  return rep;
}

Rendered render_table(int m, int n, const RunConfig& cfg) {
  validate(cfg);
  const RTable t = table(m, n, cfg.max_n);
  switch (cfg.format) {
    case Format::Text: return {to_text(t)};
    case Format::Json: return {to_json(t)};
    case Format::Csv: return {to_csv(t)};
    case Format::Latex: {
      std::ostringstream os;
      os << "\\begin{tabular}{|c|c|c|}\n\\hline\n$" << model(m, n) << "$ & $r$ & $\\mathcal{K}$\\\\\n\\hline\n";
      for (const auto& row : t.rows) {
        const std::string sub = row.label.substr(2);
        os << "$r_{" << sub << "}$ & " << row.r << " & $" << latex_fraction(make_rvalue(row.r).curvature) << "$\\\\\n";
      }
      os << "\\hline\n\\end{tabular}\n";
      return {os.str()};
    }
  }
  unsupported(cfg.format, "table");
}

Rendered render_verify(int n, std::string_view combo, const RunConfig& cfg) {
  validate(cfg);
  const VerifyReport v = verify_combo(n, combo, cfg.max_n);
  const bool ok = v.passed();
  const std::string mask = v.combo.mask_string();
  const std::string K = to_string(v.extracted.curvature);
  switch (cfg.format) {
    case Format::Text: {
      std::ostringstream os;
      os << "combo: " << mask << " (" << v.combo.label() << " in " << model(v.combo.m(), n) << ")\n"
         << "holomorphic: " << (v.combo.is_holomorphic() || v.combo.is_antiholomorphic() ? "yes" : "no") << '\n'
         << "extract_r: " << v.extracted.r << '\n'
         << "closed_form_r: " << v.closed_form.r << '\n'
         << "certificate: r=" << v.certified.r << " K=" << to_string(v.certified.curvature) << '\n'
         << "r=" << v.extracted.r << " K=" << K << ' ' << verdict(ok) << '\n';
      return {os.str(), ok};
    }
    case Format::Json: {
      ojson j;
      j["n"] = n;
      j["m"] = v.combo.m();
      j["mask"] = mask;
      j["label"] = v.combo.label();
      j["holomorphic"] = v.combo.is_holomorphic() || v.combo.is_antiholomorphic();
      j["extract_r"] = v.extracted.r;
      j["closed_form_r"] = v.closed_form.r;
      j["certificate_r"] = v.certified.r;
      j["curvature"] = to_fraction_string(v.extracted.curvature);
      j["passed"] = ok;
      return {j.dump(2) + "\n", ok};
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "mask,label,extract_r,closed_form_r,certificate_r,curvature,passed\n"
         << mask << ',' << v.combo.label() << ',' << v.extracted.r << ',' << v.closed_form.r << ',' << v.certified.r
         << ',' << to_fraction_string(v.extracted.curvature) << ',' << (ok ? "true" : "false") << '\n';
      return {os.str(), ok};
    }
    case Format::Latex: break;
  }
  unsupported(cfg.format, "verify");
}

Rendered render_solution(int n, std::string_view combo, const RunConfig& cfg) {
  const SolutionReport s = solve(n, combo, cfg);
  const bool ok = s.passed(cfg.tolerance);
  switch (cfg.format) {
    case Format::Text:
      return {render_matrix_text(s.z) + unitary_line(s.unitary) + "\n" + el_line(s, cfg) + "\n" +
                  density_line(s, cfg) + "\n" + verdict(ok) + "\n",
              ok};
    case Format::Latex:
      return {to_latex(s.z) + "% " + unitary_line(s.unitary) + "\n% " + el_line(s, cfg) + "\n% " +
                  density_line(s, cfg) + "\n% " + verdict(ok) + "\n",
              ok};
    case Format::Json: {
      auto j = ojson::parse(to_json(s.z, checks_of(s, cfg)));
      j["passed"] = ok;
      return {j.dump(2) + "\n", ok};
    }
    case Format::Csv: break;
  }
  unsupported(cfg.format, "solution");
}

Rendered render_sum(int k, int i, int l, int j, const RunConfig& cfg) {
  const SumReport rep = solve_sum(k, i, l, j, cfg);
  const auto& c = rep.certificate;
  const bool ok = rep.passed(cfg.tolerance);
  const bool action_ok = std::abs(rep.action - rep.action_expected) <= kActionTolerance * rep.action_expected;
  const long ri = r_cp(k, i);
  const long rj = r_cp(l, j);
  switch (cfg.format) {
    case Format::Text:
    case Format::Latex: {
      const std::string pre = cfg.format == Format::Latex ? "% " : "";
      std::ostringstream os;
      if (cfg.format == Format::Latex) os << to_latex(rep.solution.z);
      else os << render_matrix_text(rep.solution.z);
      os << pre << "direct sum in " << model(2, k + l) << ": r = r_" << i << "(1," << k << ") + r_" << j << "(1," << l
         << ") = " << ri << " + " << rj << " = " << c.expected_r << '\n'
         << pre << "certificate: r=" << c.certified.r << " K=" << to_string(c.certified.curvature) << ' '
         << verdict(c.certified.r == c.expected_r) << '\n'
         << pre << "density additivity (exact): " << verdict(c.additive) << '\n'
         << pre << unitary_line(rep.solution.unitary) << '\n'
         << pre << el_line(rep.solution, cfg) << '\n'
         << pre << "action 4*int L = " << fixed(rep.action) << " vs 2*pi*r = " << fixed(rep.action_expected) << ' '
         << verdict(action_ok) << '\n'
         << pre << "r=" << c.certified.r << ' ' << verdict(ok) << '\n';
      return {os.str(), ok};
    }
    case Format::Json: {
      ojson o;
      o["k"] = k;
      o["i"] = i;
      o["l"] = l;
      o["j"] = j;
      o["r_first"] = ri;
      o["r_second"] = rj;
      o["expected_r"] = c.expected_r;
      o["certificate_r"] = c.certified.r;
      o["curvature"] = to_fraction_string(c.certified.curvature);
      o["additive"] = c.additive;
      o["action"] = rep.action;
      o["action_expected"] = rep.action_expected;
      o["solution"] = ojson::parse(to_json(rep.solution.z, checks_of(rep.solution, cfg)));
      o["passed"] = ok;
      return {o.dump(2) + "\n", ok};
    }
    case Format::Csv: break;
  }
  unsupported(cfg.format, "sum");
}

Rendered render_coincidences(int m, int n, const RunConfig& cfg) {
  validate(cfg);
  const auto list = coincidences(m, n, cfg.max_n);
  std::ostringstream os;
  switch (cfg.format) {
    case Format::Text:
      os << model(m, n) << ": " << list.size() << " shared curvature values\n";
      for (const auto& c : list) {
        os << "r=" << c.r << ':';
        for (const auto& l : c.labels) os << ' ' << l;
        os << '\n';
      }
      return {os.str()};
    case Format::Csv:
      os << "r,labels\n";
      for (const auto& c : list) {
        os << c.r << ',';
        for (std::size_t k = 0; k < c.labels.size(); ++k) os << (k ? ";" : "") << c.labels[k];
        os << '\n';
      }
      return {os.str()};
    case Format::Json: {
      ojson j;
      j["m"] = m;
      j["n"] = n;
      j["coincidences"] = ojson::array();
      for (const auto& c : list) j["coincidences"].push_back({{"r", c.r}, {"labels", c.labels}});
      return {j.dump(2) + "\n"};
    }
    case Format::Latex: break;
  }
  unsupported(cfg.format, "coincidences");
}

Rendered render_bounds(int m, int n, const RunConfig& cfg) {
  validate(cfg);
  check_dimension(n, cfg.max_n);
  const BoundReport b = verify_bounds(m, n, cfg.max_n);
  if (!b.applicable) throw Error(ErrorCode::BoundInapplicable, b.note);
  std::ostringstream os;
  switch (cfg.format) {
    case Format::Text:
      os << model(m, n) << " (" << bounds_family(m) << " bound)\n"
         << "bound: " << b.bound << '\n'
         << "max r: " << b.max_r << " by";
      for (const auto& l : b.achieved_by) os << ' ' << l;
      os << "\nalternating pattern: " << b.pattern_label << '\n';
      if (!b.note.empty()) os << "note: " << b.note << '\n';
      os << verdict(b.passed) << '\n';
      return {os.str(), b.passed};
    case Format::Csv:
      os << "m,n,bound,max_r,pattern,passed\n"
         << m << ',' << n << ',' << b.bound << ',' << b.max_r << ',' << b.pattern_label << ','
         << (b.passed ? "true" : "false") << '\n';
      return {os.str(), b.passed};
    case Format::Json: {
      ojson j;
      j["m"] = m;
      j["n"] = n;
      j["bound"] = b.bound;
      j["max_r"] = b.max_r;
      j["achieved_by"] = b.achieved_by;
      j["pattern"] = b.pattern_label;
      j["note"] = b.note;
      j["passed"] = b.passed;
      return {j.dump(2) + "\n", b.passed};
    }
    case Format::Latex: break;
  }
  unsupported(cfg.format, "bounds");
}

Rendered render_counts(int m, const RunConfig& cfg) {
  validate(cfg);
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be at least 1");
  check_dimension(2 * m, cfg.max_n);
  const CountReport c = count_check(m, cfg.max_n);
  std::ostringstream os;
  switch (cfg.format) {
    case Format::Text:
      os << model(m, 2 * m) << " non-holomorphic orbits\n"
         << "expected (C(2m,m)/2 - 1): " << c.expected_nonholomorphic << '\n'
         << "found (completion pairing): " << c.nonholomorphic << '\n'
         << "found (completion and conjugation): " << c.full_group_nonholomorphic << '\n'
         << verdict(c.passed) << '\n';
      return {os.str(), c.passed};
    case Format::Csv:
      os << "m,expected,found,found_full_group,passed\n"
         << m << ',' << c.expected_nonholomorphic << ',' << c.nonholomorphic << ',' << c.full_group_nonholomorphic
         << ',' << (c.passed ? "true" : "false") << '\n';
      return {os.str(), c.passed};
    case Format::Json: {
      ojson j;
      j["m"] = m;
      j["expected"] = c.expected_nonholomorphic;
      j["found"] = c.nonholomorphic;
      j["found_full_group"] = c.full_group_nonholomorphic;
      j["passed"] = c.passed;
      return {j.dump(2) + "\n", c.passed};
    }
    case Format::Latex: break;
  }
  unsupported(cfg.format, "counts");
}

Rendered render_selftest(const RunConfig& cfg, std::string* timings) {
  validate(cfg);
  SelftestOptions opt;
  opt.max_n = cfg.max_n;
  const SelftestReport rep = run_selftest(opt);
  if (timings) {
    std::ostringstream os;
    for (const auto& s : rep.suites) os << s.name << ' ' << sci(s.seconds) << " s\n";
    *timings = os.str();
  }
  switch (cfg.format) {
    case Format::Text: return {to_text(rep), rep.passed()};
    case Format::Json: return {to_json(rep), rep.passed()};
    case Format::Csv:
    case Format::Latex: break;
  }
  unsupported(cfg.format, "selftest");
}

}  // namespace gsigma
