#include "gsigma/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "gsigma/classify.hpp"
#include "gsigma/error.hpp"
#include "gsigma/grammian.hpp"

namespace gsigma {

namespace {

struct Golden {
  int m;
  int n;
  std::vector<std::pair<const char*, long>> rows;
};

// Reference r-tables for G(2,4..7), G(3,6), G(3,7).
const std::vector<Golden>& golden_tables() {
  static const std::vector<Golden> g = {
      {2, 4, {{"r_0", 4}, {"r_1", 6}, {"r_02", 10}}},
      {2, 5, {{"r_0", 6}, {"r_1", 10}, {"r_02", 16}, {"r_03", 14}, {"r_04", 8}, {"r_13", 20}}},
      {2,
       6,
       {{"r_0", 8},
        {"r_1", 14},
        {"r_2", 16},
        {"r_02", 22},
        {"r_03", 22},
        {"r_04", 18},
        {"r_05", 10},
        {"r_13", 30},
        {"r_14", 26}}},
      {2,
       7,
       {{"r_0", 10},
        {"r_1", 18},
        {"r_2", 22},
        {"r_02", 28},
        {"r_03", 30},
        {"r_04", 28},
        {"r_05", 22},
        {"r_06", 12},
        {"r_13", 40},
        {"r_14", 38},
        {"r_15", 32},
        {"r_24", 44}}},
      {3,
       6,
       {{"r_012", 9},
        {"r_013", 25},
        {"r_014", 21},
        {"r_015", 13},
        {"r_023", 21},
        {"r_034", 19},
        {"r_045", 13},
        {"r_024", 35},
        {"r_025", 27},
        {"r_035", 27}}},
      {3,
       7,
       {{"r_012", 12}, {"r_123", 18}, {"r_234", 20}, {"r_013", 34}, {"r_014", 32}, {"r_015", 26},
        {"r_016", 16}, {"r_124", 40}, {"r_125", 34}, {"r_023", 28}, {"r_034", 28}, {"r_045", 24},
        {"r_134", 38}, {"r_024", 50}, {"r_025", 44}, {"r_026", 34}, {"r_035", 46}, {"r_036", 36},
        {"r_135", 56}}},
  };
  return g;
}

using Check = std::function<std::string()>;  // empty string on success

SuiteResult run_suite(std::string name, std::string scope, bool skip, const Check& check) {
  SuiteResult s{std::move(name), std::move(scope), false, skip, 0, {}};
  if (skip) {
    s.passed = true;
    return s;
  }
  const auto t0 = std::chrono::steady_clock::now();
  try {
    s.failure = check();
  } catch (const Error& e) {
    s.failure = e.what();
  }
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  s.passed = s.failure.empty();
  return s;
}

std::string scope_n(int lo, int hi) { return std::to_string(lo) + " <= n <= " + std::to_string(hi); }

}  // namespace

bool SelftestReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

std::optional<std::string> SelftestReport::first_failure() const {
  for (const auto& s : suites)
    if (!s.passed) return s.name + ": " + s.failure;
  return std::nullopt;
}

SelftestReport run_selftest(const SelftestOptions& opt) {
  if (opt.max_n < 2) throw Error(ErrorCode::InvalidArgument, "max_n must be at least 2");
  const int cap = std::min(opt.max_n, kMaxComboDimension);
  SelftestReport rep;
  auto add = [&](std::string name, int hi, const std::function<std::string(int)>& body, int lo = 2) {
    const int top = std::min(hi, cap);
    rep.suites.push_back(run_suite(std::move(name), scope_n(lo, top), top < lo, [&] { return body(top); }));
  };

  add("tower norm closed form", 12, [&](int top) -> std::string {
    for (int n = 2; n <= top; ++n) {
      const auto tw = tower(n, opt.max_n);
      for (int i = 0; i < n; ++i) {
        const auto cf = tower_norm_closed_form(n, i);
        if (tw->normsq[i] != CircleSection::sigma_power(cf.exponent, cf.coeff))
          return "|P_+^" + std::to_string(i) + " f|^2 at n = " + std::to_string(n);
      }
    }
    return {};
  });

  add("determinant product identity", 10, [&](int top) -> std::string {
    for (int n = 2; n <= top; ++n) {
      const auto tw = tower(n, opt.max_n);
      CircleSection product(1);
      for (int i = 1; i <= n; ++i) {
        product *= tw->normsq[i - 1];
        BiPoly lhs = m_det(n, i, opt.max_n).value;
        if (opt.corrupt_product_identity && n == 3 && i == 2) lhs += BiPoly(1);
        if (CircleSection(lhs) != product)
          return "determinant product identity fails for M_" + std::to_string(i) + " at n = " + std::to_string(n);
      }
    }
    return {};
  });

  add("log-Laplacian of M_i", 10, [&](int top) -> std::string {
    for (int n = 2; n <= top; ++n)
      for (int i = 1; i < n; ++i) (void)laplace_log_mdet(n, i, opt.max_n);
    return {};
  });

  add("closed-form r (exhaustive)", 10, [&](int top) -> std::string {
    for (int n = 2; n <= top; ++n)
      for (std::uint32_t bits = 1; bits + 1 < (1U << n); ++bits) {
        const ProjectorCombo c(n, bits);
        if (extract_r(c, opt.max_n) != closed_form_r(c)) return "closed-form r differs for " + c.mask_string();
      }
    return {};
  });

  add("curvature certificates", 8, [&](int top) -> std::string {
    for (int n = 2; n <= top; ++n)
      for (std::uint32_t bits = 1; bits + 1 < (1U << n); ++bits) {
        const ProjectorCombo c(n, bits);
        if (curvature_certificate(density(c, opt.max_n)) != extract_r(c, opt.max_n))
          return "curvature certificate differs for " + c.mask_string();
      }
    return {};
  });

  {
    const auto& tables = golden_tables();
    int top = 0;
    for (const auto& g : tables)
      if (g.n <= cap) top = std::max(top, g.n);
    rep.suites.push_back(run_suite("golden tables", "G(2,4..7), G(3,6), G(3,7) with n <= " + std::to_string(cap),
                                   top == 0, [&]() -> std::string {
                                     for (const auto& g : tables) {
                                       if (g.n > cap) continue;
                                       std::map<std::string, long> want(g.rows.begin(), g.rows.end());
                                       std::map<std::string, long> got;
                                       for (const auto& row : table(g.m, g.n, opt.max_n).rows) got[row.label] = row.r;
                                       if (got != want)
                                         return "table G(" + std::to_string(g.m) + "," + std::to_string(g.n) +
                                                ") differs from the reference";
                                     }
                                     return {};
                                   }));
  }

  add("upper bounds", 12, [&](int top) -> std::string {
    for (int m = 1; m <= 3; ++m)
      for (int n = std::max(m + 1, 2 * m - 1); n <= top; ++n) {
        const auto b = verify_bounds(m, n, opt.max_n);
        if (b.applicable && !b.passed)
          return "upper bound for G(" + std::to_string(m) + "," + std::to_string(n) + "): " +
                 std::to_string(b.max_r) + " vs " + std::to_string(b.bound);
      }
    return {};
  });

  add(
      "G(m,2m) orbit counts", 6,
      [&](int top) -> std::string {
        for (int m = 2; 2 * m <= top; ++m) {
          const auto c = count_check(m, opt.max_n);
          if (!c.passed)
            return "G(" + std::to_string(m) + "," + std::to_string(2 * m) + ") has " +
                   std::to_string(c.nonholomorphic) + " orbits, expected " + std::to_string(c.expected_nonholomorphic);
        }
        return {};
      },
      4);

  add("gap and embedding relations", 13, [&](int top) -> std::string {
    auto cp = [&](int n, int i) { return extract_r(ProjectorCombo(n, 1U << i), opt.max_n).r; };
    auto pair = [&](int n, int i) { return extract_r(ProjectorCombo(n, 3U << i), opt.max_n).r; };
    for (int n = 2; n <= std::min(top, 12); ++n) {
      for (int i = 0; i + 1 < n; ++i)
        if (cp(n, i + 1) - cp(n, i) != 2L * (n - 2 * i - 2))
          return "gap r_" + std::to_string(i + 1) + "(1,n) - r_" + std::to_string(i) + "(1,n) at n = " + std::to_string(n);
      for (int i = 0; i + 2 < n - 1; ++i)
        if (pair(n, i + 1) - pair(n, i) != 2L * (n - 2 * i - 3))
          return "gap r_" + std::to_string(i + 1) + "(2,n) - r_" + std::to_string(i) + "(2,n) at n = " + std::to_string(n);
      if (n > 4 && extract_r(ProjectorCombo(n, 1U | (1U << (n - 1))), opt.max_n).r != 2L * (n - 1))
        return "minimal non-holomorphic r(2,n) at n = " + std::to_string(n);
    }
    // r_0(1,N) = N - 1 for the holomorphic curve of the larger space.
    for (int p = 1; 2 * p + 1 <= top; ++p)
      for (int q = 0; q < p; ++q) {
        if (cp(2 * p, p - q) != 2L * (p * p - q * (q - 1)) - 1)
          return "embedding r_{p-q}(1,2p) at p = " + std::to_string(p) + ", q = " + std::to_string(q);
        if (cp(2 * p + 1, p - q) != 2L * (p * (p + 1) - q * q))
          return "embedding r_{p-q}(1,2p+1) at p = " + std::to_string(p) + ", q = " + std::to_string(q);
      }
    return {};
  });

  return rep;
}

std::string to_text(const SelftestReport& report) {
  std::ostringstream os;
  for (const auto& s : report.suites) {
    os << (s.skipped ? "SKIP" : s.passed ? "PASS" : "FAIL") << "  " << s.name << " (" << s.scope << ")";
    if (!s.passed) os << ": " << s.failure;
    os << '\n';
  }
  os << (report.passed() ? "selftest: all suites passed\n" : "selftest: FAILED\n");
  return os.str();
}

std::string to_json(const SelftestReport& report) {
  nlohmann::ordered_json j;
  j["passed"] = report.passed();
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& s : report.suites)
    j["suites"].push_back(
        {{"name", s.name}, {"scope", s.scope}, {"passed", s.passed}, {"skipped", s.skipped}, {"failure", s.failure}});
  return j.dump(2) + "\n";
}

}  // namespace gsigma
