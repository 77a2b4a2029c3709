#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "gsigma/gsigma.h"

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  std::string r = s ? s : "";
  gsig_string_free(s);
  return r;
}

struct ConfigGuard {
  gsig_config* cfg = nullptr;
  ConfigGuard() { REQUIRE(gsig_config_create(&cfg) == GSIG_OK); }
  ~ConfigGuard() { gsig_config_destroy(cfg); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(gsig_version()) == "0.1.0");
  CHECK(std::string(gsig_status_name(GSIG_OK)) == "ok");
  CHECK(std::string(gsig_status_name(GSIG_NULL_ARGUMENT)) == "null argument");
}

TEST_CASE("config setters validate") {
  ConfigGuard g;
  CHECK(gsig_config_set_max_n(g.cfg, 12) == GSIG_OK);
  CHECK(gsig_config_set_max_n(g.cfg, 1) == GSIG_INVALID_ARGUMENT);
  CHECK(gsig_config_set_max_n(g.cfg, 32) == GSIG_INVALID_ARGUMENT);
  CHECK(std::string(gsig_last_error()).find("max_n") != std::string::npos);
  CHECK(gsig_config_set_tolerance(g.cfg, -1) == GSIG_INVALID_ARGUMENT);
  CHECK(gsig_config_set_points(g.cfg, 0) == GSIG_INVALID_ARGUMENT);
  CHECK(gsig_config_set_seed(g.cfg, 7) == GSIG_OK);
  CHECK(gsig_config_set_phase(g.cfg, GSIG_PHASE_POSITIVE_LEADING) == GSIG_OK);
  CHECK(gsig_config_set_format(g.cfg, static_cast<gsig_format>(9)) == GSIG_INVALID_ARGUMENT);
  CHECK(std::string(gsig_last_error()).empty() == false);
  CHECK(gsig_config_set_seed(nullptr, 1) == GSIG_NULL_ARGUMENT);

  gsig_format f{};
  CHECK(gsig_parse_format("latex", &f) == GSIG_OK);
  CHECK(f == GSIG_FORMAT_LATEX);
  CHECK(gsig_parse_format("yaml", &f) == GSIG_INVALID_ARGUMENT);
  CHECK(gsig_parse_format(nullptr, &f) == GSIG_NULL_ARGUMENT);
}

TEST_CASE("table handle") {
  gsig_table* t = nullptr;
  REQUIRE(gsig_table_create(nullptr, 2, 6, &t) == GSIG_OK);
  CHECK(gsig_table_size(t) == 9);
  bool found = false;
  for (size_t k = 0; k < gsig_table_size(t); ++k) {
    const char* label = nullptr;
    long r = 0;
    int holo = 0;
    REQUIRE(gsig_table_row(t, k, &label, &r, &holo) == GSIG_OK);
    if (std::string(label) == "r_13") found = r == 30 && holo == 0;
  }
  CHECK(found);
  CHECK(gsig_table_row(t, 99, nullptr, nullptr, nullptr) == GSIG_INVALID_ARGUMENT);
  gsig_table_destroy(t);
  gsig_table_destroy(nullptr);
  CHECK(gsig_table_size(nullptr) == 0);

  CHECK(gsig_table_create(nullptr, 3, 2, &t) == GSIG_INVALID_ARGUMENT);
  ConfigGuard g;
  gsig_config_set_max_n(g.cfg, 6);
  CHECK(gsig_table_create(g.cfg, 2, 8, &t) == GSIG_DIMENSION_BOUND);
}

TEST_CASE("verify through the C interface") {
  gsig_verify_result v{};
  REQUIRE(gsig_verify(nullptr, 6, "101000", &v) == GSIG_OK);
  CHECK(v.extract_r == 22);
  CHECK(v.closed_form_r == 22);
  CHECK(v.certificate_r == 22);
  CHECK(v.curvature_num == 2);
  CHECK(v.curvature_den == 11);
  CHECK(v.passed == 1);
  CHECK(v.holomorphic == 0);

  REQUIRE(gsig_verify(nullptr, 4, "0,1", &v) == GSIG_OK);
  CHECK(v.holomorphic == 1);
  CHECK(gsig_verify(nullptr, 6, "1010", &v) == GSIG_INVALID_ARGUMENT);
  CHECK(std::string(gsig_last_error()).find("length") != std::string::npos);
  CHECK(gsig_verify(nullptr, 6, nullptr, &v) == GSIG_NULL_ARGUMENT);
}

TEST_CASE("solution handle") {
  gsig_solution* s = nullptr;
  REQUIRE(gsig_solution_create(nullptr, 6, "0,2", &s) == GSIG_OK);
  int n = 0, m = 0;
  CHECK(gsig_solution_dims(s, &n, &m) == GSIG_OK);
  CHECK(n == 6);
  CHECK(m == 2);

  gsig_checks c{};
  REQUIRE(gsig_solution_check(s, &c) == GSIG_OK);
  CHECK(c.unitary == 1);
  CHECK(c.unitary_fail_j == -1);
  CHECK(c.el_residual < 1e-10);
  CHECK(c.passed == 1);

  char* out = nullptr;
  REQUIRE(gsig_solution_emit(s, GSIG_FORMAT_LATEX, &out) == GSIG_OK);
  CHECK(take(out).find("\\sqrt{10}x_-^2") != std::string::npos);
  REQUIRE(gsig_solution_emit(s, GSIG_FORMAT_JSON, &out) == GSIG_OK);
  CHECK(take(out).find("\"prefactor_halfdexp\": \"5/2\"") != std::string::npos);
  CHECK(gsig_solution_emit(s, GSIG_FORMAT_CSV, &out) == GSIG_INVALID_ARGUMENT);

  double action = 0;
  REQUIRE(gsig_solution_action(s, &action) == GSIG_OK);
  CHECK(std::abs(action - 44 * std::numbers::pi) < 1e-6 * 44 * std::numbers::pi);
  gsig_solution_destroy(s);
  gsig_solution_destroy(nullptr);

  CHECK(gsig_solution_check(nullptr, &c) == GSIG_NULL_ARGUMENT);
  CHECK(gsig_solution_create(nullptr, 40, "0", &s) == GSIG_DIMENSION_BOUND);
}

TEST_CASE("direct sums through the C interface") {
  gsig_sum_result r{};
  REQUIRE(gsig_direct_sum_verify(nullptr, 2, 0, 2, 0, &r) == GSIG_OK);
  CHECK(r.expected_r == 2);
  CHECK(r.certificate_r == 2);
  CHECK(r.additive == 1);
  CHECK(std::abs(r.action - 4 * std::numbers::pi) < 1e-6 * 4 * std::numbers::pi);
  CHECK(r.passed == 1);

  gsig_solution* s = nullptr;
  REQUIRE(gsig_direct_sum_create(nullptr, 3, 1, 3, 1, &s) == GSIG_OK);
  int n = 0;
  gsig_solution_dims(s, &n, nullptr);
  CHECK(n == 6);
  gsig_solution_destroy(s);
  CHECK(gsig_direct_sum_create(nullptr, 1, 0, 2, 0, &s) == GSIG_INVALID_ARGUMENT);
}

TEST_CASE("renderers") {
  ConfigGuard g;
  char* out = nullptr;
  int passed = 0;

  gsig_config_set_format(g.cfg, GSIG_FORMAT_CSV);
  REQUIRE(gsig_render_table(g.cfg, 2, 6, &out) == GSIG_OK);
  CHECK(take(out).find("r_13,30") != std::string::npos);

  gsig_config_set_format(g.cfg, GSIG_FORMAT_TEXT);
  REQUIRE(gsig_render_verify(g.cfg, 6, "101000", &out, &passed) == GSIG_OK);
  CHECK(take(out).find("r=22 K=2/11 PASS") != std::string::npos);
  CHECK(passed == 1);

  REQUIRE(gsig_render_sum(g.cfg, 2, 0, 3, 1, &out, &passed) == GSIG_OK);
  CHECK(take(out).find("r=5 PASS") != std::string::npos);

  REQUIRE(gsig_render_coincidences(g.cfg, 2, 6, &out) == GSIG_OK);
  CHECK(take(out).find("r_03") != std::string::npos);

  CHECK(gsig_render_bounds(g.cfg, 3, 4, &out, &passed) == GSIG_BOUND_INAPPLICABLE);
  REQUIRE(gsig_render_counts(g.cfg, 2, &out, &passed) == GSIG_OK);
  take(out);
  CHECK(passed == 1);

  gsig_config_set_max_n(g.cfg, 4);
  char* timings = nullptr;
  REQUIRE(gsig_render_selftest(g.cfg, &out, &timings, &passed) == GSIG_OK);
  CHECK(take(out).find("selftest: all suites passed") != std::string::npos);
  CHECK_FALSE(take(timings).empty());
  CHECK(passed == 1);

  gsig_config_set_format(g.cfg, GSIG_FORMAT_LATEX);
  CHECK(gsig_render_counts(g.cfg, 2, &out, &passed) == GSIG_INVALID_ARGUMENT);
  CHECK(gsig_render_table(g.cfg, 2, 6, nullptr) == GSIG_NULL_ARGUMENT);
}
