// gsigma: command-line front end over the C interface.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gsigma/gsigma.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool is_usage_error(gsig_status s) {
  switch (s) {
    case GSIG_INVALID_ARGUMENT:
    case GSIG_DIMENSION_BOUND:
    case GSIG_INVALID_INDEX_PATTERN:
    case GSIG_BOUND_INAPPLICABLE:
    case GSIG_NULL_ARGUMENT:
      return true;
    default:
      return false;
  }
}

int report_status(gsig_status s) {
  const char* msg = gsig_last_error();
  std::fprintf(stderr, "gsigma: %s\n", *msg ? msg : gsig_status_name(s));
  return is_usage_error(s) ? kExitUsage : kExitFail;
}

struct Options {
  std::string format = "text";
  int max_n = 16;
  double tol = 1e-10;
  int points = 20;
  unsigned seed = 0;
  std::string phase = "natural";
};

class Config {
 public:
  Config() {
    if (gsig_config_create(&cfg_) != GSIG_OK) throw std::bad_alloc();
  }
  ~Config() { gsig_config_destroy(cfg_); }
  Config(const Config&) = delete;
  Config& operator=(const Config&) = delete;

  gsig_status apply(const Options& o) {
    gsig_format f{};
    gsig_status s = gsig_parse_format(o.format.c_str(), &f);
    if (s == GSIG_OK) s = gsig_config_set_format(cfg_, f);
    if (s == GSIG_OK) s = gsig_config_set_max_n(cfg_, o.max_n);
    if (s == GSIG_OK) s = gsig_config_set_tolerance(cfg_, o.tol);
    if (s == GSIG_OK) s = gsig_config_set_points(cfg_, o.points);
    if (s == GSIG_OK) s = gsig_config_set_seed(cfg_, o.seed);
    if (s == GSIG_OK)
      s = gsig_config_set_phase(cfg_, o.phase == "positive" ? GSIG_PHASE_POSITIVE_LEADING : GSIG_PHASE_NATURAL);
    return s;
  }
  const gsig_config* get() const { return cfg_; }

 private:
  gsig_config* cfg_ = nullptr;
};

// Runs one renderer, prints its output and maps the outcome to an exit code.
int emit(const std::function<gsig_status(char**, int*)>& call) {
  char* out = nullptr;
  int passed = 1;
  const gsig_status s = call(&out, &passed);
  if (s != GSIG_OK) return report_status(s);
  std::fputs(out, stdout);
  gsig_string_free(out);
  return passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-curvature solutions of Grassmannian sigma models"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}))
      ->envname("GSIGMA_FORMAT");
  app.add_option("--max-n", opt.max_n, "Largest admissible dimension n")
      ->check(CLI::Range(2, 31))
      ->envname("GSIGMA_MAX_N");
  app.add_option("--tol", opt.tol, "Numeric tolerance")->check(CLI::PositiveNumber)->envname("GSIGMA_TOL");
  app.add_option("--points", opt.points, "Number of numeric sample points")
      ->check(CLI::PositiveNumber)
      ->envname("GSIGMA_POINTS");
  app.add_option("--seed", opt.seed, "Offset into the sample point sequence")->envname("GSIGMA_SEED");

  int m = 0, n = 0, k = 0, i = 0, l = 0, j = 0;
  std::string combo;

  auto* table = app.add_subcommand("table", "Curvature integers of G(m,n) up to equivalence");
  table->add_option("m", m)->required();
  table->add_option("n", n)->required();

  auto* verify = app.add_subcommand("verify", "Certify r and K = 4/r for one projector combination");
  verify->add_option("n", n)->required();
  verify->add_option("combo", combo, "alpha mask (101000) or index list (0,2)")->required();

  auto* solution = app.add_subcommand("solution", "Explicit normalized solution Z with its checks");
  solution->add_option("n", n)->required();
  solution->add_option("indices", combo, "index list (0,2) or alpha mask")->required();
  solution->add_option("--phase", opt.phase, "Column phase convention")
      ->check(CLI::IsMember({"natural", "positive"}));

  auto* sum = app.add_subcommand("sum", "Block-diagonal G(2,k+l) solution from two Veronese towers");
  sum->add_option("k", k)->required();
  sum->add_option("i", i)->required();
  sum->add_option("l", l)->required();
  sum->add_option("j", j)->required();
  sum->add_option("--phase", opt.phase, "Column phase convention")->check(CLI::IsMember({"natural", "positive"}));

  auto* coinc = app.add_subcommand("coincidences", "Inequivalent combinations sharing a curvature");
  coinc->add_option("m", m)->required();
  coinc->add_option("n", n)->required();

  auto* bounds = app.add_subcommand("bounds", "Compare the largest r of G(m,n) with its closed-form bound");
  bounds->add_option("m", m)->required();
  bounds->add_option("n", n)->required();

  auto* counts = app.add_subcommand("counts", "Count non-holomorphic orbits of G(m,2m)");
  counts->add_option("m", m)->required();

  auto* selftest = app.add_subcommand("selftest", "Run the exact identity suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Config cfg;
  if (const gsig_status s = cfg.apply(opt); s != GSIG_OK) return report_status(s);
  const gsig_config* c = cfg.get();

  if (table->parsed())
    return emit([&](char** out, int*) { return gsig_render_table(c, m, n, out); });
  if (verify->parsed())
    return emit([&](char** out, int* ok) { return gsig_render_verify(c, n, combo.c_str(), out, ok); });
  if (solution->parsed())
    return emit([&](char** out, int* ok) { return gsig_render_solution(c, n, combo.c_str(), out, ok); });
  if (sum->parsed()) return emit([&](char** out, int* ok) { return gsig_render_sum(c, k, i, l, j, out, ok); });
  if (coinc->parsed())
    return emit([&](char** out, int*) { return gsig_render_coincidences(c, m, n, out); });
  if (bounds->parsed()) return emit([&](char** out, int* ok) { return gsig_render_bounds(c, m, n, out, ok); });
  if (counts->parsed()) return emit([&](char** out, int* ok) { return gsig_render_counts(c, m, out, ok); });
  if (selftest->parsed()) {
    char* timings = nullptr;
    const int code = emit([&](char** out, int* ok) { return gsig_render_selftest(c, out, &timings, ok); });
    if (timings) {
      std::fputs(timings, stderr);
      gsig_string_free(timings);
    }
    return code;
  }
  return kExitUsage;
}
