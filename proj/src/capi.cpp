#include "gsigma/gsigma.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "gsigma/error.hpp"
#include "gsigma/report.hpp"

struct gsig_config {
  gsigma::RunConfig cfg;
};

struct gsig_table {
  gsigma::RTable table;
};

struct gsig_solution {
  gsigma::SolutionMatrix z;
  gsigma::RunConfig cfg;
};

namespace {

thread_local std::string last_error;

gsig_status to_status(gsigma::ErrorCode code) {
  using gsigma::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return GSIG_INVALID_ARGUMENT;
    case ErrorCode::DimensionBound: return GSIG_DIMENSION_BOUND;
    case ErrorCode::IncompatibleVectors: return GSIG_INCOMPATIBLE_VECTORS;
    case ErrorCode::ZeroVector: return GSIG_ZERO_VECTOR;
    case ErrorCode::LogOfZero: return GSIG_LOG_OF_ZERO;
    case ErrorCode::NotConstantCurvature: return GSIG_NOT_CONSTANT_CURVATURE;
    case ErrorCode::InvalidIndexPattern: return GSIG_INVALID_INDEX_PATTERN;
    case ErrorCode::BoundInapplicable: return GSIG_BOUND_INAPPLICABLE;
    case ErrorCode::NotDivisible: return GSIG_NOT_DIVISIBLE;
    case ErrorCode::Internal: return GSIG_INTERNAL;
  }
  return GSIG_INTERNAL;
}

template <typename F>
gsig_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return GSIG_OK;
  } catch (const gsigma::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return GSIG_INTERNAL;
}

gsig_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return GSIG_NULL_ARGUMENT;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gsigma::Format to_format(gsig_format f) {
  switch (f) {
    case GSIG_FORMAT_TEXT: return gsigma::Format::Text;
    case GSIG_FORMAT_JSON: return gsigma::Format::Json;
    case GSIG_FORMAT_CSV: return gsigma::Format::Csv;
    case GSIG_FORMAT_LATEX: return gsigma::Format::Latex;
  }
  throw gsigma::Error(gsigma::ErrorCode::InvalidArgument, "unknown format");
}

const gsigma::RunConfig& config_of(const gsig_config* cfg) {
  static const gsigma::RunConfig defaults;
  return cfg ? cfg->cfg : defaults;
}

gsig_status deliver(const gsigma::Rendered& r, char** out, int* passed) {
  *out = duplicate(r.text);
  if (passed) *passed = r.passed ? 1 : 0;
  return GSIG_OK;
}

}  // namespace

extern "C" {

const char* gsig_version(void) { return "0.1.0"; }

const char* gsig_status_name(gsig_status status) {
  switch (status) {
    case GSIG_OK: return "ok";
    case GSIG_INVALID_ARGUMENT: return "invalid argument";
    case GSIG_DIMENSION_BOUND: return "dimension bound";
    case GSIG_INCOMPATIBLE_VECTORS: return "incompatible vectors";
    case GSIG_ZERO_VECTOR: return "zero vector";
    case GSIG_LOG_OF_ZERO: return "log of zero";
    case GSIG_NOT_CONSTANT_CURVATURE: return "not constant curvature";
    case GSIG_INVALID_INDEX_PATTERN: return "invalid index pattern";
    case GSIG_BOUND_INAPPLICABLE: return "bound formula inapplicable";
    case GSIG_NOT_DIVISIBLE: return "not divisible";
    case GSIG_INTERNAL: return "internal error";
    case GSIG_NULL_ARGUMENT: return "null argument";
  }
  return "unknown status";
}

const char* gsig_last_error(void) { return last_error.c_str(); }

void gsig_string_free(char* s) { std::free(s); }

gsig_status gsig_config_create(gsig_config** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new gsig_config{}; });
}

void gsig_config_destroy(gsig_config* cfg) { delete cfg; }

gsig_status gsig_config_set_max_n(gsig_config* cfg, int max_n) {
  if (!cfg) return null_argument("cfg");
  return guarded([&] {
    if (max_n < 2 || max_n > gsigma::kMaxComboDimension)
      throw gsigma::Error(gsigma::ErrorCode::InvalidArgument,
                          "max_n must lie in [2, " + std::to_string(gsigma::kMaxComboDimension) + "]");
    cfg->cfg.max_n = max_n;
  });
}

gsig_status gsig_config_set_tolerance(gsig_config* cfg, double tol) {
  if (!cfg) return null_argument("cfg");
  return guarded([&] {
    if (!(tol > 0)) throw gsigma::Error(gsigma::ErrorCode::InvalidArgument, "tolerance must be positive");
    cfg->cfg.tolerance = tol;
  });
}

gsig_status gsig_config_set_points(gsig_config* cfg, int points) {
  if (!cfg) return null_argument("cfg");
  return guarded([&] {
    if (points < 1) throw gsigma::Error(gsigma::ErrorCode::InvalidArgument, "points must be at least 1");
    cfg->cfg.num_points = points;
  });
}

gsig_status gsig_config_set_seed(gsig_config* cfg, unsigned seed) {
  if (!cfg) return null_argument("cfg");
  cfg->cfg.seed = seed;
  return GSIG_OK;
}

gsig_status gsig_config_set_format(gsig_config* cfg, gsig_format format) {
  if (!cfg) return null_argument("cfg");
  return guarded([&] { cfg->cfg.format = to_format(format); });
}

gsig_status gsig_config_set_phase(gsig_config* cfg, gsig_phase phase) {
  if (!cfg) return null_argument("cfg");
  return guarded([&] {
    if (phase != GSIG_PHASE_NATURAL && phase != GSIG_PHASE_POSITIVE_LEADING)
      throw gsigma::Error(gsigma::ErrorCode::InvalidArgument, "unknown phase convention");
    cfg->cfg.phase =
        phase == GSIG_PHASE_NATURAL ? gsigma::PhaseConvention::Natural : gsigma::PhaseConvention::PositiveLeading;
  });
}

gsig_status gsig_parse_format(const char* name, gsig_format* out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  return guarded([&] {
    switch (gsigma::parse_format(name)) {
      case gsigma::Format::Text: *out = GSIG_FORMAT_TEXT; break;
      case gsigma::Format::Json: *out = GSIG_FORMAT_JSON; break;
      case gsigma::Format::Csv: *out = GSIG_FORMAT_CSV; break;
      case gsigma::Format::Latex: *out = GSIG_FORMAT_LATEX; break;
    }
  });
}

gsig_status gsig_table_create(const gsig_config* cfg, int m, int n, gsig_table** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new gsig_table{gsigma::table(m, n, config_of(cfg).max_n)}; });
}

void gsig_table_destroy(gsig_table* t) { delete t; }

size_t gsig_table_size(const gsig_table* t) { return t ? t->table.rows.size() : 0; }

gsig_status gsig_table_row(const gsig_table* t, size_t index, const char** label, long* r, int* holomorphic) {
  if (!t) return null_argument("table");
  return guarded([&] {
    if (index >= t->table.rows.size())
      throw gsigma::Error(gsigma::ErrorCode::InvalidArgument, "row index out of range");
    const auto& row = t->table.rows[index];
    if (label) *label = row.label.c_str();
    if (r) *r = row.r;
    if (holomorphic) *holomorphic = row.holomorphic ? 1 : 0;
  });
}

gsig_status gsig_verify(const gsig_config* cfg, int n, const char* combo, gsig_verify_result* out) {
  if (!combo) return null_argument("combo");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto v = gsigma::verify_combo(n, combo, config_of(cfg).max_n);
    out->extract_r = v.extracted.r;
    out->closed_form_r = v.closed_form.r;
    out->certificate_r = v.certified.r;
    out->curvature_num = v.extracted.curvature.get_num().get_si();
    out->curvature_den = v.extracted.curvature.get_den().get_si();
    out->holomorphic = v.combo.is_holomorphic() || v.combo.is_antiholomorphic();
    out->passed = v.passed();
  });
}

gsig_status gsig_solution_create(const gsig_config* cfg, int n, const char* combo, gsig_solution** out) {
  if (!combo) return null_argument("combo");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& c = config_of(cfg);
    *out = new gsig_solution{gsigma::build_Z(gsigma::ProjectorCombo::parse(n, combo), c.phase, c.max_n), c};
  });
}

gsig_status gsig_direct_sum_create(const gsig_config* cfg, int k, int i, int l, int j, gsig_solution** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& c = config_of(cfg);
    *out = new gsig_solution{gsigma::direct_sum(k, i, l, j, c.phase, c.max_n), c};
  });
}

void gsig_solution_destroy(gsig_solution* s) { delete s; }

gsig_status gsig_solution_dims(const gsig_solution* s, int* n, int* m) {
  if (!s) return null_argument("solution");
  if (n) *n = s->z.n;
  if (m) *m = s->z.m;
  return GSIG_OK;
}

gsig_status gsig_solution_check(const gsig_solution* s, gsig_checks* out) {
  if (!s) return null_argument("solution");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto points = gsigma::sample_points(static_cast<std::size_t>(s->cfg.num_points), s->cfg.seed);
    const auto u = gsigma::check_unitary(s->z);
    out->unitary = u.passed();
    const auto fail = u.first_failure();
    out->unitary_fail_j = fail ? fail->first : -1;
    out->unitary_fail_k = fail ? fail->second : -1;
    out->el_residual = gsigma::el_residual(s->z, points);
    out->density_deviation = gsigma::density_of_Z(s->z, points, s->cfg.max_n).max_rel_deviation;
    out->passed = out->unitary && out->el_residual < s->cfg.tolerance && out->density_deviation < s->cfg.tolerance;
  });
}

gsig_status gsig_solution_emit(const gsig_solution* s, gsig_format format, char** out) {
  if (!s) return null_argument("solution");
  if (!out) return null_argument("out");
  return guarded([&] {
    switch (to_format(format)) {
      case gsigma::Format::Latex: *out = duplicate(gsigma::to_latex(s->z)); break;
      case gsigma::Format::Json: *out = duplicate(gsigma::to_json(s->z)); break;
      default: throw gsigma::Error(gsigma::ErrorCode::InvalidArgument, "solutions are emitted as latex or json");
    }
  });
}

gsig_status gsig_solution_action(const gsig_solution* s, double* out) {
  if (!s) return null_argument("solution");
  if (!out) return null_argument("out");
  return guarded([&] { *out = gsigma::action_integral(s->z); });
}

gsig_status gsig_direct_sum_verify(const gsig_config* cfg, int k, int i, int l, int j, gsig_sum_result* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& c = config_of(cfg);
    const auto rep = gsigma::solve_sum(k, i, l, j, c);
    out->expected_r = rep.certificate.expected_r;
    out->certificate_r = rep.certificate.certified.r;
    out->additive = rep.certificate.additive;
    out->action = rep.action;
    out->action_expected = rep.action_expected;
    out->passed = rep.passed(c.tolerance);
  });
}

gsig_status gsig_render_table(const gsig_config* cfg, int m, int n, char** out) {
  if (!out) return null_argument("out");
  return guarded([&] { deliver(gsigma::render_table(m, n, config_of(cfg)), out, nullptr); });
}

gsig_status gsig_render_verify(const gsig_config* cfg, int n, const char* combo, char** out, int* passed) {
  if (!combo) return null_argument("combo");
  if (!out) return null_argument("out");
  return guarded([&] { deliver(gsigma::render_verify(n, combo, config_of(cfg)), out, passed); });
}

gsig_status gsig_render_solution(const gsig_config* cfg, int n, const char* combo, char** out, int* passed) {
  if (!combo) return null_argument("combo");
  if (!out) return null_argument("out");
  return guarded([&] { deliver(gsigma::render_solution(n, combo, config_of(cfg)), out, passed); });
}

gsig_status gsig_render_sum(const gsig_config* cfg, int k, int i, int l, int j, char** out, int* passed) {
  if (!out) return null_argument("out");
  return guarded([&] { deliver(gsigma::render_sum(k, i, l, j, config_of(cfg)), out, passed); });
}

gsig_status gsig_render_coincidences(const gsig_config* cfg, int m, int n, char** out) {
  if (!out) return null_argument("out");
  return guarded([&] { deliver(gsigma::render_coincidences(m, n, config_of(cfg)), out, nullptr); });
}

gsig_status gsig_render_bounds(const gsig_config* cfg, int m, int n, char** out, int* passed) {
  if (!out) return null_argument("out");
  return guarded([&] { deliver(gsigma::render_bounds(m, n, config_of(cfg)), out, passed); });
}

gsig_status gsig_render_counts(const gsig_config* cfg, int m, char** out, int* passed) {
  if (!out) return null_argument("out");
  return guarded([&] { deliver(gsigma::render_counts(m, config_of(cfg)), out, passed); });
}

gsig_status gsig_render_selftest(const gsig_config* cfg, char** out, char** timings, int* passed) {
  if (!out) return null_argument("out");
  return guarded([&] {
    std::string t;
    const auto r = gsigma::render_selftest(config_of(cfg), &t);
    char* text = duplicate(r.text);
    if (timings) {
      try {
        *timings = duplicate(t);
      } catch (...) {
        std::free(text);
        throw;
      }
    }
    *out = text;
    if (passed) *passed = r.passed ? 1 : 0;
  });
}

}  // extern "C"
