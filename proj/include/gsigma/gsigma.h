/* C interface to the gsigma library. All functions are thread safe; strings
 * returned through char** are owned by the caller and released with
 * gsig_string_free. */
#ifndef GSIGMA_GSIGMA_H
#define GSIGMA_GSIGMA_H

#include <stddef.h>

#if defined(_WIN32)
#define GSIG_API __declspec(dllexport)
#else
#define GSIG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gsig_status {
  GSIG_OK = 0,
  GSIG_INVALID_ARGUMENT = 1,
  GSIG_DIMENSION_BOUND = 2,
  GSIG_INCOMPATIBLE_VECTORS = 3,
  GSIG_ZERO_VECTOR = 4,
  GSIG_LOG_OF_ZERO = 5,
  GSIG_NOT_CONSTANT_CURVATURE = 6,
  GSIG_INVALID_INDEX_PATTERN = 7,
  GSIG_BOUND_INAPPLICABLE = 8,
  GSIG_NOT_DIVISIBLE = 9,
  GSIG_INTERNAL = 10,
  GSIG_NULL_ARGUMENT = 11
} gsig_status;

typedef enum gsig_format {
  GSIG_FORMAT_TEXT = 0,
  GSIG_FORMAT_JSON = 1,
  GSIG_FORMAT_CSV = 2,
  GSIG_FORMAT_LATEX = 3
} gsig_format;

typedef enum gsig_phase {
  GSIG_PHASE_NATURAL = 0,
  GSIG_PHASE_POSITIVE_LEADING = 1
} gsig_phase;

typedef struct gsig_config gsig_config;
typedef struct gsig_table gsig_table;
typedef struct gsig_solution gsig_solution;

GSIG_API const char* gsig_version(void);
GSIG_API const char* gsig_status_name(gsig_status status);
/* Message of the last failing call on this thread ("" if none). */
GSIG_API const char* gsig_last_error(void);
GSIG_API void gsig_string_free(char* s);

/* Configuration: max_n 16, tolerance 1e-10, 20 points, seed 0, text output. */
GSIG_API gsig_status gsig_config_create(gsig_config** out);
GSIG_API void gsig_config_destroy(gsig_config* cfg);
GSIG_API gsig_status gsig_config_set_max_n(gsig_config* cfg, int max_n);
GSIG_API gsig_status gsig_config_set_tolerance(gsig_config* cfg, double tol);
GSIG_API gsig_status gsig_config_set_points(gsig_config* cfg, int points);
GSIG_API gsig_status gsig_config_set_seed(gsig_config* cfg, unsigned seed);
GSIG_API gsig_status gsig_config_set_format(gsig_config* cfg, gsig_format format);
GSIG_API gsig_status gsig_config_set_phase(gsig_config* cfg, gsig_phase phase);
/* Accepts "text", "json", "csv" or "latex". */
GSIG_API gsig_status gsig_parse_format(const char* name, gsig_format* out);

/* Classification table of G(m,n). */
GSIG_API gsig_status gsig_table_create(const gsig_config* cfg, int m, int n, gsig_table** out);
GSIG_API void gsig_table_destroy(gsig_table* t);
GSIG_API size_t gsig_table_size(const gsig_table* t);
/* label stays valid for the lifetime of t. */
GSIG_API gsig_status gsig_table_row(const gsig_table* t, size_t index, const char** label, long* r, int* holomorphic);

typedef struct gsig_verify_result {
  long extract_r;
  long closed_form_r;
  long certificate_r;
  long curvature_num; /* K = curvature_num / curvature_den = 4 / r */
  long curvature_den;
  int holomorphic;
  int passed;
} gsig_verify_result;

/* combo is an alpha mask of length n or a comma separated index list. */
GSIG_API gsig_status gsig_verify(const gsig_config* cfg, int n, const char* combo, gsig_verify_result* out);

typedef struct gsig_checks {
  int unitary;
  int unitary_fail_j; /* first failing pair, -1 when unitary */
  int unitary_fail_k;
  double el_residual;
  double density_deviation;
  int passed;
} gsig_checks;

GSIG_API gsig_status gsig_solution_create(const gsig_config* cfg, int n, const char* combo, gsig_solution** out);
GSIG_API gsig_status gsig_direct_sum_create(const gsig_config* cfg, int k, int i, int l, int j,
                                            gsig_solution** out);
GSIG_API void gsig_solution_destroy(gsig_solution* s);
GSIG_API gsig_status gsig_solution_dims(const gsig_solution* s, int* n, int* m);
/* Exact unitarity plus numeric Euler-Lagrange and density checks. */
GSIG_API gsig_status gsig_solution_check(const gsig_solution* s, gsig_checks* out);
GSIG_API gsig_status gsig_solution_emit(const gsig_solution* s, gsig_format format, char** out);
/* 4 * integral of the Lagrangian density over the plane. */
GSIG_API gsig_status gsig_solution_action(const gsig_solution* s, double* out);

typedef struct gsig_sum_result {
  long expected_r;
  long certificate_r;
  int additive;
  double action;
  double action_expected;
  int passed;
} gsig_sum_result;

GSIG_API gsig_status gsig_direct_sum_verify(const gsig_config* cfg, int k, int i, int l, int j, gsig_sum_result* out);

/* Command renderers: *out receives the formatted report in the configured
 * format, *passed whether its mathematical checks held. */
GSIG_API gsig_status gsig_render_table(const gsig_config* cfg, int m, int n, char** out);
GSIG_API gsig_status gsig_render_verify(const gsig_config* cfg, int n, const char* combo, char** out, int* passed);
GSIG_API gsig_status gsig_render_solution(const gsig_config* cfg, int n, const char* combo, char** out, int* passed);
GSIG_API gsig_status gsig_render_sum(const gsig_config* cfg, int k, int i, int l, int j, char** out, int* passed);
GSIG_API gsig_status gsig_render_coincidences(const gsig_config* cfg, int m, int n, char** out);
GSIG_API gsig_status gsig_render_bounds(const gsig_config* cfg, int m, int n, char** out, int* passed);
GSIG_API gsig_status gsig_render_counts(const gsig_config* cfg, int m, char** out, int* passed);
/* timings may be NULL; it receives per-suite wall times. */
GSIG_API gsig_status gsig_render_selftest(const gsig_config* cfg, char** out, char** timings, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* GSIGMA_GSIGMA_H */
