#ifndef LOCPROG_LOCPROG_H
#define LOCPROG_LOCPROG_H

/* C interface of the locprog library. All handles are opaque and owned by
 * the caller once returned; release them with the matching *_free. Strings
 * returned by the library stay valid until the owning handle is freed. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LOCPROG_BUILDING_LIBRARY)
#    define LP_API __declspec(dllexport)
#  else
#    define LP_API __declspec(dllimport)
#  endif
#else
#  define LP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lp_status {
  LP_OK = 0,
  LP_ERR_INVALID_ARGUMENT = 1,
  LP_ERR_PARSE = 2,
  LP_ERR_VALIDATION = 3,
  LP_ERR_DOMAIN = 4,
  LP_ERR_PRECONDITION = 5,
  LP_ERR_SOLVER_STALL = 6,
  LP_ERR_NON_CONVERGENCE = 7,
  LP_ERR_INFEASIBLE_RESULT = 8,
  LP_ERR_DEGENERATE_MULTIPLIER = 9,
  LP_ERR_SAMPLING_STARVATION = 10,
  LP_ERR_ZERO_PRICE = 11,
  LP_ERR_DEGENERATE_RADIUS = 12,
  LP_ERR_EMPTY_INTERSECTION = 13,
  LP_ERR_DIMENSION_GUARD = 14,
  LP_ERR_IO = 15,
  LP_ERR_INTERNAL = 16
} lp_status;

typedef enum lp_problem_kind {
  LP_KIND_VECTOR_PROBLEM = 0,
  LP_KIND_ECONOMY = 1,
  LP_KIND_MAP = 2
} lp_problem_kind;

typedef struct lp_config {
  uint64_t seed;
  double tol_feasibility;
  double tol_optimality;
  double tol_boundary_rel;
  int convexity_pairs;
  int certificate_samples;
  int budget_samples;
  /* Radii replacing those of the input file when eps_count > 0. */
  const double* eps;
  size_t eps_count;
  int weights_grid;
  int multi_starts;
  int threads;
} lp_config;

typedef struct lp_problem lp_problem;
typedef struct lp_report lp_report;

/* Library defaults: seed 0, tolerances 1e-8 / 1e-6 / 1e-5, 2000 convexity
 * pairs, 10000 certificate and budget samples, 4 starts, 1 thread. */
LP_API void lp_config_init(lp_config* config);

LP_API lp_status lp_problem_load(const char* path, lp_problem** out);
LP_API lp_status lp_problem_parse(const char* text, size_t length, lp_problem** out);
LP_API lp_problem_kind lp_problem_kind_of(const lp_problem* problem);
LP_API void lp_problem_free(lp_problem* problem);

/* Runs a command ("localize", "pareto-sweep", ...) on a parsed problem.
 * The status reports only API misuse; the outcome of the run, including
 * failed checks and numerical errors, is in the report. */
LP_API lp_status lp_run(const char* command, const lp_problem* problem, const lp_config* config,
                        lp_report** out);
/* Reads and runs a file. A report is produced even for unreadable or
 * invalid input, so *out is set whenever the status is LP_OK. */
LP_API lp_status lp_run_file(const char* command, const char* path, const lp_config* config,
                             lp_report** out);

LP_API const char* lp_report_json(const lp_report* report);
/* Tab-separated sweep table, or "" for commands without one. */
LP_API const char* lp_report_table(const lp_report* report);
/* 0 pass, 1 failed check or numerical error, 2 input error. */
LP_API int lp_report_exit_code(const lp_report* report);
/* Writes the JSON at path and the table at path.tsv, atomically. */
LP_API lp_status lp_report_write(const lp_report* report, const char* path);
LP_API void lp_report_free(lp_report* report);

/* Message of the last failing call on this thread, "" if none. */
LP_API const char* lp_last_error(void);
LP_API const char* lp_status_name(lp_status status);

/* delta(eps) of R^dim with the euclidean norm (p = 0) or the p-norm. */
LP_API lp_status lp_modulus_of_convexity(int dim, double p, double eps, double* out);
LP_API lp_status lp_quadratic_growth_constant(int dim, double p, double* out);

LP_API const char* lp_version(void);

#ifdef __cplusplus
}
#endif

#endif
