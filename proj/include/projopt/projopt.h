// Copyright 2026 The projopt Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * projopt C API.
 *
 * Euclidean projections onto the probability simplex and onto sets of the
 * form {lower <= x <= upper, A x = b}, projected gradient descent over those
 * sets, and linear programs over them solved by a single projection.
 *
 * Every entry point returns a projopt_status. On failure the message of the
 * most recent error on the calling thread is available from
 * projopt_last_error(). Objects returned through out-parameters are owned by
 * the caller and released with the matching *_destroy function. Pointers
 * returned by accessors stay valid until the owning object is destroyed.
 *
 * Matrices are dense and row-major.
 */

#ifndef PROJOPT_PROJOPT_H_
#define PROJOPT_PROJOPT_H_

#include <stddef.h>

#if defined(PROJOPT_BUILDING_LIBRARY)
#define PROJOPT_API __attribute__((visibility("default")))
#else
#define PROJOPT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum projopt_status {
  PROJOPT_OK = 0,
  PROJOPT_ERR_INVALID_ARGUMENT = 1,
  PROJOPT_ERR_DIMENSION_MISMATCH = 2,
  PROJOPT_ERR_INVALID_BOX = 3,
  PROJOPT_ERR_EMPTY_INPUT = 4,
  PROJOPT_ERR_NON_FINITE = 5,
  PROJOPT_ERR_INFEASIBLE = 6,
  PROJOPT_ERR_DIVERGED = 7,
  PROJOPT_ERR_SINGULAR = 8,
  PROJOPT_ERR_OVERDETERMINED = 9,
  PROJOPT_ERR_INTERNAL = 10
} projopt_status;

/* Short stable identifier such as "invalid-box". */
PROJOPT_API const char* projopt_status_name(projopt_status status);
/* Nonzero for failures of a solve on valid input (infeasible, diverged,
 * singular) as opposed to rejected input. */
PROJOPT_API int projopt_status_is_solver_error(projopt_status status);
/* Message of the last failure on this thread, "" if none. */
PROJOPT_API const char* projopt_last_error(void);
PROJOPT_API const char* projopt_version(void);

/* ---- Feasible sets ---------------------------------------------------- */

typedef struct projopt_set projopt_set;

/* {lower <= x <= upper, A x = b} with x of length n and m equality rows.
 * a_row_major and b may be NULL when m == 0. */
PROJOPT_API projopt_status projopt_set_create(size_t n, const double* lower,
                                              const double* upper, size_t m,
                                              const double* a_row_major,
                                              const double* b,
                                              projopt_set** out);
PROJOPT_API void projopt_set_destroy(projopt_set* set);
PROJOPT_API size_t projopt_set_dimension(const projopt_set* set);
PROJOPT_API size_t projopt_set_equality_rows(const projopt_set* set);

/* ---- Configuration ---------------------------------------------------- */

typedef enum projopt_step_rule {
  PROJOPT_STEP_EXACT_LINE_SEARCH = 0,
  PROJOPT_STEP_BACKTRACKING = 1
} projopt_step_rule;

typedef struct projopt_dual_config {
  double initial_step;
  double feasibility_tol;
  size_t max_iterations;
  double divergence_bound;
  double backtracking_factor;
  int step_rule; /* projopt_step_rule */
  int conjugate_directions;
} projopt_dual_config;

/* Library defaults. Passing NULL where a config is accepted has the same
 * effect. */
PROJOPT_API void projopt_dual_config_init(projopt_dual_config* config);

typedef struct projopt_pgd_config {
  double step_size;
  size_t max_iterations;
  double convergence_tol;
} projopt_pgd_config;

PROJOPT_API void projopt_pgd_config_init(projopt_pgd_config* config);

/* ---- Solvers ---------------------------------------------------------- */

typedef struct projopt_result projopt_result;

/* Projection onto the probability simplex by bisection on the multiplier. */
PROJOPT_API projopt_status projopt_project_simplex(const double* y, size_t n,
                                                   double tol,
                                                   projopt_result** out);
/* Same projection computed by sorting. */
PROJOPT_API projopt_status projopt_project_simplex_sort(const double* y,
                                                        size_t n,
                                                        projopt_result** out);

PROJOPT_API projopt_status projopt_project_box_affine(
    const projopt_set* set, const double* y, size_t n,
    const projopt_dual_config* config, projopt_result** out);

/* min c^T x over the set with certified gap <= delta. refine != 0 tries to
 * recover a vertex from the constraints closest to active. */
PROJOPT_API projopt_status projopt_solve_lp(const projopt_set* set,
                                            const double* c, size_t n,
                                            double delta,
                                            const projopt_dual_config* config,
                                            int refine, projopt_result** out);

typedef enum projopt_objective_kind {
  PROJOPT_OBJECTIVE_QUADRATIC = 0, /* 0.5 ||x - params||^2 */
  PROJOPT_OBJECTIVE_LINEAR = 1     /* params^T x */
} projopt_objective_kind;

/* Projected gradient descent. set == NULL selects the probability simplex;
 * x0 == NULL starts from the origin (projected before the first step). */
PROJOPT_API projopt_status projopt_pgd_builtin(
    projopt_objective_kind kind, const double* params, size_t n,
    const projopt_set* set, const double* x0, const projopt_pgd_config* config,
    const projopt_dual_config* projection_config, projopt_result** out);

/* Callbacks return 0 on success; anything else aborts the solve with
 * PROJOPT_ERR_DIVERGED. */
typedef int (*projopt_value_fn)(const double* x, size_t n, void* user,
                                double* value);
typedef int (*projopt_gradient_fn)(const double* x, size_t n, void* user,
                                   double* gradient);

PROJOPT_API projopt_status projopt_pgd_custom(
    projopt_value_fn value, projopt_gradient_fn gradient, void* user, size_t n,
    const projopt_set* set, const double* x0, const projopt_pgd_config* config,
    const projopt_dual_config* projection_config, projopt_result** out);

/* ---- Results ---------------------------------------------------------- */

/* Accessors accept NULL and out-of-range indices, returning 0, NULL or NaN. */

typedef enum projopt_result_kind {
  PROJOPT_RESULT_SIMPLEX = 0,
  PROJOPT_RESULT_BOX_AFFINE = 1,
  PROJOPT_RESULT_LP = 2,
  PROJOPT_RESULT_PGD = 3
} projopt_result_kind;

typedef enum projopt_constraint_kind {
  PROJOPT_CONSTRAINT_EQUALITY = 0,
  PROJOPT_CONSTRAINT_LOWER = 1,
  PROJOPT_CONSTRAINT_UPPER = 2
} projopt_constraint_kind;

PROJOPT_API void projopt_result_destroy(projopt_result* result);
PROJOPT_API projopt_result_kind projopt_result_get_kind(const projopt_result* r);

PROJOPT_API size_t projopt_result_dimension(const projopt_result* r);
PROJOPT_API const double* projopt_result_x(const projopt_result* r);
/* Simplex results carry a single multiplier; box-affine and LP results one
 * per equality row; PGD results none. */
PROJOPT_API size_t projopt_result_mu_length(const projopt_result* r);
PROJOPT_API const double* projopt_result_mu(const projopt_result* r);
/* Bound multipliers (length = dimension) for box-affine and LP results,
 * NULL otherwise. */
PROJOPT_API const double* projopt_result_lambda_lower(const projopt_result* r);
PROJOPT_API const double* projopt_result_lambda_upper(const projopt_result* r);

PROJOPT_API size_t projopt_result_iterations(const projopt_result* r);
PROJOPT_API int projopt_result_converged(const projopt_result* r);

/* Present for LP and PGD results. */
PROJOPT_API int projopt_result_has_objective(const projopt_result* r);
PROJOPT_API double projopt_result_objective(const projopt_result* r);

/* LP only: certified gap 4 R r / t and the t used. */
PROJOPT_API int projopt_result_has_bound(const projopt_result* r);
PROJOPT_API double projopt_result_bound(const projopt_result* r);
PROJOPT_API double projopt_result_t(const projopt_result* r);
PROJOPT_API int projopt_result_refined(const projopt_result* r);
PROJOPT_API size_t projopt_result_active_count(const projopt_result* r);
PROJOPT_API projopt_constraint_kind projopt_result_active_kind(
    const projopt_result* r, size_t i);
PROJOPT_API size_t projopt_result_active_index(const projopt_result* r,
                                               size_t i);

/* Named infinity-norm residuals, in a fixed order per result kind. */
PROJOPT_API size_t projopt_result_residual_count(const projopt_result* r);
PROJOPT_API const char* projopt_result_residual_name(const projopt_result* r,
                                                     size_t i);
PROJOPT_API double projopt_result_residual_value(const projopt_result* r,
                                                 size_t i);

/* PGD only: objective value at every iterate, and the last step length. */
PROJOPT_API size_t projopt_result_trace_length(const projopt_result* r);
PROJOPT_API const double* projopt_result_trace(const projopt_result* r);
PROJOPT_API double projopt_result_final_step_norm(const projopt_result* r);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* PROJOPT_PROJOPT_H_ */
