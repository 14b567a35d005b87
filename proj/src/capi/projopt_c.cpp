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

#include "projopt/projopt.h"

#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/box_affine_projection.hpp"
#include "core/error.hpp"
#include "core/linalg.hpp"
#include "core/lp_flow_solver.hpp"
#include "core/pgd.hpp"
#include "core/simplex_projection.hpp"

struct projopt_set {
  projopt::BoxAffineSet set;
};

struct projopt_result {
  projopt_result_kind kind = PROJOPT_RESULT_SIMPLEX;
  std::vector<double> x;
  std::vector<double> mu;
  std::vector<double> lambda_lower;
  std::vector<double> lambda_upper;
  std::size_t iterations = 0;
  bool converged = false;
  std::optional<double> objective;
  std::optional<double> bound;
  double t = 0.0;
  bool refined = false;
  std::vector<std::pair<projopt_constraint_kind, std::size_t>> active;
  std::vector<std::pair<std::string, double>> residuals;
  std::vector<double> trace;
  double final_step_norm = 0.0;
};

namespace {

using projopt::ErrorCode;

thread_local std::string last_error;

projopt_status ToStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return PROJOPT_ERR_INVALID_ARGUMENT;
    case ErrorCode::kDimensionMismatch: return PROJOPT_ERR_DIMENSION_MISMATCH;
    case ErrorCode::kInvalidBox: return PROJOPT_ERR_INVALID_BOX;
    case ErrorCode::kEmptyInput: return PROJOPT_ERR_EMPTY_INPUT;
    case ErrorCode::kNonFinite: return PROJOPT_ERR_NON_FINITE;
    case ErrorCode::kInfeasible: return PROJOPT_ERR_INFEASIBLE;
    case ErrorCode::kDiverged: return PROJOPT_ERR_DIVERGED;
    case ErrorCode::kSingular: return PROJOPT_ERR_SINGULAR;
    case ErrorCode::kOverdetermined: return PROJOPT_ERR_OVERDETERMINED;
  }
  return PROJOPT_ERR_INTERNAL;
}

// Runs body, translating exceptions into a status and the thread-local
// message.
template <typename Body>
projopt_status Guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return PROJOPT_OK;
  } catch (const projopt::Error& e) {
    last_error = e.what();
    return ToStatus(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PROJOPT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PROJOPT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return PROJOPT_ERR_INTERNAL;
  }
}

void RequireOut(const void* out) {
  if (out == nullptr) {
    throw projopt::Error(ErrorCode::kInvalidArgument, "output pointer is NULL");
  }
}

std::span<const double> Span(const double* data, std::size_t n,
                             const char* what) {
  if (n > 0 && data == nullptr) {
    throw projopt::Error(ErrorCode::kInvalidArgument,
                         std::string(what) + " is NULL");
  }
  return {data, n};
}

const projopt::BoxAffineSet& RequireSet(const projopt_set* set) {
  if (set == nullptr) {
    throw projopt::Error(ErrorCode::kInvalidArgument, "set is NULL");
  }
  return set->set;
}

// Accessors read an empty result in place of NULL.
const projopt_result& Or(const projopt_result* r) {
  static const projopt_result empty;
  return r == nullptr ? empty : *r;
}

projopt::DualAscentConfig ToConfig(const projopt_dual_config* c) {
  projopt::DualAscentConfig config;
  if (c == nullptr) return config;
  config.initial_step = c->initial_step;
  config.feasibility_tol = c->feasibility_tol;
  config.max_iterations = c->max_iterations;
  config.divergence_bound = c->divergence_bound;
  config.backtracking_factor = c->backtracking_factor;
  switch (c->step_rule) {
    case PROJOPT_STEP_EXACT_LINE_SEARCH:
      config.step_rule = projopt::DualStepRule::kExactLineSearch;
      break;
    case PROJOPT_STEP_BACKTRACKING:
      config.step_rule = projopt::DualStepRule::kBacktracking;
      break;
    default:
      throw projopt::Error(ErrorCode::kInvalidArgument, "unknown step rule");
  }
  config.conjugate_directions = c->conjugate_directions != 0;
  return config;
}

projopt::PgdConfig ToConfig(const projopt_pgd_config* c) {
  projopt::PgdConfig config;
  if (c == nullptr) return config;
  config.step_size = c->step_size;
  config.max_iterations = c->max_iterations;
  config.convergence_tol = c->convergence_tol;
  return config;
}

projopt_constraint_kind ToKind(projopt::ConstraintKind kind) {
  switch (kind) {
    case projopt::ConstraintKind::kEquality: return PROJOPT_CONSTRAINT_EQUALITY;
    case projopt::ConstraintKind::kLower: return PROJOPT_CONSTRAINT_LOWER;
    case projopt::ConstraintKind::kUpper: return PROJOPT_CONSTRAINT_UPPER;
  }
  return PROJOPT_CONSTRAINT_EQUALITY;
}

std::unique_ptr<projopt_result> FromSimplex(
    const projopt::SimplexProjectionResult& s, const projopt::Vector& y) {
  auto r = std::make_unique<projopt_result>();
  r->kind = PROJOPT_RESULT_SIMPLEX;
  r->x = s.x.values();
  r->mu = {s.mu};
  r->iterations = s.iterations;
  r->converged = true;
  const auto f = projopt::SimplexFeasibilityResiduals(s.x);
  double slackness = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double lambda = std::max(s.mu - y[i] + s.x[i], 0.0);
    slackness = std::max(slackness, std::abs(lambda * s.x[i]));
  }
  r->residuals = {{"sum", f.sum_violation},
                  {"nonnegativity", f.negativity},
                  {"complementarity", slackness}};
  return r;
}

void FillProjection(projopt_result& r,
                    const projopt::BoxAffineProjectionResult& p) {
  r.x = p.x.values();
  r.mu = p.mu.values();
  r.lambda_lower = p.lambda1.values();
  r.lambda_upper = p.lambda2.values();
  r.iterations = p.iterations;
  r.converged = p.converged;
}

projopt::Projector MakeProjector(const projopt_set* set,
                                 const projopt::DualAscentConfig& config) {
  if (set == nullptr) {
    return [](const projopt::Vector& y) {
      return projopt::ProjectSimplexBisection(y).x;
    };
  }
  const projopt::BoxAffineSet* s = &set->set;
  return [s, config](const projopt::Vector& y) {
    return projopt::ProjectBoxAffine(y, *s, config).x;
  };
}

projopt_status RunPgd(const projopt::SmoothObjective& objective,
                      const projopt_set* set, const double* x0,
                      const projopt_pgd_config* config,
                      const projopt_dual_config* projection_config,
                      projopt_result** out) {
  return Guard([&] {
    RequireOut(out);
    *out = nullptr;
    const std::size_t n = objective.dimension;
    if (set != nullptr && set->set.dimension() != n) {
      throw projopt::Error(ErrorCode::kDimensionMismatch,
                           "pgd: set dimension " +
                               std::to_string(set->set.dimension()) +
                               " does not match objective dimension " +
                               std::to_string(n));
    }
    if (set == nullptr && n == 0) {
      throw projopt::Error(ErrorCode::kEmptyInput, "pgd: empty problem");
    }
    const projopt::Vector start =
        x0 == nullptr ? projopt::Vector(n) : projopt::Vector(Span(x0, n, "x0"));
    const auto report =
        projopt::PgdSolve(objective, MakeProjector(set, ToConfig(projection_config)),
                          start, ToConfig(config));

    auto r = std::make_unique<projopt_result>();
    r->kind = PROJOPT_RESULT_PGD;
    r->x = report.x.values();
    r->iterations = report.iterations;
    r->converged = report.converged;
    r->trace = report.objective_trace;
    r->objective = report.objective_trace.back();
    r->final_step_norm = report.final_step_norm;
    if (set == nullptr) {
      const auto f = projopt::SimplexFeasibilityResiduals(report.x);
      r->residuals = {{"sum", f.sum_violation}, {"nonnegativity", f.negativity}};
    } else {
      r->residuals = {{"box", projopt::BoxViolation(report.x, set->set)},
                      {"equality", projopt::EqualityResidual(report.x, set->set)}};
    }
    *out = r.release();
  });
}

}  // namespace

extern "C" {

const char* projopt_status_name(projopt_status status) {
  switch (status) {
    case PROJOPT_OK: return "ok";
    case PROJOPT_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case PROJOPT_ERR_DIMENSION_MISMATCH: return "dimension-mismatch";
    case PROJOPT_ERR_INVALID_BOX: return "invalid-box";
    case PROJOPT_ERR_EMPTY_INPUT: return "empty-input";
    case PROJOPT_ERR_NON_FINITE: return "non-finite";
    case PROJOPT_ERR_INFEASIBLE: return "infeasible";
    case PROJOPT_ERR_DIVERGED: return "diverged";
    case PROJOPT_ERR_SINGULAR: return "singular";
    case PROJOPT_ERR_OVERDETERMINED: return "overdetermined";
    case PROJOPT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

int projopt_status_is_solver_error(projopt_status status) {
  return status == PROJOPT_ERR_INFEASIBLE || status == PROJOPT_ERR_DIVERGED ||
         status == PROJOPT_ERR_SINGULAR;
}

const char* projopt_last_error(void) { return last_error.c_str(); }

const char* projopt_version(void) { return "0.1.0"; }

projopt_status projopt_set_create(size_t n, const double* lower,
                                  const double* upper, size_t m,
                                  const double* a_row_major, const double* b,
                                  projopt_set** out) {
  return Guard([&] {
    RequireOut(out);
    *out = nullptr;
    const auto a = Span(a_row_major, m * n, "A");
    projopt::DenseMatrix matrix(m, n, std::vector<double>(a.begin(), a.end()));
    *out = new projopt_set{projopt::BoxAffineSet(
        projopt::Vector(Span(lower, n, "lower")),
        projopt::Vector(Span(upper, n, "upper")), std::move(matrix),
        projopt::Vector(Span(b, m, "b")))};
  });
}

void projopt_set_destroy(projopt_set* set) { delete set; }

size_t projopt_set_dimension(const projopt_set* set) {
  return set == nullptr ? 0 : set->set.dimension();
}

size_t projopt_set_equality_rows(const projopt_set* set) {
  return set == nullptr ? 0 : set->set.equality_rows();
}

void projopt_dual_config_init(projopt_dual_config* config) {
  if (config == nullptr) return;
  const projopt::DualAscentConfig d;
  config->initial_step = d.initial_step;
  config->feasibility_tol = d.feasibility_tol;
  config->max_iterations = d.max_iterations;
  config->divergence_bound = d.divergence_bound;
  config->backtracking_factor = d.backtracking_factor;
  config->step_rule = PROJOPT_STEP_EXACT_LINE_SEARCH;
  config->conjugate_directions = d.conjugate_directions ? 1 : 0;
}

void projopt_pgd_config_init(projopt_pgd_config* config) {
  if (config == nullptr) return;
  const projopt::PgdConfig d;
  config->step_size = d.step_size;
  config->max_iterations = d.max_iterations;
  config->convergence_tol = d.convergence_tol;
}

projopt_status projopt_project_simplex(const double* y, size_t n, double tol,
                                       projopt_result** out) {
  return Guard([&] {
    RequireOut(out);
    *out = nullptr;
    const projopt::Vector v(Span(y, n, "y"));
    *out = FromSimplex(projopt::ProjectSimplexBisection(v, tol), v).release();
  });
}

projopt_status projopt_project_simplex_sort(const double* y, size_t n,
                                            projopt_result** out) {
  return Guard([&] {
    RequireOut(out);
    *out = nullptr;
    const projopt::Vector v(Span(y, n, "y"));
    *out = FromSimplex(projopt::ProjectSimplexSort(v), v).release();
  });
}

projopt_status projopt_project_box_affine(const projopt_set* set,
                                          const double* y, size_t n,
                                          const projopt_dual_config* config,
                                          projopt_result** out) {
  return Guard([&] {
    RequireOut(out);
    *out = nullptr;
    const auto& s = RequireSet(set);
    const projopt::Vector v(Span(y, n, "y"));
    const auto p = projopt::ProjectBoxAffine(v, s, ToConfig(config));
    const auto k = projopt::ComputeKktResiduals(p, v, s);
    auto r = std::make_unique<projopt_result>();
    r->kind = PROJOPT_RESULT_BOX_AFFINE;
    FillProjection(*r, p);
    r->residuals = {{"stationarity", k.stationarity},
                    {"box", k.box_violation},
                    {"equality", k.equality},
                    {"dual_negativity", k.dual_negativity},
                    {"complementarity", k.complementarity}};
    *out = r.release();
  });
}

projopt_status projopt_solve_lp(const projopt_set* set, const double* c,
                                size_t n, double delta,
                                const projopt_dual_config* config, int refine,
                                projopt_result** out) {
  return Guard([&] {
    RequireOut(out);
    *out = nullptr;
    const projopt::LpProblem problem(projopt::Vector(Span(c, n, "c")),
                                     RequireSet(set));
    const auto report =
        projopt::SolveLp(problem, delta, ToConfig(config), refine != 0);
    const projopt::Vector target = (-report.t_used) * problem.cost();
    const auto k =
        projopt::ComputeKktResiduals(report.projection, target, problem.set());

    auto r = std::make_unique<projopt_result>();
    r->kind = PROJOPT_RESULT_LP;
    FillProjection(*r, report.projection);
    r->x = report.x.values();
    r->objective = report.objective;
    r->bound = report.bound;
    r->t = report.t_used;
    r->refined = report.refined;
    for (const auto& a : report.active_set) {
      r->active.emplace_back(ToKind(a.kind), a.index);
    }
    r->residuals = {
        {"box", projopt::BoxViolation(report.x, problem.set())},
        {"equality", projopt::EqualityResidual(report.x, problem.set())},
        {"projection_stationarity", k.stationarity},
        {"projection_dual_negativity", k.dual_negativity},
        {"projection_complementarity", k.complementarity}};
    *out = r.release();
  });
}

projopt_status projopt_pgd_builtin(projopt_objective_kind kind,
                                   const double* params, size_t n,
                                   const projopt_set* set, const double* x0,
                                   const projopt_pgd_config* config,
                                   const projopt_dual_config* projection_config,
                                   projopt_result** out) {
  projopt::SmoothObjective objective;
  const projopt_status status = Guard([&] {
    projopt::Vector p(Span(params, n, "params"));
    switch (kind) {
      case PROJOPT_OBJECTIVE_QUADRATIC:
        objective = projopt::QuadraticObjective(std::move(p));
        break;
      case PROJOPT_OBJECTIVE_LINEAR:
        objective = projopt::LinearObjective(std::move(p));
        break;
      default:
        throw projopt::Error(ErrorCode::kInvalidArgument,
                             "unknown objective kind");
    }
  });
  if (status != PROJOPT_OK) {
    if (out != nullptr) *out = nullptr;
    return status;
  }
  return RunPgd(objective, set, x0, config, projection_config, out);
}

projopt_status projopt_pgd_custom(projopt_value_fn value,
                                  projopt_gradient_fn gradient, void* user,
                                  size_t n, const projopt_set* set,
                                  const double* x0,
                                  const projopt_pgd_config* config,
                                  const projopt_dual_config* projection_config,
                                  projopt_result** out) {
  if (value == nullptr || gradient == nullptr) {
    last_error = "pgd: objective callbacks are NULL";
    if (out != nullptr) *out = nullptr;
    return PROJOPT_ERR_INVALID_ARGUMENT;
  }
  projopt::SmoothObjective objective;
  objective.dimension = n;
  objective.value = [value, user](const projopt::Vector& x) {
    double f = 0.0;
    if (value(x.data(), x.size(), user, &f) != 0) {
      throw projopt::Error(ErrorCode::kDiverged,
                           "pgd: objective callback reported failure");
    }
    return f;
  };
  objective.gradient = [gradient, user](const projopt::Vector& x) {
    std::vector<double> g(x.size(), 0.0);
    if (gradient(x.data(), x.size(), user, g.data()) != 0) {
      throw projopt::Error(ErrorCode::kDiverged,
                           "pgd: gradient callback reported failure");
    }
    return g;
  };
  return RunPgd(objective, set, x0, config, projection_config, out);
}

void projopt_result_destroy(projopt_result* result) { delete result; }

projopt_result_kind projopt_result_get_kind(const projopt_result* r) {
  return Or(r).kind;
}

size_t projopt_result_dimension(const projopt_result* r) { return Or(r).x.size(); }
const double* projopt_result_x(const projopt_result* r) {
  return Or(r).x.empty() ? nullptr : Or(r).x.data();
}
size_t projopt_result_mu_length(const projopt_result* r) { return Or(r).mu.size(); }
const double* projopt_result_mu(const projopt_result* r) {
  return Or(r).mu.empty() ? nullptr : Or(r).mu.data();
}
const double* projopt_result_lambda_lower(const projopt_result* r) {
  return Or(r).lambda_lower.empty() ? nullptr : Or(r).lambda_lower.data();
}
const double* projopt_result_lambda_upper(const projopt_result* r) {
  return Or(r).lambda_upper.empty() ? nullptr : Or(r).lambda_upper.data();
}
size_t projopt_result_iterations(const projopt_result* r) { return Or(r).iterations; }
int projopt_result_converged(const projopt_result* r) { return Or(r).converged ? 1 : 0; }
int projopt_result_has_objective(const projopt_result* r) {
  return Or(r).objective.has_value() ? 1 : 0;
}
double projopt_result_objective(const projopt_result* r) {
  return Or(r).objective.value_or(NAN);
}
int projopt_result_has_bound(const projopt_result* r) {
  return Or(r).bound.has_value() ? 1 : 0;
}
double projopt_result_bound(const projopt_result* r) {
  return Or(r).bound.value_or(NAN);
}
double projopt_result_t(const projopt_result* r) { return Or(r).t; }
int projopt_result_refined(const projopt_result* r) { return Or(r).refined ? 1 : 0; }
size_t projopt_result_active_count(const projopt_result* r) {
  return Or(r).active.size();
}
projopt_constraint_kind projopt_result_active_kind(const projopt_result* r,
                                                   size_t i) {
  return i < Or(r).active.size() ? Or(r).active[i].first
                              : PROJOPT_CONSTRAINT_EQUALITY;
}
size_t projopt_result_active_index(const projopt_result* r, size_t i) {
  return i < Or(r).active.size() ? Or(r).active[i].second : 0;
}
size_t projopt_result_residual_count(const projopt_result* r) {
  return Or(r).residuals.size();
}
const char* projopt_result_residual_name(const projopt_result* r, size_t i) {
  return i < Or(r).residuals.size() ? Or(r).residuals[i].first.c_str() : nullptr;
}
double projopt_result_residual_value(const projopt_result* r, size_t i) {
  return i < Or(r).residuals.size() ? Or(r).residuals[i].second : NAN;
}
size_t projopt_result_trace_length(const projopt_result* r) {
  return Or(r).trace.size();
}
const double* projopt_result_trace(const projopt_result* r) {
  return Or(r).trace.empty() ? nullptr : Or(r).trace.data();
}
double projopt_result_final_step_norm(const projopt_result* r) {
  return Or(r).final_step_norm;
}

}  // extern "C"
