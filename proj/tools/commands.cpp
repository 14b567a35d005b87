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

#include "commands.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "problem_file.hpp"
#include "projopt/projopt.h"
#include "report.hpp"

namespace projopt::cli {
namespace {

struct SetDeleter {
  void operator()(projopt_set* s) const { projopt_set_destroy(s); }
};
struct ResultDeleter {
  void operator()(projopt_result* r) const { projopt_result_destroy(r); }
};
using SetPtr = std::unique_ptr<projopt_set, SetDeleter>;
using ResultPtr = std::unique_ptr<projopt_result, ResultDeleter>;

// Library failure carried out of a command.
struct StatusError {
  projopt_status status;
  std::string message;
};

void Check(projopt_status status) {
  if (status != PROJOPT_OK) throw StatusError{status, projopt_last_error()};
}

struct Options {
  std::string input;
  double tol = 0.0;
  double delta = 1e-6;
  double eta = 0.1;
  std::size_t max_iter = 0;
  bool refine = false;
  std::string set = "simplex";
};

SetPtr MakeSet(const ProblemFile& f) {
  const std::vector<double> a = f.FlatA();
  projopt_set* raw = nullptr;
  Check(projopt_set_create(f.u->size(), f.u->data(), f.v->data(), f.EqualityRows(),
                           a.empty() ? nullptr : a.data(),
                           f.b ? f.b->data() : nullptr, &raw));
  return SetPtr(raw);
}

void AddResiduals(const projopt_result* r, Report& report) {
  std::vector<std::pair<std::string, double>> residuals;
  for (std::size_t i = 0; i < projopt_result_residual_count(r); ++i) {
    residuals.emplace_back(projopt_result_residual_name(r, i),
                           projopt_result_residual_value(r, i));
  }
  report.AddNamedNumbers("residuals", residuals);
}

Report Describe(const projopt_result* r, bool with_active_set) {
  Report report;
  const projopt_result_kind kind = projopt_result_get_kind(r);
  report.AddNumbers("x", {projopt_result_x(r), projopt_result_dimension(r)});
  if (projopt_result_has_objective(r)) {
    report.AddNumber("objective", projopt_result_objective(r));
  }
  if (kind == PROJOPT_RESULT_SIMPLEX) {
    report.AddNumber("mu", projopt_result_mu(r)[0]);
  } else if (kind != PROJOPT_RESULT_PGD) {
    report.AddNumbers("mu", {projopt_result_mu(r), projopt_result_mu_length(r)});
  }
  report.AddInteger("iterations", projopt_result_iterations(r));
  report.AddBool("converged", projopt_result_converged(r) != 0);
  AddResiduals(r, report);
  if (projopt_result_has_bound(r)) {
    report.AddNumber("bound", projopt_result_bound(r));
    report.AddNumber("t", projopt_result_t(r));
    report.AddBool("refined", projopt_result_refined(r) != 0);
  }
  if (with_active_set) {
    std::vector<std::pair<std::string, std::size_t>> active;
    for (std::size_t i = 0; i < projopt_result_active_count(r); ++i) {
      const projopt_constraint_kind k = projopt_result_active_kind(r, i);
      active.emplace_back(k == PROJOPT_CONSTRAINT_EQUALITY ? "equality"
                          : k == PROJOPT_CONSTRAINT_LOWER  ? "lower"
                                                           : "upper",
                          projopt_result_active_index(r, i));
    }
    report.AddConstraints("active_set", active);
  }
  if (kind == PROJOPT_RESULT_PGD) {
    report.AddNumber("final_step_norm", projopt_result_final_step_norm(r));
  }
  return report;
}

projopt_dual_config DualConfig(const Options& o, bool tol_is_feasibility) {
  projopt_dual_config config;
  projopt_dual_config_init(&config);
  if (o.max_iter > 0) config.max_iterations = o.max_iter;
  if (tol_is_feasibility && o.tol > 0.0) config.feasibility_tol = o.tol;
  return config;
}

ResultPtr ProjectSimplex(const ProblemFile& f, const Options& o) {
  RequireFields(f, {"y"}, "project-simplex");
  projopt_result* raw = nullptr;
  Check(projopt_project_simplex(f.y->data(), f.y->size(), o.tol > 0.0 ? o.tol : 1e-10,
                                &raw));
  return ResultPtr(raw);
}

ResultPtr ProjectBoxAffine(const ProblemFile& f, const Options& o) {
  RequireFields(f, {"y", "u", "v"}, "project-box-affine");
  const SetPtr set = MakeSet(f);
  const projopt_dual_config config = DualConfig(o, true);
  projopt_result* raw = nullptr;
  Check(projopt_project_box_affine(set.get(), f.y->data(), f.y->size(), &config, &raw));
  return ResultPtr(raw);
}

ResultPtr SolveLp(const ProblemFile& f, const Options& o) {
  RequireFields(f, {"c", "u", "v"}, "solve-lp");
  const SetPtr set = MakeSet(f);
  const projopt_dual_config config = DualConfig(o, false);
  projopt_result* raw = nullptr;
  Check(projopt_solve_lp(set.get(), f.c->data(), f.c->size(), o.delta, &config,
                         o.refine ? 1 : 0, &raw));
  return ResultPtr(raw);
}

ResultPtr Pgd(const ProblemFile& f, const Options& o) {
  if (f.p.has_value() == f.c.has_value()) {
    throw InputError(InputErrorKind::kMissingField,
                     "pgd requires exactly one of 'p' (quadratic) or 'c' (linear)");
  }
  const std::vector<double>& params = f.p ? *f.p : *f.c;
  SetPtr set;
  if (o.set == "box-affine") {
    RequireFields(f, {"u", "v"}, "pgd --set box-affine");
    set = MakeSet(f);
  }
  projopt_pgd_config config;
  projopt_pgd_config_init(&config);
  config.step_size = o.eta;
  if (o.max_iter > 0) config.max_iterations = o.max_iter;
  if (o.tol > 0.0) config.convergence_tol = o.tol;
  projopt_result* raw = nullptr;
  Check(projopt_pgd_builtin(f.p ? PROJOPT_OBJECTIVE_QUADRATIC : PROJOPT_OBJECTIVE_LINEAR,
                            params.data(), params.size(), set.get(),
                            f.x0 ? f.x0->data() : nullptr, &config, nullptr, &raw));
  return ResultPtr(raw);
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projections onto simplex and box-affine sets, and LPs solved by "
               "projection.",
               "projopt"};
  app.require_subcommand(1);
  app.set_version_flag("--version", projopt_version());
  Options o;

  auto* simplex = app.add_subcommand("project-simplex",
                                     "Project y onto the probability simplex.");
  auto* box = app.add_subcommand("project-box-affine",
                                 "Project y onto {u <= x <= v, A x = b}.");
  auto* lp = app.add_subcommand("solve-lp", "Minimize c^T x over {u <= x <= v, A x = b}.");
  auto* pgd = app.add_subcommand(
      "pgd", "Projected gradient descent on 0.5||x - p||^2 or c^T x.");
  for (CLI::App* sub : {simplex, box, lp, pgd}) {
    sub->add_option("--input", o.input, "Problem file (JSON)")->required();
  }
  simplex->add_option("--tol", o.tol, "Bisection tolerance")
      ->check(CLI::PositiveNumber);
  box->add_option("--tol", o.tol, "Equality residual tolerance")
      ->check(CLI::PositiveNumber);
  pgd->add_option("--tol", o.tol, "Step length at which iteration stops")
      ->check(CLI::PositiveNumber);
  lp->add_option("--delta", o.delta, "Certified accuracy")->check(CLI::PositiveNumber);
  lp->add_flag("--refine", o.refine, "Recover a vertex from the active constraints");
  pgd->add_option("--eta", o.eta, "Step size")->check(CLI::PositiveNumber);
  pgd->add_option("--set", o.set, "Feasible set")
      ->check(CLI::IsMember({"simplex", "box-affine"}));
  for (CLI::App* sub : {box, lp, pgd}) {
    sub->add_option("--max-iter", o.max_iter, "Iteration cap")
        ->check(CLI::Range(std::size_t{1}, static_cast<std::size_t>(-1)));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const ProblemFile f = ParseProblemFile(o.input);
    ResultPtr result;
    if (*simplex) result = ProjectSimplex(f, o);
    if (*box) result = ProjectBoxAffine(f, o);
    if (*lp) result = SolveLp(f, o);
    if (*pgd) result = Pgd(f, o);
    out << Describe(result.get(), *lp && o.refine).Render();
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << InputErrorKindName(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const StatusError& e) {
    err << "error: " << projopt_status_name(e.status) << ": " << e.message << "\n";
    return projopt_status_is_solver_error(e.status) ? kExitSolverError : kExitUsage;
  }
}

}  // namespace projopt::cli
