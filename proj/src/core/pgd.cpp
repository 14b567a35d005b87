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

#include "core/pgd.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace projopt {

void PgdConfig::Validate() const {
  if (!(step_size > 0.0) || !std::isfinite(step_size)) {
    throw Error(ErrorCode::kInvalidArgument, "pgd: step size must be > 0");
  }
  if (!(convergence_tol >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "pgd: convergence tolerance must be >= 0");
  }
  if (max_iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "pgd: max_iterations must be at least 1");
  }
}

namespace {

void RequireDimension(const SmoothObjective& objective, const Vector& x) {
  if (objective.dimension != x.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "pgd: objective dimension " +
                    std::to_string(objective.dimension) +
                    " does not match point length " + std::to_string(x.size()));
  }
}

double EvaluateValue(const SmoothObjective& objective, const Vector& x,
                     std::size_t iteration) {
  const double f = objective.value(x);
  if (!std::isfinite(f)) {
    throw Error(ErrorCode::kDiverged,
                "pgd: non-finite objective value at iteration " +
                    std::to_string(iteration));
  }
  return f;
}

}  // namespace

Vector PgdStep(const Vector& x, const SmoothObjective& objective, double eta,
               const Projector& projector) {
  RequireDimension(objective, x);
  const std::vector<double> grad = objective.gradient(x);
  if (grad.size() != x.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "pgd: gradient has length " + std::to_string(grad.size()) +
                    ", expected " + std::to_string(x.size()));
  }
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = x[i] - eta * grad[i];
    if (!std::isfinite(y[i])) {
      throw Error(ErrorCode::kDiverged,
                  "pgd: non-finite gradient step at index " + std::to_string(i));
    }
  }
  return projector(Vector(std::move(y)));
}

PgdReport PgdSolve(const SmoothObjective& objective, const Projector& projector,
                   const Vector& x0, const PgdConfig& config) {
  config.Validate();
  RequireDimension(objective, x0);

  PgdReport report;
  report.x = projector(x0);
  report.objective_trace.reserve(config.max_iterations + 1);
  report.objective_trace.push_back(EvaluateValue(objective, report.x, 0));

  for (std::size_t t = 1; t <= config.max_iterations; ++t) {
    Vector next = PgdStep(report.x, objective, config.step_size, projector);
    const double step = Norm2(next - report.x);
    report.objective_trace.push_back(EvaluateValue(objective, next, t));
    report.x = std::move(next);
    report.iterations = t;
    report.final_step_norm = step;
    if (step <= config.convergence_tol) {
      report.converged = true;
      break;
    }
  }
  return report;
}

SmoothObjective QuadraticObjective(Vector target) {
  SmoothObjective f;
  f.dimension = target.size();
  f.value = [target](const Vector& x) {
    const Vector d = x - target;
    return 0.5 * Dot(d, d);
  };
  f.gradient = [target](const Vector& x) { return (x - target).values(); };
  return f;
}

SmoothObjective LinearObjective(Vector cost) {
  SmoothObjective f;
  f.dimension = cost.size();
  f.value = [cost](const Vector& x) { return Dot(cost, x); };
  f.gradient = [cost](const Vector&) { return cost.values(); };
  return f;
}

}  // namespace projopt
