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

#include "core/lp_flow_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace projopt {

LpProblem::LpProblem(Vector cost, BoxAffineSet set)
    : cost_(std::move(cost)), set_(std::move(set)) {
  if (cost_.size() != set_.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "lp: cost has length " + std::to_string(cost_.size()) +
                    " but the feasible set has dimension " +
                    std::to_string(set_.dimension()));
  }
}

RadiusEstimate ComputeRadii(const BoxAffineSet& set) {
  const std::size_t n = set.dimension();
  std::vector<double> far(n), width(n);
  for (std::size_t i = 0; i < n; ++i) {
    far[i] = std::max(std::abs(set.lower()[i]), std::abs(set.upper()[i]));
    width[i] = set.upper()[i] - set.lower()[i];
  }
  return {Norm2(Vector(std::move(far))), 0.5 * Norm2(Vector(std::move(width)))};
}

double SuboptimalityBound(const RadiusEstimate& radii, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::kInvalidArgument,
                "suboptimality bound: t must be positive and finite");
  }
  return 4.0 * radii.norm_bound * radii.radius / t;
}

double ChooseT(const RadiusEstimate& radii, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::kInvalidArgument,
                "lp: accuracy delta must be positive and finite");
  }
  const double scale = 4.0 * radii.norm_bound * radii.radius;
  if (scale == 0.0) return 1.0;
  double t = scale / delta;
  if (!std::isfinite(t)) {
    throw Error(ErrorCode::kInvalidArgument,
                "lp: accuracy delta is too small for this feasible set");
  }
  while (SuboptimalityBound(radii, t) > delta) {
    t = std::nextafter(t, std::numeric_limits<double>::infinity());
  }
  return t;
}

const char* ConstraintKindName(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::kEquality: return "equality";
    case ConstraintKind::kLower: return "lower";
    case ConstraintKind::kUpper: return "upper";
  }
  return "unknown";
}

std::vector<ConstraintId> IdentifyActiveConstraints(const Vector& x,
                                                    const BoxAffineSet& set) {
  const std::size_t n = set.dimension();
  const std::size_t m = set.equality_rows();
  if (x.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "active constraints: x has length " + std::to_string(x.size()) +
                    ", expected " + std::to_string(n));
  }
  if (m > n) {
    throw Error(ErrorCode::kOverdetermined,
                "active constraints: " + std::to_string(m) +
                    " equality rows exceed " + std::to_string(n) + " variables");
  }

  struct Candidate {
    double slack;
    std::size_t index;
    ConstraintKind side;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double to_lower = x[i] - set.lower()[i];
    const double to_upper = set.upper()[i] - x[i];
    if (to_lower <= to_upper) {
      candidates.push_back({to_lower, i, ConstraintKind::kLower});
    } else {
      candidates.push_back({to_upper, i, ConstraintKind::kUpper});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.slack < b.slack;
                   });

  std::vector<ConstraintId> active;
  active.reserve(n);
  for (std::size_t r = 0; r < m; ++r) {
    active.push_back({ConstraintKind::kEquality, r});
  }
  for (std::size_t k = 0; k < n - m; ++k) {
    active.push_back({candidates[k].side, candidates[k].index});
  }
  return active;
}

Vector RefineByLinearSolve(const std::vector<ConstraintId>& active,
                           const BoxAffineSet& set) {
  const std::size_t n = set.dimension();
  if (active.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "refine: need exactly " + std::to_string(n) +
                    " active constraints, got " + std::to_string(active.size()));
  }
  std::vector<double> system(n * n, 0.0);
  std::vector<double> rhs(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const ConstraintId& c = active[k];
    if (c.kind == ConstraintKind::kEquality) {
      if (c.index >= set.equality_rows()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "refine: equality row " + std::to_string(c.index) +
                        " out of range");
      }
      const auto row = set.matrix().row(c.index);
      std::copy(row.begin(), row.end(), system.begin() + k * n);
      rhs[k] = set.rhs()[c.index];
    } else {
      if (c.index >= n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "refine: bound index " + std::to_string(c.index) +
                        " out of range");
      }
      system[k * n + c.index] = 1.0;
      rhs[k] = c.kind == ConstraintKind::kLower ? set.lower()[c.index]
                                                 : set.upper()[c.index];
    }
  }

  Vector solution;
  try {
    solution = SolveLinearSystem(DenseMatrix(n, n, std::move(system)),
                                 Vector(std::move(rhs)));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSingular) throw;
    throw Error(ErrorCode::kSingular,
                std::string("refine: active constraints are rank deficient (") +
                    e.what() + ")");
  }
  // Bound rows hold exactly; drop the elimination round-off on them.
  for (std::size_t i = 0; i < n; ++i) solution.Set(i, solution[i] + 0.0);
  for (const ConstraintId& c : active) {
    if (c.kind == ConstraintKind::kLower) solution.Set(c.index, set.lower()[c.index]);
    if (c.kind == ConstraintKind::kUpper) solution.Set(c.index, set.upper()[c.index]);
  }
  return solution;
}

LpSolveReport SolveLp(const LpProblem& problem, double delta,
                      const DualAscentConfig& config, bool refine) {
  const BoxAffineSet& set = problem.set();
  LpSolveReport report;
  report.radii = ComputeRadii(set);
  report.t_used = ChooseT(report.radii, delta);
  report.bound = SuboptimalityBound(report.radii, report.t_used);

  const Vector target = (-report.t_used) * problem.cost();
  report.projection = ProjectBoxAffine(target, set, config);
  report.x = report.projection.x;
  report.objective = Dot(problem.cost(), report.x);

  if (!refine) return report;

  try {
    report.active_set = IdentifyActiveConstraints(report.x, set);
    Vector vertex = RefineByLinearSolve(report.active_set, set);
    if (BoxViolation(vertex, set) > kRefineFeasibilityTol) return report;
    vertex = Clip(vertex, set.lower(), set.upper());
    if (EqualityResidual(vertex, set) > kRefineFeasibilityTol) return report;
    const double objective = Dot(problem.cost(), vertex);
    if (objective > report.objective + kRefineObjectiveSlack) return report;
    report.x = std::move(vertex);
    report.objective = objective;
    report.refined = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSingular &&
        e.code() != ErrorCode::kOverdetermined) {
      throw;
    }
  }
  return report;
}

}  // namespace projopt
