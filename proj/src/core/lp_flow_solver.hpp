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

// Linear programs  min c^T x  s.t.  lower <= x <= upper, A x = b  solved by a
// single Euclidean projection.
//
// For t > 0 let x_t be the projection of -t c onto the feasible set S. If
// every point of S has norm at most R and any two points of S are within 2r
// of each other, then c^T x_t - c^T x* <= 4 R r / t. Picking t = 4 R r / delta
// therefore certifies a gap of at most delta. Optionally the constraints
// closest to equality at x_t are taken as the active set of a vertex and the
// vertex is recovered by a linear solve.

#ifndef PROJOPT_CORE_LP_FLOW_SOLVER_HPP_
#define PROJOPT_CORE_LP_FLOW_SOLVER_HPP_

#include <cstddef>
#include <vector>

#include "core/box_affine_projection.hpp"
#include "core/linalg.hpp"

namespace projopt {

class LpProblem {
 public:
  LpProblem(Vector cost, BoxAffineSet set);

  const Vector& cost() const noexcept { return cost_; }
  const BoxAffineSet& set() const noexcept { return set_; }

 private:
  Vector cost_;
  BoxAffineSet set_;
};

struct RadiusEstimate {
  double norm_bound = 0.0;  // R >= max_{x in S} ||x||_2
  double radius = 0.0;      // r, half of an upper bound on the diameter of S
};

// Bounds taken from the box alone: R = ||max(|lower|, |upper|)||_2 and
// r = ||upper - lower||_2 / 2.
RadiusEstimate ComputeRadii(const BoxAffineSet& set);

// t = 4 R r / delta, nudged up by ulps until the certified bound does not
// exceed delta. Returns 1 when R r = 0. Throws kInvalidArgument for
// delta <= 0.
double ChooseT(const RadiusEstimate& radii, double delta);

// 4 R r / t. Throws kInvalidArgument for t <= 0.
double SuboptimalityBound(const RadiusEstimate& radii, double t);

enum class ConstraintKind { kEquality, kLower, kUpper };

const char* ConstraintKindName(ConstraintKind kind);

struct ConstraintId {
  ConstraintKind kind = ConstraintKind::kEquality;
  std::size_t index = 0;

  friend bool operator==(const ConstraintId&, const ConstraintId&) = default;
};

// All m equality rows followed by the n - m box constraints with the
// smallest absolute slack min(x_i - lower_i, upper_i - x_i), ties broken by
// coordinate index. The side is lower when x_i - lower_i <= upper_i - x_i.
// Throws kOverdetermined when m > n.
std::vector<ConstraintId> IdentifyActiveConstraints(const Vector& x,
                                                    const BoxAffineSet& set);

// Solves the n-by-n system formed by the given equality rows and bound rows.
// Throws kInvalidArgument unless exactly n constraints are given and
// kSingular when they are linearly dependent.
Vector RefineByLinearSolve(const std::vector<ConstraintId>& active,
                           const BoxAffineSet& set);

struct LpSolveReport {
  Vector x;
  double objective = 0.0;  // c^T x
  double bound = 0.0;      // 4 R r / t_used
  double t_used = 0.0;
  RadiusEstimate radii;
  bool refined = false;
  std::vector<ConstraintId> active_set;  // filled when refinement was requested
  BoxAffineProjectionResult projection;
};

// Feasibility tolerance a refined vertex must meet to be accepted.
inline constexpr double kRefineFeasibilityTol = 1e-8;
// Largest objective increase over the projected point that refinement may
// introduce.
inline constexpr double kRefineObjectiveSlack = 1e-12;

// Projection errors propagate. Refinement never fails the solve: when the
// active system is singular, the vertex is infeasible, or it costs more than
// the projected point, the projected point is returned with refined = false.
LpSolveReport SolveLp(const LpProblem& problem, double delta,
                      const DualAscentConfig& config = {}, bool refine = false);

}  // namespace projopt

#endif  // PROJOPT_CORE_LP_FLOW_SOLVER_HPP_
