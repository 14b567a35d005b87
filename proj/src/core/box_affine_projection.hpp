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

// Euclidean projection onto S = {x : lower <= x <= upper, A x = b}.
//
// For a fixed multiplier mu on the equality rows, the box-constrained
// minimizer of the Lagrangian is a clip of z = y - A^T mu, with bound
// multipliers read off from how far z lies outside the box (Phi). The
// resulting dual function
//
//   g(mu) = 0.5 ||x(mu) - y||^2 + mu^T (A x(mu) - b)
//
// is concave and continuously differentiable with gradient A x(mu) - b, so
// the projection is computed by ascending g until A x(mu) = b.

#ifndef PROJOPT_CORE_BOX_AFFINE_PROJECTION_HPP_
#define PROJOPT_CORE_BOX_AFFINE_PROJECTION_HPP_

#include <cstddef>

#include "core/linalg.hpp"

namespace projopt {

// {lower <= x <= upper, A x = b}. A may have zero rows (pure box).
class BoxAffineSet {
 public:
  // Throws kInvalidBox if lower_i > upper_i, kDimensionMismatch if the
  // shapes disagree.
  BoxAffineSet(Vector lower, Vector upper, DenseMatrix a, Vector b);
  BoxAffineSet(Vector lower, Vector upper);

  std::size_t dimension() const noexcept { return lower_.size(); }
  std::size_t equality_rows() const noexcept { return a_.rows(); }
  const Vector& lower() const noexcept { return lower_; }
  const Vector& upper() const noexcept { return upper_; }
  const DenseMatrix& matrix() const noexcept { return a_; }
  const Vector& rhs() const noexcept { return b_; }

 private:
  Vector lower_;
  Vector upper_;
  DenseMatrix a_;
  Vector b_;
};

// max_i max(lower_i - x_i, x_i - upper_i, 0).
double BoxViolation(const Vector& x, const BoxAffineSet& set);
// ||A x - b||_inf.
double EqualityResidual(const Vector& x, const BoxAffineSet& set);

struct PhiResult {
  Vector x;
  Vector lambda1;  // lower-bound multipliers
  Vector lambda2;  // upper-bound multipliers
};

// With z = y - A^T mu: x = clip(z), lambda1 = max(lower - z, 0),
// lambda2 = max(z - upper, 0).
PhiResult Phi(const Vector& mu, const Vector& y, const BoxAffineSet& set);

// 0.5||x - y||^2 + lambda1^T(lower - x) + lambda2^T(x - upper)
//   + mu^T(A x - b), evaluated at the point carried by p.
double LagrangianValue(const PhiResult& p, const Vector& mu, const Vector& y,
                       const BoxAffineSet& set);

double DualValue(const Vector& mu, const Vector& y, const BoxAffineSet& set);
Vector DualGradient(const Vector& mu, const Vector& y, const BoxAffineSet& set);

enum class DualStepRule {
  // Maximize the dual exactly along the search direction. The dual is
  // piecewise quadratic along any line, so the maximizer is found among the
  // points where coordinates enter or leave the box.
  kExactLineSearch,
  // Start from initial_step, shrink by backtracking_factor until the dual
  // increases sufficiently.
  kBacktracking,
};

struct DualAscentConfig {
  double initial_step = 1.0;
  double feasibility_tol = 1e-8;
  std::size_t max_iterations = 100000;
  double divergence_bound = 1e12;
  double backtracking_factor = 0.5;
  DualStepRule step_rule = DualStepRule::kExactLineSearch;
  // Polak-Ribiere (PR+) directions, restarted every m iterations. When false
  // every step follows the dual gradient.
  bool conjugate_directions = true;

  void Validate() const;
};

struct BoxAffineProjectionResult {
  Vector x;
  Vector mu;
  Vector lambda1;
  Vector lambda2;
  double equality_residual = 0.0;  // ||A x - b||_inf
  std::size_t iterations = 0;
  bool converged = false;
};

// Dual ascent from mu = 0 until ||A x(mu) - b||_inf <= feasibility_tol. When
// the iteration cap is reached the iterate with the smallest equality
// residual is returned with converged = false. Throws kInfeasible for a zero
// row of A with nonzero rhs, when a search ray certifies that S is empty, or
// when ||mu||_inf exceeds divergence_bound.
BoxAffineProjectionResult ProjectBoxAffine(const Vector& y,
                                           const BoxAffineSet& set,
                                           const DualAscentConfig& config = {});

struct KktResiduals {
  double stationarity = 0.0;     // ||x - y - lambda1 + lambda2 + A^T mu||_inf
  double box_violation = 0.0;    // max violation of lower <= x <= upper
  double equality = 0.0;         // ||A x - b||_inf
  double dual_negativity = 0.0;  // max(0, -min(lambda1, lambda2))
  double complementarity = 0.0;  // max |lambda1_i (x - lower)_i|, |lambda2_i (x - upper)_i|
};

KktResiduals ComputeKktResiduals(const BoxAffineProjectionResult& result,
                                 const Vector& y, const BoxAffineSet& set);

}  // namespace projopt

#endif  // PROJOPT_CORE_BOX_AFFINE_PROJECTION_HPP_
