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

// Euclidean projection onto the probability simplex {x >= 0, sum(x) = 1}.
//
// The projection has the closed form x_i = max(y_i - mu, 0) where the scalar
// multiplier mu solves h(mu) = sum_i max(y_i - mu, 0) - 1 = 0. h is
// continuous and nonincreasing, so mu is found by bisection on the bracket
// [max(y) - 1, max(y)]. A sort-based exact routine is kept alongside it as an
// independent reference.

#ifndef PROJOPT_CORE_SIMPLEX_PROJECTION_HPP_
#define PROJOPT_CORE_SIMPLEX_PROJECTION_HPP_

#include <cstddef>

#include "core/linalg.hpp"

namespace projopt {

inline constexpr double kDefaultSimplexTol = 1e-10;
inline constexpr std::size_t kSimplexBisectionCap = 200;

struct SimplexProjectionResult {
  Vector x;
  double mu = 0.0;
  // Value of the one-dimensional dual objective at mu.
  double dual_value = 0.0;
  std::size_t iterations = 0;
};

// max(y - mu, 0), elementwise.
Vector SimplexPrimalFromDual(double mu, const Vector& y);

// 0.5 * ||x(mu) - y||^2 + mu * (sum(x(mu)) - 1) with x(mu) as above. Concave
// in mu and maximized at the projection multiplier.
double SimplexDualValue(double mu, const Vector& y);

// h(mu) = sum(x(mu)) - 1, the derivative of SimplexDualValue.
double SimplexSumResidual(double mu, const Vector& y);

// Bisection on h until the bracket is no wider than tol (at most
// kSimplexBisectionCap halvings). The support found at the lower end of the
// bracket is then refined to the exact multiplier.
SimplexProjectionResult ProjectSimplexBisection(const Vector& y,
                                                double tol = kDefaultSimplexTol);

// Exact projection by sorting y in decreasing order.
SimplexProjectionResult ProjectSimplexSort(const Vector& y);

struct SimplexFeasibility {
  double sum_violation = 0.0;  // |sum(x) - 1|
  double negativity = 0.0;     // max(0, -min_i x_i)
};

SimplexFeasibility SimplexFeasibilityResiduals(const Vector& x);

}  // namespace projopt

#endif  // PROJOPT_CORE_SIMPLEX_PROJECTION_HPP_
