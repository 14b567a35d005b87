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

// Projected gradient descent with a fixed step size:
//   x_{t+1} = P(x_t - eta * grad f(x_t))
// for a caller-supplied smooth objective and projection operator.

#ifndef PROJOPT_CORE_PGD_HPP_
#define PROJOPT_CORE_PGD_HPP_

#include <cstddef>
#include <functional>
#include <vector>

#include "core/linalg.hpp"

namespace projopt {

// Callbacks receive a finite point and may return anything; the driver
// rejects non-finite values and gradients of the wrong length.
struct SmoothObjective {
  std::function<double(const Vector&)> value;
  std::function<std::vector<double>(const Vector&)> gradient;
  std::size_t dimension = 0;
};

using Projector = std::function<Vector(const Vector&)>;

struct PgdConfig {
  double step_size = 0.1;
  std::size_t max_iterations = 10000;
  // Stop once ||x_{t+1} - x_t||_2 <= convergence_tol.
  double convergence_tol = 1e-10;

  void Validate() const;
};

struct PgdReport {
  Vector x;
  std::size_t iterations = 0;
  bool converged = false;
  // f(x_0), f(x_1), ..., f(x_iterations).
  std::vector<double> objective_trace;
  double final_step_norm = 0.0;
};

// projector(x_t - eta * gradient(x_t)). A non-finite gradient throws
// kDiverged.
Vector PgdStep(const Vector& x, const SmoothObjective& objective, double eta,
               const Projector& projector);

// x0 is projected once before the first step, so any finite starting point
// is accepted.
PgdReport PgdSolve(const SmoothObjective& objective, const Projector& projector,
                   const Vector& x0, const PgdConfig& config);

// 0.5 * ||x - target||^2.
SmoothObjective QuadraticObjective(Vector target);
// cost^T x.
SmoothObjective LinearObjective(Vector cost);

}  // namespace projopt

#endif  // PROJOPT_CORE_PGD_HPP_
