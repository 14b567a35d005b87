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

#include "core/simplex_projection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace projopt {

namespace {

void RequireNonEmpty(const Vector& y) {
  if (y.empty()) {
    throw Error(ErrorCode::kEmptyInput, "simplex projection: empty input");
  }
}

double MaxEntry(const Vector& y) {
  return *std::max_element(y.begin(), y.end());
}

// Exact multiplier for the support {i : y_i > start}, which must contain the
// true support. Each pass drops coordinates at or below the current estimate;
// the estimate only increases, so the loop ends after at most n passes.
double RefineMultiplier(const Vector& y, double start) {
  double mu = start;
  std::size_t support = 0;
  for (std::size_t pass = 0; pass <= y.size(); ++pass) {
    double sum = 0.0;
    std::size_t count = 0;
    for (double v : y) {
      if (v > mu) {
        sum += v;
        ++count;
      }
    }
    if (count == 0) break;
    const double next = (sum - 1.0) / static_cast<double>(count);
    if (count == support && next == mu) break;
    support = count;
    mu = next;
  }
  // One more correction for rounding in the sum over a large support.
  const double residual = SimplexSumResidual(mu, y);
  if (residual != 0.0 && support > 0) {
    const double corrected = mu + residual / static_cast<double>(support);
    if (std::abs(SimplexSumResidual(corrected, y)) < std::abs(residual)) {
      mu = corrected;
    }
  }
  return mu;
}

SimplexProjectionResult MakeResult(const Vector& y, double mu,
                                   std::size_t iterations) {
  SimplexProjectionResult result;
  result.x = SimplexPrimalFromDual(mu, y);
  result.mu = mu;
  result.dual_value = SimplexDualValue(mu, y);
  result.iterations = iterations;
  return result;
}

}  // namespace

Vector SimplexPrimalFromDual(double mu, const Vector& y) {
  std::vector<double> x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = std::max(y[i] - mu, 0.0);
  return Vector(std::move(x));
}

double SimplexDualValue(double mu, const Vector& y) {
  const Vector x = SimplexPrimalFromDual(mu, y);
  double sq = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double d = x[i] - y[i];
    sq += d * d;
  }
  return 0.5 * sq + mu * (Sum(x) - 1.0);
}

double SimplexSumResidual(double mu, const Vector& y) {
  double acc = 0.0;
  for (double v : y) acc += std::max(v - mu, 0.0);
  return acc - 1.0;
}

SimplexProjectionResult ProjectSimplexBisection(const Vector& y, double tol) {
  RequireNonEmpty(y);
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(ErrorCode::kInvalidArgument,
                "simplex projection: tolerance must be positive and finite");
  }
  // h(max - 1) >= 0 because the top coordinate alone contributes 1, and
  // h(max) = -1.
  double lo = MaxEntry(y) - 1.0;
  double hi = MaxEntry(y);
  std::size_t iterations = 0;
  while (hi - lo > tol && iterations < kSimplexBisectionCap) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
    if (SimplexSumResidual(mid, y) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  return MakeResult(y, RefineMultiplier(y, lo), iterations);
}

SimplexProjectionResult ProjectSimplexSort(const Vector& y) {
  RequireNonEmpty(y);
  std::vector<double> sorted(y.begin(), y.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double mu = sorted.front() - 1.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) mu = candidate;
  }
  return MakeResult(y, mu, 0);
}

SimplexFeasibility SimplexFeasibilityResiduals(const Vector& x) {
  SimplexFeasibility f;
  f.sum_violation = std::abs(Sum(x) - 1.0);
  for (double v : x) f.negativity = std::max(f.negativity, -v);
  return f;
}

}  // namespace projopt
