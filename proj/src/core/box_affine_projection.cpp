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

#include "core/box_affine_projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace projopt {

BoxAffineSet::BoxAffineSet(Vector lower, Vector upper, DenseMatrix a, Vector b)
    : lower_(std::move(lower)),
      upper_(std::move(upper)),
      a_(std::move(a)),
      b_(std::move(b)) {
  const std::size_t n = lower_.size();
  if (upper_.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "box-affine set: lower has length " + std::to_string(n) +
                    " but upper has length " + std::to_string(upper_.size()));
  }
  if (a_.rows() > 0 && a_.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "box-affine set: A has " + std::to_string(a_.cols()) +
                    " columns but the box has dimension " + std::to_string(n));
  }
  if (a_.rows() == 0 && a_.cols() != n) a_ = DenseMatrix(0, n);
  if (b_.size() != a_.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "box-affine set: A has " + std::to_string(a_.rows()) +
                    " rows but b has length " + std::to_string(b_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (lower_[i] > upper_[i]) {
      throw Error(ErrorCode::kInvalidBox,
                  "box-affine set: lower bound exceeds upper bound at index " +
                      std::to_string(i));
    }
  }
}

BoxAffineSet::BoxAffineSet(Vector lower, Vector upper)
    : BoxAffineSet(std::move(lower), std::move(upper), DenseMatrix(), Vector()) {}

namespace {

void RequireLength(const Vector& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " has length " + std::to_string(v.size()) +
                    ", expected " + std::to_string(n));
  }
}

// Working state of the dual iteration. z = y - A^T mu is carried alongside
// mu and updated by the same increments instead of being recomputed: when y
// is large (the LP reduction uses y = -t c) recomputing z from mu cancels
// catastrophically, while the free coordinates of an incrementally updated z
// stay accurate to their own magnitude.
struct DualIterate {
  std::vector<double> mu;
  std::vector<double> z;
  std::vector<double> x;
  std::vector<double> grad;  // A x - b
  double residual = 0.0;     // ||grad||_inf
};

void RefreshPrimal(DualIterate& it, const BoxAffineSet& set) {
  const auto& lo = set.lower();
  const auto& hi = set.upper();
  const auto& a = set.matrix();
  const auto& b = set.rhs();
  const std::size_t n = set.dimension();
  for (std::size_t i = 0; i < n; ++i) it.x[i] = std::clamp(it.z[i], lo[i], hi[i]);
  it.residual = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto row = a.row(r);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * it.x[j];
    it.grad[r] = acc - b[r];
    it.residual = std::max(it.residual, std::abs(it.grad[r]));
  }
}

// Integral of clamp(s, lo, hi) over [from, to].
double IntegralOfClip(double from, double to, double lo, double hi) {
  if (to < from) return -IntegralOfClip(to, from, lo, hi);
  double total = 0.0;
  if (from < lo) total += lo * (std::min(to, lo) - from);
  const double m0 = std::max(from, lo);
  const double m1 = std::min(to, hi);
  if (m1 > m0) total += 0.5 * (m1 - m0) * (m1 + m0);
  if (to > hi) total += hi * (to - std::max(from, hi));
  return total;
}

// g(mu + alpha d) - g(mu), with w = A^T d. Written per coordinate as an
// integral of the clip so that no large dual values are subtracted.
double DualIncrement(const DualIterate& it, const std::vector<double>& w,
                     double b_dot_d, double alpha, const BoxAffineSet& set) {
  double total = -alpha * b_dot_d;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0.0) continue;
    total -= IntegralOfClip(it.z[i], it.z[i] - alpha * w[i], set.lower()[i],
                            set.upper()[i]);
  }
  return total;
}

// Directional derivative of the dual at mu + alpha d.
double Slope(const DualIterate& it, const std::vector<double>& w,
             double b_dot_d, double alpha, const BoxAffineSet& set) {
  double acc = -b_dot_d;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0.0) continue;
    acc += w[i] * std::clamp(it.z[i] - alpha * w[i], set.lower()[i],
                             set.upper()[i]);
  }
  return acc;
}

// Maximizer of alpha -> g(mu + alpha d) over alpha >= 0. The slope is
// piecewise linear and nonincreasing with kinks where a coordinate of z
// crosses a bound, so the root is bracketed by consecutive kinks and found
// by linear interpolation.
double ExactStep(const DualIterate& it, const std::vector<double>& w,
                 double b_dot_d, const BoxAffineSet& set) {
  const double slope0 = Slope(it, w, b_dot_d, 0.0, set);
  if (!(slope0 > 0.0)) return 0.0;

  std::vector<double> kinks;
  kinks.reserve(2 * w.size());
  double scale = std::abs(b_dot_d);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0.0) continue;
    const double lo = set.lower()[i];
    const double hi = set.upper()[i];
    scale += std::abs(w[i]) * std::max(std::abs(lo), std::abs(hi));
    for (double bound : {lo, hi}) {
      const double a = (it.z[i] - bound) / w[i];
      if (a > 0.0 && std::isfinite(a)) kinks.push_back(a);
    }
  }
  std::sort(kinks.begin(), kinks.end());

  auto first_nonpositive = std::partition_point(
      kinks.begin(), kinks.end(),
      [&](double a) { return Slope(it, w, b_dot_d, a, set) > 0.0; });

  if (first_nonpositive == kinks.end()) {
    // Past the last kink every coordinate with w_i != 0 is clamped and the
    // slope is constant: min over the box of d^T (A x - b). A positive value
    // is a Farkas certificate that A x = b has no solution in the box.
    const double tail = kinks.empty() ? slope0
                                      : Slope(it, w, b_dot_d, kinks.back(), set);
    if (tail > 1e-12 * std::max(scale, 1.0)) {
      return std::numeric_limits<double>::infinity();
    }
    return kinks.empty() ? 0.0 : kinks.back();
  }
  const double hi = *first_nonpositive;
  const double lo =
      first_nonpositive == kinks.begin() ? 0.0 : *(first_nonpositive - 1);
  const double slope_lo =
      first_nonpositive == kinks.begin() ? slope0 : Slope(it, w, b_dot_d, lo, set);
  const double slope_hi = Slope(it, w, b_dot_d, hi, set);
  if (!(slope_lo > slope_hi)) return hi;
  return lo + slope_lo * ((hi - lo) / (slope_lo - slope_hi));
}

double BacktrackingStep(const DualIterate& it, const std::vector<double>& w,
                        double b_dot_d, double directional,
                        const DualAscentConfig& config,
                        const BoxAffineSet& set) {
  // Sufficient increase with constant 1/2; along a quadratic piece this
  // accepts exactly the steps no longer than the inverse curvature.
  constexpr double kSufficientIncrease = 0.5;
  double alpha = config.initial_step;
  for (int trial = 0; trial < 200; ++trial) {
    const double gain = DualIncrement(it, w, b_dot_d, alpha, set);
    if (gain >= kSufficientIncrease * alpha * directional) return alpha;
    alpha *= config.backtracking_factor;
  }
  return 0.0;
}

BoxAffineProjectionResult Finish(const DualIterate& it, const BoxAffineSet& set,
                                 std::size_t iterations, bool converged) {
  const std::size_t n = set.dimension();
  std::vector<double> l1(n), l2(n);
  for (std::size_t i = 0; i < n; ++i) {
    l1[i] = std::max(set.lower()[i] - it.z[i], 0.0);
    l2[i] = std::max(it.z[i] - set.upper()[i], 0.0);
  }
  BoxAffineProjectionResult result;
  result.x = Vector(it.x);
  result.mu = Vector(it.mu);
  result.lambda1 = Vector(std::move(l1));
  result.lambda2 = Vector(std::move(l2));
  result.equality_residual = EqualityResidual(result.x, set);
  result.iterations = iterations;
  result.converged = converged;
  return result;
}

}  // namespace

double BoxViolation(const Vector& x, const BoxAffineSet& set) {
  RequireLength(x, set.dimension(), "box violation: x");
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    worst = std::max({worst, set.lower()[i] - x[i], x[i] - set.upper()[i]});
  }
  return worst;
}

double EqualityResidual(const Vector& x, const BoxAffineSet& set) {
  RequireLength(x, set.dimension(), "equality residual: x");
  if (set.equality_rows() == 0) return 0.0;
  return NormInf(MatVec(set.matrix(), x) - set.rhs());
}

PhiResult Phi(const Vector& mu, const Vector& y, const BoxAffineSet& set) {
  RequireLength(y, set.dimension(), "phi: y");
  RequireLength(mu, set.equality_rows(), "phi: mu");
  const std::size_t n = set.dimension();
  const Vector shift = MatVecTranspose(set.matrix(), mu);
  std::vector<double> x(n), l1(n), l2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = y[i] - shift[i];
    x[i] = std::clamp(z, set.lower()[i], set.upper()[i]);
    l1[i] = std::max(set.lower()[i] - z, 0.0);
    l2[i] = std::max(z - set.upper()[i], 0.0);
  }
  return {Vector(std::move(x)), Vector(std::move(l1)), Vector(std::move(l2))};
}

double LagrangianValue(const PhiResult& p, const Vector& mu, const Vector& y,
                       const BoxAffineSet& set) {
  const std::size_t n = set.dimension();
  RequireLength(p.x, n, "lagrangian: x");
  RequireLength(p.lambda1, n, "lagrangian: lambda1");
  RequireLength(p.lambda2, n, "lagrangian: lambda2");
  RequireLength(y, n, "lagrangian: y");
  RequireLength(mu, set.equality_rows(), "lagrangian: mu");
  const Vector d = p.x - y;
  double value = 0.5 * Dot(d, d);
  value += Dot(p.lambda1, set.lower() - p.x);
  value += Dot(p.lambda2, p.x - set.upper());
  if (set.equality_rows() > 0) {
    value += Dot(mu, MatVec(set.matrix(), p.x) - set.rhs());
  }
  return value;
}

double DualValue(const Vector& mu, const Vector& y, const BoxAffineSet& set) {
  return LagrangianValue(Phi(mu, y, set), mu, y, set);
}

Vector DualGradient(const Vector& mu, const Vector& y, const BoxAffineSet& set) {
  const PhiResult p = Phi(mu, y, set);
  if (set.equality_rows() == 0) return Vector();
  return MatVec(set.matrix(), p.x) - set.rhs();
}

void DualAscentConfig::Validate() const {
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!positive(initial_step) || !positive(feasibility_tol) ||
      !positive(divergence_bound)) {
    throw Error(ErrorCode::kInvalidArgument,
                "dual ascent: initial_step, feasibility_tol and "
                "divergence_bound must be positive and finite");
  }
  if (max_iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "dual ascent: max_iterations must be at least 1");
  }
  if (!(backtracking_factor > 0.0 && backtracking_factor < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "dual ascent: backtracking_factor must lie in (0, 1)");
  }
}

BoxAffineProjectionResult ProjectBoxAffine(const Vector& y,
                                           const BoxAffineSet& set,
                                           const DualAscentConfig& config) {
  config.Validate();
  RequireLength(y, set.dimension(), "box-affine projection: y");
  const std::size_t n = set.dimension();
  const std::size_t m = set.equality_rows();
  const DenseMatrix& a = set.matrix();

  for (std::size_t r = 0; r < m; ++r) {
    const auto row = a.row(r);
    const bool zero_row =
        std::all_of(row.begin(), row.end(), [](double v) { return v == 0.0; });
    if (zero_row && set.rhs()[r] != 0.0) {
      throw Error(ErrorCode::kInfeasible,
                  "box-affine projection: row " + std::to_string(r) +
                      " of A is zero but b is nonzero");
    }
  }

  DualIterate it;
  it.mu.assign(m, 0.0);
  it.z = y.values();
  it.x.assign(n, 0.0);
  it.grad.assign(m, 0.0);
  RefreshPrimal(it, set);
  if (m == 0 || it.residual <= config.feasibility_tol) {
    return Finish(it, set, 0, true);
  }

  DualIterate best = it;
  std::vector<double> direction(m), prev_grad(m), w(n);
  std::size_t since_restart = 0;
  bool have_direction = false;

  std::size_t iter = 0;
  while (iter < config.max_iterations) {
    bool steepest = !config.conjugate_directions || !have_direction ||
                    since_restart >= m;
    if (!steepest) {
      double num = 0.0, den = 0.0;
      for (std::size_t r = 0; r < m; ++r) {
        num += it.grad[r] * (it.grad[r] - prev_grad[r]);
        den += prev_grad[r] * prev_grad[r];
      }
      const double beta = den > 0.0 ? std::max(0.0, num / den) : 0.0;
      double along = 0.0;
      for (std::size_t r = 0; r < m; ++r) {
        direction[r] = it.grad[r] + beta * direction[r];
        along += direction[r] * it.grad[r];
      }
      if (!(along > 0.0)) steepest = true;
    }
    if (steepest) {
      direction = it.grad;
      since_restart = 0;
    }

    double directional = 0.0, b_dot_d = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      directional += direction[r] * it.grad[r];
      b_dot_d += direction[r] * set.rhs()[r];
    }
    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t r = 0; r < m; ++r) {
      const auto row = a.row(r);
      for (std::size_t j = 0; j < n; ++j) w[j] += row[j] * direction[r];
    }

    double alpha =
        config.step_rule == DualStepRule::kExactLineSearch
            ? ExactStep(it, w, b_dot_d, set)
            : BacktrackingStep(it, w, b_dot_d, directional, config, set);
    if (std::isinf(alpha)) {
      throw Error(ErrorCode::kInfeasible,
                  "box-affine projection: dual is unbounded along a search "
                  "direction, the set is empty");
    }
    if (alpha == 0.0 && !steepest) {
      // Conjugate direction made no progress; retry along the gradient.
      have_direction = false;
      continue;
    }
    if (alpha == 0.0) return Finish(best, set, iter, false);

    prev_grad = it.grad;
    double mu_norm = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      it.mu[r] += alpha * direction[r];
      mu_norm = std::max(mu_norm, std::abs(it.mu[r]));
    }
    for (std::size_t j = 0; j < n; ++j) it.z[j] -= alpha * w[j];
    RefreshPrimal(it, set);
    have_direction = true;
    ++since_restart;
    ++iter;

    if (it.residual <= config.feasibility_tol) return Finish(it, set, iter, true);
    if (it.residual < best.residual) best = it;
    if (!std::isfinite(mu_norm) || mu_norm > config.divergence_bound) {
      throw Error(ErrorCode::kInfeasible,
                  "box-affine projection: multipliers exceeded the divergence "
                  "bound with equality residual " +
                      std::to_string(it.residual) +
                      "; the set is empty or ill-conditioned");
    }
  }
  return Finish(best, set, config.max_iterations, false);
}

KktResiduals ComputeKktResiduals(const BoxAffineProjectionResult& result,
                                 const Vector& y, const BoxAffineSet& set) {
  const std::size_t n = set.dimension();
  RequireLength(result.x, n, "kkt: x");
  RequireLength(result.lambda1, n, "kkt: lambda1");
  RequireLength(result.lambda2, n, "kkt: lambda2");
  RequireLength(y, n, "kkt: y");
  RequireLength(result.mu, set.equality_rows(), "kkt: mu");

  KktResiduals k;
  const Vector shift = MatVecTranspose(set.matrix(), result.mu);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = result.x[i];
    const double l1 = result.lambda1[i];
    const double l2 = result.lambda2[i];
    const double lo = set.lower()[i];
    const double hi = set.upper()[i];
    k.stationarity = std::max(k.stationarity, std::abs(x - y[i] - l1 + l2 + shift[i]));
    k.box_violation = std::max({k.box_violation, lo - x, x - hi});
    k.dual_negativity = std::max({k.dual_negativity, -l1, -l2});
    k.complementarity = std::max(
        {k.complementarity, std::abs(l1 * (x - lo)), std::abs(l2 * (x - hi))});
  }
  k.equality = EqualityResidual(result.x, set);
  return k;
}

}  // namespace projopt
