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

// Dense linear algebra used by the projection and LP solvers. Everything here
// is a pure function over immutable values.

#ifndef PROJOPT_CORE_LINALG_HPP_
#define PROJOPT_CORE_LINALG_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "core/error.hpp"

namespace projopt {

// A finite real vector. Construction rejects NaN and Inf.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n, double value = 0.0);
  explicit Vector(std::vector<double> entries);
  Vector(std::initializer_list<double> entries);
  explicit Vector(std::span<const double> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  double operator[](std::size_t i) const { return entries_[i]; }

  // Writes are unchecked; callers that write computed values go through
  // Set() so the finiteness invariant survives.
  void Set(std::size_t i, double value);

  std::span<const double> span() const noexcept { return entries_; }
  const std::vector<double>& values() const noexcept { return entries_; }
  const double* data() const noexcept { return entries_.data(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> entries_;
};

// Row-major m-by-n matrix of finite reals. A 0-by-n matrix is valid and is
// how an empty block of equality rows is represented.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix Identity(std::size_t n);
  static DenseMatrix FromRows(const std::vector<std::vector<double>>& rows,
                              std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  void Set(std::size_t i, std::size_t j, double value);

  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  const std::vector<double>& values() const noexcept { return entries_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

// Elementwise arithmetic. Dimension mismatches throw kDimensionMismatch.
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& a);

double Dot(const Vector& x, const Vector& y);
double Norm2(const Vector& x);
double NormInf(const Vector& x);
double Sum(const Vector& x);

// A x.
Vector MatVec(const DenseMatrix& a, const Vector& x);
// A^T mu.
Vector MatVecTranspose(const DenseMatrix& a, const Vector& mu);

// Elementwise median(lower_i, x_i, upper_i). Requires lower <= upper.
Vector Clip(const Vector& x, const Vector& lower, const Vector& upper);

// Gaussian elimination with partial (row) pivoting. Throws kSingular when a
// pivot falls below 1e-12 times the largest initial |entry| of m.
Vector SolveLinearSystem(const DenseMatrix& m, const Vector& rhs);

inline constexpr double kSingularityThreshold = 1e-12;

// Throws kNonFinite naming `what` and the first offending index.
void RequireFinite(std::span<const double> values, const char* what);

}  // namespace projopt

#endif  // PROJOPT_CORE_LINALG_HPP_
