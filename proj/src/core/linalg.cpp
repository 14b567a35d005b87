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

#include "core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace projopt {

namespace {

void RequireSameSize(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(op) + ": dimension mismatch (" +
                    std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

void RequireFinite(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::kNonFinite, std::string(what) +
                                             ": non-finite entry at index " +
                                             std::to_string(i));
    }
  }
}

Vector::Vector(std::size_t n, double value) : entries_(n, value) {
  if (n > 0) RequireFinite(std::span<const double>(&value, 1), "Vector");
}

Vector::Vector(std::vector<double> entries) : entries_(std::move(entries)) {
  RequireFinite(entries_, "Vector");
}

Vector::Vector(std::initializer_list<double> entries) : entries_(entries) {
  RequireFinite(entries_, "Vector");
}

Vector::Vector(std::span<const double> entries)
    : entries_(entries.begin(), entries.end()) {
  RequireFinite(entries_, "Vector");
}

void Vector::Set(std::size_t i, double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kNonFinite,
                "Vector: non-finite entry at index " + std::to_string(i));
  }
  entries_.at(i) = value;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "DenseMatrix: expected " + std::to_string(rows_ * cols_) +
                    " entries for " + std::to_string(rows_) + "x" +
                    std::to_string(cols_) + ", got " +
                    std::to_string(entries_.size()));
  }
  RequireFinite(entries_, "DenseMatrix");
}

DenseMatrix::DenseMatrix(
    std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "DenseMatrix: row " + std::to_string(r) + " has " +
                      std::to_string(row.size()) + " entries, expected " +
                      std::to_string(cols_));
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
    ++r;
  }
  RequireFinite(entries_, "DenseMatrix");
}

DenseMatrix DenseMatrix::Identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1.0;
  return m;
}

DenseMatrix DenseMatrix::FromRows(const std::vector<std::vector<double>>& rows,
                                  std::size_t cols) {
  std::vector<double> flat;
  flat.reserve(rows.size() * cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "DenseMatrix: row " + std::to_string(r) + " has " +
                      std::to_string(rows[r].size()) + " entries, expected " +
                      std::to_string(cols));
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return DenseMatrix(rows.size(), cols, std::move(flat));
}

void DenseMatrix::Set(std::size_t i, std::size_t j, double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kNonFinite, "DenseMatrix: non-finite entry");
  }
  entries_.at(i * cols_ + j) = value;
}

Vector operator+(const Vector& a, const Vector& b) {
  RequireSameSize(a.size(), b.size(), "add");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return Vector(std::move(out));
}

Vector operator-(const Vector& a, const Vector& b) {
  RequireSameSize(a.size(), b.size(), "subtract");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return Vector(std::move(out));
}

Vector operator*(double s, const Vector& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return Vector(std::move(out));
}

double Dot(const Vector& x, const Vector& y) {
  RequireSameSize(x.size(), y.size(), "dot");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

double Norm2(const Vector& x) {
  // Scaled accumulation so that large entries (y = -t c with t ~ 1e8) do not
  // overflow the sum of squares.
  double scale = NormInf(x);
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (double v : x) {
    const double s = v / scale;
    acc += s * s;
  }
  return scale * std::sqrt(acc);
}

double NormInf(const Vector& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double Sum(const Vector& x) {
  double acc = 0.0;
  for (double v : x) acc += v;
  return acc;
}

Vector MatVec(const DenseMatrix& a, const Vector& x) {
  if (x.size() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matvec: matrix is " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " but vector has length " +
                    std::to_string(x.size()));
  }
  std::vector<double> out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += row[j] * x[j];
    out[i] = acc;
  }
  return Vector(std::move(out));
}

Vector MatVecTranspose(const DenseMatrix& a, const Vector& mu) {
  if (mu.size() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matvec_transpose: matrix is " + std::to_string(a.rows()) +
                    "x" + std::to_string(a.cols()) +
                    " but multiplier has length " + std::to_string(mu.size()));
  }
  std::vector<double> out(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += row[j] * mu[i];
  }
  return Vector(std::move(out));
}

Vector Clip(const Vector& x, const Vector& lower, const Vector& upper) {
  RequireSameSize(x.size(), lower.size(), "clip");
  RequireSameSize(x.size(), upper.size(), "clip");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (lower[i] > upper[i]) {
      throw Error(ErrorCode::kInvalidBox,
                  "clip: lower bound exceeds upper bound at index " +
                      std::to_string(i));
    }
    out[i] = std::clamp(x[i], lower[i], upper[i]);
  }
  return Vector(std::move(out));
}

Vector SolveLinearSystem(const DenseMatrix& m, const Vector& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "solve_linear_system: matrix is " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()) + ", not square");
  }
  RequireSameSize(n, rhs.size(), "solve_linear_system");

  std::vector<double> a = m.values();
  std::vector<double> b = rhs.values();
  double max_entry = 0.0;
  for (double v : a) max_entry = std::max(max_entry, std::abs(v));
  const double threshold = kSingularityThreshold * max_entry;
  if (n > 0 && max_entry == 0.0) {
    throw Error(ErrorCode::kSingular, "solve_linear_system: zero matrix");
  }

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a[i * n + k]) > std::abs(a[pivot * n + k])) pivot = i;
    }
    if (std::abs(a[pivot * n + k]) <= threshold) {
      throw Error(ErrorCode::kSingular,
                  "solve_linear_system: pivot below singularity threshold in "
                  "column " + std::to_string(k));
    }
    if (pivot != k) {
      std::swap_ranges(a.begin() + k * n, a.begin() + (k + 1) * n,
                       a.begin() + pivot * n);
      std::swap(b[k], b[pivot]);
    }
    const double diag = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = a[i * n + k] / diag;
      if (factor == 0.0) continue;
      a[i * n + k] = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= factor * a[k * n + j];
      b[i] -= factor * b[k];
    }
  }

  std::vector<double> x(n, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    double acc = b[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= a[k * n + j] * x[j];
    x[k] = acc / a[k * n + k];
  }
  return Vector(std::move(x));
}

}  // namespace projopt
