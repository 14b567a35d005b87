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

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace projopt {
namespace {

void ExpectVectorEq(const Vector& actual, std::vector<double> expected) {
  ASSERT_EQ(actual.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_DOUBLE_EQ(actual[i], expected[i]) << "index " << i;
  }
}

TEST(VectorTest, RejectsNonFiniteEntries) {
  EXPECT_THROW(Vector({1.0, std::nan("")}), Error);
  EXPECT_THROW(Vector({HUGE_VAL}), Error);
  try {
    Vector v{0.0, 1.0, -INFINITY};
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFinite);
    EXPECT_NE(std::string(e.what()).find("index 2"), std::string::npos);
  }
}

TEST(DenseMatrixTest, RejectsWrongEntryCount) {
  EXPECT_THROW(DenseMatrix(2, 2, {1.0, 2.0, 3.0}), Error);
  EXPECT_THROW(DenseMatrix({{1.0, 2.0}, {3.0}}), Error);
}

TEST(MatVecTest, Examples) {
  ExpectVectorEq(MatVec(DenseMatrix::Identity(2), Vector{3.0, -1.0}), {3.0, -1.0});
  ExpectVectorEq(MatVec(DenseMatrix{{1.0, 1.0}}, Vector{0.4, 0.6}), {1.0});
  ExpectVectorEq(MatVec(DenseMatrix{{2.0, 0.0}, {0.0, 0.0}}, Vector{1.0, 5.0}),
                 {2.0, 0.0});
}

TEST(MatVecTest, DimensionMismatchNamesBothSizes) {
  try {
    MatVec(DenseMatrix{{1.0, 1.0}}, Vector{1.0, 2.0, 3.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("1x2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("length 3"), std::string::npos) << msg;
  }
}

TEST(MatVecTransposeTest, Examples) {
  ExpectVectorEq(MatVecTranspose(DenseMatrix{{1.0, 1.0}}, Vector{2.0}), {2.0, 2.0});
  ExpectVectorEq(MatVecTranspose(DenseMatrix::Identity(3), Vector{1.0, 2.0, 3.0}),
                 {1.0, 2.0, 3.0});
  ExpectVectorEq(MatVecTranspose(DenseMatrix{{1.0, 0.0}, {1.0, 1.0}}, Vector{1.0, 1.0}),
                 {2.0, 1.0});
  EXPECT_THROW(MatVecTranspose(DenseMatrix{{1.0, 1.0}}, Vector{1.0, 1.0}), Error);
}

TEST(MatVecTransposeTest, UnitMultiplierSelectsRow) {
  testing::InstanceGenerator gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = gen.Index(1, 5), n = gen.Index(1, 7);
    std::vector<double> entries(m * n);
    for (double& e : entries) e = gen.Uniform(-3.0, 3.0);
    const DenseMatrix a(m, n, entries);
    for (std::size_t i = 0; i < m; ++i) {
      Vector unit(m);
      unit.Set(i, 1.0);
      const Vector col = MatVecTranspose(a, unit);
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(col[j], a(i, j));
    }
  }
}

TEST(ClipTest, Examples) {
  ExpectVectorEq(Clip(Vector{0.5}, Vector{0.0}, Vector{1.0}), {0.5});
  ExpectVectorEq(Clip(Vector{-3.0, 9.0}, Vector{0.0, 0.0}, Vector{1.0, 1.0}),
                 {0.0, 1.0});
  ExpectVectorEq(Clip(Vector{0.0, 0.0}, Vector{0.0, 0.0}, Vector{0.0, 0.0}),
                 {0.0, 0.0});
}

TEST(ClipTest, InvalidBoxIdentifiesIndex) {
  try {
    Clip(Vector{0.0, 0.0}, Vector{0.0, 2.0}, Vector{1.0, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidBox);
    EXPECT_NE(std::string(e.what()).find("index 1"), std::string::npos);
  }
}

TEST(ClipTest, IdempotentAndInsideBox) {
  testing::InstanceGenerator gen(3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = gen.Index(0, 10);
    std::vector<double> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double p = gen.Uniform(-5, 5), q = gen.Uniform(-5, 5);
      lo[i] = std::min(p, q);
      hi[i] = std::max(p, q);
    }
    const Vector u(lo), v(hi);
    const Vector x = gen.UniformVector(n, -10, 10);
    const Vector once = Clip(x, u, v);
    EXPECT_EQ(Clip(once, u, v), once);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_LE(u[i], once[i]);
      EXPECT_LE(once[i], v[i]);
    }
  }
}

TEST(SolveLinearSystemTest, Examples) {
  ExpectVectorEq(SolveLinearSystem(DenseMatrix::Identity(2), Vector{4.0, 5.0}),
                 {4.0, 5.0});
  ExpectVectorEq(SolveLinearSystem(DenseMatrix{{2.0, 0.0}, {0.0, 4.0}}, Vector{2.0, 8.0}),
                 {1.0, 2.0});
  try {
    SolveLinearSystem(DenseMatrix{{0.0, 0.0}, {0.0, 0.0}}, Vector{1.0, 0.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingular);
  }
}

TEST(SolveLinearSystemTest, NeedsPivoting) {
  // Zero leading entry: elimination without row exchange would divide by 0.
  ExpectVectorEq(SolveLinearSystem(DenseMatrix{{0.0, 1.0}, {1.0, 0.0}}, Vector{3.0, 7.0}),
                 {7.0, 3.0});
}

TEST(SolveLinearSystemTest, RankDeficientIsSingular) {
  EXPECT_THROW(
      SolveLinearSystem(DenseMatrix{{1.0, 2.0}, {2.0, 4.0}}, Vector{1.0, 2.0}),
      Error);
  EXPECT_THROW(SolveLinearSystem(DenseMatrix(2, 3), Vector{1.0, 2.0}), Error);
}

TEST(SolveLinearSystemTest, ReproducesRhsOnWellConditionedSystems) {
  testing::InstanceGenerator gen(2024);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = gen.Index(1, 50);
    std::vector<double> entries(n * n);
    for (double& e : entries) e = gen.Uniform(-1.0, 1.0);
    const DenseMatrix m(n, n, entries);
    const auto svd = testing::ToEigen(m).jacobiSvd();
    const auto& sv = svd.singularValues();
    if (sv[sv.size() - 1] == 0.0 || sv[0] / sv[sv.size() - 1] > 1e6) continue;
    const Vector rhs = gen.UniformVector(n, -10.0, 10.0);
    const Vector x = SolveLinearSystem(m, rhs);
    EXPECT_LE(NormInf(MatVec(m, x) - rhs), 1e-8 * (1.0 + NormInf(rhs)))
        << "n=" << n;
    ++checked;
  }
}

TEST(NormsTest, Examples) {
  EXPECT_DOUBLE_EQ(Norm2(Vector{3.0, 4.0}), 5.0);
  EXPECT_DOUBLE_EQ(Dot(Vector{1.0, 0.0}, Vector{0.0, 1.0}), 0.0);
  EXPECT_EQ(Norm2(Vector()), 0.0);
  EXPECT_EQ(NormInf(Vector{-7.0, 2.0}), 7.0);
  EXPECT_THROW(Dot(Vector{1.0}, Vector{1.0, 2.0}), Error);
}

TEST(NormsTest, Norm2DoesNotOverflowOnLargeEntries) {
  EXPECT_DOUBLE_EQ(Norm2(Vector{3e200, 4e200}), 5e200);
}

}  // namespace
}  // namespace projopt
