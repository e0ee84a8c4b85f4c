// Copyright 2026 The fockcond Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fockcond/error.hpp"
#include "fockcond/universality.hpp"

namespace fockcond {
namespace {

const std::vector<double> kAlphas{4.0, 6.0, 8.0, 12.0, 16.0};

TEST(DisplacedGenerator, NoDisplacement) {
  const FockOperator g = displaced_generator(0.0, 40);
  for (int n = 0; n <= 40; ++n) EXPECT_NEAR(g(n, n).real(), std::sqrt(static_cast<double>(n)), 1e-12);
  EXPECT_LT(max_abs_diff(g.matrix(), g.matrix().diagonal().asDiagonal().toDenseMatrix()), 1e-12);
}

TEST(DisplacedGenerator, VacuumExpectationIsPoissonMeanOfSqrtN) {
  const double mean = 16.0;
  double oracle = 0.0;
  for (int n = 1; n <= 200; ++n) {
    oracle += std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0)) * std::sqrt(static_cast<double>(n));
  }
  const FockOperator g = displaced_generator(4.0, 120);
  EXPECT_NEAR(g(0, 0).real(), oracle, 1e-9);
}

TEST(DisplacedGenerator, HermitianAndGuarded) {
  const FockOperator g = displaced_generator(Complex(3.0, 1.0), 100);
  EXPECT_LT(max_abs_diff(g.matrix(), g.matrix().adjoint(), 6), 1e-10);
  try {
    displaced_generator(8.0, 100);
    FAIL() << "expected a truncation guard";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NumericalGuard);
  }
  EXPECT_EQ(universality_cutoff(16.0), 484);
}

TEST(SeriesGenerator, VacuumConstantTerm) {
  for (double alpha : {4.0, 9.0}) {
    const FockOperator s = series_generator(alpha, 0.0, 30);
    EXPECT_NEAR(s(0, 0).real(), alpha - 1.0 / (8.0 * alpha), 1e-14);
  }
  EXPECT_THROW(series_generator(0.0, 0.0, 10), Error);
}

TEST(SeriesGenerator, CubicTermDifference) {
  const double alpha = 5.0;
  const int n = 20;
  const FockOperator full = series_generator(alpha, 0.3, n, SeriesTerms::Truncated);
  const FockOperator drop = series_generator(alpha, 0.3, n, SeriesTerms::WithoutCubic);
  const FockOperator x = quadrature(0.3, n);
  const FockOperator num = number_operator(n);
  const FockOperator term = Complex(1.0 / (8.0 * alpha * alpha)) * (num * x + x * num);
  EXPECT_LT(max_abs_diff((drop - full).matrix(), term.matrix()), 1e-15);
  const FockOperator complete = series_generator(alpha, 0.3, n, SeriesTerms::Complete);
  const FockOperator x3 = Complex(1.0 / (16.0 * alpha * alpha)) * (x * x * x);
  EXPECT_LT(max_abs_diff((complete - full).matrix(), x3.matrix()), 1e-15);
}

TEST(SeriesGenerator, HermitianOnSubspace) {
  const FockOperator s = series_generator(6.0, 1.1, 40);
  EXPECT_LT(max_abs_diff(s.matrix(), s.matrix().adjoint(), 6), 1e-10);
}

TEST(ResidualScaling, DecreasingResiduals) {
  const ScalingResult r = residual_scaling(kAlphas, 3);
  ASSERT_EQ(r.points.size(), kAlphas.size());
  for (std::size_t i = 1; i < r.points.size(); ++i) {
    EXPECT_LT(r.points[i].residual_norm, r.points[i - 1].residual_norm) << i;
  }
}

TEST(ResidualScaling, DroppingCubicTermRaisesExponent) {
  const ScalingResult truncated = residual_scaling(kAlphas, 3, SeriesTerms::Truncated);
  const ScalingResult dropped = residual_scaling(kAlphas, 3, SeriesTerms::WithoutCubic);
  ASSERT_TRUE(dropped.exponent.has_value());
  EXPECT_GT(*dropped.exponent, -2.5);
  EXPECT_NEAR(*dropped.exponent, -2.0, 0.2);
  EXPECT_GE(*dropped.exponent, *truncated.exponent - 0.05);
}

TEST(ResidualScaling, CompleteSeriesReachesThirdOrder) {
  const ScalingResult r = residual_scaling(kAlphas, 3, SeriesTerms::Complete);
  ASSERT_TRUE(r.exponent.has_value());
  EXPECT_LE(*r.exponent, -2.5);
  EXPECT_GE(*r.exponent, -3.5);
}

TEST(ResidualScaling, SinglePointHasNoExponent) {
  const std::vector<double> one{8.0};
  const ScalingResult r = residual_scaling(one, 3);
  EXPECT_FALSE(r.exponent.has_value());
  ASSERT_EQ(r.points.size(), 1u);
  EXPECT_GT(r.points[0].residual_norm, 0.0);
}

TEST(ResidualScaling, InputGuards) {
  const std::vector<double> small{2.0, 6.0};
  const std::vector<double> unordered{8.0, 6.0};
  const std::vector<double> large{4.0, 20.0};
  EXPECT_THROW(residual_scaling(small, 3), Error);
  EXPECT_THROW(residual_scaling(unordered, 3), Error);
  EXPECT_THROW(residual_scaling(kAlphas, 7), Error);
  try {
    residual_scaling(large, 3);
    FAIL() << "expected a truncation guard";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NumericalGuard);
  }
}

TEST(UnitaryConsistency, Examples) {
  EXPECT_LT(unitary_consistency(4.0, 0.0, 120), 1e-12);
  EXPECT_LE(unitary_consistency(4.0, 1.0, 120), 1e-8);
  EXPECT_LE(unitary_consistency(8.0, M_PI, 250), 1e-6);
}

TEST(LogLogFit, ExactPowerLaw) {
  const std::vector<double> x{1.0, 2.0, 4.0, 8.0};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, -2.75));
  EXPECT_NEAR(fit_log_log_slope(x, y), -2.75, 1e-12);
}

}  // namespace
}  // namespace fockcond
