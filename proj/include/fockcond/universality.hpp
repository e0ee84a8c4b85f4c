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

#pragma once

// Displaced square-root-number generator D^dagger(alpha) sqrt(n) D(alpha)
// against its large-|alpha| series: constant, displacement x/2, rotation
// n/(2|alpha|), squeezing -x^2/(8|alpha|) and the cubic term
// -(n x + x n)/(8|alpha|^2).

#include <optional>
#include <span>
#include <vector>

#include "fockcond/fock_space.hpp"

namespace fockcond {

enum class SeriesTerms {
  /// The five terms above.
  Truncated,
  /// Truncated series without the cubic term.
  WithoutCubic,
  /// Truncated series plus x^3 / (16|alpha|^2), the remaining term of the same
  /// order in the expansion of sqrt(|alpha|^2 + |alpha| x + n).
  Complete,
};

/// ceil((|alpha| + 6)^2).
int universality_cutoff(double alpha);

/// Largest displacement residual_scaling accepts (cutoff about 485).
inline constexpr double kMaxScalingAlpha = 16.0;

/// G = D^dagger(alpha) sqrt(n) D(alpha), Hermitized. Throws NumericalGuard
/// when cutoff < (|alpha| + 6)^2.
FockOperator displaced_generator(Complex alpha, int cutoff);

/// Series generator for |alpha| > 0 and phase phi.
FockOperator series_generator(double alpha, double phi, int cutoff,
                              SeriesTerms terms = SeriesTerms::Truncated);

struct GeneratorComparison {
  double alpha;
  int cutoff;
  int subspace_dim;      // k: projector onto n <= k
  double residual_norm;  // max |(G_exact - G_series)_{mn}|, m, n <= k
};

struct ScalingResult {
  std::vector<GeneratorComparison> points;
  /// Least-squares slope of log R against log alpha; empty for one point.
  std::optional<double> exponent;
};

GeneratorComparison compare_generators(double alpha, int subspace_dim,
                                       SeriesTerms terms = SeriesTerms::Truncated,
                                       int cutoff = -1);

/// Alphas must be >= 4, strictly increasing and <= kMaxScalingAlpha;
/// subspace_dim in [0, 6].
ScalingResult residual_scaling(std::span<const double> alphas, int subspace_dim,
                               SeriesTerms terms = SeriesTerms::Truncated);

/// ||exp(i theta G) - D^dagger sqrt_number_phase(theta) D||_max on n <= interior.
double unitary_consistency(Complex alpha, double theta, int cutoff, int interior = 20);

/// Slope of the least-squares line through (log x, log y).
double fit_log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace fockcond
