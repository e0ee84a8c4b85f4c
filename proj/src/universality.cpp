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

#include "fockcond/universality.hpp"

#include <cmath>
#include <string>

#include "fockcond/error.hpp"

namespace fockcond {

int universality_cutoff(double alpha) {
  const double r = std::abs(alpha) + 6.0;
  return static_cast<int>(std::ceil(r * r));
}

FockOperator displaced_generator(Complex alpha, int cutoff) {
  const double guard = (std::abs(alpha) + 6.0) * (std::abs(alpha) + 6.0);
  if (static_cast<double>(cutoff) < guard) {
    throw Error(ErrorCode::NumericalGuard,
                "displaced_generator: cutoff " + std::to_string(cutoff) + " below (|alpha|+6)^2 = " +
                    std::to_string(guard));
  }
  const FockOperator d = displacement(alpha, cutoff);
  Eigen::VectorXd root(cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) root(n) = std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd g = d.matrix().adjoint() * root.asDiagonal() * d.matrix();
  g = 0.5 * (g + g.adjoint()).eval();
  return FockOperator(std::move(g));
}

FockOperator series_generator(double alpha, double phi, int cutoff, SeriesTerms terms) {
  const double r = std::abs(alpha);
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "series_generator: |alpha| must be > 0");
  const Eigen::MatrixXcd x = quadrature(phi, cutoff).matrix();
  const Eigen::MatrixXcd n = number_operator(cutoff).matrix();
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(cutoff + 1, cutoff + 1);
  Eigen::MatrixXcd g = r * eye + 0.5 * x + n / (2.0 * r) - x * x / (8.0 * r);
  if (terms != SeriesTerms::WithoutCubic) g -= (n * x + x * n) / (8.0 * r * r);
  if (terms == SeriesTerms::Complete) g += x * x * x / (16.0 * r * r);
  return FockOperator(std::move(g));
}

GeneratorComparison compare_generators(double alpha, int subspace_dim, SeriesTerms terms,
                                       int cutoff) {
  const int n_max = cutoff < 0 ? universality_cutoff(alpha) : cutoff;
  const FockOperator exact = displaced_generator(alpha, n_max);
  const FockOperator series = series_generator(alpha, 0.0, n_max, terms);
  return {alpha, n_max, subspace_dim, max_abs_diff(exact.matrix(), series.matrix(), subspace_dim)};
}

double fit_log_log_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "fit_log_log_slope: need two or more paired points");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = static_cast<double>(x.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

ScalingResult residual_scaling(std::span<const double> alphas, int subspace_dim, SeriesTerms terms) {
  if (alphas.empty()) throw Error(ErrorCode::InvalidArgument, "residual_scaling: no alphas");
  if (subspace_dim < 0 || subspace_dim > 6) {
    throw Error(ErrorCode::InvalidArgument, "residual_scaling: subspace dimension must be in [0, 6]");
  }
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] >= 4.0) || (i > 0 && !(alphas[i] > alphas[i - 1]))) {
      throw Error(ErrorCode::InvalidArgument, "residual_scaling: alphas must be >= 4 and increasing");
    }
    if (alphas[i] > kMaxScalingAlpha) {
      throw Error(ErrorCode::NumericalGuard,
                  "residual_scaling: alpha " + std::to_string(alphas[i]) + " exceeds truncation cap " +
                      std::to_string(kMaxScalingAlpha));
    }
  }
  ScalingResult out;
  std::vector<double> xs, ys;
  for (double a : alphas) {
    out.points.push_back(compare_generators(a, subspace_dim, terms));
    xs.push_back(a);
    ys.push_back(out.points.back().residual_norm);
  }
  if (xs.size() >= 2) out.exponent = fit_log_log_slope(xs, ys);
  return out;
}

double unitary_consistency(Complex alpha, double theta, int cutoff, int interior) {
  const FockOperator g = displaced_generator(alpha, cutoff);
  const FockOperator via_generator = expm_antihermitian(Complex(0.0, theta) * g);
  const FockOperator d = displacement(alpha, cutoff);
  const FockOperator via_conjugation = d.adjoint() * sqrt_number_phase(theta, cutoff) * d;
  return max_abs_diff(via_generator.matrix(), via_conjugation.matrix(), interior);
}

}  // namespace fockcond
