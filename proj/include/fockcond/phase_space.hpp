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

// Husimi Q-function of conditional states, the large-|alpha| Gaussian
// approximation of the circle amplitude, and cat-state diagnostics.

#include <cstddef>
#include <numbers>
#include <vector>

#include "fockcond/atom_field.hpp"
#include "fockcond/fock_space.hpp"

namespace fockcond {

enum class QConvention {
  /// |<beta|psi>|^2 of the raw (unnormalized) state, no 1/pi.
  PaperUnnormalized,
  /// |<beta|psi>|^2 / pi of the normalized state; integrates to one.
  Normalized,
};

struct Axis {
  double lo;
  double hi;
  std::size_t points;

  double at(std::size_t i) const;
  double spacing() const;
};

/// beta = x + i p.
struct GridSpec {
  Axis x;
  Axis p;
};

struct QGrid {
  GridSpec spec;
  QConvention convention;
  /// values(ip, ix): one row per p sample, one column per x sample.
  Eigen::MatrixXd values;
  /// Set when |beta|^2 exceeds cutoff/2 somewhere on the grid.
  bool leakage_warning;
};

/// <beta|psi> = sum_n e^{-|beta|^2/2} conj(beta)^n / sqrt(n!) c_n, evaluated
/// term by term in log space.
Complex coherent_overlap(Complex beta, const FockVector& state);

/// Requires at least two points per axis.
QGrid q_function(const FockVector& state, const GridSpec& grid,
                 QConvention convention = QConvention::PaperUnnormalized);

/// Riemann sum of the grid values times the cell area.
double q_integral(const QGrid& q);

/// Large-|alpha| approximation of <beta| e^{i theta sqrt(n)} |alpha> on the
/// circle beta = |alpha| e^{i phi}:
/// e^{-i phi |alpha|^2 + i theta |alpha|} exp[-(theta - 2|alpha| phi)^2 / 8].
/// Intended for |alpha| >= 5.
Complex gaussian_amplitude(double alpha, double theta, double phi);

/// (A(phi; theta) + A(phi; -theta)) / 2, the cos(theta sqrt(n)) version.
Complex gaussian_cos_amplitude(double alpha, double theta, double phi);

struct CircleAmplitude {
  Complex value;
  bool leakage_warning;  // |alpha|^2 > cutoff / 2
};

/// sum_{n <= cutoff} p_n e^{i (theta sqrt(n) - phi n)} with Poisson weights
/// p_n = e^{-|alpha|^2} |alpha|^{2n} / n!. cutoff < 0 picks default_cutoff.
CircleAmplitude exact_circle_amplitude(double alpha, double theta, double phi, int cutoff = -1);

struct PeakComparison {
  double exact_angle;      // argmax of |exact_circle_amplitude| over phi in [0, pi]
  double predicted_angle;  // theta / (2 |alpha|)
  double exact_peak;
  double gaussian_peak;
  double relative_discrepancy;  // | |gaussian| - |exact| | / |exact| at the exact peak
};

/// Dense phi scan (step 1e-3) refined by golden section.
PeakComparison compare_gaussian_peak(double alpha, double theta, int cutoff = -1);

/// cos(theta sqrt(n)) |alpha> for real alpha >= 0.
ConditionalOutcome conditional_cat(double alpha, double theta, int cutoff = -1);

/// |c_n|^2 / sum |c_m|^2.
std::vector<double> number_distribution(const FockVector& state);

struct Lobe {
  double angle;   // radians in (-pi, pi]
  double height;  // Q on the circle, normalized state, no 1/pi
};

struct CatReport {
  std::vector<Lobe> lobes;  // ascending angle
  bool degenerate;          // fewer than two lobes
  double predicted_angle;   // theta / (2|alpha|) wrapped to (-pi, pi]
  double lobe_separation;   // |beta_1 - beta_2| of the two tallest lobes, 0 if degenerate
  double best_cat_fidelity;
  Complex best_gamma;
  double best_xi;
};

/// Angular scan step used for lobe detection.
inline constexpr double kLobeScanStep = 2.0 * std::numbers::pi / 2048.0;

/// Lobes of Q on |beta| = alpha and the best overlap with
/// N(|gamma> + e^{i xi} |-gamma>). Accepts a raw or normalized state.
CatReport cat_diagnostics(const FockVector& state, double alpha, double theta);

}  // namespace fockcond
