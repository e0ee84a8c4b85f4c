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

#include "fockcond/phase_space.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "fockcond/error.hpp"
#include "fockcond/optimize.hpp"

namespace fockcond {

namespace {

double wrap_angle(double phi) {
  double w = std::remainder(phi, 2.0 * std::numbers::pi);
  if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
  return w;
}

std::vector<double> half_log_factorials(int cutoff) {
  std::vector<double> out(static_cast<std::size_t>(cutoff) + 1);
  for (int n = 0; n <= cutoff; ++n) out[static_cast<std::size_t>(n)] = 0.5 * std::lgamma(n + 1.0);
  return out;
}

Complex overlap_with_table(Complex beta, const FockVector& state,
                           const std::vector<double>& half_lf) {
  const double r = std::abs(beta);
  if (r == 0.0) return state[0];
  const double log_r = std::log(r);
  const double arg = std::arg(beta);
  const double base = -0.5 * r * r;
  Complex sum = 0.0;
  for (int n = 0; n <= state.cutoff(); ++n) {
    const Complex c = state[n];
    if (c == Complex(0.0)) continue;
    const double log_mag = base + n * log_r - half_lf[static_cast<std::size_t>(n)];
    sum += std::polar(std::exp(log_mag), -n * arg) * c;
  }
  return sum;
}

}  // namespace

double Axis::at(std::size_t i) const {
  return lo + static_cast<double>(i) * spacing();
}

double Axis::spacing() const {
  return (hi - lo) / static_cast<double>(points - 1);
}

Complex coherent_overlap(Complex beta, const FockVector& state) {
  return overlap_with_table(beta, state, half_log_factorials(state.cutoff()));
}

QGrid q_function(const FockVector& state, const GridSpec& grid, QConvention convention) {
  for (const Axis* axis : {&grid.x, &grid.p}) {
    if (axis->points < 2 || !(axis->hi > axis->lo)) {
      throw Error(ErrorCode::InvalidArgument, "q_function: each axis needs >= 2 ordered points");
    }
  }
  const FockVector psi = convention == QConvention::Normalized ? state.normalized() : state;
  const double scale = convention == QConvention::Normalized ? 1.0 / std::numbers::pi : 1.0;
  const auto half_lf = half_log_factorials(psi.cutoff());
  const double leak_radius2 = 0.5 * psi.cutoff();

  QGrid q{grid, convention,
          Eigen::MatrixXd(static_cast<Eigen::Index>(grid.p.points),
                          static_cast<Eigen::Index>(grid.x.points)),
          false};
  for (std::size_t ip = 0; ip < grid.p.points; ++ip) {
    for (std::size_t ix = 0; ix < grid.x.points; ++ix) {
      const Complex beta(grid.x.at(ix), grid.p.at(ip));
      if (std::norm(beta) > leak_radius2) q.leakage_warning = true;
      q.values(static_cast<Eigen::Index>(ip), static_cast<Eigen::Index>(ix)) =
          scale * std::norm(overlap_with_table(beta, psi, half_lf));
    }
  }
  return q;
}

double q_integral(const QGrid& q) {
  return q.values.sum() * q.spec.x.spacing() * q.spec.p.spacing();
}

Complex gaussian_amplitude(double alpha, double theta, double phi) {
  const double r = std::abs(alpha);
  const double d = theta - 2.0 * r * phi;
  return std::polar(std::exp(-d * d / 8.0), -phi * r * r + theta * r);
}

Complex gaussian_cos_amplitude(double alpha, double theta, double phi) {
  return 0.5 * (gaussian_amplitude(alpha, theta, phi) + gaussian_amplitude(alpha, -theta, phi));
}

CircleAmplitude exact_circle_amplitude(double alpha, double theta, double phi, int cutoff) {
  const double r = std::abs(alpha);
  const int n_max = cutoff < 0 ? default_cutoff(r) : cutoff;
  const double mean = r * r;
  Complex sum = 0.0;
  if (r == 0.0) {
    sum = 1.0;
  } else {
    const double log_mean = std::log(mean);
    for (int n = 0; n <= n_max; ++n) {
      const double weight = std::exp(-mean + n * log_mean - std::lgamma(n + 1.0));
      sum += std::polar(weight, theta * std::sqrt(static_cast<double>(n)) - phi * n);
    }
  }
  return {sum, mean > 0.5 * n_max};
}

PeakComparison compare_gaussian_peak(double alpha, double theta, int cutoff) {
  const double r = std::abs(alpha);
  const int n_max = cutoff < 0 ? default_cutoff(r) : cutoff;
  auto neg_mag = [&](double phi) { return -std::abs(exact_circle_amplitude(r, theta, phi, n_max).value); };
  constexpr double kStep = 1e-3;
  double best_phi = 0.0;
  double best = neg_mag(0.0);
  for (double phi = kStep; phi <= std::numbers::pi; phi += kStep) {
    const double v = neg_mag(phi);
    if (v < best) {
      best = v;
      best_phi = phi;
    }
  }
  const Minimum1D m = golden_section_minimize(neg_mag, std::max(0.0, best_phi - kStep),
                                              std::min(std::numbers::pi, best_phi + kStep), 1e-10);
  PeakComparison out{};
  out.exact_angle = m.x;
  out.predicted_angle = theta / (2.0 * r);
  out.exact_peak = -m.value;
  out.gaussian_peak = std::abs(gaussian_amplitude(r, theta, m.x));
  out.relative_discrepancy = std::abs(out.gaussian_peak - out.exact_peak) / out.exact_peak;
  return out;
}

ConditionalOutcome conditional_cat(double alpha, double theta, int cutoff) {
  const int n_max = cutoff < 0 ? default_cutoff(alpha) : cutoff;
  const CoherentState coherent = coherent_state(alpha, n_max);
  return apply_upsilon(coherent.state, theta, AtomLevel::Ground);
}

std::vector<double> number_distribution(const FockVector& state) {
  const double total = state.norm_squared();
  std::vector<double> out(state.dim());
  for (int n = 0; n <= state.cutoff(); ++n) out[static_cast<std::size_t>(n)] = std::norm(state[n]) / total;
  return out;
}

namespace {

struct CatFit {
  double fidelity;
  double xi;
};

// max over xi of |<gamma|psi> + e^{-i xi} <-gamma|psi>|^2 / (2 + 2 cos(xi) e^{-2|gamma|^2})
CatFit best_xi_for(Complex gamma, const FockVector& psi, const std::vector<double>& half_lf) {
  const Complex plus = overlap_with_table(gamma, psi, half_lf);
  const Complex minus = overlap_with_table(-gamma, psi, half_lf);
  const double self_overlap = std::exp(-2.0 * std::norm(gamma));
  auto neg_fid = [&](double xi) {
    const double norm2 = 2.0 + 2.0 * std::cos(xi) * self_overlap;
    return -std::norm(plus + std::polar(1.0, -xi) * minus) / norm2;
  };
  constexpr int kXiGrid = 64;
  const double h = 2.0 * std::numbers::pi / kXiGrid;
  int best_k = 0;
  double best = neg_fid(0.0);
  for (int k = 1; k < kXiGrid; ++k) {
    const double v = neg_fid(k * h);
    if (v < best) {
      best = v;
      best_k = k;
    }
  }
  const Minimum1D m = golden_section_minimize(neg_fid, (best_k - 1) * h, (best_k + 1) * h, 1e-10);
  return {std::min(1.0, -m.value), wrap_angle(m.x)};
}

}  // namespace

CatReport cat_diagnostics(const FockVector& state, double alpha, double theta) {
  const double r = std::abs(alpha);
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "cat_diagnostics: alpha must be nonzero");
  const FockVector psi = state.normalized();
  const auto half_lf = half_log_factorials(psi.cutoff());
  auto q_at = [&](double phi) { return std::norm(overlap_with_table(std::polar(r, phi), psi, half_lf)); };

  constexpr int kScan = 2048;
  std::vector<double> q(kScan);
  double q_max = 0.0;
  for (int k = 0; k < kScan; ++k) {
    q[static_cast<std::size_t>(k)] = q_at(-std::numbers::pi + k * kLobeScanStep);
    q_max = std::max(q_max, q[static_cast<std::size_t>(k)]);
  }

  CatReport report{};
  report.predicted_angle = wrap_angle(theta / (2.0 * r));
  for (int k = 0; k < kScan; ++k) {
    const double here = q[static_cast<std::size_t>(k)];
    const double left = q[static_cast<std::size_t>((k + kScan - 1) % kScan)];
    const double right = q[static_cast<std::size_t>((k + 1) % kScan)];
    // Ripples far below the main lobes are not counted.
    if (!(here >= left && here > right && here >= 0.1 * q_max)) continue;
    const double phi0 = -std::numbers::pi + k * kLobeScanStep;
    const Minimum1D m = golden_section_minimize([&](double phi) { return -q_at(phi); },
                                                phi0 - kLobeScanStep, phi0 + kLobeScanStep, 1e-10);
    report.lobes.push_back({wrap_angle(m.x), -m.value});
  }
  std::sort(report.lobes.begin(), report.lobes.end(),
            [](const Lobe& a, const Lobe& b) { return a.angle < b.angle; });
  report.degenerate = report.lobes.size() < 2;

  std::vector<Lobe> by_height = report.lobes;
  std::sort(by_height.begin(), by_height.end(), [](const Lobe& a, const Lobe& b) {
    return a.height != b.height ? a.height > b.height : a.angle < b.angle;
  });
  if (!report.degenerate) {
    report.lobe_separation = std::abs(std::polar(r, by_height[0].angle) - std::polar(r, by_height[1].angle));
  }

  const double start_angle = by_height.empty() ? 0.0 : by_height.front().angle;
  const Complex gamma0 = std::polar(r, start_angle);
  auto objective = [&](const std::array<double, 2>& g) {
    return -best_xi_for(Complex(g[0], g[1]), psi, half_lf).fidelity;
  };
  const Minimum2D m = nelder_mead_2d(objective, {gamma0.real(), gamma0.imag()}, 0.25, 1e-8, 1e-13, 2000);
  report.best_gamma = Complex(m.x[0], m.x[1]);
  const CatFit fit = best_xi_for(report.best_gamma, psi, half_lf);
  report.best_cat_fidelity = fit.fidelity;
  report.best_xi = fit.xi;
  return report;
}

}  // namespace fockcond
