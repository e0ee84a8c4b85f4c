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

#include "fockcond/interaction_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <tuple>
#include <utility>

#include "fockcond/atom_field.hpp"
#include "fockcond/error.hpp"
#include "fockcond/optimize.hpp"

namespace fockcond {

namespace {

const std::vector<int> kNsTarget{1, 1, -1};

double spread_of(const std::vector<double>& amplitudes) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (double a : amplitudes) {
    lo = std::min(lo, std::abs(a));
    hi = std::max(hi, std::abs(a));
  }
  return hi - lo;
}

bool solution_order(const TauSolution& a, const TauSolution& b) {
  return std::tie(a.merit, a.taus) < std::tie(b.merit, b.taus);
}

}  // namespace

SignPattern::SignPattern(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw Error(ErrorCode::InvalidArgument, "SignPattern: empty");
  for (int s : signs_) {
    if (s != 1 && s != -1) {
      throw Error(ErrorCode::InvalidArgument, "SignPattern: entries must be +1 or -1");
    }
  }
}

std::vector<int> SignPattern::flips() const {
  std::vector<int> out;
  for (int n = 0; n <= cutoff(); ++n) {
    if (signs_[static_cast<std::size_t>(n)] < 0) out.push_back(n);
  }
  return out;
}

bool SignPattern::all_plus() const {
  return std::all_of(signs_.begin(), signs_.end(), [](int s) { return s > 0; });
}

bool is_sign_shift_state(std::int64_t n) {
  if (n < 2 || n % 2 != 0) return false;
  const std::int64_t half = n / 2;
  auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(half))));
  while (root * root > half) --root;
  while ((root + 1) * (root + 1) <= half) ++root;
  return root * root == half && root % 2 == 1;
}

SignPattern sign_pattern(int cutoff) {
  if (cutoff < 0) throw Error(ErrorCode::InvalidArgument, "sign_pattern: N must be >= 0");
  std::vector<int> signs(static_cast<std::size_t>(cutoff) + 1, 1);
  for (int n = 0; n <= cutoff; ++n) {
    if (is_sign_shift_state(n)) signs[static_cast<std::size_t>(n)] = -1;
  }
  return SignPattern(std::move(signs));
}

double chebyshev_merit(const std::vector<double>& amplitudes, const std::vector<int>& target) {
  if (amplitudes.size() != target.size()) {
    throw Error(ErrorCode::InvalidArgument, "chebyshev_merit: size mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    worst = std::max(worst, std::abs(amplitudes[i] - target[i]));
  }
  return worst;
}

double ns_merit(double tau) {
  return std::max(1.0 - std::cos(tau), 1.0 + std::cos(std::numbers::sqrt2 * tau));
}

std::vector<Convergent> sqrt2_convergents(std::int64_t max_denominator) {
  std::vector<Convergent> out;
  // sqrt(2) = [1; 2, 2, 2, ...]  =>  p' = p + 2q, q' = p + q
  Convergent c{1, 1};
  while (c.denominator <= max_denominator) {
    out.push_back(c);
    c = {c.numerator + 2 * c.denominator, c.numerator + c.denominator};
  }
  return out;
}

std::vector<TauSolution> ns_tau_candidates(double max_tau) {
  std::vector<TauSolution> out;
  if (!(max_tau > 2.0 * std::numbers::pi)) return out;
  // Seeds below max_tau need q <= max_tau / pi (+1 for the bracket overlap).
  const auto max_q = static_cast<std::int64_t>(max_tau / std::numbers::pi) + 2;
  for (const Convergent& c : sqrt2_convergents(max_q)) {
    if (c.numerator % 2 == 0 || c.denominator % 2 != 0) continue;
    const double at_cos_one = std::numbers::pi * static_cast<double>(c.denominator);
    const double at_cos_minus_one =
        std::numbers::pi * static_cast<double>(c.numerator) / std::numbers::sqrt2;
    const double lo = std::min(at_cos_one, at_cos_minus_one);
    const double hi = std::max(at_cos_one, at_cos_minus_one);
    if (lo > max_tau) continue;

    Minimum1D seed{at_cos_one, ns_merit(at_cos_one)};
    if (ns_merit(at_cos_minus_one) < seed.value) seed = {at_cos_minus_one, ns_merit(at_cos_minus_one)};
    Minimum1D best = golden_section_minimize(ns_merit, lo, hi, 1e-10);
    if (best.value > seed.value) best = seed;
    if (best.x > max_tau) continue;

    const auto a = ns_amplitudes(best.x);
    TauSolution sol;
    sol.taus = {best.x};
    sol.amplitudes = {a[0], a[1], a[2]};
    sol.target = kNsTarget;
    sol.merit = chebyshev_merit(sol.amplitudes, sol.target);
    sol.seed_merit = seed.value;
    sol.spread = spread_of(sol.amplitudes);
    out.push_back(std::move(sol));
  }
  std::sort(out.begin(), out.end(), solution_order);
  return out;
}

std::array<double, 3> two_atom_amplitudes(double tau1, double tau2) {
  std::array<double, 3> b{};
  for (int n = 0; n < 3; ++n) {
    b[static_cast<std::size_t>(n)] = upsilon_factor(tau1, AtomLevel::Ground, n) *
                                     upsilon_factor(tau2, AtomLevel::Excited, n);
  }
  return b;
}

double two_atom_objective(double tau1, double tau2) {
  const auto b = two_atom_amplitudes(tau1, tau2);
  const double lo = std::min({std::abs(b[0]), std::abs(b[1]), std::abs(b[2])});
  const double hi = std::max({std::abs(b[0]), std::abs(b[1]), std::abs(b[2])});
  // (s, s, -s): b0 b1 > 0 and b1 b2 < 0
  const double penalty = std::max(0.0, -b[0] * b[1]) + std::max(0.0, b[1] * b[2]);
  return (hi - lo) + penalty;
}

namespace {

// Chebyshev distance to (1, 1, -1) up to a global sign.
double two_atom_grid_merit(double b0, double b1, double b2) {
  const double plus = std::max({std::abs(b0 - 1.0), std::abs(b1 - 1.0), std::abs(b2 + 1.0)});
  const double minus = std::max({std::abs(b0 + 1.0), std::abs(b1 + 1.0), std::abs(b2 - 1.0)});
  return std::min(plus, minus);
}

TauSolution make_two_atom_solution(double tau1, double tau2, double seed_merit) {
  const auto b = two_atom_amplitudes(tau1, tau2);
  TauSolution sol;
  sol.taus = {tau1, tau2};
  sol.amplitudes = {b[0], b[1], b[2]};
  const int global = b[0] < 0.0 ? -1 : 1;
  sol.target = {global, global, -global};
  sol.merit = chebyshev_merit(sol.amplitudes, sol.target);
  sol.seed_merit = seed_merit;
  sol.spread = spread_of(sol.amplitudes);
  return sol;
}

bool has_ns_signs(const std::vector<double>& b) {
  return b[0] * b[1] > 0.0 && b[1] * b[2] < 0.0;
}

void validate(const TwoAtomOptions& o) {
  auto bad_range = [](const TauRange& r) { return !(r.lo > 0.0) || !(r.hi > r.lo); };
  if (bad_range(o.tau1) || bad_range(o.tau2)) {
    throw Error(ErrorCode::InvalidArgument, "two_atom_search: ranges must be positive and ordered");
  }
  if (!(o.target_merit > 0.0 && o.target_merit < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "two_atom_search: target_merit must lie in (0, 1)");
  }
  if (!(o.grid_step > 0.0) || o.max_seeds == 0) {
    throw Error(ErrorCode::InvalidArgument, "two_atom_search: bad grid step or seed count");
  }
}

}  // namespace

TwoAtomResult two_atom_search(const TwoAtomOptions& options) {
  validate(options);
  const double h = options.grid_step;
  const auto n1 = static_cast<std::size_t>(std::floor((options.tau1.hi - options.tau1.lo) / h)) + 1;
  const auto n2 = static_cast<std::size_t>(std::floor((options.tau2.hi - options.tau2.lo) / h)) + 1;
  if (n1 * n2 > 200'000'000) {
    throw Error(ErrorCode::InvalidArgument, "two_atom_search: grid too large");
  }

  // Column factors cos(tau2 sqrt(n+1)) are shared by every row.
  std::vector<std::array<double, 3>> col(n2);
  for (std::size_t j = 0; j < n2; ++j) {
    const double t2 = options.tau2.lo + static_cast<double>(j) * h;
    for (int n = 0; n < 3; ++n) {
      col[j][static_cast<std::size_t>(n)] = upsilon_factor(t2, AtomLevel::Excited, n);
    }
  }
  auto fill_row = [&](std::size_t i, std::vector<double>& row) {
    const double t1 = options.tau1.lo + static_cast<double>(i) * h;
    const double c1 = std::cos(t1);
    const double c2 = std::cos(std::numbers::sqrt2 * t1);
    for (std::size_t j = 0; j < n2; ++j) {
      row[j] = two_atom_grid_merit(col[j][0], c1 * col[j][1], c2 * col[j][2]);
    }
  };

  struct Seed {
    double merit;
    double tau1;
    double tau2;
  };
  std::vector<Seed> seeds;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> prev(n2, inf);
  std::vector<double> cur(n2);
  std::vector<double> next(n2);
  fill_row(0, cur);
  for (std::size_t i = 0; i < n1; ++i) {
    if (i + 1 < n1) {
      fill_row(i + 1, next);
    } else {
      std::fill(next.begin(), next.end(), inf);
    }
    for (std::size_t j = 0; j < n2; ++j) {
      const double m = cur[j];
      if (!(m < options.seed_threshold)) continue;
      bool is_min = true;
      for (int dj = -1; dj <= 1 && is_min; ++dj) {
        if ((dj < 0 && j == 0) || (dj > 0 && j + 1 == n2)) continue;
        const std::size_t jj = j + static_cast<std::size_t>(dj);
        if (prev[jj] < m || next[jj] < m || (dj != 0 && cur[jj] < m)) is_min = false;
      }
      if (is_min) {
        seeds.push_back({m, options.tau1.lo + static_cast<double>(i) * h,
                         options.tau2.lo + static_cast<double>(j) * h});
      }
    }
    std::swap(prev, cur);
    std::swap(cur, next);
  }

  std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
    return std::tie(a.merit, a.tau1, a.tau2) < std::tie(b.merit, b.tau1, b.tau2);
  });
  if (seeds.size() > options.max_seeds) seeds.resize(options.max_seeds);

  TwoAtomResult result;
  result.grid_points = n1 * n2;
  result.seeds = seeds.size();
  auto objective = [](const std::array<double, 2>& t) { return two_atom_objective(t[0], t[1]); };
  for (const Seed& seed : seeds) {
    const double seed_value = two_atom_objective(seed.tau1, seed.tau2);
    Minimum2D m = nelder_mead_2d(objective, {seed.tau1, seed.tau2}, h, 1e-11, 1e-15);
    if (m.value > seed_value) m = {{seed.tau1, seed.tau2}, seed_value, 0};
    TauSolution sol = make_two_atom_solution(m.x[0], m.x[1], seed_value);

    if (!result.best_attempt || sol.spread < result.best_attempt->spread) result.best_attempt = sol;
    if (sol.spread > options.target_merit || !has_ns_signs(sol.amplitudes)) continue;
    const bool duplicate = std::any_of(result.solutions.begin(), result.solutions.end(),
                                       [&](const TauSolution& s) {
                                         return std::abs(s.taus[0] - sol.taus[0]) < 1e-6 &&
                                                std::abs(s.taus[1] - sol.taus[1]) < 1e-6;
                                       });
    if (!duplicate) result.solutions.push_back(std::move(sol));
  }
  std::sort(result.solutions.begin(), result.solutions.end(), solution_order);
  return result;
}

double sign_pattern_error(const SignPattern& pattern, double theta) {
  double worst = 0.0;
  for (int n = 0; n <= pattern.cutoff(); ++n) {
    worst = std::max(worst, std::abs(std::cos(theta * std::sqrt(static_cast<double>(n))) -
                                     pattern[n]));
  }
  return worst;
}

QuditThetaResult qudit_theta_search(const SignPattern& pattern, double tolerance,
                                    const QuditSearchOptions& options) {
  if (!(tolerance > 0.0 && tolerance < 0.5)) {
    throw Error(ErrorCode::InvalidArgument, "qudit_theta_search: tolerance must lie in (0, 0.5)");
  }
  if (!(options.max_theta > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "qudit_theta_search: max_theta must be positive");
  }
  if (pattern.all_plus()) return {0.0, 0.0, true, false, -1};

  QuditThetaResult best{0.0, sign_pattern_error(pattern, 0.0), false, false, -1};
  const double family_step = 2.0 * std::numbers::pi / std::numbers::sqrt2;
  for (std::int64_t l = 0;; ++l) {
    const double theta = std::numbers::pi / std::numbers::sqrt2 + static_cast<double>(l) * family_step;
    if (theta > options.max_theta) break;
    const double err = sign_pattern_error(pattern, theta);
    if (err <= tolerance) return {theta, err, true, true, l};
    if (err < best.worst_error) best = {theta, err, false, true, l};
  }

  // Fallback: dense scan, polishing every point that could hide a window.
  const double root_n = std::sqrt(static_cast<double>(std::max(1, pattern.cutoff())));
  const double step = options.scan_step > 0.0 ? options.scan_step : 0.05 / root_n;
  // |d/dtheta cos(theta sqrt n)| <= sqrt(N), so a window cannot hide
  // further than step * sqrt(N) above the sampled error.
  const double slack = step * root_n;
  auto err_at = [&](double t) { return sign_pattern_error(pattern, t); };
  for (double theta = step; theta <= options.max_theta; theta += step) {
    const double err = err_at(theta);
    if (err < best.worst_error) best = {theta, err, false, false, -1};
    if (err > tolerance + slack) continue;
    const Minimum1D m = golden_section_minimize(err_at, theta - step, theta + step, 1e-12);
    if (m.value < best.worst_error) best = {m.x, m.value, false, false, -1};
    if (m.value <= tolerance) return {m.x, m.value, true, false, -1};
  }
  return best;
}

}  // namespace fockcond
