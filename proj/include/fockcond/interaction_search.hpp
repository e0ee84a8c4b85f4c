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

// Searches for interaction times that turn the conditional cos(tau sqrt(n))
// map into a sign pattern: the single-atom and two-atom nonlinear sign gate
// and the qudit sign shift on n = 2(2m+1)^2.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace fockcond {

/// Target signs s_0..s_N, each +1 or -1.
class SignPattern {
 public:
  explicit SignPattern(std::vector<int> signs);

  int cutoff() const { return static_cast<int>(signs_.size()) - 1; }
  const std::vector<int>& signs() const { return signs_; }
  int operator[](int n) const { return signs_[static_cast<std::size_t>(n)]; }

  /// Indices n with s_n = -1, ascending.
  std::vector<int> flips() const;
  bool all_plus() const;

 private:
  std::vector<int> signs_;
};

/// True iff n = 2(2m+1)^2 for some m >= 0.
bool is_sign_shift_state(std::int64_t n);

/// s_n = -1 exactly on n in {2, 18, 50, 98, ...} up to N.
SignPattern sign_pattern(int cutoff);

/// Interaction time(s) and the amplitude pattern they produce.
struct TauSolution {
  std::vector<double> taus;        // one entry (single atom) or two (tau1, tau2)
  std::vector<double> amplitudes;  // A_n (single atom) or B_n (two atoms), n = 0..2
  std::vector<int> target;         // sign pattern the amplitudes approximate
  double merit;                    // max_n |A_n - target_n|
  double seed_merit;               // objective at the seed, before refinement
  double spread;                   // max_n |A_n| - min_n |A_n|
};

/// max_n |amplitudes_n - target_n|.
double chebyshev_merit(const std::vector<double>& amplitudes, const std::vector<int>& target);

/// max(1 - cos tau, 1 + cos(sqrt(2) tau)): distance from (1, 1, -1).
double ns_merit(double tau);

struct Convergent {
  std::int64_t numerator;
  std::int64_t denominator;
};

/// Continued-fraction convergents 1/1, 3/2, 7/5, 17/12, ... of sqrt(2) with
/// denominator up to max_denominator.
std::vector<Convergent> sqrt2_convergents(std::int64_t max_denominator);

/// Single-atom gate times up to max_tau, sorted by merit (best first). Each
/// convergent p/q of sqrt(2) with odd p and even q brackets a solution
/// between tau = pi q (cos tau = 1) and tau = pi p / sqrt(2)
/// (cos(sqrt(2) tau) = -1); golden-section search balances the two errors.
/// Empty when max_tau lies below the first solution.
std::vector<TauSolution> ns_tau_candidates(double max_tau);

/// B_n = cos(tau1 sqrt(n)) cos(tau2 sqrt(n+1)), n = 0, 1, 2: ground-state
/// atom for tau1, excited-state atom for tau2.
std::array<double, 3> two_atom_amplitudes(double tau1, double tau2);

/// Equal-magnitude spread plus a continuous penalty for a sign pattern other
/// than (s, s, -s).
double two_atom_objective(double tau1, double tau2);

struct TauRange {
  double lo;
  double hi;
};

struct TwoAtomOptions {
  TauRange tau1{1.0, 60.0};
  TauRange tau2{1.0, 250.0};
  double grid_step = 0.05;
  double target_merit = 1e-6;  // accepted equal-magnitude spread
  std::size_t max_seeds = 64;
  double seed_threshold = 0.25;  // grid Chebyshev distance a seed must beat
};

struct TwoAtomResult {
  std::vector<TauSolution> solutions;  // sorted by (merit, tau1, tau2)
  std::size_t grid_points = 0;
  std::size_t seeds = 0;
  // Best refined point regardless of acceptance, for diagnostics.
  std::optional<TauSolution> best_attempt;
};

/// Coarse grid over both ranges ranked by Chebyshev distance to the sign
/// pattern, then Nelder-Mead on two_atom_objective from the best local
/// minima. Solutions keep spread <= target_merit and an NS sign pattern.
TwoAtomResult two_atom_search(const TwoAtomOptions& options = {});

/// max_n |cos(theta sqrt(n)) - s_n|.
double sign_pattern_error(const SignPattern& pattern, double theta);

struct QuditSearchOptions {
  double max_theta = 2.0e4;
  double scan_step = 0.0;  // 0 selects 0.05 / sqrt(N)
};

struct QuditThetaResult {
  double theta;
  double worst_error;
  bool within_tolerance;
  bool from_family;              // theta = (2l+1) pi / sqrt(2)
  std::int64_t family_index;     // l, or -1
};

/// Smallest theta in the family (2l+1) pi / sqrt(2) whose cosines match the
/// pattern within tolerance, with a dense scan below max_theta as fallback.
/// On failure the best point found is returned with within_tolerance unset.
QuditThetaResult qudit_theta_search(const SignPattern& pattern, double tolerance,
                                    const QuditSearchOptions& options = {});

}  // namespace fockcond
