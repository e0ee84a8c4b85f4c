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

// Jaynes-Cummings coupling of one field mode to a two-level atom and the
// field maps obtained by post-selecting the atom in its initial level.

#include <array>
#include <span>
#include <vector>

#include "fockcond/fock_space.hpp"

namespace fockcond {

enum class AtomLevel : int { Ground = 0, Excited = 1 };

/// Unitary on atom (x) field, 2(N+1) square, index = level * (N+1) + n.
class JointOperator {
 public:
  JointOperator() = default;
  JointOperator(Eigen::MatrixXcd matrix, int cutoff);

  int cutoff() const { return cutoff_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXcd matrix_;
  int cutoff_ = 0;
};

/// Result of one or more successful post-selections.
struct ConditionalOutcome {
  FockVector raw;      // unnormalized, raw_n = (product of factors) * c_n
  FockVector state;    // raw / sqrt(probability)
  double probability;  // sum |raw_n|^2
};

struct UpsilonStep {
  double tau;
  AtomLevel level;  // prepared and detected in this level
};

/// Outcomes with probability below this are rejected as impossible.
inline constexpr double kMinOutcomeProbability = 1e-15;

/// exp[-i tau (a^dagger sigma^- + a sigma^+)]. Requires cutoff >= 1.
JointOperator joint_evolution(double tau, int cutoff);

/// Field block <atom_out| U |atom_in>.
FockOperator conditional_block(const JointOperator& u, AtomLevel atom_in, AtomLevel atom_out);

/// Scalar factor the conditional map applies to |n>: cos(tau sqrt(n)) for a
/// ground-state atom, cos(tau sqrt(n+1)) for an excited one.
double upsilon_factor(double tau, AtomLevel level, int n);

/// Applies the conditional map diagonally to a normalized state.
/// Throws OutcomeImpossible below kMinOutcomeProbability.
ConditionalOutcome apply_upsilon(const FockVector& state, double tau, AtomLevel level);

/// Independently addressed atoms applied in order; probability is the joint
/// success probability.
ConditionalOutcome apply_sequence(const FockVector& state, std::span<const UpsilonStep> steps);

/// (1, cos tau, cos(sqrt(2) tau)): the ground-state map on |0>,|1>,|2>.
std::array<double, 3> ns_amplitudes(double tau);

/// Exact sign flip c2 -> -c2 of the nonlinear sign gate. Entries above |2>
/// pass through unchanged.
FockVector ns_ideal(const FockVector& state);

struct NsGateReport {
  double worst_fidelity;
  double min_probability;
};

/// Worst-case fidelity (global phase free) and smallest success probability
/// of the conditional map against the ideal sign flip over the test states.
/// Impossible outcomes count as fidelity 0 and probability 0.
NsGateReport ns_gate_check(std::span<const UpsilonStep> steps,
                           std::span<const FockVector> test_states);

}  // namespace fockcond
