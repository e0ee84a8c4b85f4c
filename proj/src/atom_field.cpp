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

#include "fockcond/atom_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fockcond/error.hpp"

namespace fockcond {

JointOperator::JointOperator(Eigen::MatrixXcd matrix, int cutoff)
    : matrix_(std::move(matrix)), cutoff_(cutoff) {
  const Eigen::Index dim = 2 * (static_cast<Eigen::Index>(cutoff) + 1);
  if (cutoff < 0 || matrix_.rows() != dim || matrix_.cols() != dim) {
    throw Error(ErrorCode::InvalidArgument, "JointOperator: dimension does not match cutoff");
  }
}

JointOperator joint_evolution(double tau, int cutoff) {
  if (cutoff < 1) {
    throw Error(ErrorCode::InvalidArgument, "joint_evolution: cutoff must be >= 1");
  }
  const int dim = cutoff + 1;
  // a^dagger sigma^- : |e,n> -> sqrt(n+1) |g,n+1>, plus its adjoint.
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * dim, 2 * dim);
  for (int n = 0; n + 1 <= cutoff; ++n) {
    const int g_row = static_cast<int>(AtomLevel::Ground) * dim + n + 1;
    const int e_col = static_cast<int>(AtomLevel::Excited) * dim + n;
    const double c = std::sqrt(static_cast<double>(n + 1));
    h(g_row, e_col) = c;
    h(e_col, g_row) = c;
  }
  const FockOperator u = expm_antihermitian(FockOperator(Complex(0.0, -tau) * h));
  return JointOperator(u.matrix(), cutoff);
}

FockOperator conditional_block(const JointOperator& u, AtomLevel atom_in, AtomLevel atom_out) {
  const int dim = u.cutoff() + 1;
  return FockOperator(u.matrix().block(static_cast<int>(atom_out) * dim,
                                       static_cast<int>(atom_in) * dim, dim, dim));
}

double upsilon_factor(double tau, AtomLevel level, int n) {
  const int quanta = level == AtomLevel::Ground ? n : n + 1;
  return std::cos(tau * std::sqrt(static_cast<double>(quanta)));
}

namespace {

ConditionalOutcome finish(FockVector raw) {
  const double probability = raw.norm_squared();
  if (!(probability >= kMinOutcomeProbability)) {
    throw Error(ErrorCode::OutcomeImpossible,
                "measurement outcome impossible (probability " + std::to_string(probability) +
                    ")");
  }
  FockVector state(raw.amps() / std::sqrt(probability));
  return {std::move(raw), std::move(state), probability};
}

void require_normalized(const FockVector& state) {
  if (!state.is_normalized()) {
    throw Error(ErrorCode::InvalidArgument, "conditional map needs a normalized input state");
  }
}

}  // namespace

ConditionalOutcome apply_upsilon(const FockVector& state, double tau, AtomLevel level) {
  const UpsilonStep step{tau, level};
  return apply_sequence(state, std::span<const UpsilonStep>(&step, 1));
}

ConditionalOutcome apply_sequence(const FockVector& state, std::span<const UpsilonStep> steps) {
  require_normalized(state);
  if (steps.empty()) {
    throw Error(ErrorCode::InvalidArgument, "apply_sequence: no steps");
  }
  FockVector raw = state;
  for (const UpsilonStep& step : steps) {
    for (int n = 0; n <= raw.cutoff(); ++n) raw[n] *= upsilon_factor(step.tau, step.level, n);
  }
  return finish(std::move(raw));
}

std::array<double, 3> ns_amplitudes(double tau) {
  return {1.0, std::cos(tau), std::cos(std::sqrt(2.0) * tau)};
}

FockVector ns_ideal(const FockVector& state) {
  FockVector out = state;
  if (out.cutoff() >= 2) out[2] = -out[2];
  return out;
}

NsGateReport ns_gate_check(std::span<const UpsilonStep> steps,
                           std::span<const FockVector> test_states) {
  NsGateReport report{1.0, 1.0};
  for (const FockVector& input : test_states) {
    for (int n = 3; n <= input.cutoff(); ++n) {
      if (input[n] != Complex(0.0)) {
        throw Error(ErrorCode::InvalidArgument, "ns_gate_check: test state leaves n <= 2");
      }
    }
    double fid = 0.0;
    double probability = 0.0;
    try {
      const ConditionalOutcome out = apply_sequence(input, steps);
      fid = fidelity(ns_ideal(input), out.state);
      probability = out.probability;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OutcomeImpossible) throw;
    }
    report.worst_fidelity = std::min(report.worst_fidelity, fid);
    report.min_probability = std::min(report.min_probability, probability);
  }
  return report;
}

}  // namespace fockcond
