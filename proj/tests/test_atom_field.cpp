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

#include <array>
#include <cmath>
#include <vector>

#include "fockcond/atom_field.hpp"
#include "fockcond/error.hpp"
#include "test_support.hpp"

namespace fockcond {
namespace {

constexpr double kTau1 = 37.79300921;
constexpr double kTau2 = 197.78109842;

TEST(JointEvolution, IdentityAtZero) {
  const JointOperator u = joint_evolution(0.0, 6);
  EXPECT_EQ(u.matrix().rows(), 14);
  EXPECT_LT((u.matrix() - Eigen::MatrixXcd::Identity(14, 14)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(joint_evolution(1.0, 0), Error);
}

TEST(JointEvolution, UnitaryAndRabi) {
  const JointOperator u = joint_evolution(M_PI, 10);
  const Eigen::MatrixXcd& m = u.matrix();
  EXPECT_LT((m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_NEAR(conditional_block(u, AtomLevel::Ground, AtomLevel::Ground)(1, 1).real(), -1.0, 1e-12);
}

TEST(ConditionalBlock, GroundBlockIsCosineDiagonal) {
  const double tau = 6.5064;
  const FockOperator gg = conditional_block(joint_evolution(tau, 30), AtomLevel::Ground, AtomLevel::Ground);
  for (int m = 0; m <= 15; ++m) {
    for (int n = 0; n <= 15; ++n) {
      const double expected = m == n ? std::cos(tau * std::sqrt(static_cast<double>(n))) : 0.0;
      EXPECT_LT(std::abs(gg(m, n) - expected), 1e-10) << m << "," << n;
    }
  }
  EXPECT_EQ(gg(0, 0), Complex(1.0));
}

TEST(ConditionalBlock, ExcitedBlockTableValue) {
  const FockOperator ee = conditional_block(joint_evolution(6.5064, 30), AtomLevel::Excited, AtomLevel::Excited);
  EXPECT_NEAR(ee(1, 1).real(), -0.97516, 1e-5);
  EXPECT_NEAR(ee(1, 1).real(), std::cos(6.5064 * std::sqrt(2.0)), 1e-10);
  const FockOperator gg0 = conditional_block(joint_evolution(0.0, 5), AtomLevel::Ground, AtomLevel::Ground);
  EXPECT_LT((gg0.matrix() - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Upsilon, TauZeroLeavesStateUnchanged) {
  const FockVector psi = testing::Gen(2).state(4, 6);
  const ConditionalOutcome out = apply_upsilon(psi, 0.0, AtomLevel::Ground);
  EXPECT_NEAR(out.probability, 1.0, 1e-14);
  EXPECT_LT((out.state.amps() - psi.amps()).norm(), 1e-14);
}

TEST(Upsilon, TableRowOneOnUniformQutrit) {
  const FockVector psi = FockVector::uniform(3, 2);
  const ConditionalOutcome out = apply_upsilon(psi, 6.5064, AtomLevel::Ground);
  const double s = std::sqrt(3.0);
  EXPECT_NEAR(out.raw[0].real() * s, 1.0, 1e-12);
  EXPECT_NEAR(out.raw[1].real() * s, 0.97519, 1e-5);
  EXPECT_NEAR(out.raw[2].real() * s, -0.97516, 1e-5);
  const double c1 = std::cos(6.5064);
  const double c2 = std::cos(6.5064 * std::sqrt(2.0));
  EXPECT_NEAR(out.probability, (1.0 + c1 * c1 + c2 * c2) / 3.0, 1e-14);
  EXPECT_NEAR(out.probability, 0.9673, 1e-4);
  EXPECT_NEAR(out.raw.norm_squared(), out.probability, 1e-15);
}

TEST(Upsilon, ImpossibleOutcome) {
  try {
    apply_upsilon(FockVector::number_state(1, 3), M_PI / 2.0, AtomLevel::Ground);
    FAIL() << "expected an impossible-outcome error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutcomeImpossible);
  }
}

TEST(Upsilon, ExcitedFactorShiftsIndex) {
  EXPECT_DOUBLE_EQ(upsilon_factor(1.3, AtomLevel::Excited, 3), std::cos(1.3 * 2.0));
  EXPECT_DOUBLE_EQ(upsilon_factor(1.3, AtomLevel::Ground, 4), std::cos(1.3 * 2.0));
}

TEST(Sequence, RequiresStepsAndNormalizedInput) {
  const FockVector psi = FockVector::uniform(3, 2);
  EXPECT_THROW(apply_sequence(psi, std::vector<UpsilonStep>{}), Error);
  FockVector unnormalized = psi;
  unnormalized[0] = 2.0;
  const std::array<UpsilonStep, 1> one{{{1.0, AtomLevel::Ground}}};
  EXPECT_THROW(apply_sequence(unnormalized, one), Error);
}

TEST(Sequence, SingleStepMatchesUpsilon) {
  const FockVector psi = testing::Gen(3).state(5, 7);
  const std::array<UpsilonStep, 1> one{{{2.2, AtomLevel::Excited}}};
  const ConditionalOutcome a = apply_sequence(psi, one);
  const ConditionalOutcome b = apply_upsilon(psi, 2.2, AtomLevel::Excited);
  EXPECT_LT((a.raw.amps() - b.raw.amps()).norm(), 1e-15);
  EXPECT_DOUBLE_EQ(a.probability, b.probability);
}

TEST(Sequence, TwoAtomSolutionEqualMagnitudes) {
  const FockVector psi = FockVector::uniform(3, 2);
  const std::array<UpsilonStep, 2> steps{{{kTau1, AtomLevel::Ground}, {kTau2, AtomLevel::Excited}}};
  const ConditionalOutcome out = apply_sequence(psi, steps);
  const double s = std::sqrt(3.0);
  for (int n = 0; n <= 2; ++n) EXPECT_NEAR(std::abs(out.raw[n]) * s, 0.990321935, 1e-8) << n;
  EXPECT_LT(out.raw[0].real(), 0.0);
  EXPECT_LT(out.raw[1].real(), 0.0);
  EXPECT_GT(out.raw[2].real(), 0.0);
}

TEST(NsAmplitudes, TableRows) {
  const auto r1 = ns_amplitudes(6.5064);
  EXPECT_EQ(r1[0], 1.0);
  EXPECT_NEAR(r1[1], 0.97519, 1e-5);
  EXPECT_NEAR(r1[2], -0.97516, 1e-5);
  const auto r2 = ns_amplitudes(37.73742);
  EXPECT_NEAR(r2[1], 0.9992663, 1e-7);
  EXPECT_NEAR(r2[2], -0.9992665, 1e-7);
  const auto r3 = ns_amplitudes(219.918);
  EXPECT_NEAR(r3[1], 0.999979, 1e-6);
  EXPECT_NEAR(r3[2], -0.999978, 1e-6);
}

TEST(NsGate, VacuumInvariantAtZero) {
  const std::array<UpsilonStep, 1> steps{{{0.0, AtomLevel::Ground}}};
  const std::array<FockVector, 1> states{FockVector::number_state(0, 2)};
  const NsGateReport r = ns_gate_check(steps, states);
  EXPECT_NEAR(r.worst_fidelity, 1.0, 1e-15);
  EXPECT_NEAR(r.min_probability, 1.0, 1e-15);
}

double ns_fidelity_oracle(double a0, double a1, double a2) {
  // Uniform input: |a0 + a1 - a2|^2 / (3 (a0^2 + a1^2 + a2^2)).
  const double overlap = a0 + a1 - a2;
  return overlap * overlap / (3.0 * (a0 * a0 + a1 * a1 + a2 * a2));
}

TEST(NsGate, TableRowThreeFidelity) {
  const std::array<UpsilonStep, 1> steps{{{219.918, AtomLevel::Ground}}};
  const std::array<FockVector, 1> states{FockVector::uniform(3, 2)};
  const NsGateReport r = ns_gate_check(steps, states);
  const auto a = ns_amplitudes(219.918);
  EXPECT_NEAR(r.worst_fidelity, ns_fidelity_oracle(a[0], a[1], a[2]), 1e-13);
  EXPECT_GE(r.worst_fidelity, 0.9999);
}

TEST(NsGate, TwoAtomUpToGlobalPhase) {
  const std::array<UpsilonStep, 2> steps{{{kTau1, AtomLevel::Ground}, {kTau2, AtomLevel::Excited}}};
  const std::array<FockVector, 1> states{FockVector::uniform(3, 2)};
  const NsGateReport r = ns_gate_check(steps, states);
  EXPECT_GE(r.worst_fidelity, 0.9999);
  EXPECT_NEAR(r.min_probability, 0.990321935 * 0.990321935, 1e-7);
}

TEST(NsGate, RejectsSupportAboveTwo) {
  const std::array<UpsilonStep, 1> steps{{{1.0, AtomLevel::Ground}}};
  const std::array<FockVector, 1> states{FockVector::number_state(3, 3)};
  EXPECT_THROW(ns_gate_check(steps, states), Error);
}

TEST(NsGate, ImpossibleOutcomeCountsAsFailure) {
  const std::array<UpsilonStep, 1> steps{{{M_PI / 2.0, AtomLevel::Ground}}};
  const std::array<FockVector, 1> states{FockVector::number_state(1, 2)};
  const NsGateReport r = ns_gate_check(steps, states);
  EXPECT_EQ(r.worst_fidelity, 0.0);
  EXPECT_EQ(r.min_probability, 0.0);
}

TEST(NsIdeal, FlipsTopAmplitude) {
  FockVector v = FockVector::uniform(3, 2);
  const FockVector w = ns_ideal(v);
  EXPECT_EQ(w[2], -v[2]);
  EXPECT_EQ(w[1], v[1]);
}

}  // namespace
}  // namespace fockcond
