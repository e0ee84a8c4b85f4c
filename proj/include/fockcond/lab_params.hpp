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

// Laboratory units for the dimensionless interaction time tau = kappa t.
// All frequencies are angular (rad/s).

namespace fockcond {

struct RamanParams {
  double g;      // one-photon Rabi frequency
  double omega;  // Raman-pulse Rabi frequency
  double delta;  // detuning from the excited level
};

/// 2 pi f for a cyclic frequency f in Hz.
double angular_from_hz(double hz);

/// Throws InvalidArgument unless every field is finite and positive.
void validate(const RamanParams& params);

/// Delta below Omega: outside the large-detuning regime the effective
/// coupling assumes.
bool dispersive_warning(const RamanParams& params);

/// kappa = Omega g / (2 Delta).
double kappa(const RamanParams& params);

/// t = tau / kappa. Throws InvalidArgument for kappa <= 0 or tau < 0.
double interaction_time(double tau, double kappa);

}  // namespace fockcond
