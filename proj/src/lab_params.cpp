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

#include "fockcond/lab_params.hpp"

#include <cmath>
#include <numbers>

#include "fockcond/error.hpp"

namespace fockcond {

double angular_from_hz(double hz) { return 2.0 * std::numbers::pi * hz; }

void validate(const RamanParams& params) {
  for (double v : {params.g, params.omega, params.delta}) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "Raman parameters must be finite and positive");
    }
  }
}

bool dispersive_warning(const RamanParams& params) { return params.delta < params.omega; }

double kappa(const RamanParams& params) {
  validate(params);
  return params.omega * params.g / (2.0 * params.delta);
}

double interaction_time(double tau, double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw Error(ErrorCode::InvalidArgument, "interaction_time: kappa must be positive");
  }
  if (!(tau >= 0.0)) throw Error(ErrorCode::InvalidArgument, "interaction_time: tau must be >= 0");
  return tau / kappa;
}

}  // namespace fockcond
