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

#include <cmath>

#include "fockcond/error.hpp"
#include "fockcond/lab_params.hpp"

namespace fockcond {
namespace {

RamanParams typical() {
  return {angular_from_hz(4.5e6), angular_from_hz(30e6), angular_from_hz(6e6)};
}

TEST(Kappa, TypicalExperiment) {
  const double k = kappa(typical());
  EXPECT_NEAR(k / (2.0 * M_PI * 11.25e6), 1.0, 1e-12);
  EXPECT_NEAR(k, 7.07e7, 0.01e7);
  EXPECT_TRUE(dispersive_warning(typical()));
}

TEST(Kappa, Scaling) {
  RamanParams p = typical();
  const double k0 = kappa(p);
  p.omega *= 2.0;
  EXPECT_NEAR(kappa(p), 2.0 * k0, 1e-6);
  p = typical();
  p.delta *= 2.0;
  EXPECT_NEAR(kappa(p), 0.5 * k0, 1e-6);
  p.delta = 10.0 * p.omega;
  EXPECT_FALSE(dispersive_warning(p));
}

TEST(Kappa, RejectsInvalid) {
  RamanParams p = typical();
  p.delta = 0.0;
  try {
    kappa(p);
    FAIL() << "expected rejection";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  p = typical();
  p.g = -1.0;
  EXPECT_THROW(validate(p), Error);
}

TEST(InteractionTime, Examples) {
  const double k = kappa(typical());
  EXPECT_NEAR(interaction_time(6.5064, k) * 1e6, 0.092, 1e-3);
  EXPECT_NEAR(interaction_time(219.918, k) * 1e6, 3.11, 1e-2);
  EXPECT_EQ(interaction_time(0.0, k), 0.0);
  EXPECT_THROW(interaction_time(1.0, 0.0), Error);
  EXPECT_THROW(interaction_time(-1.0, k), Error);
}

}  // namespace
}  // namespace fockcond
