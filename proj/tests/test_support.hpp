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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "fockcond/fock_space.hpp"

namespace fockcond::testing {

// Every randomized test draws from this seed; change it here only.
inline constexpr std::uint64_t kPropertySeed = 0x5eed2026ULL;

class Gen {
 public:
  explicit Gen(std::uint64_t salt = 0) : rng_(kPropertySeed ^ (salt * 0x9e3779b97f4a7c15ULL)) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }

  Complex complex_in_disk(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(-M_PI, M_PI));
  }

  // Gaussian amplitudes on n <= support, zero above, normalized.
  FockVector state(int support, int cutoff) {
    FockVector v = FockVector::zero(cutoff);
    double norm2 = 0.0;
    while (norm2 < 1e-6) {
      for (int n = 0; n <= support; ++n) v[n] = Complex(normal(), normal());
      norm2 = v.norm_squared();
    }
    return v.normalized();
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fockcond::testing
