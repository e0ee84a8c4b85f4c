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

// Derivative-free minimizers used to polish grid and convergent seeds.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>

namespace fockcond {

struct Minimum1D {
  double x;
  double value;
};

/// Golden-section search on [lo, hi] until the bracket is narrower than
/// tol. Assumes f is unimodal on the bracket; returns the best point seen.
inline Minimum1D golden_section_minimize(const std::function<double(double)>& f, double lo,
                                         double hi, double tol = 1e-10,
                                         int max_iter = 500) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  Minimum1D best = fc < fd ? Minimum1D{c, fc} : Minimum1D{d, fd};
  for (double x : {lo, hi}) {
    const double fx = f(x);
    if (fx < best.value) best = {x, fx};
  }
  return best;
}

struct Minimum2D {
  std::array<double, 2> x;
  double value;
  int iterations;
};

/// Nelder-Mead on two variables. The initial simplex is x0, x0 + step*e1,
/// x0 + step*e2. Stops when the simplex diameter drops below xtol and the
/// value spread below ftol, or after max_iter iterations.
inline Minimum2D nelder_mead_2d(const std::function<double(const std::array<double, 2>&)>& f,
                                std::array<double, 2> x0, double step, double xtol = 1e-10,
                                double ftol = 1e-15, int max_iter = 4000) {
  using Point = std::array<double, 2>;
  std::array<Point, 3> p{x0, Point{x0[0] + step, x0[1]}, Point{x0[0], x0[1] + step}};
  std::array<double, 3> v{f(p[0]), f(p[1]), f(p[2])};

  auto lerp = [](const Point& a, const Point& b, double t) {
    return Point{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
  };

  int it = 0;
  for (; it < max_iter; ++it) {
    // order: p[0] best, p[2] worst
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2 - i; ++j) {
        if (v[j + 1] < v[j]) {
          std::swap(v[j], v[j + 1]);
          std::swap(p[j], p[j + 1]);
        }
      }
    }
    double diameter = 0.0;
    for (int i = 1; i < 3; ++i) {
      diameter = std::max(diameter, std::hypot(p[i][0] - p[0][0], p[i][1] - p[0][1]));
    }
    if (diameter < xtol && (v[2] - v[0]) < ftol) break;
    if (diameter < 1e-3 * xtol) break;

    const Point centroid{(p[0][0] + p[1][0]) / 2.0, (p[0][1] + p[1][1]) / 2.0};
    const Point reflected = lerp(centroid, p[2], -1.0);
    const double fr = f(reflected);
    if (fr < v[0]) {
      const Point expanded = lerp(centroid, p[2], -2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        p[2] = expanded;
        v[2] = fe;
      } else {
        p[2] = reflected;
        v[2] = fr;
      }
      continue;
    }
    if (fr < v[1]) {
      p[2] = reflected;
      v[2] = fr;
      continue;
    }
    const bool outside = fr < v[2];
    const Point contracted = outside ? lerp(centroid, reflected, 0.5) : lerp(centroid, p[2], 0.5);
    const double fc = f(contracted);
    if (fc < (outside ? fr : v[2])) {
      p[2] = contracted;
      v[2] = fc;
      continue;
    }
    for (int i = 1; i < 3; ++i) {
      p[i] = lerp(p[0], p[i], 0.5);
      v[i] = f(p[i]);
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (v[i] < v[best]) best = i;
  }
  return {p[best], v[best], it};
}

}  // namespace fockcond
