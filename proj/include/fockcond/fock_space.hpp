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

// Truncated single-mode Fock space: states |0>..|N>, dense operators,
// coherent states, displacements and exponentials of anti-Hermitian
// generators.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace fockcond {

using Complex = std::complex<double>;

/// Complex amplitudes c_0..c_N over number states. The cutoff N is
/// size() - 1. Vectors are not forced to be normalized; callers that need a
/// physical state check is_normalized().
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(Eigen::VectorXcd amps);

  static FockVector zero(int cutoff);
  /// The number state |n> in a space with the given cutoff.
  static FockVector number_state(int n, int cutoff);
  /// Equal-weight superposition (|0> + ... + |levels-1>)/sqrt(levels) padded
  /// with zeros up to the cutoff.
  static FockVector uniform(int levels, int cutoff);

  int cutoff() const { return static_cast<int>(amps_.size()) - 1; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }

  const Eigen::VectorXcd& amps() const { return amps_; }
  Eigen::VectorXcd& amps() { return amps_; }

  Complex operator[](int n) const { return amps_(n); }
  Complex& operator[](int n) { return amps_(n); }

  double norm_squared() const { return amps_.squaredNorm(); }
  bool is_normalized(double tol = 1e-12) const;
  /// Throws InvalidArgument when the norm vanishes.
  FockVector normalized() const;

  /// Mean photon number sum n |c_n|^2 / sum |c_n|^2.
  double mean_number() const;

 private:
  Eigen::VectorXcd amps_;
};

/// Dense (N+1)x(N+1) complex matrix acting on FockVector.
class FockOperator {
 public:
  FockOperator() = default;
  explicit FockOperator(Eigen::MatrixXcd matrix);

  static FockOperator identity(int cutoff);
  static FockOperator zero(int cutoff);

  int cutoff() const { return static_cast<int>(matrix_.rows()) - 1; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Eigen::MatrixXcd& matrix() { return matrix_; }

  Complex operator()(int row, int col) const { return matrix_(row, col); }

  FockOperator adjoint() const;
  FockVector apply(const FockVector& v) const;

  friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator-(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator*(Complex s, const FockOperator& a);

 private:
  Eigen::MatrixXcd matrix_;
};

FockOperator annihilation(int cutoff);
FockOperator creation(int cutoff);
FockOperator number_operator(int cutoff);
/// x(phi) = a e^{-i phi} + a^dagger e^{i phi}.
FockOperator quadrature(double phi, int cutoff);

struct CoherentState {
  FockVector state;  // renormalized over n <= cutoff
  double leakage;    // Poisson weight above the cutoff, before renormalization
};

/// Largest truncation leakage coherent_state() accepts.
inline constexpr double kMaxCoherentLeakage = 1e-6;

/// ceil(|alpha|^2 + 8|alpha| + 20): Poisson mean plus eight standard
/// deviations with a floor.
int default_cutoff(Complex alpha);

/// Poisson tail P(n > cutoff) for the given mean, summed in log space.
double poisson_tail(double mean, int cutoff);

/// Amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!) built from log-gamma,
/// renormalized. Throws NumericalGuard if the leakage exceeds
/// kMaxCoherentLeakage.
CoherentState coherent_state(Complex alpha, int cutoff);

/// exp(K) for anti-Hermitian K through the Hermitian eigendecomposition of
/// iK. Throws InvalidArgument if ||K + K^dagger||_max exceeds
/// 1e-12 * max(1, ||K||_max).
FockOperator expm_antihermitian(const FockOperator& k);

/// D(alpha) = exp(alpha a^dagger - alpha* a) on the truncated space.
FockOperator displacement(Complex alpha, int cutoff);

/// diag(e^{i theta sqrt(n)}).
FockOperator sqrt_number_phase(double theta, int cutoff);

/// |<a|b>|^2. Throws InvalidArgument on cutoff mismatch.
double fidelity(const FockVector& a, const FockVector& b);

/// max |(U^dagger U - I)_{mn}| over m, n <= limit.
double unitarity_defect(const FockOperator& u, int limit);

/// max |A_{mn} - B_{mn}| over m, n <= limit (limit < 0 means the whole
/// matrix).
double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                    int limit = -1);

/// Interior subspace used for truncation-sensitive checks: n <= N/2.
inline int interior_limit(int cutoff) { return cutoff / 2; }

}  // namespace fockcond
