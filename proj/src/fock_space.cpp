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

#include "fockcond/fock_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "fockcond/error.hpp"

namespace fockcond {

namespace {

void require_cutoff(int cutoff) {
  if (cutoff < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "cutoff must be non-negative, got " + std::to_string(cutoff));
  }
}

}  // namespace

FockVector::FockVector(Eigen::VectorXcd amps) : amps_(std::move(amps)) {
  if (amps_.size() == 0) {
    throw Error(ErrorCode::InvalidArgument, "FockVector needs at least |0>");
  }
}

FockVector FockVector::zero(int cutoff) {
  require_cutoff(cutoff);
  return FockVector(Eigen::VectorXcd::Zero(cutoff + 1));
}

FockVector FockVector::number_state(int n, int cutoff) {
  require_cutoff(cutoff);
  if (n < 0 || n > cutoff) {
    throw Error(ErrorCode::InvalidArgument,
                "number state |" + std::to_string(n) + "> outside cutoff " +
                    std::to_string(cutoff));
  }
  FockVector v = zero(cutoff);
  v[n] = 1.0;
  return v;
}

FockVector FockVector::uniform(int levels, int cutoff) {
  if (levels < 1 || levels > cutoff + 1) {
    throw Error(ErrorCode::InvalidArgument, "uniform: levels out of range");
  }
  FockVector v = zero(cutoff);
  const double c = 1.0 / std::sqrt(static_cast<double>(levels));
  for (int n = 0; n < levels; ++n) v[n] = c;
  return v;
}

bool FockVector::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

FockVector FockVector::normalized() const {
  const double norm = amps_.norm();
  if (!(norm > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero vector");
  }
  return FockVector(amps_ / norm);
}

double FockVector::mean_number() const {
  double weighted = 0.0;
  for (Eigen::Index n = 0; n < amps_.size(); ++n) {
    weighted += static_cast<double>(n) * std::norm(amps_(n));
  }
  return weighted / norm_squared();
}

FockOperator::FockOperator(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw Error(ErrorCode::InvalidArgument, "FockOperator must be square and non-empty");
  }
}

FockOperator FockOperator::identity(int cutoff) {
  require_cutoff(cutoff);
  return FockOperator(Eigen::MatrixXcd::Identity(cutoff + 1, cutoff + 1));
}

FockOperator FockOperator::zero(int cutoff) {
  require_cutoff(cutoff);
  return FockOperator(Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1));
}

FockOperator FockOperator::adjoint() const { return FockOperator(matrix_.adjoint()); }

FockVector FockOperator::apply(const FockVector& v) const {
  if (v.dim() != dim()) {
    throw Error(ErrorCode::InvalidArgument, "operator/vector cutoff mismatch");
  }
  return FockVector(matrix_ * v.amps());
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
  return FockOperator(a.matrix_ + b.matrix_);
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
  return FockOperator(a.matrix_ - b.matrix_);
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  return FockOperator(a.matrix_ * b.matrix_);
}

FockOperator operator*(Complex s, const FockOperator& a) {
  return FockOperator(s * a.matrix_);
}

FockOperator annihilation(int cutoff) {
  FockOperator a = FockOperator::zero(cutoff);
  // <n-1|a|n> = sqrt(n)
  for (int n = 1; n <= cutoff; ++n) {
    a.matrix()(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

FockOperator creation(int cutoff) { return annihilation(cutoff).adjoint(); }

FockOperator number_operator(int cutoff) {
  FockOperator n_op = FockOperator::zero(cutoff);
  for (int n = 0; n <= cutoff; ++n) n_op.matrix()(n, n) = static_cast<double>(n);
  return n_op;
}

FockOperator quadrature(double phi, int cutoff) {
  const FockOperator a = annihilation(cutoff);
  const Complex phase = std::polar(1.0, -phi);
  return FockOperator(phase * a.matrix() + std::conj(phase) * a.matrix().adjoint());
}

int default_cutoff(Complex alpha) {
  const double r = std::abs(alpha);
  return static_cast<int>(std::ceil(r * r + 8.0 * r + 20.0));
}

double poisson_tail(double mean, int cutoff) {
  if (mean < 0.0) throw Error(ErrorCode::InvalidArgument, "Poisson mean must be >= 0");
  if (cutoff < 0) return 1.0;
  if (mean == 0.0) return 0.0;
  const double log_mean = std::log(mean);
  double sum = 0.0;
  for (long n = static_cast<long>(cutoff) + 1;; ++n) {
    const double nd = static_cast<double>(n);
    const double term = std::exp(-mean + nd * log_mean - std::lgamma(nd + 1.0));
    sum += term;
    // Terms decrease geometrically once n exceeds the mean.
    if (nd > mean && (term <= sum * 1e-18 || term == 0.0)) break;
  }
  return std::min(sum, 1.0);
}

CoherentState coherent_state(Complex alpha, int cutoff) {
  require_cutoff(cutoff);
  const double r = std::abs(alpha);
  const double mean = r * r;
  FockVector v = FockVector::zero(cutoff);
  if (r == 0.0) {
    v[0] = 1.0;
    return {v, 0.0};
  }
  const double log_r = std::log(r);
  const double arg = std::arg(alpha);
  for (int n = 0; n <= cutoff; ++n) {
    const double nd = static_cast<double>(n);
    const double log_mag = -0.5 * mean + nd * log_r - 0.5 * std::lgamma(nd + 1.0);
    v[n] = std::polar(std::exp(log_mag), nd * arg);
  }
  const double leakage = poisson_tail(mean, cutoff);
  if (leakage > kMaxCoherentLeakage) {
    throw Error(ErrorCode::NumericalGuard,
                "cutoff too small: coherent state |alpha|=" + std::to_string(r) +
                    " leaks " + std::to_string(leakage) + " above N=" +
                    std::to_string(cutoff));
  }
  return {v.normalized(), leakage};
}

FockOperator expm_antihermitian(const FockOperator& k) {
  const Eigen::MatrixXcd& km = k.matrix();
  const double scale = std::max(1.0, km.cwiseAbs().maxCoeff());
  const double defect = (km + km.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-12 * scale) {
    throw Error(ErrorCode::InvalidArgument,
                "expm_antihermitian: generator is not anti-Hermitian (defect " +
                    std::to_string(defect) + ")");
  }
  // exp(K) = exp(-iH) with H = iK Hermitian.
  Eigen::MatrixXcd h = Complex(0.0, 1.0) * km;
  h = 0.5 * (h + h.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalGuard, "expm_antihermitian: eigensolver failed");
  }
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const Eigen::MatrixXcd& vecs = solver.eigenvectors();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) phases(i) = std::polar(1.0, -lambda(i));
  return FockOperator(vecs * phases.asDiagonal() * vecs.adjoint());
}

FockOperator displacement(Complex alpha, int cutoff) {
  const FockOperator a = annihilation(cutoff);
  const Eigen::MatrixXcd gen = alpha * a.matrix().adjoint() - std::conj(alpha) * a.matrix();
  return expm_antihermitian(FockOperator(gen));
}

FockOperator sqrt_number_phase(double theta, int cutoff) {
  FockOperator u = FockOperator::zero(cutoff);
  for (int n = 0; n <= cutoff; ++n) {
    u.matrix()(n, n) = std::polar(1.0, theta * std::sqrt(static_cast<double>(n)));
  }
  return u;
}

double fidelity(const FockVector& a, const FockVector& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::InvalidArgument, "fidelity: cutoff mismatch");
  }
  return std::clamp(std::norm(a.amps().dot(b.amps())), 0.0, 1.0);
}

double unitarity_defect(const FockOperator& u, int limit) {
  const Eigen::MatrixXcd g = u.matrix().adjoint() * u.matrix();
  return max_abs_diff(g, Eigen::MatrixXcd::Identity(g.rows(), g.cols()), limit);
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int limit) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::InvalidArgument, "max_abs_diff: shape mismatch");
  }
  const Eigen::Index rows = limit < 0 ? a.rows() : std::min<Eigen::Index>(limit + 1, a.rows());
  const Eigen::Index cols = limit < 0 ? a.cols() : std::min<Eigen::Index>(limit + 1, a.cols());
  return (a.topLeftCorner(rows, cols) - b.topLeftCorner(rows, cols)).cwiseAbs().maxCoeff();
}

}  // namespace fockcond
