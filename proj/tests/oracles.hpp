// Copyright 2026 The qndsim Authors
//
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

// Reference implementations used only by the tests. None of them share code
// paths with the library: loops instead of Eigen expressions, matrix-form
// master equations instead of superoperators, naive sums instead of FFTs.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "qndsim/device.hpp"
#include "qndsim/linalg.hpp"

namespace qnd::testing {

inline ComplexMatrix random_matrix(Index rows, Index cols, unsigned seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, scale);
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = {n(rng), n(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(Index n, unsigned seed) {
  const ComplexMatrix a = random_matrix(n, n, seed);
  return (a + a.adjoint()) / 2.0;
}

/// Random density matrix: a·a† normalized.
inline ComplexMatrix random_density(Index n, unsigned seed) {
  const ComplexMatrix a = random_matrix(n, n, seed);
  ComplexMatrix r = a * a.adjoint();
  return r / r.trace();
}

inline double max_abs(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

/// exp(a) by a 30-term Taylor series after scaling by 2^-s, then squaring.
inline ComplexMatrix taylor_exp(const ComplexMatrix& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  while (norm / std::ldexp(1.0, s) > 0.25) ++s;
  const ComplexMatrix x = a / std::ldexp(1.0, s);
  ComplexMatrix term = ComplexMatrix::Identity(a.rows(), a.cols());
  ComplexMatrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

/// Plain triple-loop Kronecker product.
inline ComplexMatrix kron_loops(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Σ_k x_k e^{+iω_j t_k} with t_k = k·dt, evaluated directly at the given ω.
inline Complex naive_fourier(const std::vector<Complex>& x, double dt, double omega) {
  Complex s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * std::exp(Complex(0.0, omega * dt * static_cast<double>(k)));
  return s;
}

/// Right-hand side of the master equation evaluated in matrix form.
struct MasterEquation {
  ComplexMatrix H;
  std::vector<std::pair<double, ComplexMatrix>> channels;  // rate, collapse operator

  ComplexMatrix operator()(const ComplexMatrix& rho) const {
    const Complex i(0.0, 1.0);
    ComplexMatrix out = -i * (H * rho - rho * H);
    for (const auto& [rate, c] : channels) {
      const ComplexMatrix cd = c.adjoint();
      out += rate * (c * rho * cd - 0.5 * (cd * c * rho + rho * cd * c));
    }
    return out;
  }

  /// Superoperator assembled column by column from the action on matrix units.
  ComplexMatrix superoperator() const {
    const Index d = H.rows();
    ComplexMatrix L(d * d, d * d);
    for (Index col = 0; col < d; ++col) {
      for (Index row = 0; row < d; ++row) {
        ComplexMatrix e = ComplexMatrix::Zero(d, d);
        e(row, col) = 1.0;
        const ComplexMatrix img = (*this)(e);
        for (Index c2 = 0; c2 < d; ++c2)
          for (Index r2 = 0; r2 < d; ++r2) L(c2 * d + r2, col * d + row) = img(r2, c2);
      }
    }
    return L;
  }
};

/// Master equation for the model with its thermal resonator bath and qubit
/// channels, built from hand-written operators.
inline MasterEquation model_equation(const ComplexMatrix& H, const DeviceParams& p, Index n) {
  ComplexMatrix b = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k + 1 < n; ++k) b(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
  ComplexMatrix sm = ComplexMatrix::Zero(2, 2);
  sm(1, 0) = 1.0;  // |ground><excited|
  ComplexMatrix sz = ComplexMatrix::Zero(2, 2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix in = ComplexMatrix::Identity(n, n);
  MasterEquation me{H, {}};
  me.channels.push_back({p.kappa * (p.n_bar + 1.0), kron_loops(i2, b)});
  me.channels.push_back({p.kappa * p.n_bar, kron_loops(i2, b.adjoint())});
  me.channels.push_back({p.gamma, kron_loops(sm, in)});
  me.channels.push_back({p.gamma_phi / 2.0, kron_loops(sz, in)});
  return me;
}

/// Classical fourth-order Runge-Kutta integration of the matrix-form master
/// equation.
inline ComplexMatrix rk4(const MasterEquation& f, ComplexMatrix rho, double t, int steps) {
  const double h = t / steps;
  for (int s = 0; s < steps; ++s) {
    const ComplexMatrix k1 = f(rho);
    const ComplexMatrix k2 = f(rho + 0.5 * h * k1);
    const ComplexMatrix k3 = f(rho + 0.5 * h * k2);
    const ComplexMatrix k4 = f(rho + h * k3);
    rho += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return rho;
}

}  // namespace qnd::testing
