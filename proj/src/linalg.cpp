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

#include "qndsim/linalg.hpp"

#include <fftw3.h>

#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "qndsim/error.hpp"

namespace qnd {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::shape: return "shape";
    case ErrorKind::sizing: return "sizing";
    case ErrorKind::validation: return "validation";
    case ErrorKind::singularity: return "singularity";
    case ErrorKind::multiplicity: return "multiplicity";
    case ErrorKind::regime: return "regime";
    case ErrorKind::fit: return "fit";
    case ErrorKind::config: return "config";
    case ErrorKind::io: return "io";
    case ErrorKind::input: return "input";
  }
  return "unknown";
}

namespace {

Index checked_product(Index a, Index b) {
  if (a != 0 && b > std::numeric_limits<Index>::max() / a) {
    throw Error(ErrorKind::sizing, "kron: dimension overflow");
  }
  return a * b;
}

void require_finite(const ComplexMatrix& m, const char* op) {
  if (!all_finite(m)) {
    throw Error(ErrorKind::validation, std::string(op) + ": non-finite result");
  }
}

// FFTW's planner is not reentrant; execution on a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() == 0 || b.size() == 0) {
    throw Error(ErrorKind::sizing, "kron: empty operand");
  }
  const Index p = b.rows();
  const Index q = b.cols();
  ComplexMatrix out(checked_product(a.rows(), p), checked_product(a.cols(), q));
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      out.block(i * p, j * q, p, q) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw Error(ErrorKind::shape, "commutator: operands must be square and equal-sized");
  }
  return a * b - b * a;
}

ComplexMatrix expm(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::shape, "expm: matrix must be square");
  }
  if (a.size() == 0) return a;
  ComplexMatrix out = a.exp();
  require_finite(out, "expm");
  return out;
}

HermitianEigen eig_hermitian(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::shape, "eig_hermitian: matrix must be square");
  }
  if (!is_hermitian(a, 1e-10)) {
    throw Error(ErrorKind::validation, "eig_hermitian: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::validation, "eig_hermitian: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

FourierSeries dft(std::span<const Complex> samples, double dt) {
  if (samples.size() < 2) {
    throw Error(ErrorKind::shape, "dft: need at least two samples");
  }
  if (!(dt > 0.0)) {
    throw Error(ErrorKind::validation, "dft: time step must be positive");
  }
  const std::size_t n = samples.size();
  std::vector<Complex> in(samples.begin(), samples.end());
  std::vector<Complex> out(n);
  auto* in_ptr = reinterpret_cast<fftw_complex*>(in.data());
  auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());

  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    // FFTW_BACKWARD computes Σ_k x_k e^{+2πi jk/N}.
    plan = fftw_plan_dft_1d(static_cast<int>(n), in_ptr, out_ptr, FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

  // fftshift: bin j ↦ signed index j for j < ceil(N/2), j − N otherwise.
  const std::size_t n_neg = n / 2;
  const double spacing = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
  FourierSeries series;
  series.frequencies.resize(n);
  series.amplitudes.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    const auto signed_bin = static_cast<long long>(m) - static_cast<long long>(n_neg);
    const std::size_t src = signed_bin < 0 ? static_cast<std::size_t>(signed_bin + static_cast<long long>(n))
                                           : static_cast<std::size_t>(signed_bin);
    series.frequencies[m] = static_cast<double>(signed_bin) * spacing;
    series.amplitudes[m] = out[src];
  }
  return series;
}

bool all_finite(const ComplexMatrix& a) {
  return a.array().real().allFinite() && a.array().imag().allFinite();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

std::vector<std::vector<Index>> coupled_blocks(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::shape, "coupled_blocks: matrix must be square");
  }
  const Index n = m.rows();
  std::vector<Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      if (i != j && m(i, j) != Complex{}) {
        const Index ri = find(i);
        const Index rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }
  // Roots are the smallest member of each set, so scanning in index order
  // emits blocks ordered by their smallest index.
  std::vector<std::vector<Index>> blocks;
  std::vector<Index> slot(static_cast<std::size_t>(n), -1);
  for (Index i = 0; i < n; ++i) {
    const Index r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<Index>(blocks.size());
      blocks.emplace_back();
    }
    blocks[slot[r]].push_back(i);
  }
  return blocks;
}

ComplexMatrix submatrix(const ComplexMatrix& m, std::span<const Index> idx) {
  const auto k = static_cast<Index>(idx.size());
  ComplexMatrix out(k, k);
  for (Index j = 0; j < k; ++j) {
    for (Index i = 0; i < k; ++i) out(i, j) = m(idx[i], idx[j]);
  }
  return out;
}

}  // namespace qnd
