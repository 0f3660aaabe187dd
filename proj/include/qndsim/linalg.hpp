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

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qnd {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Dense complex matrix used for operators, density matrices and
/// superoperators alike.
///
/// Storage is column-major (Eigen's default). The raw data of a d×d matrix is
/// therefore its column-stacked vectorization, which is the convention every
/// superoperator in this library assumes.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Kronecker product, (a⊗b)(i·p+k, j·q+l) = a(i,j)·b(k,l) for a p×q matrix b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// a·b − b·a
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix exponential by Padé scaling-and-squaring.
ComplexMatrix expm(const ComplexMatrix& a);

struct HermitianEigen {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns are orthonormal eigenvectors
};

/// Eigendecomposition of a Hermitian matrix. Rejects inputs whose
/// anti-Hermitian part exceeds 1e-10 (absolute, elementwise).
HermitianEigen eig_hermitian(const ComplexMatrix& a);

/// Discrete Fourier transform with the e^{+iωt} kernel:
///   amplitudes[j] = Σ_k samples[k] · exp(+i·frequencies[j]·k·dt).
/// Frequencies are angular, spaced 2π/(N·dt), ascending from the most
/// negative bin. For even N the grid runs from −N/2 to N/2−1 bins.
struct FourierSeries {
  std::vector<double> frequencies;
  std::vector<Complex> amplitudes;
};

FourierSeries dft(std::span<const Complex> samples, double dt);

bool all_finite(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol);

/// Partition of the index set {0..n−1} of a square matrix into the weakly
/// connected components of its sparsity graph (an edge i–j for every
/// nonzero m(i,j) or m(j,i)). Each block is sorted ascending; blocks are
/// ordered by their smallest index. m is block diagonal under this
/// permutation, so each block evolves independently under exp(m·t).
std::vector<std::vector<Index>> coupled_blocks(const ComplexMatrix& m);

/// Principal submatrix m[idx, idx].
ComplexMatrix submatrix(const ComplexMatrix& m, std::span<const Index> idx);

}  // namespace qnd
