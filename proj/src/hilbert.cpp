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

#include "qndsim/hilbert.hpp"

#include <cmath>
#include <string>

#include "qndsim/error.hpp"

namespace qnd {

SpaceDims::SpaceDims(Index fock_cutoff) : fock_cutoff_(fock_cutoff) {
  if (fock_cutoff < 2) {
    throw Error(ErrorKind::sizing,
                "fock cutoff must be at least 2, got " + std::to_string(fock_cutoff));
  }
}

ComplexMatrix pauli(PauliKind which, QubitBasis /*basis*/) {
  const Complex i{0.0, 1.0};
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  switch (which) {
    case PauliKind::x:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliKind::y:
      m(0, 1) = -i;
      m(1, 0) = i;
      break;
    case PauliKind::z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    case PauliKind::plus:
      m(kExcited, kGround) = 1.0;
      break;
    case PauliKind::minus:
      m(kGround, kExcited) = 1.0;
      break;
  }
  return m;
}

ComplexMatrix identity(Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix annihilation(Index n) {
  if (n < 2) throw Error(ErrorKind::sizing, "annihilation: cutoff must be at least 2");
  ComplexMatrix b = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k + 1 < n; ++k) b(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
  return b;
}

ComplexMatrix number_operator(Index n) {
  if (n < 2) throw Error(ErrorKind::sizing, "number_operator: cutoff must be at least 2");
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) m(k, k) = static_cast<double>(k);
  return m;
}

ComplexMatrix fock_projector(Index k, Index n) {
  if (k < 0 || k >= n) throw Error(ErrorKind::validation, "fock_projector: level out of range");
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m(k, k) = 1.0;
  return m;
}

ComplexMatrix embed(const ComplexMatrix& op, Slot slot, const SpaceDims& dims) {
  const Index want = slot == Slot::qubit ? SpaceDims::qubit_dim : dims.fock_cutoff();
  if (op.rows() != want || op.cols() != want) {
    throw Error(ErrorKind::shape, "embed: operator is " + std::to_string(op.rows()) + "x" +
                                      std::to_string(op.cols()) + ", slot needs " +
                                      std::to_string(want) + "x" + std::to_string(want));
  }
  return slot == Slot::qubit ? kron(op, identity(dims.fock_cutoff()))
                             : kron(identity(SpaceDims::qubit_dim), op);
}

ComplexMatrix thermal_state(double n_bar, Index n) {
  if (!(n_bar >= 0.0) || !std::isfinite(n_bar)) {
    throw Error(ErrorKind::validation, "thermal_state: mean occupation must be >= 0");
  }
  if (n < 2) throw Error(ErrorKind::sizing, "thermal_state: cutoff must be at least 2");
  const double ratio = n_bar / (n_bar + 1.0);
  RealVector pops(n);
  double w = 1.0;
  for (Index k = 0; k < n; ++k) {
    pops(k) = w;
    w *= ratio;
  }
  pops /= pops.sum();
  return pops.cast<Complex>().asDiagonal();
}

}  // namespace qnd
