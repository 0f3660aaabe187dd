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

#include "qndsim/device.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qndsim/error.hpp"

namespace qnd {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::validation, what);
}

void require_dispersive(const DeviceParams& p) {
  if (p.detuning() == 0.0) {
    throw Error(ErrorKind::singularity,
                "resonant regime: detuning is zero, dispersive expansion undefined");
  }
}

ComplexMatrix position_like(const SpaceDims& dims) {
  const ComplexMatrix b = annihilation(dims.fock_cutoff());
  return b + b.adjoint();
}

}  // namespace

bool DeviceParams::dispersive_valid() const noexcept {
  return std::abs(lambda()) <= 0.1 + 1e-12;
}

void DeviceParams::validate() const {
  for (double v : {E_C, E_J, omega, g, kappa, gamma, gamma_phi, n_bar, n_g}) {
    require(std::isfinite(v), "device parameters must be finite");
  }
  require(omega > 0.0, "omega must be positive");
  require(E_J > 0.0, "E_J must be positive");
  require(kappa >= 0.0, "kappa must be non-negative");
  require(gamma >= 0.0, "gamma must be non-negative");
  require(gamma_phi >= 0.0, "gamma_phi must be non-negative");
  require(n_bar >= 0.0, "n_bar must be non-negative");
}

std::vector<std::string> DeviceParams::warnings() const {
  std::vector<std::string> out;
  if (detuning() != 0.0 && !dispersive_valid()) {
    std::ostringstream os;
    os << "|lambda| = " << std::abs(lambda())
       << " exceeds 0.1; the dispersive approximation may be inaccurate";
    out.push_back(os.str());
  }
  return out;
}

double CapacitiveGeometry::charging_energy_scale() const {
  const double c = total_capacitance();
  require(c > 0.0, "total capacitance must be positive");
  return electron_charge * electron_charge / (2.0 * c);
}

double charging_energy(double n, double n_g, double E_C) noexcept {
  return 2.0 * E_C * (n - n_g) * (n - n_g);
}

double charging_step(double n_g, double E_C) noexcept { return 2.0 * E_C * (1.0 - 2.0 * n_g); }

double coupling_constant(const CapacitiveGeometry& geom, double omega, double E_C) {
  require(geom.m > 0.0, "coupling_constant: mass must be positive");
  require(omega > 0.0, "coupling_constant: omega must be positive");
  require(geom.C_N > 0.0, "coupling_constant: C_N must be positive");
  const double zero_point = std::sqrt(1.0 / (2.0 * geom.m * omega));
  return zero_point * 4.0 * geom.n_N0 * E_C * geom.dC_N_dx / geom.C_N;
}

ComplexMatrix hamiltonian_charge_basis(const DeviceParams& p, const SpaceDims& dims) {
  const Index n = dims.fock_cutoff();
  const ComplexMatrix sx = pauli(PauliKind::x, QubitBasis::charge);
  const ComplexMatrix sz = pauli(PauliKind::z, QubitBasis::charge);
  return -0.5 * p.E_J * embed(sx, Slot::qubit, dims) +
         p.omega * embed(number_operator(n), Slot::nems, dims) +
         p.g * kron(sz, position_like(dims));
}

ComplexMatrix basis_change_unitary() {
  // exp(−iπσ_y/4): a quarter turn about y.
  ComplexMatrix u(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  u << s, -s, s, s;
  return u;
}

ComplexMatrix hamiltonian_rotated(const DeviceParams& p, const SpaceDims& dims) {
  const Index n = dims.fock_cutoff();
  return 0.5 * p.E_J * embed(pauli(PauliKind::z), Slot::qubit, dims) +
         p.omega * embed(number_operator(n), Slot::nems, dims) +
         p.g * kron(pauli(PauliKind::x), position_like(dims));
}

ComplexMatrix hamiltonian_rwa(const DeviceParams& p, const SpaceDims& dims) {
  const Index n = dims.fock_cutoff();
  const ComplexMatrix b = annihilation(n);
  return p.omega * embed(number_operator(n), Slot::nems, dims) +
         0.5 * p.E_J * embed(pauli(PauliKind::z), Slot::qubit, dims) +
         p.g * (kron(pauli(PauliKind::minus), b.adjoint()) + kron(pauli(PauliKind::plus), b));
}

ComplexMatrix excitation_number(const SpaceDims& dims) {
  const ComplexMatrix excited = pauli(PauliKind::plus) * pauli(PauliKind::minus);
  return embed(number_operator(dims.fock_cutoff()), Slot::nems, dims) +
         embed(excited, Slot::qubit, dims);
}

ComplexMatrix hamiltonian_effective(const DeviceParams& p, const SpaceDims& dims) {
  require_dispersive(p);
  const double chi = p.chi();
  ComplexMatrix h = ComplexMatrix::Zero(dims.total_dim(), dims.total_dim());
  for (Index q = 0; q < SpaceDims::qubit_dim; ++q) {
    const double sz = q == kExcited ? 1.0 : -1.0;
    for (Index k = 0; k < dims.fock_cutoff(); ++k) {
      const Index i = dims.index(q, k);
      h(i, i) = (p.omega + chi * sz) * static_cast<double>(k) + 0.5 * (p.nu_a() + chi) * sz;
    }
  }
  return h;
}

ComplexMatrix dispersive_generator(const SpaceDims& dims) {
  const ComplexMatrix b = annihilation(dims.fock_cutoff());
  return kron(pauli(PauliKind::minus), b.adjoint()) - kron(pauli(PauliKind::plus), b);
}

ComplexMatrix dispersive_transform(const DeviceParams& p, const SpaceDims& dims, BchOrder order) {
  require_dispersive(p);
  const ComplexMatrix h = hamiltonian_rwa(p, dims);
  const ComplexMatrix x = dispersive_generator(dims);
  const double lam = p.lambda();
  if (order == BchOrder::exact) {
    return expm(-lam * x) * h * expm(lam * x);
  }
  const ComplexMatrix first = commutator(h, x);
  return h + lam * first + 0.5 * lam * lam * commutator(first, x);
}

double dispersive_remainder(const DeviceParams& p, const SpaceDims& dims, int max_excitations) {
  const ComplexMatrix diff =
      dispersive_transform(p, dims, BchOrder::second) - hamiltonian_effective(p, dims);
  std::vector<Index> block;
  for (Index q = 0; q < SpaceDims::qubit_dim; ++q) {
    for (Index k = 0; k < dims.fock_cutoff(); ++k) {
      const Index excitations = k + (q == kExcited ? 1 : 0);
      if (excitations <= max_excitations) block.push_back(dims.index(q, k));
    }
  }
  ComplexMatrix d = submatrix(diff, block);
  const Complex offset = d.trace() / static_cast<double>(d.rows());
  d.diagonal().array() -= offset;
  return d.norm();
}

QndReport qnd_check(const ComplexMatrix& H_S, const ComplexMatrix& H_I, const ComplexMatrix& O_S,
                    const ComplexMatrix& O_A, double tol) {
  const Index d = H_S.rows();
  for (const ComplexMatrix* m : {&H_S, &H_I, &O_S, &O_A}) {
    if (m->rows() != d || m->cols() != d) {
      throw Error(ErrorKind::shape, "qnd_check: all operators must be square with equal size");
    }
  }
  QndReport r;
  r.tolerance = tol >= 0.0 ? tol : 1e-10 * (H_S + H_I).norm();
  r.meter_response = commutator(O_A, H_I).norm();
  r.back_action = commutator(O_S, H_I).norm();
  r.free_drift = commutator(H_S, O_S).norm();
  r.cond1_holds = r.meter_response > r.tolerance;
  r.cond2_holds = r.back_action <= r.tolerance;
  r.cond3_holds = r.free_drift <= r.tolerance;
  return r;
}

QndSplit effective_qnd_split(const DeviceParams& p, const SpaceDims& dims) {
  require_dispersive(p);
  const ComplexMatrix num = embed(number_operator(dims.fock_cutoff()), Slot::nems, dims);
  const ComplexMatrix sz = embed(pauli(PauliKind::z), Slot::qubit, dims);
  const double chi = p.chi();
  return {p.omega * num + 0.5 * (p.nu_a() + chi) * sz, chi * sz * num, num,
          embed(pauli(PauliKind::x), Slot::qubit, dims)};
}

std::vector<double> transition_frequencies(const ComplexMatrix& H, const SpaceDims& dims,
                                           int count) {
  if (count < 0 || count > dims.fock_cutoff()) {
    throw Error(ErrorKind::validation, "transition_frequencies: count out of range");
  }
  const HermitianEigen eig = eig_hermitian(H);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> energy(static_cast<std::size_t>(dims.total_dim()), nan);
  for (Index col = 0; col < eig.vectors.cols(); ++col) {
    Index label = 0;
    eig.vectors.col(col).cwiseAbs2().maxCoeff(&label);
    energy[label] = eig.values(col);
  }
  std::vector<double> out;
  for (Index k = 0; k < count; ++k) {
    const double up = energy[dims.index(kExcited, k)];
    const double down = energy[dims.index(kGround, k)];
    if (std::isnan(up) || std::isnan(down)) {
      throw Error(ErrorKind::validation,
                  "transition_frequencies: eigenvectors do not map onto product states");
    }
    out.push_back(up - down);
  }
  return out;
}

}  // namespace qnd
