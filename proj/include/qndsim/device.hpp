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

#include <string>
#include <vector>

#include "qndsim/hilbert.hpp"

namespace qnd {

/// Physical constants of the qubit–resonator device in units with ħ = 1.
/// Energies and rates are angular frequencies.
///
/// Defaults are a desk-scale dispersive point: Δ = 0.25, λ = 0.1,
/// χ = 0.0025, χ/κ = 12.5.
struct DeviceParams {
  double E_C = 1.0;        // charging energy (reported only)
  double E_J = 1.25;       // Josephson energy = bare qubit frequency ν_a
  double omega = 1.0;      // resonator frequency
  double g = 0.025;        // qubit–resonator coupling
  double kappa = 2e-4;     // resonator damping
  double gamma = 2e-4;     // qubit relaxation
  double gamma_phi = 0.0;  // qubit pure dephasing
  double n_bar = 1.0;      // reservoir thermal occupation
  double n_g = 0.5;        // total gate charge (charge degeneracy point)

  double nu_a() const noexcept { return E_J; }
  /// Qubit–resonator detuning ν_a − ω. With this sign the dispersive shift
  /// χ = g²/Δ enters H_eff as +χσ_z b†b.
  double detuning() const noexcept { return nu_a() - omega; }
  double lambda() const noexcept { return g / detuning(); }
  double chi() const noexcept { return g * g / detuning(); }
  /// |λ| ≤ 0.1 (with a 1e-12 rounding allowance).
  bool dispersive_valid() const noexcept;

  /// Throws ErrorKind::validation on a violated invariant.
  void validate() const;
  /// Human-readable warnings for valid but questionable parameters.
  std::vector<std::string> warnings() const;
};

/// Capacitive layout of the charge qubit and the resonator gate. Values are
/// in any consistent unit system in which the elementary charge is
/// `electron_charge`; the coupling formula assumes ħ = 1.
struct CapacitiveGeometry {
  double m = 1.0;         // resonator effective mass
  double C_N = 1.0;       // resonator gate capacitance at rest
  double dC_N_dx = 0.0;   // capacitance gradient along the flexion axis
  double n_N0 = 0.0;      // resonator-induced gate charge at rest
  double C_cpb = 0.0;
  double C_J = 0.0;
  double V_N = 0.0;
  double V_cpb = 0.0;
  double electron_charge = 1.0;

  double total_capacitance() const noexcept { return C_N + C_cpb + C_J; }
  /// e²/2C_Σ
  double charging_energy_scale() const;
  double gate_charge_nems() const noexcept { return C_N * V_N / (2.0 * electron_charge); }
  double gate_charge_box() const noexcept { return C_cpb * V_cpb / (2.0 * electron_charge); }
  double gate_charge() const noexcept { return gate_charge_nems() + gate_charge_box(); }
};

/// 2E_C(n − n_g)²
double charging_energy(double n, double n_g, double E_C) noexcept;

/// Single Cooper-pair charging step E_1 − E_0 = 2E_C(1 − 2n_g).
double charging_step(double n_g, double E_C) noexcept;

/// g = √(1/2mω) · 4 n_N(0) E_C (∂C_N/∂x) / C_N.
double coupling_constant(const CapacitiveGeometry& geom, double omega, double E_C);

/// −(E_J/2)σ_x + ωb†b + gσ_z(b + b†) in the Cooper-pair basis.
ComplexMatrix hamiltonian_charge_basis(const DeviceParams& p, const SpaceDims& dims);

/// Qubit rotation U with Uσ_zU† = σ_x and Uσ_xU† = −σ_z.
ComplexMatrix basis_change_unitary();

/// (E_J/2)σ_z + ωb†b + gσ_x(b + b†) in the qubit energy basis.
ComplexMatrix hamiltonian_rotated(const DeviceParams& p, const SpaceDims& dims);

/// Jaynes–Cummings form ωb†b + (E_J/2)σ_z + g(σ_−b† + σ_+b).
ComplexMatrix hamiltonian_rwa(const DeviceParams& p, const SpaceDims& dims);

/// b†b + |+⟩⟨+|, conserved by hamiltonian_rwa.
ComplexMatrix excitation_number(const SpaceDims& dims);

/// Dispersive Hamiltonian (ω + χσ_z)b†b + ½(ν_a + χ)σ_z. Diagonal in the
/// product basis. Throws ErrorKind::singularity at Δ = 0.
ComplexMatrix hamiltonian_effective(const DeviceParams& p, const SpaceDims& dims);

/// Anti-Hermitian generator X = b†σ_− − bσ_+ of the dispersive
/// transformation. With λ = g/Δ its first commutator cancels the coupling.
ComplexMatrix dispersive_generator(const SpaceDims& dims);

enum class BchOrder { second, exact };

/// e^{−λX} H̃ e^{λX}, either truncated after the double commutator or exact.
ComplexMatrix dispersive_transform(const DeviceParams& p, const SpaceDims& dims, BchOrder order);

/// Frobenius norm of (second-order transform − H_eff) on the states with at
/// most `max_excitations` excitations, after removing the best-fit global
/// energy offset (the transform carries an extra constant χ/2 that H_eff
/// omits). Scales as λ³ at fixed Δ.
double dispersive_remainder(const DeviceParams& p, const SpaceDims& dims, int max_excitations);

struct QndReport {
  bool cond1_holds = false;  // ‖[O_A, H_I]‖ > tol: the meter responds
  bool cond2_holds = false;  // ‖[O_S, H_I]‖ ≤ tol: observable undisturbed
  bool cond3_holds = false;  // ‖[H_S, O_S]‖ ≤ tol: constant of motion
  double meter_response = 0.0;
  double back_action = 0.0;
  double free_drift = 0.0;
  double tolerance = 0.0;

  bool all_hold() const noexcept { return cond1_holds && cond2_holds && cond3_holds; }
};

/// Commutator tests for a QND measurement of O_S via the meter O_A. A
/// negative `tol` selects 1e-10·‖H_S + H_I‖_F.
QndReport qnd_check(const ComplexMatrix& H_S, const ComplexMatrix& H_I, const ComplexMatrix& O_S,
                    const ComplexMatrix& O_A, double tol = -1.0);

struct QndSplit {
  ComplexMatrix H_S;  // ωb†b + ½(ν_a + χ)σ_z
  ComplexMatrix H_I;  // χσ_z b†b
  ComplexMatrix O_S;  // b†b
  ComplexMatrix O_A;  // σ_x
};

/// The dispersive Hamiltonian split into system, interaction and meter parts.
QndSplit effective_qnd_split(const DeviceParams& p, const SpaceDims& dims);

/// Qubit transition frequencies E(+, n) − E(−, n), n = 0…count−1, from exact
/// diagonalization of a Hamiltonian diagonal-dominant in the product basis.
/// Each eigenvector is labelled by its largest product-state component.
std::vector<double> transition_frequencies(const ComplexMatrix& H, const SpaceDims& dims,
                                           int count);

}  // namespace qnd
