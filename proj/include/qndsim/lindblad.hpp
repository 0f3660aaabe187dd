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

#include <functional>
#include <span>
#include <vector>

#include "qndsim/device.hpp"

namespace qnd {

/// Density matrix on the joint qubit ⊗ resonator space.
struct QuantumState {
  ComplexMatrix rho;
  SpaceDims dims;
};

struct StateDiagnostics {
  double trace_error = 0.0;   // |Tr ρ − 1|
  double hermiticity = 0.0;   // max |ρ − ρ†|
  double min_eigenvalue = 0.0;

  /// |Tr−1| < 1e-9, Hermitian to 1e-10, min eigenvalue ≥ −1e-8.
  bool valid() const noexcept;
};

StateDiagnostics diagnose(const QuantumState& state);

/// Throws ErrorKind::validation when diagnose(state) is not valid.
void validate_state(const QuantumState& state);

/// |qubit⟩⟨qubit| ⊗ rho_nems with qubit index kExcited or kGround.
QuantumState product_state(Index qubit_level, const ComplexMatrix& rho_nems);

/// Column-stacking vectorization; vec(AρB) = (Bᵀ ⊗ A)·vec(ρ).
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v, Index dim);

/// Superoperators for ρ ↦ Aρ and ρ ↦ ρB.
ComplexMatrix left_multiply(const ComplexMatrix& a);
ComplexMatrix right_multiply(const ComplexMatrix& b);

/// 𝒟[c]ρ = (2cρc† − c†cρ − ρc†c)/2 as a superoperator.
ComplexMatrix dissipator(const ComplexMatrix& c);

/// Liouvillian superoperator in the column-stacking convention.
struct Liouvillian {
  ComplexMatrix matrix;
  SpaceDims dims;
  DeviceParams params;
};

/// ℒ = −i[H, ·] + κ(n̄+1)𝒟[b] + κn̄𝒟[b†] + γ𝒟[σ_−] + (γ_φ/2)𝒟[σ_z].
/// With n̄ = 0 this is exactly the zero-temperature master equation.
Liouvillian build_liouvillian(const ComplexMatrix& H, const DeviceParams& p, const SpaceDims& dims);

/// Evenly spaced grid t_0 = 0, dt, …, up to and including the last point
/// not exceeding t_max (within a 1e-9 relative allowance).
std::vector<double> uniform_grid(double t_max, double dt);

/// Throws ErrorKind::validation unless the grid is non-empty, starts at
/// t ≥ 0 and is uniformly spaced to 1e-9 relative. Returns the spacing
/// (zero for a single point).
double grid_spacing(std::span<const double> times);

/// Propagates an arbitrary operator seed Λ(t) = e^{ℒt}Λ(0) along a uniform
/// grid with one reused single-step propagator.
///
/// Only the coupled blocks of ℒ that touch the seed's support are
/// propagated: all other entries of vec(Λ) stay exactly zero.
class SectorPropagator {
 public:
  SectorPropagator(const Liouvillian& L, const ComplexMatrix& seed, std::span<const double> times);

  /// Calls visit(k, vec_on_sector) for every grid point in order. The
  /// vector holds vec(Λ(t_k)) restricted to sector().
  void run(const std::function<void(std::size_t, const ComplexVector&)>& visit) const;

  /// Composite vectorized indices carried by the propagation.
  const std::vector<Index>& sector() const noexcept { return sector_; }

  /// Scatters a sector vector back into a full d×d matrix.
  ComplexMatrix expand(const ComplexVector& reduced) const;

 private:
  Index dim_;
  std::vector<Index> sector_;
  std::vector<double> times_;
  ComplexVector start_;
  ComplexMatrix step_;
};

/// ρ(t_k) for every grid time; each state is checked against the
/// QuantumState invariants.
std::vector<QuantumState> evolve(const Liouvillian& L, const QuantumState& rho0,
                                 std::span<const double> t_grid);

/// Unique stationary state of ℒ. Throws ErrorKind::multiplicity when the
/// second-smallest singular value of ℒ is ≤ 1e-10.
QuantumState steady_state(const Liouvillian& L);

/// Tr(op·ρ)
Complex expectation(const ComplexMatrix& op, const QuantumState& state);

/// Resonator reduced density matrix Tr_qubit ρ.
ComplexMatrix reduce_to_nems(const QuantumState& state);

/// ½‖a − b‖₁ for Hermitian a, b.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qnd
