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

#include "qndsim/linalg.hpp"

namespace qnd {

/// Joint qubit ⊗ resonator space. The qubit factor always comes first, so
/// the composite index of (qubit q, phonon n) is q·fock_cutoff + n.
class SpaceDims {
 public:
  static constexpr Index qubit_dim = 2;

  explicit SpaceDims(Index fock_cutoff);

  Index fock_cutoff() const noexcept { return fock_cutoff_; }
  Index total_dim() const noexcept { return qubit_dim * fock_cutoff_; }
  Index index(Index qubit, Index phonon) const noexcept { return qubit * fock_cutoff_ + phonon; }

  friend bool operator==(const SpaceDims&, const SpaceDims&) = default;

 private:
  Index fock_cutoff_;
};

/// Qubit basis labels.
///
/// Both conventions share the same 2×2 matrices; only the names of the basis
/// vectors differ. Charge basis: index 0 = |0⟩, index 1 = |1⟩ Cooper pairs,
/// σ_z = |0⟩⟨0| − |1⟩⟨1|. Energy basis: index 0 = |+⟩ (excited), index 1 =
/// |−⟩ (ground), σ_z = |+⟩⟨+| − |−⟩⟨−|, σ_+ = |+⟩⟨−|.
enum class QubitBasis { charge, energy };

enum class PauliKind { x, y, z, plus, minus };

inline constexpr Index kExcited = 0;
inline constexpr Index kGround = 1;

ComplexMatrix pauli(PauliKind which, QubitBasis basis = QubitBasis::energy);

ComplexMatrix identity(Index n);

/// Truncated annihilation operator, b(k, k+1) = √(k+1).
ComplexMatrix annihilation(Index n);

/// b†b = diag(0, 1, …, n−1).
ComplexMatrix number_operator(Index n);

/// |k⟩⟨k| on an n-level Fock space.
ComplexMatrix fock_projector(Index k, Index n);

enum class Slot { qubit, nems };

/// Lifts a single-factor operator to the joint space (identity on the other
/// factor, qubit factor first).
ComplexMatrix embed(const ComplexMatrix& op, Slot slot, const SpaceDims& dims);

/// Thermal resonator state with populations ∝ (n̄/(n̄+1))^k, renormalized
/// after truncation to n levels.
ComplexMatrix thermal_state(double n_bar, Index n);

}  // namespace qnd
