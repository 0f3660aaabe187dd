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

#include <span>
#include <string>
#include <vector>

#include "qndsim/lindblad.hpp"

namespace qnd {

/// Samples of ⟨σ_−(t)σ_+(0)⟩ on a uniform grid.
struct CorrelationTrace {
  std::vector<double> times;
  std::vector<Complex> values;
  DeviceParams params;
};

/// Quantum-regression evaluation of Tr[observable · e^{ℒt}(seed)].
/// No validity requirements on the seed; the result is linear in it.
std::vector<Complex> regression_correlation(const Liouvillian& L, const ComplexMatrix& seed,
                                            const ComplexMatrix& observable,
                                            std::span<const double> t_grid);

/// ⟨σ_−(t)σ_+(0)⟩ seeded with Λ(0) = |+⟩⟨−| ⊗ rho_nems0.
/// Throws ErrorKind::validation unless rho_nems0 is a density matrix.
CorrelationTrace correlation(const Liouvillian& L, const ComplexMatrix& rho_nems0,
                             std::span<const double> t_grid);

struct Peak {
  double center = 0.0;
  double height = 0.0;
  double width = 0.0;   // full width at half maximum, as measured on the grid
  double weight = 0.0;  // Lorentzian area once fitted, else 0
  int phonon_index = 0;
  bool resolved = true;  // false when no interior local maximum was found
};

struct SpectrumMetadata {
  double chi = 0.0;
  double nu_a = 0.0;
  double dt = 0.0;
  double window = 0.0;  // integration length T
  int zero_pad_factor = 1;
  std::size_t samples = 0;
  std::string peak_formula_used;
};

struct SpectrumResult {
  std::vector<double> frequencies;  // ascending, angular
  std::vector<double> values;
  std::vector<Peak> peaks;          // sorted by center
  SpectrumMetadata metadata;
};

/// One-sided transform S(ω) = (1/π) Re ∫_0^T e^{iωt} C(t) dt by the
/// trapezoid rule, zero-padded to zero_pad_factor·N points. The discrete
/// sum rule Σ S Δω = Re C(0) holds exactly.
SpectrumResult spectrum(const CorrelationTrace& trace, int zero_pad_factor = 4);

/// Locates the number-split lines. Centers are seeded at ν_a + χ(2n+1),
/// n = 0…n_max−1, then moved to the local maximum within ±|χ|/2 with
/// parabolic sub-bin refinement. Throws ErrorKind::regime unless
/// |χ| > 3·max(κ, γ).
SpectrumResult detect_peaks(SpectrumResult s, const DeviceParams& p, int n_max);

/// ν_a + χ(2n+1): transition comb of the dispersive Hamiltonian.
std::vector<double> dispersive_comb(const DeviceParams& p, int count);

/// ν_a + nχ: the linear Stark-displacement formula, reported for comparison.
std::vector<double> linear_stark_comb(const DeviceParams& p, int count);

}  // namespace qnd
