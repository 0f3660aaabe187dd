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

#include <vector>

#include "qndsim/spectrum.hpp"

namespace qnd {

enum class DistributionSource { spectral_fit, state_diagonal, analytic };

const char* to_string(DistributionSource source) noexcept;

/// A Lorentzian line amplitude·w²/((ω − center)² + w²) of area π·amplitude·w.
struct LorentzianComponent {
  double center = 0.0;
  double amplitude = 0.0;
  double half_width = 0.0;
  double area() const noexcept;
};

struct PhononDistribution {
  std::vector<double> probabilities;  // P(n), n = 0…size−1
  DistributionSource source = DistributionSource::analytic;
  double residual = 0.0;  // ‖model − data‖₂ / ‖data‖₂ over the fit window
  std::vector<LorentzianComponent> components;  // spectral fits only

  double mean() const noexcept;
};

/// Fits a sum of Lorentzians with centers fixed at the detected peaks and
/// free amplitudes and half-widths (Levenberg–Marquardt). P(n) are the
/// normalized line areas. Throws ErrorKind::validation without peaks and
/// ErrorKind::fit when the column-scaled Jacobian has condition number
/// above 1e12.
PhononDistribution fit_peak_weights(const SpectrumResult& s);

/// P(n) = n̄ⁿ/(n̄+1)^{n+1} for n < n_max, renormalized.
PhononDistribution bose_einstein(double n_bar, std::size_t n_max);

/// Diagonal of the resonator reduced density matrix.
PhononDistribution fock_populations(const QuantumState& state);

struct DistributionGap {
  double total_variation = 0.0;  // ½ Σ |P_a − P_b|
  double max_abs = 0.0;
};

DistributionGap compare_distributions(const PhononDistribution& a, const PhononDistribution& b);

}  // namespace qnd
