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

#include "qndsim/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qndsim/error.hpp"

namespace qnd {

std::vector<Complex> regression_correlation(const Liouvillian& L, const ComplexMatrix& seed,
                                            const ComplexMatrix& observable,
                                            std::span<const double> t_grid) {
  const Index d = L.dims.total_dim();
  if (observable.rows() != d || observable.cols() != d) {
    throw Error(ErrorKind::shape, "correlation: observable does not match the Liouvillian");
  }
  SectorPropagator prop(L, seed, t_grid);
  // Tr(AΛ) = Σ_k vec(Aᵀ)_k vec(Λ)_k
  const ComplexVector w_full = vec(observable.transpose());
  ComplexVector w(static_cast<Index>(prop.sector().size()));
  for (std::size_t k = 0; k < prop.sector().size(); ++k) w(static_cast<Index>(k)) = w_full(prop.sector()[k]);

  std::vector<Complex> out(t_grid.size());
  prop.run([&](std::size_t k, const ComplexVector& v) { out[k] = (w.array() * v.array()).sum(); });
  return out;
}

CorrelationTrace correlation(const Liouvillian& L, const ComplexMatrix& rho_nems0,
                             std::span<const double> t_grid) {
  const Index n = L.dims.fock_cutoff();
  if (rho_nems0.rows() != n || rho_nems0.cols() != n) {
    throw Error(ErrorKind::shape, "correlation: resonator state does not match the cutoff");
  }
  // Validate as a resonator state by embedding with the qubit in |−⟩.
  validate_state(product_state(kGround, rho_nems0));

  const ComplexMatrix seed = kron(pauli(PauliKind::plus), rho_nems0);
  const ComplexMatrix obs = embed(pauli(PauliKind::minus), Slot::qubit, L.dims);
  CorrelationTrace trace;
  trace.times.assign(t_grid.begin(), t_grid.end());
  trace.values = regression_correlation(L, seed, obs, t_grid);
  trace.params = L.params;
  return trace;
}

SpectrumResult spectrum(const CorrelationTrace& trace, int zero_pad_factor) {
  const std::size_t n = trace.values.size();
  if (n < 64 || trace.times.size() != n) {
    throw Error(ErrorKind::validation, "spectrum: need at least 64 correlation samples");
  }
  if (zero_pad_factor < 1) {
    throw Error(ErrorKind::validation, "spectrum: zero-padding factor must be >= 1");
  }
  const double dt = grid_spacing(trace.times);
  const double t0 = trace.times.front();

  std::vector<Complex> padded(n * static_cast<std::size_t>(zero_pad_factor), Complex{});
  std::copy(trace.values.begin(), trace.values.end(), padded.begin());
  padded.front() *= 0.5;
  padded[n - 1] *= 0.5;

  const FourierSeries fs = dft(padded, dt);
  SpectrumResult out;
  out.frequencies = fs.frequencies;
  out.values.resize(fs.amplitudes.size());
  for (std::size_t j = 0; j < fs.amplitudes.size(); ++j) {
    const Complex phase = std::exp(Complex{0.0, fs.frequencies[j] * t0});
    out.values[j] = (phase * fs.amplitudes[j]).real() * dt / std::numbers::pi;
  }
  out.metadata.chi = trace.params.chi();
  out.metadata.nu_a = trace.params.nu_a();
  out.metadata.dt = dt;
  out.metadata.window = trace.times.back() - t0;
  out.metadata.zero_pad_factor = zero_pad_factor;
  out.metadata.samples = n;
  return out;
}

std::vector<double> dispersive_comb(const DeviceParams& p, int count) {
  std::vector<double> c;
  for (int k = 0; k < count; ++k) c.push_back(p.nu_a() + p.chi() * (2.0 * k + 1.0));
  return c;
}

std::vector<double> linear_stark_comb(const DeviceParams& p, int count) {
  std::vector<double> c;
  for (int k = 0; k < count; ++k) c.push_back(p.nu_a() + p.chi() * k);
  return c;
}

namespace {

std::size_t nearest_bin(const std::vector<double>& f, double w) {
  const double step = f[1] - f[0];
  const double pos = std::round((w - f.front()) / step);
  return static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(f.size() - 1)));
}

// Linear crossing of half_height walking away from i in direction dir.
double half_max_crossing(const SpectrumResult& s, std::size_t i, int dir, double half_height) {
  std::size_t k = i;
  while (true) {
    if ((dir < 0 && k == 0) || (dir > 0 && k + 1 == s.values.size())) return s.frequencies[k];
    const std::size_t next = dir < 0 ? k - 1 : k + 1;
    if (s.values[next] < half_height) {
      const double y0 = s.values[k];
      const double y1 = s.values[next];
      const double frac = (y0 - half_height) / (y0 - y1);
      return s.frequencies[k] + frac * (s.frequencies[next] - s.frequencies[k]);
    }
    k = next;
  }
}

}  // namespace

SpectrumResult detect_peaks(SpectrumResult s, const DeviceParams& p, int n_max) {
  if (n_max < 1) throw Error(ErrorKind::validation, "detect_peaks: need at least one peak");
  if (s.frequencies.size() < 3) throw Error(ErrorKind::validation, "detect_peaks: spectrum too short");
  const double chi = std::abs(p.chi());
  const double limit = 3.0 * std::max(p.kappa, p.gamma);
  if (!(chi > limit)) {
    std::ostringstream os;
    os << "unresolved regime: |chi| = " << chi << " must exceed 3*max(kappa, gamma) = " << limit;
    if (std::max(p.kappa, p.gamma) > 0.0) os << " (chi/kappa = " << chi / p.kappa << ")";
    throw Error(ErrorKind::regime, os.str());
  }

  const auto& f = s.frequencies;
  const auto& y = s.values;
  s.peaks.clear();
  const std::vector<double> seeds = dispersive_comb(p, n_max);
  for (int k = 0; k < n_max; ++k) {
    const std::size_t lo = nearest_bin(f, seeds[k] - 0.5 * chi);
    const std::size_t hi = nearest_bin(f, seeds[k] + 0.5 * chi);
    std::size_t best = lo;
    for (std::size_t i = lo; i <= hi; ++i) {
      if (y[i] > y[best]) best = i;
    }
    Peak pk;
    pk.phonon_index = k;
    pk.center = f[best];
    pk.height = y[best];
    pk.resolved = best > lo && best < hi && best > 0 && best + 1 < y.size();
    if (pk.resolved) {
      const double ym = y[best - 1];
      const double y0 = y[best];
      const double yp = y[best + 1];
      const double denom = ym - 2.0 * y0 + yp;
      if (denom < 0.0) {
        const double offset = 0.5 * (ym - yp) / denom;
        pk.center = f[best] + offset * (f[1] - f[0]);
        pk.height = y0 - 0.25 * (ym - yp) * offset;
      }
    }
    const double half = 0.5 * y[best];
    pk.width = half_max_crossing(s, best, +1, half) - half_max_crossing(s, best, -1, half);
    s.peaks.push_back(pk);
  }
  std::sort(s.peaks.begin(), s.peaks.end(),
            [](const Peak& a, const Peak& b) { return a.center < b.center; });
  s.metadata.peak_formula_used = "nu_a + chi*(2n+1)";
  return s;
}

}  // namespace qnd
