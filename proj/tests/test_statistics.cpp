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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qndsim/error.hpp"
#include "qndsim/hilbert.hpp"
#include "qndsim/statistics.hpp"

using namespace qnd;
using namespace qnd::testing;

namespace {

struct Line {
  double center;
  double area;
  double half_width;
};

// Exact sum of Lorentzians on a uniform grid, with peaks listed at the
// true centers and FWHM.
SpectrumResult lorentzian_comb(const std::vector<Line>& lines, double lo, double hi, std::size_t n) {
  SpectrumResult s;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    double v = 0.0;
    for (const Line& l : lines) v += l.area / std::numbers::pi * l.half_width / ((w - l.center) * (w - l.center) + l.half_width * l.half_width);
    s.frequencies.push_back(w);
    s.values.push_back(v);
  }
  for (std::size_t k = 0; k < lines.size(); ++k) {
    Peak p;
    p.center = lines[k].center;
    p.width = 2.0 * lines[k].half_width;
    p.height = lines[k].area / (std::numbers::pi * lines[k].half_width);
    p.phonon_index = static_cast<int>(k);
    s.peaks.push_back(p);
  }
  return s;
}

}  // namespace

TEST_CASE("single Lorentzian") {
  const auto d = fit_peak_weights(lorentzian_comb({{1.0, 1.0, 0.01}}, 0.8, 1.2, 801));
  REQUIRE(d.probabilities.size() == 1);
  CHECK(d.probabilities[0] == doctest::Approx(1.0));
  CHECK(d.components[0].area() == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(d.source == DistributionSource::spectral_fit);
}

TEST_CASE("two lines with areas 2:1") {
  const auto d = fit_peak_weights(lorentzian_comb({{1.0, 2.0, 1e-3}, {1.01, 1.0, 1e-3}}, 0.98, 1.03, 2001));
  REQUIRE(d.probabilities.size() == 2);
  CHECK(std::abs(d.probabilities[0] - 2.0 / 3.0) < 1e-6);
  CHECK(std::abs(d.probabilities[1] - 1.0 / 3.0) < 1e-6);
  CHECK(d.residual < 1e-8);
}

TEST_CASE("comb with unequal widths recovers every area") {
  const std::vector<Line> lines = {{1.000, 0.5, 2e-4}, {1.005, 0.25, 3e-4}, {1.010, 0.125, 4e-4}, {1.015, 0.0625, 5e-4}};
  const auto s = lorentzian_comb(lines, 0.99, 1.025, 3501);
  // Start the widths off the truth to make the optimizer work.
  auto perturbed = s;
  for (auto& p : perturbed.peaks) p.width *= 1.6;
  const auto d = fit_peak_weights(perturbed);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    CHECK(std::abs(d.components[k].area() / lines[k].area - 1.0) < 1e-4);
    CHECK(d.components[k].half_width == doctest::Approx(lines[k].half_width).epsilon(1e-4));
  }
}

TEST_CASE("degenerate centers make the fit ill-conditioned") {
  auto s = lorentzian_comb({{1.0, 1.0, 1e-3}, {1.01, 1.0, 1e-3}}, 0.98, 1.03, 1001);
  s.peaks[1].center = s.peaks[0].center;
  try {
    fit_peak_weights(s);
    FAIL("expected a fit error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::fit);
  }
  SpectrumResult empty = s;
  empty.peaks.clear();
  CHECK_THROWS_AS(fit_peak_weights(empty), Error);
}

TEST_CASE("Bose-Einstein law") {
  CHECK(bose_einstein(0.0, 5).probabilities[0] == 1.0);
  const auto p = bose_einstein(1.0, 60);
  for (int k = 0; k < 6; ++k) CHECK(p.probabilities[k] == doctest::Approx(std::pow(0.5, k + 1)).epsilon(1e-12));
  for (double nb : {0.0, 0.4, 1.0, 3.0}) {
    const auto q = bose_einstein(nb, 20);
    for (std::size_t k = 1; k < 20; ++k) CHECK(q.probabilities[k] <= q.probabilities[k - 1]);
    double sum = 0.0;
    for (double x : q.probabilities) sum += x;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(bose_einstein(2.0, 400).mean() == doctest::Approx(2.0).epsilon(1e-9));
  CHECK_THROWS_AS(bose_einstein(-1.0, 4), Error);
}

TEST_CASE("Fock populations") {
  const SpaceDims dims(8);
  CHECK(fock_populations(product_state(kExcited, fock_projector(0, 8))).probabilities[0] == 1.0);

  const auto thermal = fock_populations(product_state(kGround, thermal_state(1.0, 8)));
  const auto law = bose_einstein(1.0, 8);
  for (std::size_t k = 0; k < 8; ++k) CHECK(thermal.probabilities[k] == doctest::Approx(law.probabilities[k]).epsilon(1e-12));

  // Qubit-only rotations leave the resonator populations unchanged.
  const QuantumState s{random_density(16, 4), dims};
  const ComplexMatrix h = random_hermitian(2, 8);
  const ComplexMatrix u = embed(expm(Complex(0.0, -1.0) * h), Slot::qubit, dims);
  const QuantumState rotated{u * s.rho * u.adjoint(), dims};
  const auto a = fock_populations(s), b = fock_populations(rotated);
  for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(a.probabilities[k] - b.probabilities[k]) < 1e-14);

  // Dispersive dynamics without damping keeps them constant.
  DeviceParams p;
  p.kappa = p.gamma = p.gamma_phi = 0.0;
  const Liouvillian L = build_liouvillian(hamiltonian_effective(p, dims), p, dims);
  const auto states = evolve(L, s, uniform_grid(300.0, 3.0));
  for (const auto& st : states) {
    const auto q = fock_populations(st);
    for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(q.probabilities[k] - a.probabilities[k]) < 1e-8);
  }
}

TEST_CASE("distribution distances") {
  PhononDistribution a, b;
  a.probabilities = {1.0, 0.0};
  b.probabilities = {0.0, 1.0};
  const auto same = compare_distributions(a, a);
  CHECK(same.total_variation == 0.0);
  CHECK(same.max_abs == 0.0);
  const auto far = compare_distributions(a, b);
  CHECK(far.total_variation == 1.0);
  CHECK(far.max_abs == 1.0);
  b.probabilities.push_back(0.0);
  CHECK_THROWS_AS(compare_distributions(a, b), Error);
}
