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

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "qndsim/error.hpp"
#include "qndsim/hilbert.hpp"
#include "qndsim/lindblad.hpp"

using namespace qnd;
using namespace qnd::testing;

namespace {

DeviceParams quiet() {
  DeviceParams p;
  p.kappa = 0.0;
  p.gamma = 0.0;
  p.gamma_phi = 0.0;
  p.n_bar = 0.0;
  return p;
}

ComplexMatrix plus_x_state() {
  ComplexMatrix r(2, 2);
  r << 0.5, 0.5, 0.5, 0.5;
  return r;
}

}  // namespace

TEST_CASE("vectorization convention") {
  const ComplexMatrix a = random_matrix(3, 3, 1), b = random_matrix(3, 3, 2), r = random_matrix(3, 3, 3);
  CHECK((vec(a * r * b) - kron_loops(b.transpose(), a) * vec(r)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((left_multiply(a) * vec(r) - vec(a * r)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((right_multiply(b) * vec(r) - vec(r * b)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(vec(r)(1) == r(1, 0));  // column stacking
  CHECK(max_abs(unvec(vec(r), 3), r) == 0.0);
  CHECK_THROWS_AS(unvec(vec(r), 4), Error);
}

TEST_CASE("dissipator") {
  const ComplexMatrix b = annihilation(4);
  CHECK((dissipator(b) * vec(fock_projector(0, 4))).cwiseAbs().maxCoeff() == 0.0);

  ComplexMatrix excited = ComplexMatrix::Zero(2, 2), ground = ComplexMatrix::Zero(2, 2);
  excited(kExcited, kExcited) = 1.0;
  ground(kGround, kGround) = 1.0;
  const ComplexMatrix out = unvec(dissipator(pauli(PauliKind::minus)) * vec(excited), 2);
  CHECK(max_abs(out, ground - excited) == 0.0);

  const ComplexMatrix c = random_matrix(5, 5, 9), rho = random_density(5, 10);
  CHECK(std::abs(unvec(dissipator(c) * vec(rho), 5).trace()) < 1e-12);

  MasterEquation me{ComplexMatrix::Zero(5, 5), {{1.0, c}}};
  CHECK(max_abs(dissipator(c), me.superoperator()) < 1e-12);
  CHECK_THROWS_AS(dissipator(ComplexMatrix::Zero(2, 3)), Error);
}

TEST_CASE("Liouvillian matches the matrix-form master equation") {
  const SpaceDims dims(3);
  DeviceParams p;
  p.kappa = 0.03;
  p.gamma = 0.02;
  p.gamma_phi = 0.01;
  p.n_bar = 0.7;
  p.g = 0.08;
  for (const ComplexMatrix& h : {hamiltonian_effective(p, dims), hamiltonian_rotated(p, dims)}) {
    const Liouvillian L = build_liouvillian(h, p, dims);
    CHECK(max_abs(L.matrix, model_equation(h, p, 3).superoperator()) < 1e-12);
    // Trace preservation: vec(I)† ℒ = 0.
    const ComplexVector id = vec(ComplexMatrix::Identity(6, 6));
    CHECK((id.adjoint() * L.matrix).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::ComplexEigenSolver<ComplexMatrix> es(L.matrix, false);
    CHECK(es.eigenvalues().real().maxCoeff() < 1e-10);
  }
  DeviceParams bad = p;
  bad.gamma = -0.1;
  CHECK_THROWS_AS(build_liouvillian(hamiltonian_effective(p, dims), bad, dims), Error);
  CHECK_THROWS_AS(build_liouvillian(random_matrix(6, 6, 4), p, dims), Error);
}

TEST_CASE("time grids") {
  const auto g = uniform_grid(1.0, 0.25);
  CHECK(g == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(grid_spacing(g) == doctest::Approx(0.25));
  const std::vector<double> uneven{0.0, 0.1, 0.3};
  CHECK_THROWS_AS(grid_spacing(uneven), Error);
  const std::vector<double> negative{-0.1, 0.0, 0.1};
  CHECK_THROWS_AS(grid_spacing(negative), Error);
}

TEST_CASE("evolve: t = 0 and unitary precession") {
  const SpaceDims dims(3);
  const double nu = 1.3;
  const ComplexMatrix h = 0.5 * nu * embed(pauli(PauliKind::z), Slot::qubit, dims);
  const Liouvillian L = build_liouvillian(h, quiet(), dims);
  const QuantumState rho0{kron_loops(plus_x_state(), fock_projector(0, 3)), dims};
  const auto grid = uniform_grid(10.0, 0.1);
  const auto states = evolve(L, rho0, grid);
  CHECK(max_abs(states.front().rho, rho0.rho) == 0.0);
  const ComplexMatrix sx = embed(pauli(PauliKind::x), Slot::qubit, dims);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    worst = std::max(worst, std::abs(expectation(sx, states[k]).real() - std::cos(nu * grid[k])));
  }
  CHECK(worst < 1e-12);

  const std::vector<double> uneven{0.0, 0.1, 0.3};
  CHECK_THROWS_AS(evolve(L, rho0, uneven), Error);
}

TEST_CASE("evolve: resonator energy decays at rate kappa") {
  const SpaceDims dims(6);
  DeviceParams p = quiet();
  p.kappa = 0.05;
  p.g = 0.0;
  const ComplexMatrix h = p.omega * embed(number_operator(6), Slot::nems, dims);
  const Liouvillian L = build_liouvillian(h, p, dims);
  const QuantumState rho0 = product_state(kGround, fock_projector(3, 6));
  const auto grid = uniform_grid(40.0, 0.5);
  const auto states = evolve(L, rho0, grid);
  const ComplexMatrix num = embed(number_operator(6), Slot::nems, dims);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    CHECK(expectation(num, states[k]).real() == doctest::Approx(3.0 * std::exp(-p.kappa * grid[k])).epsilon(1e-10));
  }
}

TEST_CASE("evolve: phonon number is conserved under the dispersive Hamiltonian") {
  const SpaceDims dims(5);
  const ComplexMatrix h = hamiltonian_effective(DeviceParams{}, dims);
  const Liouvillian L = build_liouvillian(h, quiet(), dims);
  const QuantumState rho0{random_density(10, 77), dims};
  const auto grid = uniform_grid(500.0, 2.5);
  const auto states = evolve(L, rho0, grid);
  const ComplexMatrix num = embed(number_operator(5), Slot::nems, dims);
  const double n0 = expectation(num, rho0).real();
  for (const auto& s : states) CHECK(std::abs(expectation(num, s).real() - n0) < 1e-8);
}

TEST_CASE("evolve agrees with an explicit Runge-Kutta integration") {
  const SpaceDims dims(3);
  DeviceParams p;
  p.kappa = 0.05;
  p.gamma = 0.03;
  p.gamma_phi = 0.02;
  p.n_bar = 0.5;
  p.g = 0.1;
  const ComplexMatrix h = hamiltonian_rotated(p, dims);
  const Liouvillian L = build_liouvillian(h, p, dims);
  const QuantumState rho0{random_density(6, 5), dims};
  const double t = 4.0;
  const auto states = evolve(L, rho0, uniform_grid(t, 0.5));
  const MasterEquation me = model_equation(h, p, 3);
  const ComplexMatrix coarse = rk4(me, rho0.rho, t, 2000);
  const ComplexMatrix fine = rk4(me, rho0.rho, t, 4000);
  const ComplexMatrix richardson = fine + (fine - coarse) / 15.0;
  CHECK(max_abs(states.back().rho, richardson) < 1e-8);
}

TEST_CASE("steady state") {
  SUBCASE("pure decay settles in the joint ground state") {
    const SpaceDims dims(4);
    DeviceParams p;
    p.n_bar = 0.0;
    const Liouvillian L = build_liouvillian(hamiltonian_effective(p, dims), p, dims);
    const QuantumState ss = steady_state(L);
    CHECK(max_abs(ss.rho, product_state(kGround, fock_projector(0, 4)).rho) < 1e-10);
    CHECK((L.matrix * vec(ss.rho)).norm() < 1e-10);
  }
  SUBCASE("thermal bath gives the geometric law") {
    const SpaceDims dims(10);
    DeviceParams p;
    const Liouvillian L = build_liouvillian(hamiltonian_effective(p, dims), p, dims);
    const QuantumState ss = steady_state(L);
    CHECK(trace_distance(reduce_to_nems(ss), thermal_state(1.0, 10)) < 1e-8);
    // Detailed balance, written out: P(n+1)/P(n) = n̄/(n̄+1).
    const ComplexMatrix r = reduce_to_nems(ss);
    for (Index n = 0; n + 1 < 10; ++n) CHECK(r(n + 1, n + 1).real() / r(n, n).real() == doctest::Approx(0.5));
    const auto later = evolve(L, ss, uniform_grid(2000.0, 100.0));
    CHECK(trace_distance(later.back().rho, ss.rho) < 1e-9);
  }
  SUBCASE("evolution contracts toward the steady state") {
    const SpaceDims dims(4);
    DeviceParams p;
    p.kappa = 0.05;
    p.gamma = 0.04;
    p.g = 0.1;
    const Liouvillian L = build_liouvillian(hamiltonian_rotated(p, dims), p, dims);
    const QuantumState ss = steady_state(L);
    const auto states = evolve(L, QuantumState{random_density(8, 3), dims}, uniform_grid(100.0, 1.0));
    double prev = trace_distance(states.front().rho, ss.rho);
    for (const auto& s : states) {
      const double d = trace_distance(s.rho, ss.rho);
      CHECK(d <= prev + 1e-9);
      prev = d;
    }
  }
  SUBCASE("a closed system has no unique steady state") {
    const SpaceDims dims(3);
    const Liouvillian L = build_liouvillian(hamiltonian_effective(DeviceParams{}, dims), quiet(), dims);
    try {
      steady_state(L);
      FAIL("expected a multiplicity error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::multiplicity);
    }
  }
}

TEST_CASE("expectation and state checks") {
  const SpaceDims dims(20);
  const QuantumState s = product_state(kGround, thermal_state(1.0, 20));
  CHECK(std::abs(expectation(ComplexMatrix::Identity(40, 40), s) - 1.0) < 1e-14);
  const Complex n = expectation(embed(number_operator(20), Slot::nems, dims), s);
  CHECK(n.real() == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(std::abs(n.imag()) < 1e-12);
  CHECK(diagnose(s).valid());

  QuantumState bad = s;
  bad.rho *= 1.1;
  CHECK_FALSE(diagnose(bad).valid());
  CHECK_THROWS_AS(validate_state(bad), Error);
  CHECK_THROWS_AS(expectation(ComplexMatrix::Identity(3, 3), s), Error);
}
