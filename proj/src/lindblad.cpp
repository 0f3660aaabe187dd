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

#include "qndsim/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qndsim/error.hpp"

namespace qnd {

bool StateDiagnostics::valid() const noexcept {
  return trace_error < 1e-9 && hermiticity < 1e-10 && min_eigenvalue >= -1e-8;
}

StateDiagnostics diagnose(const QuantumState& state) {
  const ComplexMatrix& rho = state.rho;
  StateDiagnostics d;
  d.trace_error = std::abs(rho.trace() - Complex{1.0, 0.0});
  d.hermiticity = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const ComplexMatrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = solver.eigenvalues().minCoeff();
  return d;
}

void validate_state(const QuantumState& state) {
  if (state.rho.rows() != state.dims.total_dim() || state.rho.cols() != state.dims.total_dim()) {
    throw Error(ErrorKind::shape, "state: density matrix does not match its dimensions");
  }
  const StateDiagnostics d = diagnose(state);
  if (!d.valid()) {
    std::ostringstream os;
    os << "state: invalid density matrix (trace error " << d.trace_error << ", hermiticity "
       << d.hermiticity << ", min eigenvalue " << d.min_eigenvalue << ")";
    throw Error(ErrorKind::validation, os.str());
  }
}

QuantumState product_state(Index qubit_level, const ComplexMatrix& rho_nems) {
  if (qubit_level != kExcited && qubit_level != kGround) {
    throw Error(ErrorKind::validation, "product_state: qubit level must be 0 or 1");
  }
  if (rho_nems.rows() != rho_nems.cols()) {
    throw Error(ErrorKind::shape, "product_state: resonator state must be square");
  }
  ComplexMatrix q = ComplexMatrix::Zero(2, 2);
  q(qubit_level, qubit_level) = 1.0;
  return {kron(q, rho_nems), SpaceDims(rho_nems.rows())};
}

ComplexVector vec(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvec(const ComplexVector& v, Index dim) {
  if (v.size() != dim * dim) throw Error(ErrorKind::shape, "unvec: length is not dim²");
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

ComplexMatrix left_multiply(const ComplexMatrix& a) { return kron(identity(a.rows()), a); }

ComplexMatrix right_multiply(const ComplexMatrix& b) {
  return kron(b.transpose(), identity(b.rows()));
}

ComplexMatrix dissipator(const ComplexMatrix& c) {
  if (c.rows() != c.cols()) throw Error(ErrorKind::shape, "dissipator: operator must be square");
  const ComplexMatrix cdc = c.adjoint() * c;
  return kron(c.conjugate(), c) - 0.5 * left_multiply(cdc) - 0.5 * right_multiply(cdc);
}

Liouvillian build_liouvillian(const ComplexMatrix& H, const DeviceParams& p, const SpaceDims& dims) {
  p.validate();
  const Index d = dims.total_dim();
  if (H.rows() != d || H.cols() != d) {
    throw Error(ErrorKind::shape, "build_liouvillian: Hamiltonian does not match dimensions");
  }
  if (!is_hermitian(H, 1e-10 * std::max(1.0, H.cwiseAbs().maxCoeff()))) {
    throw Error(ErrorKind::validation, "build_liouvillian: Hamiltonian is not Hermitian");
  }
  const Complex i{0.0, 1.0};
  ComplexMatrix L = -i * (left_multiply(H) - right_multiply(H));

  const ComplexMatrix b = embed(annihilation(dims.fock_cutoff()), Slot::nems, dims);
  auto add = [&](double rate, const ComplexMatrix& c) {
    if (rate > 0.0) L += rate * dissipator(c);
  };
  add(p.kappa * (p.n_bar + 1.0), b);
  add(p.kappa * p.n_bar, b.adjoint());
  add(p.gamma, embed(pauli(PauliKind::minus), Slot::qubit, dims));
  add(0.5 * p.gamma_phi, embed(pauli(PauliKind::z), Slot::qubit, dims));
  return {std::move(L), dims, p};
}

std::vector<double> uniform_grid(double t_max, double dt) {
  if (!(dt > 0.0) || !(t_max >= 0.0) || !std::isfinite(t_max)) {
    throw Error(ErrorKind::validation, "uniform_grid: need dt > 0 and t_max >= 0");
  }
  const auto steps = static_cast<std::size_t>(std::floor(t_max / dt * (1.0 + 1e-9)));
  std::vector<double> t(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) t[k] = static_cast<double>(k) * dt;
  return t;
}

double grid_spacing(std::span<const double> times) {
  if (times.empty()) throw Error(ErrorKind::validation, "time grid is empty");
  if (!(times.front() >= 0.0)) throw Error(ErrorKind::validation, "time grid must start at t >= 0");
  if (times.size() == 1) return 0.0;
  const double dt = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
  if (!(dt > 0.0)) throw Error(ErrorKind::validation, "time grid must be ascending");
  const double scale = std::max(std::abs(times.back()), dt);
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (std::abs(times[k] - times[k - 1] - dt) > 1e-9 * scale) {
      throw Error(ErrorKind::validation, "time grid is not uniformly spaced");
    }
  }
  return dt;
}

SectorPropagator::SectorPropagator(const Liouvillian& L, const ComplexMatrix& seed,
                                   std::span<const double> times)
    : dim_(L.dims.total_dim()), times_(times.begin(), times.end()) {
  if (seed.rows() != dim_ || seed.cols() != dim_) {
    throw Error(ErrorKind::shape, "propagator: seed does not match the Liouvillian");
  }
  const double dt = grid_spacing(times);

  const ComplexVector v = vec(seed);
  std::vector<char> touched(static_cast<std::size_t>(v.size()), 0);
  for (const auto& block : coupled_blocks(L.matrix)) {
    const bool hit = std::any_of(block.begin(), block.end(),
                                 [&](Index i) { return v(i) != Complex{}; });
    if (hit) {
      for (Index i : block) touched[i] = 1;
    }
  }
  for (Index i = 0; i < v.size(); ++i) {
    if (touched[i]) sector_.push_back(i);
  }

  const ComplexMatrix gen = submatrix(L.matrix, sector_);
  start_.resize(static_cast<Index>(sector_.size()));
  for (std::size_t k = 0; k < sector_.size(); ++k) start_(static_cast<Index>(k)) = v(sector_[k]);
  if (times.front() > 0.0) start_ = expm(gen * times.front()) * start_;
  step_ = dt > 0.0 ? expm(gen * dt) : ComplexMatrix::Identity(gen.rows(), gen.cols());
}

void SectorPropagator::run(const std::function<void(std::size_t, const ComplexVector&)>& visit) const {
  ComplexVector cur = start_;
  ComplexVector next(cur.size());
  for (std::size_t k = 0; k < times_.size(); ++k) {
    if (k > 0) {
      next.noalias() = step_ * cur;
      cur.swap(next);
    }
    visit(k, cur);
  }
}

ComplexMatrix SectorPropagator::expand(const ComplexVector& reduced) const {
  ComplexVector full = ComplexVector::Zero(dim_ * dim_);
  for (std::size_t k = 0; k < sector_.size(); ++k) full(sector_[k]) = reduced(static_cast<Index>(k));
  return unvec(full, dim_);
}

std::vector<QuantumState> evolve(const Liouvillian& L, const QuantumState& rho0,
                                 std::span<const double> t_grid) {
  if (!(rho0.dims == L.dims)) {
    throw Error(ErrorKind::shape, "evolve: state and Liouvillian dimensions differ");
  }
  validate_state(rho0);
  SectorPropagator prop(L, rho0.rho, t_grid);
  std::vector<QuantumState> out;
  out.reserve(t_grid.size());
  prop.run([&](std::size_t, const ComplexVector& v) {
    QuantumState s{prop.expand(v), L.dims};
    validate_state(s);
    out.push_back(std::move(s));
  });
  return out;
}

QuantumState steady_state(const Liouvillian& L) {
  const Index d = L.dims.total_dim();
  struct Candidate {
    double sigma;
    std::size_t block;
    ComplexVector null_vector;
  };
  const auto blocks = coupled_blocks(L.matrix);
  std::vector<double> sigmas;
  std::vector<Candidate> best;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const ComplexMatrix sub = submatrix(L.matrix, blocks[bi]);
    Eigen::BDCSVD<ComplexMatrix> svd(sub, Eigen::ComputeFullV);
    const RealVector& s = svd.singularValues();  // descending
    sigmas.insert(sigmas.end(), s.data(), s.data() + s.size());
    best.push_back({s(s.size() - 1), bi, svd.matrixV().col(s.size() - 1)});
  }
  std::sort(sigmas.begin(), sigmas.end());
  if (sigmas.size() < 2 || sigmas[1] <= 1e-10) {
    std::ostringstream os;
    os << "steady_state: null space is degenerate (second-smallest singular value "
       << (sigmas.size() < 2 ? 0.0 : sigmas[1]) << ")";
    throw Error(ErrorKind::multiplicity, os.str());
  }
  const auto winner = std::min_element(best.begin(), best.end(), [](const auto& a, const auto& b) {
    return a.sigma < b.sigma;
  });

  ComplexVector full = ComplexVector::Zero(d * d);
  const auto& block = blocks[winner->block];
  for (std::size_t k = 0; k < block.size(); ++k) full(block[k]) = winner->null_vector(static_cast<Index>(k));
  ComplexMatrix rho = unvec(full, d);
  const Complex tr = rho.trace();
  if (std::abs(tr) < 1e-12) {
    throw Error(ErrorKind::multiplicity, "steady_state: null vector carries no trace");
  }
  rho /= tr;
  rho = 0.5 * (rho + rho.adjoint()).eval();
  QuantumState out{std::move(rho), L.dims};
  validate_state(out);
  return out;
}

Complex expectation(const ComplexMatrix& op, const QuantumState& state) {
  if (op.rows() != state.rho.rows() || op.cols() != state.rho.cols()) {
    throw Error(ErrorKind::shape, "expectation: operator does not match the state");
  }
  // Tr(AB) = Σ_ij A_ij B_ji
  return (op.array() * state.rho.transpose().array()).sum();
}

ComplexMatrix reduce_to_nems(const QuantumState& state) {
  const Index n = state.dims.fock_cutoff();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index q = 0; q < SpaceDims::qubit_dim; ++q) out += state.rho.block(q * n, q * n, n, n);
  return out;
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  const ComplexMatrix diff = a - b;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (diff + diff.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace qnd
