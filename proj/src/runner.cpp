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

#include "qndsim/runner.hpp"

#include "qndsim/error.hpp"

namespace qnd {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "0.1.0";

json header(const char* command, const RunConfig& cfg) {
  return {{"program", "qndsim"}, {"version", kVersion}, {"command", command}, {"config", cfg.to_json()}};
}

json to_json(const QndReport& r) {
  return {{"cond1_meter_responds", r.cond1_holds},
          {"cond2_observable_undisturbed", r.cond2_holds},
          {"cond3_constant_of_motion", r.cond3_holds},
          {"all_hold", r.all_hold()},
          {"commutator_norms",
           {{"meter_interaction", r.meter_response},
            {"observable_interaction", r.back_action},
            {"system_observable", r.free_drift}}},
          {"tolerance", r.tolerance}};
}

void emit(CommandResult& result, const fs::path& path, const std::string& text) {
  write_text(path, text);
  result.files.push_back(path);
}

}  // namespace

ComplexMatrix build_hamiltonian(const RunConfig& cfg) {
  const SpaceDims dims(cfg.fock_cutoff);
  switch (cfg.hamiltonian) {
    case HamiltonianKind::charge: return hamiltonian_charge_basis(cfg.device, dims);
    case HamiltonianKind::rotated: return hamiltonian_rotated(cfg.device, dims);
    case HamiltonianKind::rwa: return hamiltonian_rwa(cfg.device, dims);
    case HamiltonianKind::effective: return hamiltonian_effective(cfg.device, dims);
  }
  throw Error(ErrorKind::config, "unknown hamiltonian kind");
}

ComplexMatrix seed_nems_state(const RunConfig& cfg) {
  switch (cfg.seed_state.kind) {
    case SeedKind::vacuum: return fock_projector(0, cfg.fock_cutoff);
    case SeedKind::thermal: return thermal_state(cfg.device.n_bar, cfg.fock_cutoff);
    case SeedKind::fock: return fock_projector(cfg.seed_state.fock_level, cfg.fock_cutoff);
  }
  throw Error(ErrorKind::config, "unknown seed state");
}

json model_report(const RunConfig& cfg) {
  cfg.validate();
  const DeviceParams& p = cfg.device;
  const SpaceDims dims(cfg.fock_cutoff);
  const int lines = cfg.n_max_peaks;
  const ComplexMatrix h_eff = hamiltonian_effective(p, dims);
  return {
      {"dimensions",
       {{"qubit", SpaceDims::qubit_dim}, {"fock_cutoff", dims.fock_cutoff()}, {"total", dims.total_dim()}}},
      {"nu_a", p.nu_a()},
      {"omega", p.omega},
      {"detuning", p.detuning()},
      {"lambda", p.lambda()},
      {"chi", p.chi()},
      {"chi_over_kappa", p.kappa > 0.0 ? json(p.chi() / p.kappa) : json(nullptr)},
      {"dispersive_valid", p.dispersive_valid()},
      {"warnings", p.warnings()},
      {"charging", {{"E_C", p.E_C}, {"n_g", p.n_g}, {"E1_minus_E0", charging_step(p.n_g, p.E_C)}}},
      {"dispersive_remainder_2exc", dispersive_remainder(p, dims, 2)},
      {"qnd_check", to_json([&] {
         const QndSplit s = effective_qnd_split(p, dims);
         return qnd_check(s.H_S, s.H_I, s.O_S, s.O_A);
       }())},
      {"transition_frequencies",
       {{"formula_used", "nu_a + chi*(2n+1)"},
        {"dispersive_comb", dispersive_comb(p, lines)},
        {"linear_stark_comb", linear_stark_comb(p, lines)},
        {"exact_diagonalization", transition_frequencies(h_eff, dims, lines)}}},
  };
}

json qnd_report(const RunConfig& cfg) {
  cfg.validate();
  const SpaceDims dims(cfg.fock_cutoff);
  const QndSplit s = effective_qnd_split(cfg.device, dims);
  const ComplexMatrix b = embed(annihilation(dims.fock_cutoff()), Slot::nems, dims);
  const ComplexMatrix zero = ComplexMatrix::Zero(dims.total_dim(), dims.total_dim());
  return {{"effective_split", to_json(qnd_check(s.H_S, s.H_I, s.O_S, s.O_A))},
          {"position_observable", to_json(qnd_check(s.H_S, s.H_I, b + b.adjoint(), s.O_A))},
          {"no_interaction", to_json(qnd_check(s.H_S, zero, s.O_S, s.O_A))}};
}

std::vector<double> correlation_grid(const RunConfig& cfg) {
  return uniform_grid(cfg.resolved_t_max(), cfg.resolved_dt());
}

CorrelationTrace run_correlation(const RunConfig& cfg) {
  cfg.validate();
  const SpaceDims dims(cfg.fock_cutoff);
  const Liouvillian L = build_liouvillian(build_hamiltonian(cfg), cfg.device, dims);
  const std::vector<double> grid = correlation_grid(cfg);
  return correlation(L, seed_nems_state(cfg), grid);
}

SpectrumResult run_spectrum(const RunConfig& cfg) {
  const CorrelationTrace trace = run_correlation(cfg);
  return detect_peaks(spectrum(trace, cfg.zero_pad_factor), cfg.device, cfg.n_max_peaks);
}

json fit_record(const SpectrumResult& s, double n_bar) {
  const PhononDistribution fitted = fit_peak_weights(s);
  json rec = {{"distribution", to_json(fitted)}, {"comparison", nullptr}};
  if (n_bar >= 0.0) {
    const PhononDistribution reference = bose_einstein(n_bar, fitted.probabilities.size());
    const DistributionGap gap = compare_distributions(fitted, reference);
    rec["comparison"] = {{"reference", "bose_einstein"},
                         {"n_bar", n_bar},
                         {"probabilities", reference.probabilities},
                         {"total_variation", gap.total_variation},
                         {"max_abs", gap.max_abs}};
  }
  return rec;
}

CommandResult cmd_model(const RunConfig& cfg, const fs::path& out_dir) {
  CommandResult result;
  json rec = header("model", cfg);
  rec["model"] = model_report(cfg);
  result.warnings = cfg.device.warnings();
  if (cfg.write_json) emit(result, out_dir / "model.json", render_json(rec));
  result.record = std::move(rec);
  return result;
}

CommandResult cmd_evolve(const RunConfig& cfg, const fs::path& out_dir) {
  cfg.validate();
  const SpaceDims dims(cfg.fock_cutoff);
  const Liouvillian L = build_liouvillian(build_hamiltonian(cfg), cfg.device, dims);
  const QuantumState rho0 = product_state(kExcited, seed_nems_state(cfg));

  const double t_max = cfg.resolved_t_max();
  std::vector<double> grid(static_cast<std::size_t>(cfg.evolve_steps) + 1);
  for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = t_max * static_cast<double>(k) / cfg.evolve_steps;

  const std::vector<QuantumState> states = evolve(L, rho0, grid);
  const ComplexMatrix sz = embed(pauli(PauliKind::z), Slot::qubit, dims);
  const ComplexMatrix num = embed(number_operator(dims.fock_cutoff()), Slot::nems, dims);

  Table t;
  t.metadata = header("evolve", cfg);
  t.columns = {"t", "trace", "sigma_z", "n_mean"};
  for (Index k = 0; k < dims.fock_cutoff(); ++k) t.columns.push_back("P" + std::to_string(k));
  double worst_trace = 0.0;
  double worst_herm = 0.0;
  double worst_eig = 0.0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const StateDiagnostics d = diagnose(states[k]);
    worst_trace = std::max(worst_trace, d.trace_error);
    worst_herm = std::max(worst_herm, d.hermiticity);
    worst_eig = std::min(worst_eig, d.min_eigenvalue);
    std::vector<double> row = {grid[k], states[k].rho.trace().real(), expectation(sz, states[k]).real(),
                               expectation(num, states[k]).real()};
    for (double pk : fock_populations(states[k]).probabilities) row.push_back(pk);
    t.rows.push_back(std::move(row));
  }
  CommandResult result;
  result.record = {{"steps", cfg.evolve_steps},
                   {"max_trace_error", worst_trace},
                   {"max_hermiticity_error", worst_herm},
                   {"min_eigenvalue", worst_eig}};
  t.metadata["diagnostics"] = result.record;
  result.warnings = cfg.device.warnings();
  if (cfg.write_csv) emit(result, out_dir / "evolve.csv", render_table(t));
  return result;
}

CommandResult cmd_correlate(const RunConfig& cfg, const fs::path& out_dir) {
  const CorrelationTrace trace = run_correlation(cfg);
  Table t;
  t.metadata = header("correlate", cfg);
  t.columns = {"t", "re", "im"};
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    t.rows.push_back({trace.times[k], trace.values[k].real(), trace.values[k].imag()});
  }
  CommandResult result;
  result.record = {{"samples", trace.times.size()},
                   {"c0_re", trace.values.front().real()},
                   {"c0_im", trace.values.front().imag()}};
  result.warnings = cfg.device.warnings();
  if (cfg.write_csv) emit(result, out_dir / "correlation.csv", render_table(t));
  return result;
}

CommandResult cmd_spectrum(const RunConfig& cfg, const fs::path& out_dir) {
  const SpectrumResult s = run_spectrum(cfg);
  json meta = header("spectrum", cfg);
  meta["transition_frequencies"] = {{"formula_used", "nu_a + chi*(2n+1)"},
                                    {"dispersive_comb", dispersive_comb(cfg.device, cfg.n_max_peaks)},
                                    {"linear_stark_comb", linear_stark_comb(cfg.device, cfg.n_max_peaks)}};
  CommandResult result;
  result.warnings = cfg.device.warnings();
  if (cfg.write_csv) emit(result, out_dir / "spectrum.csv", render_table(spectrum_table(s, meta)));

  json rec = meta;
  rec["spectrum"] = to_json(s.metadata);
  rec["peaks"] = json::array();
  for (const auto& p : s.peaks) rec["peaks"].push_back(to_json(p));
  if (cfg.write_json) emit(result, out_dir / "peaks.json", render_json(rec));
  result.record = std::move(rec);
  return result;
}

CommandResult cmd_qnd_check(const RunConfig& cfg, const fs::path& out_dir) {
  CommandResult result;
  json rec = header("qnd-check", cfg);
  rec["qnd_check"] = qnd_report(cfg);
  result.warnings = cfg.device.warnings();
  if (cfg.write_json) emit(result, out_dir / "qnd_check.json", render_json(rec));
  result.record = std::move(rec);
  return result;
}

CommandResult cmd_fit(const fs::path& spectrum_file, const fs::path& out_dir) {
  const Table t = parse_table(read_text(spectrum_file));
  const SpectrumResult s = spectrum_from_table(t);
  if (s.peaks.empty()) throw Error(ErrorKind::input, "spectrum file lists no peaks");

  double n_bar = -1.0;
  const json& m = t.metadata;
  if (m.contains("config") && m["config"].contains("device") && m["config"]["device"].contains("n_bar") &&
      m["config"]["device"]["n_bar"].is_number()) {
    n_bar = m["config"]["device"]["n_bar"].get<double>();
  }

  json rec;
  try {
    rec = fit_record(s, n_bar);
  } catch (const Error& e) {
    // A spectrum that cannot be fitted is bad input data for this command.
    throw Error(ErrorKind::input, e.what());
  }
  json out = {{"program", "qndsim"},
              {"version", kVersion},
              {"command", "fit"},
              {"source", spectrum_file.filename().string()}};
  if (m.contains("config")) out["config"] = m["config"];
  out.update(rec);
  CommandResult result;
  emit(result, out_dir / "distribution.json", render_json(out));
  result.record = std::move(out);
  return result;
}

}  // namespace qnd
