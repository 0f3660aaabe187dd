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

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qndsim/config.hpp"
#include "qndsim/records.hpp"

namespace qnd {

/// Files written by a command and the structured record it produced.
struct CommandResult {
  std::vector<std::filesystem::path> files;
  std::vector<std::string> warnings;
  nlohmann::json record;
};

// Pipeline pieces shared by the commands and the C API.
ComplexMatrix build_hamiltonian(const RunConfig& cfg);
ComplexMatrix seed_nems_state(const RunConfig& cfg);
nlohmann::json model_report(const RunConfig& cfg);
nlohmann::json qnd_report(const RunConfig& cfg);
std::vector<double> correlation_grid(const RunConfig& cfg);
CorrelationTrace run_correlation(const RunConfig& cfg);
/// Correlation, transform and peak detection for the configured seed.
SpectrumResult run_spectrum(const RunConfig& cfg);
/// Fit record with an optional comparison against the thermal law at n_bar
/// (pass a negative n_bar to skip it).
nlohmann::json fit_record(const SpectrumResult& s, double n_bar);

// Commands. Each validates the config, writes into out_dir and throws
// qnd::Error on failure.
CommandResult cmd_model(const RunConfig& cfg, const std::filesystem::path& out_dir);
CommandResult cmd_evolve(const RunConfig& cfg, const std::filesystem::path& out_dir);
CommandResult cmd_correlate(const RunConfig& cfg, const std::filesystem::path& out_dir);
CommandResult cmd_spectrum(const RunConfig& cfg, const std::filesystem::path& out_dir);
CommandResult cmd_qnd_check(const RunConfig& cfg, const std::filesystem::path& out_dir);
CommandResult cmd_fit(const std::filesystem::path& spectrum_file, const std::filesystem::path& out_dir);

}  // namespace qnd
