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
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qndsim/device.hpp"

namespace qnd {

enum class HamiltonianKind { charge, rotated, rwa, effective };

enum class SeedKind { vacuum, thermal, fock };

/// Initial resonator state. The qubit always starts in its excited level.
struct SeedState {
  SeedKind kind = SeedKind::thermal;
  int fock_level = 0;  // only for SeedKind::fock

  std::string label() const;
  static SeedState parse(std::string_view text);
};

/// Everything a command needs. Config files are JSON objects with at most
/// two levels of nesting; the key names match the fields below:
///
///   {
///     "device": {"E_C": 1.0, "E_J": 1.25, "omega": 1.0, "g": 0.025,
///                "kappa": 2e-4, "gamma": 2e-4, "gamma_phi": 0.0,
///                "n_bar": 1.0, "n_g": 0.5},
///     "fock_cutoff": 15,
///     "hamiltonian": "effective",
///     "time": {"t_max": "auto", "dt": "auto", "evolve_steps": 2000},
///     "spectrum": {"zero_pad_factor": 4, "n_max_peaks": 6},
///     "seed_state": "thermal",
///     "outputs": {"directory": "qndsim_out", "formats": ["csv", "json"]}
///   }
///
/// Any key may be omitted; unknown keys are errors. "auto" time settings
/// resolve to dt = π/(8ω) and t_max = 12/γ (12/κ when γ = 0).
struct RunConfig {
  DeviceParams device;
  int fock_cutoff = 15;
  HamiltonianKind hamiltonian = HamiltonianKind::effective;
  std::optional<double> t_max;
  std::optional<double> dt;
  int evolve_steps = 2000;
  int zero_pad_factor = 4;
  int n_max_peaks = 6;
  SeedState seed_state;
  std::string output_directory = "qndsim_out";
  bool write_csv = true;
  bool write_json = true;

  double resolved_dt() const;
  double resolved_t_max() const;

  /// Throws ErrorKind::config on any violated constraint, including a zero
  /// detuning (resonant regime).
  void validate() const;

  /// Applies one "dotted.key=value" assignment. The value is parsed as JSON
  /// and falls back to a bare string.
  void apply_override(std::string_view assignment);

  /// Full parameter echo with resolved time settings.
  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
};

RunConfig load_config(const std::filesystem::path& path);

const char* to_string(HamiltonianKind kind) noexcept;

}  // namespace qnd
