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

#include "qndsim/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "qndsim/error.hpp"

namespace qnd {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::config, what); }

double as_number(const json& v, const std::string& key) {
  if (!v.is_number()) fail("config key '" + key + "' must be a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& key) {
  if (!v.is_number_integer()) fail("config key '" + key + "' must be an integer");
  return v.get<int>();
}

std::string as_string(const json& v, const std::string& key) {
  if (!v.is_string()) fail("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<double> as_auto_number(const json& v, const std::string& key) {
  if (v.is_string() && v.get<std::string>() == "auto") return std::nullopt;
  return as_number(v, key);
}

using Setter = std::function<void(RunConfig&, const json&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    auto device = [&t](const char* name, double DeviceParams::*field) {
      const std::string key = std::string("device.") + name;
      t[key] = [field, key](RunConfig& c, const json& v) { c.device.*field = as_number(v, key); };
    };
    device("E_C", &DeviceParams::E_C);
    device("E_J", &DeviceParams::E_J);
    device("omega", &DeviceParams::omega);
    device("g", &DeviceParams::g);
    device("kappa", &DeviceParams::kappa);
    device("gamma", &DeviceParams::gamma);
    device("gamma_phi", &DeviceParams::gamma_phi);
    device("n_bar", &DeviceParams::n_bar);
    device("n_g", &DeviceParams::n_g);

    t["fock_cutoff"] = [](RunConfig& c, const json& v) { c.fock_cutoff = as_int(v, "fock_cutoff"); };
    t["hamiltonian"] = [](RunConfig& c, const json& v) {
      const std::string s = as_string(v, "hamiltonian");
      if (s == "charge") c.hamiltonian = HamiltonianKind::charge;
      else if (s == "rotated") c.hamiltonian = HamiltonianKind::rotated;
      else if (s == "rwa") c.hamiltonian = HamiltonianKind::rwa;
      else if (s == "effective") c.hamiltonian = HamiltonianKind::effective;
      else fail("hamiltonian must be one of charge, rotated, rwa, effective");
    };
    t["time.t_max"] = [](RunConfig& c, const json& v) { c.t_max = as_auto_number(v, "time.t_max"); };
    t["time.dt"] = [](RunConfig& c, const json& v) { c.dt = as_auto_number(v, "time.dt"); };
    t["time.evolve_steps"] = [](RunConfig& c, const json& v) {
      c.evolve_steps = as_int(v, "time.evolve_steps");
    };
    t["spectrum.zero_pad_factor"] = [](RunConfig& c, const json& v) {
      c.zero_pad_factor = as_int(v, "spectrum.zero_pad_factor");
    };
    t["spectrum.n_max_peaks"] = [](RunConfig& c, const json& v) {
      c.n_max_peaks = as_int(v, "spectrum.n_max_peaks");
    };
    t["seed_state"] = [](RunConfig& c, const json& v) {
      c.seed_state = SeedState::parse(as_string(v, "seed_state"));
    };
    t["outputs.directory"] = [](RunConfig& c, const json& v) {
      c.output_directory = as_string(v, "outputs.directory");
    };
    t["outputs.formats"] = [](RunConfig& c, const json& v) {
      if (!v.is_array()) fail("outputs.formats must be a list");
      c.write_csv = false;
      c.write_json = false;
      for (const auto& f : v) {
        const std::string s = as_string(f, "outputs.formats");
        if (s == "csv") c.write_csv = true;
        else if (s == "json") c.write_json = true;
        else fail("outputs.formats entries must be 'csv' or 'json'");
      }
    };
    return t;
  }();
  return table;
}

void set_key(RunConfig& c, const std::string& key, const json& value) {
  const auto it = setters().find(key);
  if (it == setters().end()) fail("unknown config key '" + key + "'");
  it->second(c, value);
}

bool is_section(const std::string& name) {
  return name == "device" || name == "time" || name == "spectrum" || name == "outputs";
}

}  // namespace

std::string SeedState::label() const {
  switch (kind) {
    case SeedKind::vacuum: return "vacuum";
    case SeedKind::thermal: return "thermal";
    case SeedKind::fock: return "fock:" + std::to_string(fock_level);
  }
  return "unknown";
}

SeedState SeedState::parse(std::string_view text) {
  if (text == "vacuum") return {SeedKind::vacuum, 0};
  if (text == "thermal") return {SeedKind::thermal, 0};
  if (text.starts_with("fock:")) {
    const std::string digits(text.substr(5));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      return {SeedKind::fock, std::stoi(digits)};
    }
  }
  fail("seed_state must be 'vacuum', 'thermal' or 'fock:<level>'");
}

const char* to_string(HamiltonianKind kind) noexcept {
  switch (kind) {
    case HamiltonianKind::charge: return "charge";
    case HamiltonianKind::rotated: return "rotated";
    case HamiltonianKind::rwa: return "rwa";
    case HamiltonianKind::effective: return "effective";
  }
  return "unknown";
}

double RunConfig::resolved_dt() const {
  if (dt) return *dt;
  return std::numbers::pi / (8.0 * device.omega);
}

double RunConfig::resolved_t_max() const {
  if (t_max) return *t_max;
  if (device.gamma > 0.0) return 12.0 / device.gamma;
  if (device.kappa > 0.0) return 12.0 / device.kappa;
  fail("time.t_max must be set explicitly when gamma and kappa are both zero");
}

void RunConfig::validate() const {
  try {
    device.validate();
  } catch (const Error& e) {
    fail(std::string("device: ") + e.what());
  }
  if (device.detuning() == 0.0) {
    fail("resonant regime: detuning nu_a - omega is zero, dispersive readout undefined");
  }
  if (fock_cutoff < 2) fail("fock_cutoff must be at least 2");
  const double step = resolved_dt();
  const double horizon = resolved_t_max();
  if (!(step > 0.0) || !std::isfinite(step)) fail("time.dt must be positive");
  if (!(horizon > step) || !std::isfinite(horizon)) fail("time.t_max must exceed time.dt");
  if (evolve_steps < 1) fail("time.evolve_steps must be at least 1");
  if (zero_pad_factor < 1) fail("spectrum.zero_pad_factor must be at least 1");
  if (n_max_peaks < 1 || n_max_peaks > fock_cutoff) {
    fail("spectrum.n_max_peaks must lie in [1, fock_cutoff]");
  }
  if (seed_state.kind == SeedKind::fock && seed_state.fock_level >= fock_cutoff) {
    fail("seed_state Fock level must be below fock_cutoff");
  }
  if (output_directory.empty()) fail("outputs.directory must not be empty");
}

void RunConfig::apply_override(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    fail("override must have the form key=value, got '" + std::string(assignment) + "'");
  }
  const std::string key(assignment.substr(0, eq));
  const std::string text(assignment.substr(eq + 1));
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  set_key(*this, key, value);
}

json RunConfig::to_json() const {
  json formats = json::array();
  if (write_csv) formats.push_back("csv");
  if (write_json) formats.push_back("json");
  return {
      {"device",
       {{"E_C", device.E_C},
        {"E_J", device.E_J},
        {"omega", device.omega},
        {"g", device.g},
        {"kappa", device.kappa},
        {"gamma", device.gamma},
        {"gamma_phi", device.gamma_phi},
        {"n_bar", device.n_bar},
        {"n_g", device.n_g}}},
      {"fock_cutoff", fock_cutoff},
      {"hamiltonian", to_string(hamiltonian)},
      {"time", {{"t_max", resolved_t_max()}, {"dt", resolved_dt()}, {"evolve_steps", evolve_steps}}},
      {"spectrum", {{"zero_pad_factor", zero_pad_factor}, {"n_max_peaks", n_max_peaks}}},
      {"seed_state", seed_state.label()},
      {"outputs", {{"directory", output_directory}, {"formats", formats}}},
  };
}

RunConfig RunConfig::from_json(const json& j) {
  if (!j.is_object()) fail("config root must be an object");
  RunConfig c;
  for (const auto& [name, value] : j.items()) {
    if (is_section(name)) {
      if (!value.is_object()) fail("config section '" + name + "' must be an object");
      for (const auto& [sub, v] : value.items()) set_key(c, name + "." + sub, v);
    } else {
      set_key(c, name, value);
    }
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open config file " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) fail("config file " + path.string() + " is not valid JSON");
  return RunConfig::from_json(j);
}

}  // namespace qnd
