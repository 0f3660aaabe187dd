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

// qndsim command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qndsim/qndsim.h"

namespace {

struct Options {
  std::string config;
  std::string out;
  std::vector<std::string> overrides;
  std::string spectrum_file;
};

int report(qnd_status st) {
  if (st != QND_OK) std::fprintf(stderr, "qndsim: %s\n", qnd_last_error());
  return static_cast<int>(st);
}

void print_warnings(const qnd_config* cfg) {
  size_t needed = 0;
  if (qnd_config_warnings(cfg, nullptr, 0, &needed) != QND_OK || needed <= 1) return;
  std::string buf(needed, '\0');
  qnd_config_warnings(cfg, buf.data(), buf.size(), &needed);
  buf.resize(needed - 1);
  std::size_t start = 0;
  while (start < buf.size()) {
    const auto end = buf.find('\n', start);
    std::fprintf(stderr, "warning: %s\n", buf.substr(start, end - start).c_str());
    start = end == std::string::npos ? buf.size() : end + 1;
  }
}

using Command = qnd_status (*)(const qnd_config*, const char*);

int run_with_config(const Options& o, Command command) {
  qnd_config* cfg = nullptr;
  qnd_status st = o.config.empty() ? qnd_config_create_default(&cfg) : qnd_config_load(o.config.c_str(), &cfg);
  if (st != QND_OK) return report(st);
  for (const auto& ov : o.overrides) {
    st = qnd_config_set(cfg, ov.c_str());
    if (st != QND_OK) {
      qnd_config_free(cfg);
      return report(st);
    }
  }
  print_warnings(cfg);
  st = command(cfg, o.out.empty() ? nullptr : o.out.c_str());
  qnd_config_free(cfg);
  return report(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dispersive qubit readout of a nanomechanical resonator"};
  app.set_version_flag("--version", std::string(qnd_version()));
  app.require_subcommand(1);

  Options o;
  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"model", "Derived couplings, regime checks and transition combs", qnd_run_model},
      {"evolve", "Master-equation evolution of the joint state", qnd_run_evolve},
      {"correlate", "Qubit emission correlation function", qnd_run_correlate},
      {"spectrum", "Emission spectrum and number-split peaks", qnd_run_spectrum},
      {"qnd-check", "Commutator tests of the QND conditions", qnd_run_qnd_check},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("-c,--config", o.config, "JSON configuration file");
    sub->add_option("-o,--out", o.out, "Output directory (default: outputs.directory)");
    sub->add_option("-s,--override", o.overrides, "Config override key=value (repeatable)");
    subs.emplace_back(sub, e.command);
  }
  CLI::App* fit = app.add_subcommand("fit", "Phonon distribution from a spectrum file");
  fit->add_option("spectrum", o.spectrum_file, "spectrum.csv written by the spectrum command")->required();
  fit->add_option("-o,--out", o.out, "Output directory (default: the spectrum file's directory)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share the config exit code.
    const int code = app.exit(e);
    return code == 0 ? 0 : QND_ERR_CONFIG;
  }

  if (fit->parsed()) {
    std::string out = o.out;
    if (out.empty()) {
      const auto slash = o.spectrum_file.find_last_of('/');
      out = slash == std::string::npos ? "." : o.spectrum_file.substr(0, slash);
      if (out.empty()) out = "/";
    }
    return report(qnd_run_fit(o.spectrum_file.c_str(), out.c_str()));
  }
  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) return run_with_config(o, command);
  }
  return QND_ERR_INTERNAL;
}
