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

#include "qndsim/qndsim.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "qndsim/error.hpp"
#include "qndsim/runner.hpp"

struct qnd_config {
  qnd::RunConfig cfg;
};

struct qnd_spectrum {
  qnd::SpectrumResult result;
};

namespace {

thread_local std::string last_error;

qnd_status status_for(qnd::ErrorKind kind) {
  switch (kind) {
    case qnd::ErrorKind::config: return QND_ERR_CONFIG;
    case qnd::ErrorKind::io: return QND_ERR_IO;
    case qnd::ErrorKind::regime: return QND_ERR_REGIME;
    case qnd::ErrorKind::input:
    case qnd::ErrorKind::fit: return QND_ERR_INPUT;
    default: return QND_ERR_INTERNAL;
  }
}

template <class F>
qnd_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return QND_OK;
  } catch (const qnd::Error& e) {
    last_error = std::string(qnd::to_string(e.kind())) + " error: " + e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return QND_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (!p) throw qnd::Error(qnd::ErrorKind::input, std::string(what) + " must not be null");
}

std::filesystem::path out_path(const qnd_config* c, const char* out_dir) {
  return out_dir ? std::filesystem::path(out_dir) : std::filesystem::path(c->cfg.output_directory);
}

template <class Command>
qnd_status run(const qnd_config* c, const char* out_dir, Command command) {
  return guarded([&] {
    require(c, "config");
    command(c->cfg, out_path(c, out_dir));
  });
}

}  // namespace

extern "C" {

const char* qnd_version(void) { return "0.1.0"; }

const char* qnd_last_error(void) { return last_error.c_str(); }

qnd_status qnd_config_create_default(qnd_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qnd_config{};
  });
}

qnd_status qnd_config_load(const char* path, qnd_config** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new qnd_config{qnd::load_config(path)};
  });
}

qnd_status qnd_config_set(qnd_config* cfg, const char* assignment) {
  return guarded([&] {
    require(cfg, "config");
    require(assignment, "assignment");
    qnd::RunConfig next = cfg->cfg;
    next.apply_override(assignment);
    cfg->cfg = std::move(next);
  });
}

qnd_status qnd_config_warnings(const qnd_config* cfg, char* buf, size_t size, size_t* needed) {
  return guarded([&] {
    require(cfg, "config");
    std::string text;
    for (const auto& w : cfg->cfg.device.warnings()) text += w + "\n";
    if (needed) *needed = text.size() + 1;
    if (buf && size > 0) {
      const size_t n = std::min(size - 1, text.size());
      std::memcpy(buf, text.data(), n);
      buf[n] = '\0';
    }
  });
}

void qnd_config_free(qnd_config* cfg) { delete cfg; }

qnd_status qnd_run_model(const qnd_config* cfg, const char* out_dir) {
  return run(cfg, out_dir, qnd::cmd_model);
}

qnd_status qnd_run_evolve(const qnd_config* cfg, const char* out_dir) {
  return run(cfg, out_dir, qnd::cmd_evolve);
}

qnd_status qnd_run_correlate(const qnd_config* cfg, const char* out_dir) {
  return run(cfg, out_dir, qnd::cmd_correlate);
}

qnd_status qnd_run_spectrum(const qnd_config* cfg, const char* out_dir) {
  return run(cfg, out_dir, qnd::cmd_spectrum);
}

qnd_status qnd_run_qnd_check(const qnd_config* cfg, const char* out_dir) {
  return run(cfg, out_dir, qnd::cmd_qnd_check);
}

qnd_status qnd_run_fit(const char* spectrum_file, const char* out_dir) {
  return guarded([&] {
    require(spectrum_file, "spectrum_file");
    qnd::cmd_fit(spectrum_file, out_dir ? out_dir : ".");
  });
}

qnd_status qnd_spectrum_compute(const qnd_config* cfg, qnd_spectrum** out) {
  return guarded([&] {
    require(cfg, "config");
    require(out, "out");
    *out = new qnd_spectrum{qnd::run_spectrum(cfg->cfg)};
  });
}

size_t qnd_spectrum_length(const qnd_spectrum* s) { return s ? s->result.frequencies.size() : 0; }

qnd_status qnd_spectrum_copy(const qnd_spectrum* s, double* omega, double* values, size_t n) {
  return guarded([&] {
    require(s, "spectrum");
    const size_t m = std::min(n, s->result.frequencies.size());
    if (omega) std::copy_n(s->result.frequencies.begin(), m, omega);
    if (values) std::copy_n(s->result.values.begin(), m, values);
  });
}

size_t qnd_spectrum_peak_count(const qnd_spectrum* s) { return s ? s->result.peaks.size() : 0; }

qnd_status qnd_spectrum_peak(const qnd_spectrum* s, size_t i, qnd_peak* out) {
  return guarded([&] {
    require(s, "spectrum");
    require(out, "out");
    if (i >= s->result.peaks.size()) throw qnd::Error(qnd::ErrorKind::input, "peak index out of range");
    const qnd::Peak& p = s->result.peaks[i];
    *out = qnd_peak{p.center, p.height, p.width, p.weight, p.phonon_index, p.resolved ? 1 : 0};
  });
}

qnd_status qnd_spectrum_fit(const qnd_spectrum* s, double* probabilities, size_t n, size_t* count) {
  return guarded([&] {
    require(s, "spectrum");
    const qnd::PhononDistribution d = qnd::fit_peak_weights(s->result);
    if (count) *count = d.probabilities.size();
    if (probabilities) std::copy_n(d.probabilities.begin(), std::min(n, d.probabilities.size()), probabilities);
  });
}

void qnd_spectrum_free(qnd_spectrum* s) { delete s; }

}  // extern "C"
