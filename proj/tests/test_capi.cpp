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

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "qndsim/qndsim.h"

TEST_CASE("version and error reporting") {
  CHECK(std::string(qnd_version()) == "0.1.0");
  qnd_config* cfg = nullptr;
  CHECK(qnd_config_create_default(nullptr) == QND_ERR_INPUT);
  CHECK(std::strlen(qnd_last_error()) > 0);
  REQUIRE(qnd_config_create_default(&cfg) == QND_OK);
  CHECK(std::string(qnd_last_error()).empty());
  CHECK(qnd_config_set(cfg, "device.nonsense=1") == QND_ERR_CONFIG);
  CHECK(std::string(qnd_last_error()).find("nonsense") != std::string::npos);
  CHECK(qnd_config_load("/nonexistent/config.json", &cfg) == QND_ERR_IO);
  qnd_config_free(cfg);
  qnd_config_free(nullptr);
}

TEST_CASE("failed overrides leave the config untouched") {
  qnd_config* cfg = nullptr;
  REQUIRE(qnd_config_create_default(&cfg) == QND_OK);
  CHECK(qnd_config_set(cfg, "device.g=\"abc\"") == QND_ERR_CONFIG);
  CHECK(qnd_run_model(cfg, "capi_model") == QND_OK);
  qnd_config_free(cfg);
}

TEST_CASE("warnings buffer") {
  qnd_config* cfg = nullptr;
  REQUIRE(qnd_config_create_default(&cfg) == QND_OK);
  size_t needed = 99;
  CHECK(qnd_config_warnings(cfg, nullptr, 0, &needed) == QND_OK);
  CHECK(needed == 1);
  REQUIRE(qnd_config_set(cfg, "device.g=0.05") == QND_OK);
  CHECK(qnd_config_warnings(cfg, nullptr, 0, &needed) == QND_OK);
  CHECK(needed > 1);
  std::string buf(needed, 'x');
  CHECK(qnd_config_warnings(cfg, buf.data(), buf.size(), &needed) == QND_OK);
  CHECK(buf.find("lambda") != std::string::npos);
  char small[4];
  CHECK(qnd_config_warnings(cfg, small, sizeof small, &needed) == QND_OK);
  CHECK(std::strlen(small) == 3);
  qnd_config_free(cfg);
}

TEST_CASE("status codes of the commands") {
  qnd_config* cfg = nullptr;
  REQUIRE(qnd_config_create_default(&cfg) == QND_OK);
  CHECK(qnd_run_model(nullptr, "x") == QND_ERR_INPUT);
  REQUIRE(qnd_config_set(cfg, "device.E_J=1.0") == QND_OK);
  CHECK(qnd_run_model(cfg, "capi_resonant") == QND_ERR_CONFIG);
  REQUIRE(qnd_config_set(cfg, "device.E_J=1.25") == QND_OK);
  REQUIRE(qnd_config_set(cfg, "device.kappa=0.002") == QND_OK);
  REQUIRE(qnd_config_set(cfg, "fock_cutoff=8") == QND_OK);
  CHECK(qnd_run_spectrum(cfg, "capi_unresolved") == QND_ERR_REGIME);
  CHECK(qnd_run_model(cfg, "/proc/qndsim_forbidden") == QND_ERR_IO);
  CHECK(qnd_run_fit("/nonexistent/spectrum.csv", ".") == QND_ERR_IO);
  qnd_config_free(cfg);
}

TEST_CASE("spectrum handle") {
  qnd_config* cfg = nullptr;
  REQUIRE(qnd_config_create_default(&cfg) == QND_OK);
  REQUIRE(qnd_config_set(cfg, "fock_cutoff=10") == QND_OK);
  REQUIRE(qnd_config_set(cfg, "spectrum.n_max_peaks=4") == QND_OK);
  qnd_spectrum* s = nullptr;
  REQUIRE(qnd_spectrum_compute(cfg, &s) == QND_OK);
  const size_t n = qnd_spectrum_length(s);
  CHECK(n > 1000);
  std::vector<double> w(n), v(n);
  CHECK(qnd_spectrum_copy(s, w.data(), v.data(), n) == QND_OK);
  for (size_t i = 1; i < n; ++i) CHECK(w[i] > w[i - 1]);

  REQUIRE(qnd_spectrum_peak_count(s) == 4);
  qnd_peak p{};
  CHECK(qnd_spectrum_peak(s, 0, &p) == QND_OK);
  CHECK(p.phonon_index == 0);
  CHECK(p.resolved == 1);
  CHECK(std::abs(p.center - 1.2525) < 1e-4);
  CHECK(qnd_spectrum_peak(s, 4, &p) == QND_ERR_INPUT);

  size_t count = 0;
  double probs[8] = {0};
  CHECK(qnd_spectrum_fit(s, probs, 8, &count) == QND_OK);
  CHECK(count == 4);
  CHECK(std::abs(probs[0] - 0.5) < 0.05);
  CHECK(probs[1] < probs[0]);

  qnd_spectrum_free(s);
  qnd_config_free(cfg);
  CHECK(qnd_spectrum_length(nullptr) == 0);
}

TEST_CASE("commands write their files through the C API") {
  qnd_config* cfg = nullptr;
  REQUIRE(qnd_config_create_default(&cfg) == QND_OK);
  REQUIRE(qnd_config_set(cfg, "fock_cutoff=8") == QND_OK);
  REQUIRE(qnd_config_set(cfg, "spectrum.n_max_peaks=3") == QND_OK);
  REQUIRE(qnd_config_set(cfg, "time.evolve_steps=20") == QND_OK);
  CHECK(qnd_run_model(cfg, "capi_out") == QND_OK);
  CHECK(qnd_run_qnd_check(cfg, "capi_out") == QND_OK);
  CHECK(qnd_run_evolve(cfg, "capi_out") == QND_OK);
  CHECK(qnd_run_correlate(cfg, "capi_out") == QND_OK);
  CHECK(qnd_run_spectrum(cfg, "capi_out") == QND_OK);
  CHECK(qnd_run_fit("capi_out/spectrum.csv", "capi_out") == QND_OK);
  qnd_config_free(cfg);
}
