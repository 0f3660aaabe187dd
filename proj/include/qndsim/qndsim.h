/* Copyright 2026 The qndsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the qndsim library.
 *
 * All functions return a qnd_status. On failure, qnd_last_error() gives a
 * message for the calling thread that stays valid until the next call.
 * Handles are opaque and must be released with the matching _free call.
 */

#ifndef QNDSIM_QNDSIM_H_
#define QNDSIM_QNDSIM_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(QND_BUILDING_LIBRARY)
#    define QND_API __declspec(dllexport)
#  else
#    define QND_API __declspec(dllimport)
#  endif
#else
#  define QND_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qnd_status {
  QND_OK = 0,
  QND_ERR_INTERNAL = 1,
  QND_ERR_CONFIG = 2,
  QND_ERR_IO = 3,
  QND_ERR_REGIME = 4,
  QND_ERR_INPUT = 5
} qnd_status;

typedef struct qnd_config qnd_config;
typedef struct qnd_spectrum qnd_spectrum;

typedef struct qnd_peak {
  double center;
  double height;
  double width; /* full width at half maximum */
  double weight;
  int phonon_index;
  int resolved;
} qnd_peak;

QND_API const char* qnd_version(void);
QND_API const char* qnd_last_error(void);

/* Configuration. */
QND_API qnd_status qnd_config_create_default(qnd_config** out);
QND_API qnd_status qnd_config_load(const char* path, qnd_config** out);
/* Applies one "section.key=value" override; value is JSON or a bare string. */
QND_API qnd_status qnd_config_set(qnd_config* cfg, const char* assignment);
/* Writes the regime warnings, newline separated, into buf. *needed receives
 * the required size including the terminator. */
QND_API qnd_status qnd_config_warnings(const qnd_config* cfg, char* buf, size_t size, size_t* needed);
QND_API void qnd_config_free(qnd_config* cfg);

/* Commands. Each writes its files into out_dir (the configured directory
 * when out_dir is NULL). */
QND_API qnd_status qnd_run_model(const qnd_config* cfg, const char* out_dir);
QND_API qnd_status qnd_run_evolve(const qnd_config* cfg, const char* out_dir);
QND_API qnd_status qnd_run_correlate(const qnd_config* cfg, const char* out_dir);
QND_API qnd_status qnd_run_spectrum(const qnd_config* cfg, const char* out_dir);
QND_API qnd_status qnd_run_qnd_check(const qnd_config* cfg, const char* out_dir);
QND_API qnd_status qnd_run_fit(const char* spectrum_file, const char* out_dir);

/* In-memory spectrum with detected peaks. */
QND_API qnd_status qnd_spectrum_compute(const qnd_config* cfg, qnd_spectrum** out);
QND_API size_t qnd_spectrum_length(const qnd_spectrum* s);
/* Copies up to n samples of the frequency grid and spectral values. Either
 * destination may be NULL. */
QND_API qnd_status qnd_spectrum_copy(const qnd_spectrum* s, double* omega, double* values, size_t n);
QND_API size_t qnd_spectrum_peak_count(const qnd_spectrum* s);
QND_API qnd_status qnd_spectrum_peak(const qnd_spectrum* s, size_t i, qnd_peak* out);
/* Fits the peaks and writes up to n phonon probabilities. *count receives
 * the number of fitted levels. */
QND_API qnd_status qnd_spectrum_fit(const qnd_spectrum* s, double* probabilities, size_t n, size_t* count);
QND_API void qnd_spectrum_free(qnd_spectrum* s);

#ifdef __cplusplus
}
#endif

#endif /* QNDSIM_QNDSIM_H_ */
