/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The owcnc Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OWCNC_OWCNC_H
#define OWCNC_OWCNC_H

/*
 * C interface to the owcnc toolkit: scenario configuration, alpha sweeps,
 * CSV/JSON output, and a few analytic and codec primitives.
 *
 * Every fallible call returns an owcnc_status. On failure a description is
 * available from owcnc_last_error() on the same thread until the next call.
 * Handles are opaque, owned by the caller, and released with the matching
 * *_free function (which accepts NULL).
 *
 * String outputs use a two-call convention: pass buf = NULL (or a buffer that
 * is too small) to receive OWCNC_ERR_BUFFER_TOO_SMALL with *needed set to the
 * required size including the terminating NUL.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(OWCNC_BUILDING_LIBRARY)
#    define OWCNC_API __declspec(dllexport)
#  else
#    define OWCNC_API __declspec(dllimport)
#  endif
#else
#  define OWCNC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum owcnc_status {
  OWCNC_OK = 0,
  OWCNC_ERR_INVALID_ARGUMENT = 1,
  OWCNC_ERR_DOMAIN = 2,
  OWCNC_ERR_CONFIG = 3,
  OWCNC_ERR_IO = 4,
  OWCNC_ERR_INSUFFICIENT_RANK = 5,
  OWCNC_ERR_BUFFER_TOO_SMALL = 6,
  OWCNC_ERR_INTERNAL = 99
} owcnc_status;

typedef struct owcnc_config owcnc_config;
typedef struct owcnc_sweep owcnc_sweep;
typedef struct owcnc_decoder owcnc_decoder;

OWCNC_API const char* owcnc_version(void);
OWCNC_API const char* owcnc_status_name(owcnc_status status);

/* Message for the last failed call on this thread ("" if none). */
OWCNC_API const char* owcnc_last_error(void);
/* Config file line of the last OWCNC_ERR_CONFIG, 0 if not from a file. */
OWCNC_API size_t owcnc_last_error_line(void);

/* ---- scenario configuration ------------------------------------------- */

/* profile: "table1" or "paper-adjusted"; NULL means "table1". */
OWCNC_API owcnc_status owcnc_config_default(const char* profile, owcnc_config** out);
/* profile: NULL to honour the file's own `profile` key. */
OWCNC_API owcnc_status owcnc_config_load(const char* path, const char* profile, owcnc_config** out);
OWCNC_API owcnc_status owcnc_config_parse(const char* text, size_t len, const char* profile,
                                          owcnc_config** out);
/* Same keys and value syntax as the config file. Not validated until
 * owcnc_config_validate() or owcnc_sweep_run(). */
OWCNC_API owcnc_status owcnc_config_set(owcnc_config* cfg, const char* key, const char* value);
OWCNC_API owcnc_status owcnc_config_validate(const owcnc_config* cfg);
/* Config text that re-loads to an equal configuration. */
OWCNC_API owcnc_status owcnc_config_dump(const owcnc_config* cfg, char* buf, size_t cap, size_t* needed);
OWCNC_API int owcnc_config_equal(const owcnc_config* a, const owcnc_config* b);
OWCNC_API void owcnc_config_free(owcnc_config* cfg);

/* ---- sweeps ------------------------------------------------------------- */

/* workers: Monte-Carlo threads, 0 = all cores. Output does not depend on it. */
OWCNC_API owcnc_status owcnc_sweep_run(const owcnc_config* cfg, unsigned workers, owcnc_sweep** out);
OWCNC_API size_t owcnc_sweep_rows(const owcnc_sweep* sweep);
OWCNC_API owcnc_status owcnc_sweep_csv(const owcnc_sweep* sweep, char* buf, size_t cap, size_t* needed);
OWCNC_API owcnc_status owcnc_sweep_write_csv(const owcnc_sweep* sweep, const char* path);
OWCNC_API owcnc_status owcnc_sweep_summary_json(const owcnc_sweep* sweep, char* buf, size_t cap,
                                                size_t* needed);
OWCNC_API size_t owcnc_sweep_warning_count(const owcnc_sweep* sweep);
/* "<code>: <message>" */
OWCNC_API owcnc_status owcnc_sweep_warning(const owcnc_sweep* sweep, size_t index, char* buf, size_t cap,
                                           size_t* needed);
OWCNC_API void owcnc_sweep_free(owcnc_sweep* sweep);

/* ---- primitives --------------------------------------------------------- */

OWCNC_API uint8_t owcnc_gf_mul(uint8_t a, uint8_t b);
OWCNC_API owcnc_status owcnc_gf_inv(uint8_t a, uint8_t* out);
OWCNC_API owcnc_status owcnc_lambert_index(double semi_angle_deg, double* out);
OWCNC_API owcnc_status owcnc_packet_failure(double eps, int v_max, double* out);
OWCNC_API double owcnc_full_rank_probability(size_t f, size_t tau);

/* ---- RLNC decoder ------------------------------------------------------- */

OWCNC_API owcnc_status owcnc_decoder_new(size_t f, size_t payload_len, owcnc_decoder** out);
/* innovative (optional) receives 1 if the packet raised the rank. */
OWCNC_API owcnc_status owcnc_decoder_absorb(owcnc_decoder* dec, const uint8_t* coeffs, size_t n_coeffs,
                                            const uint8_t* payload, size_t payload_len, int* innovative);
OWCNC_API size_t owcnc_decoder_rank(const owcnc_decoder* dec);
/* Writes f * payload_len bytes, packet after packet. */
OWCNC_API owcnc_status owcnc_decoder_decode(const owcnc_decoder* dec, uint8_t* out, size_t cap);
OWCNC_API void owcnc_decoder_free(owcnc_decoder* dec);

#ifdef __cplusplus
}
#endif

#endif /* OWCNC_OWCNC_H */
