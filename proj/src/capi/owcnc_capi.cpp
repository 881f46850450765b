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

#include "owcnc/owcnc.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "owcnc/channel.hpp"
#include "owcnc/errors.hpp"
#include "owcnc/gf256.hpp"
#include "owcnc/outage.hpp"
#include "owcnc/rlnc.hpp"
#include "owcnc/scenario.hpp"
#include "owcnc/sweep.hpp"

struct owcnc_config {
  owcnc::scenario::ScenarioConfig cfg;
};

struct owcnc_sweep {
  owcnc::sweep::SweepResult result;
};

struct owcnc_decoder {
  owcnc::rlnc::DecoderState state;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_error_line = 0;

owcnc_status fail(owcnc_status status, std::string message, std::size_t line = 0) {
  g_last_error = std::move(message);
  g_last_error_line = line;
  return status;
}

owcnc_status ok() {
  g_last_error.clear();
  g_last_error_line = 0;
  return OWCNC_OK;
}

// Maps the core's exception types onto status codes.
template <class Fn>
owcnc_status guarded(Fn&& fn) {
  try {
    fn();
    return ok();
  } catch (const owcnc::ConfigError& e) {
    return fail(OWCNC_ERR_CONFIG, e.what(), e.line());
  } catch (const owcnc::IoError& e) {
    return fail(OWCNC_ERR_IO, e.what());
  } catch (const owcnc::InsufficientRankError& e) {
    return fail(OWCNC_ERR_INSUFFICIENT_RANK, e.what());
  } catch (const owcnc::DomainError& e) {
    return fail(OWCNC_ERR_DOMAIN, e.what());
  } catch (const owcnc::StructuralError& e) {
    return fail(OWCNC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(OWCNC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(OWCNC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(OWCNC_ERR_INTERNAL, "unknown error");
  }
}

owcnc_status copy_out(const std::string& text, char* buf, std::size_t cap, std::size_t* needed) {
  const std::size_t n = text.size() + 1;
  if (needed) *needed = n;
  if (!buf || cap < n) return fail(OWCNC_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(n) + " bytes");
  std::memcpy(buf, text.c_str(), n);
  return ok();
}

std::optional<std::string_view> optional_profile(const char* profile) {
  if (!profile) return std::nullopt;
  return std::string_view(profile);
}

}  // namespace

extern "C" {

const char* owcnc_version(void) { return OWCNC_VERSION; }

const char* owcnc_status_name(owcnc_status status) {
  switch (status) {
    case OWCNC_OK: return "ok";
    case OWCNC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case OWCNC_ERR_DOMAIN: return "domain_error";
    case OWCNC_ERR_CONFIG: return "config_error";
    case OWCNC_ERR_IO: return "io_error";
    case OWCNC_ERR_INSUFFICIENT_RANK: return "insufficient_rank";
    case OWCNC_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case OWCNC_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* owcnc_last_error(void) { return g_last_error.c_str(); }
size_t owcnc_last_error_line(void) { return g_last_error_line; }

owcnc_status owcnc_config_default(const char* profile, owcnc_config** out) {
  if (!out) return fail(OWCNC_ERR_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  return guarded([&] {
    *out = new owcnc_config{owcnc::scenario::defaults_for(profile ? profile : "table1")};
  });
}

owcnc_status owcnc_config_load(const char* path, const char* profile, owcnc_config** out) {
  if (!path || !out) return fail(OWCNC_ERR_INVALID_ARGUMENT, "path or out is NULL");
  *out = nullptr;
  return guarded([&] {
    *out = new owcnc_config{owcnc::scenario::load_config(path, optional_profile(profile))};
  });
}

owcnc_status owcnc_config_parse(const char* text, size_t len, const char* profile, owcnc_config** out) {
  if ((!text && len) || !out) return fail(OWCNC_ERR_INVALID_ARGUMENT, "text or out is NULL");
  *out = nullptr;
  return guarded([&] {
    *out = new owcnc_config{owcnc::scenario::parse_config(std::string_view(text ? text : "", len),
                                                          optional_profile(profile))};
  });
}

owcnc_status owcnc_config_set(owcnc_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return fail(OWCNC_ERR_INVALID_ARGUMENT, "cfg, key or value is NULL");
  return guarded([&] { owcnc::scenario::apply_setting(cfg->cfg, key, value); });
}

owcnc_status owcnc_config_validate(const owcnc_config* cfg) {
  if (!cfg) return fail(OWCNC_ERR_INVALID_ARGUMENT, "cfg is NULL");
  return guarded([&] { owcnc::scenario::validate(cfg->cfg); });
}

owcnc_status owcnc_config_dump(const owcnc_config* cfg, char* buf, size_t cap, size_t* needed) {
  if (!cfg) return fail(OWCNC_ERR_INVALID_ARGUMENT, "cfg is NULL");
  std::string text;
  const auto st = guarded([&] { text = owcnc::scenario::dump_config(cfg->cfg); });
  return st == OWCNC_OK ? copy_out(text, buf, cap, needed) : st;
}

int owcnc_config_equal(const owcnc_config* a, const owcnc_config* b) {
  return a && b && a->cfg == b->cfg ? 1 : 0;
}

void owcnc_config_free(owcnc_config* cfg) { delete cfg; }

owcnc_status owcnc_sweep_run(const owcnc_config* cfg, unsigned workers, owcnc_sweep** out) {
  if (!cfg || !out) return fail(OWCNC_ERR_INVALID_ARGUMENT, "cfg or out is NULL");
  *out = nullptr;
  return guarded([&] { *out = new owcnc_sweep{owcnc::sweep::run_sweep(cfg->cfg, workers)}; });
}

size_t owcnc_sweep_rows(const owcnc_sweep* sweep) { return sweep ? sweep->result.records.size() : 0; }

owcnc_status owcnc_sweep_csv(const owcnc_sweep* sweep, char* buf, size_t cap, size_t* needed) {
  if (!sweep) return fail(OWCNC_ERR_INVALID_ARGUMENT, "sweep is NULL");
  return copy_out(owcnc::sweep::to_csv(sweep->result), buf, cap, needed);
}

owcnc_status owcnc_sweep_write_csv(const owcnc_sweep* sweep, const char* path) {
  if (!sweep || !path) return fail(OWCNC_ERR_INVALID_ARGUMENT, "sweep or path is NULL");
  return guarded([&] { owcnc::sweep::emit_csv(sweep->result, path); });
}

owcnc_status owcnc_sweep_summary_json(const owcnc_sweep* sweep, char* buf, size_t cap, size_t* needed) {
  if (!sweep) return fail(OWCNC_ERR_INVALID_ARGUMENT, "sweep is NULL");
  return copy_out(owcnc::sweep::summary_json(sweep->result), buf, cap, needed);
}

size_t owcnc_sweep_warning_count(const owcnc_sweep* sweep) {
  return sweep ? sweep->result.warnings.size() : 0;
}

owcnc_status owcnc_sweep_warning(const owcnc_sweep* sweep, size_t index, char* buf, size_t cap,
                                 size_t* needed) {
  if (!sweep || index >= sweep->result.warnings.size())
    return fail(OWCNC_ERR_INVALID_ARGUMENT, "no such warning");
  const auto& w = sweep->result.warnings[index];
  return copy_out(w.code + ": " + w.message, buf, cap, needed);
}

void owcnc_sweep_free(owcnc_sweep* sweep) { delete sweep; }

uint8_t owcnc_gf_mul(uint8_t a, uint8_t b) {
  return owcnc::gf256::gf_mul(owcnc::gf256::FieldElement{a}, owcnc::gf256::FieldElement{b}).value;
}

owcnc_status owcnc_gf_inv(uint8_t a, uint8_t* out) {
  if (!out) return fail(OWCNC_ERR_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = owcnc::gf256::gf_inv(owcnc::gf256::FieldElement{a}).value; });
}

owcnc_status owcnc_lambert_index(double semi_angle_deg, double* out) {
  if (!out) return fail(OWCNC_ERR_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = owcnc::channel::lambert_index(semi_angle_deg); });
}

owcnc_status owcnc_packet_failure(double eps, int v_max, double* out) {
  if (!out) return fail(OWCNC_ERR_INVALID_ARGUMENT, "out is NULL");
  if (!(eps >= 0.0) || v_max < 1) return fail(OWCNC_ERR_DOMAIN, "need eps >= 0 and v_max >= 1");
  *out = owcnc::outage::packet_failure(eps, v_max);
  return ok();
}

double owcnc_full_rank_probability(size_t f, size_t tau) {
  return owcnc::rlnc::full_rank_probability(f, tau);
}

owcnc_status owcnc_decoder_new(size_t f, size_t payload_len, owcnc_decoder** out) {
  if (!out) return fail(OWCNC_ERR_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  return guarded([&] { *out = new owcnc_decoder{owcnc::rlnc::DecoderState(f, payload_len)}; });
}

owcnc_status owcnc_decoder_absorb(owcnc_decoder* dec, const uint8_t* coeffs, size_t n_coeffs,
                                  const uint8_t* payload, size_t payload_len, int* innovative) {
  if (!dec || (!coeffs && n_coeffs) || (!payload && payload_len))
    return fail(OWCNC_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    owcnc::rlnc::CodedPacket pkt;
    pkt.coeffs.reserve(n_coeffs);
    for (size_t i = 0; i < n_coeffs; ++i) pkt.coeffs.emplace_back(coeffs[i]);
    pkt.payload.assign(payload, payload + payload_len);
    const bool grew = dec->state.absorb(pkt);
    if (innovative) *innovative = grew ? 1 : 0;
  });
}

size_t owcnc_decoder_rank(const owcnc_decoder* dec) { return dec ? dec->state.rank() : 0; }

owcnc_status owcnc_decoder_decode(const owcnc_decoder* dec, uint8_t* out, size_t cap) {
  if (!dec || !out) return fail(OWCNC_ERR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    const auto gen = dec->state.decode();
    const auto flat = gen.flat();
    if (cap < flat.size()) throw owcnc::StructuralError("output buffer needs " + std::to_string(flat.size()) + " bytes");
    std::memcpy(out, flat.data(), flat.size());
  });
}

void owcnc_decoder_free(owcnc_decoder* dec) { delete dec; }

}  // extern "C"
