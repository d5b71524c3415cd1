// Copyright 2026 The PhaseLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phaselab/phaselab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "phaselab/report.hpp"

struct phaselab_context {
  phaselab::TheoryWorkspace workspace;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

phaselab_status fail(phaselab_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class F>
phaselab_status guarded(char** out, F&& body) {
  if (out == nullptr) return fail(PHASELAB_ERR_NULL_ARGUMENT, "output pointer is null");
  *out = nullptr;
  try {
    *out = copy_string(body());
    g_last_error.clear();
    return PHASELAB_OK;
  } catch (const std::invalid_argument& e) {
    return fail(PHASELAB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const phaselab::Json::exception& e) {
    return fail(PHASELAB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PHASELAB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PHASELAB_ERR_COMPUTATION, e.what());
  } catch (...) {
    return fail(PHASELAB_ERR_INTERNAL, "unknown exception");
  }
}

template <class F>
phaselab_status with_context(phaselab_context* ctx, char** out, F&& body) {
  if (ctx == nullptr) return fail(PHASELAB_ERR_NULL_ARGUMENT, "context is null");
  return guarded(out, [&] { return body(ctx->workspace).dump(); });
}

std::string required(const char* s, const char* what) {
  if (s == nullptr) throw std::invalid_argument(std::string(what) + " is null");
  return s;
}

}  // namespace

extern "C" {

const char* phaselab_version(void) {
  static const std::string v = phaselab::version_string();
  return v.c_str();
}

int phaselab_report_schema_version(void) { return phaselab::kReportSchemaVersion; }

const char* phaselab_last_error(void) { return g_last_error.c_str(); }

const char* phaselab_status_name(phaselab_status status) {
  switch (status) {
    case PHASELAB_OK:
      return "ok";
    case PHASELAB_ERR_NULL_ARGUMENT:
      return "null argument";
    case PHASELAB_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case PHASELAB_ERR_COMPUTATION:
      return "computation error";
    case PHASELAB_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void phaselab_string_free(char* s) { std::free(s); }

phaselab_status phaselab_context_create(const char* theory, phaselab_context** out) {
  if (out == nullptr) return fail(PHASELAB_ERR_NULL_ARGUMENT, "output pointer is null");
  *out = nullptr;
  if (theory == nullptr) return fail(PHASELAB_ERR_NULL_ARGUMENT, "theory is null");
  try {
    *out = new phaselab_context{phaselab::TheoryWorkspace(theory)};
    g_last_error.clear();
    return PHASELAB_OK;
  } catch (const std::invalid_argument& e) {
    return fail(PHASELAB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(PHASELAB_ERR_COMPUTATION, e.what());
  } catch (...) {
    return fail(PHASELAB_ERR_INTERNAL, "unknown exception");
  }
}

void phaselab_context_destroy(phaselab_context* ctx) { delete ctx; }

phaselab_status phaselab_theory_build(phaselab_context* ctx, char** json_out) {
  return with_context(ctx, json_out, [](auto& w) { return w.build(); });
}

phaselab_status phaselab_theory_states(phaselab_context* ctx, unsigned arity, char** json_out) {
  return with_context(ctx, json_out, [&](auto& w) { return w.states(arity); });
}

phaselab_status phaselab_theory_observables(phaselab_context* ctx, char** json_out) {
  return with_context(ctx, json_out, [](auto& w) { return w.observables(); });
}

phaselab_status phaselab_theory_verify_muqt(phaselab_context* ctx, char** json_out) {
  return with_context(ctx, json_out, [](auto& w) { return w.verify_muqt(); });
}

phaselab_status phaselab_phase_group(phaselab_context* ctx, const char* observable, char** json_out) {
  return with_context(ctx, json_out, [&](auto& w) { return w.phase_group(required(observable, "observable")); });
}

phaselab_status phaselab_ghz(phaselab_context* ctx, const char* observable, char** json_out) {
  return with_context(ctx, json_out, [&](auto& w) { return w.ghz(required(observable, "observable")); });
}

phaselab_status phaselab_correlations(phaselab_context* ctx, char** json_out) {
  return with_context(ctx, json_out, [](auto& w) { return w.correlations(); });
}

phaselab_status phaselab_lhv(phaselab_context* ctx, const char* mode, char** json_out) {
  return with_context(ctx, json_out, [&](auto& w) { return w.lhv(required(mode, "mode")); });
}

phaselab_status phaselab_mermin(phaselab_context* ctx, char** json_out) {
  return with_context(ctx, json_out, [](auto& w) { return w.mermin(); });
}

phaselab_status phaselab_spider_test(phaselab_context* ctx, size_t trials, uint64_t seed, unsigned threads,
                                     char** json_out) {
  return with_context(ctx, json_out, [&](auto& w) { return w.spider_test(trials, seed, threads); });
}

void phaselab_report_options_default(phaselab_report_options* options) {
  if (options == nullptr) return;
  const phaselab::ReportOptions d;
  options->seed = d.seed;
  options->threads = d.threads;
  options->timing = d.timing ? 1 : 0;
  options->spider_trials = d.spider_trials;
  options->arity3 = d.arity3 ? 1 : 0;
}

phaselab_status phaselab_full_report(const phaselab_report_options* options, char** json_out) {
  if (options == nullptr) return fail(PHASELAB_ERR_NULL_ARGUMENT, "options is null");
  return guarded(json_out, [&] {
    phaselab::ReportOptions o;
    o.seed = options->seed;
    o.threads = options->threads == 0 ? 1 : options->threads;
    o.timing = options->timing != 0;
    o.spider_trials = options->spider_trials;
    o.arity3 = options->arity3 != 0;
    return phaselab::full_report(o).dump(2) + "\n";
  });
}

phaselab_status phaselab_render_report(const char* report_json, char** text_out) {
  if (report_json == nullptr) return fail(PHASELAB_ERR_NULL_ARGUMENT, "report is null");
  return guarded(text_out, [&] { return phaselab::render_report_text(phaselab::Json::parse(report_json)); });
}

}  // extern "C"
