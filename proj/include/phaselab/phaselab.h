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

#ifndef PHASELAB_PHASELAB_H_
#define PHASELAB_PHASELAB_H_

/* C interface to the phaselab core. Every result is a JSON document returned
 * as a heap string owned by the caller and released with phaselab_string_free.
 * Exact rationals inside the JSON are strings such as "1/4". */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PHASELAB_API __declspec(dllexport)
#else
#define PHASELAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum phaselab_status {
  PHASELAB_OK = 0,
  PHASELAB_ERR_NULL_ARGUMENT = 1,
  PHASELAB_ERR_INVALID_ARGUMENT = 2,
  PHASELAB_ERR_COMPUTATION = 3,
  PHASELAB_ERR_INTERNAL = 4
} phaselab_status;

/* One theory (Stab or Spek) with its cached intermediate results. */
typedef struct phaselab_context phaselab_context;

typedef struct phaselab_report_options {
  uint64_t seed;
  unsigned threads;
  int timing;
  size_t spider_trials;
  int arity3;
} phaselab_report_options;

PHASELAB_API const char* phaselab_version(void);
PHASELAB_API int phaselab_report_schema_version(void);

/* Message for the last failed call on this thread, or "" if none. */
PHASELAB_API const char* phaselab_last_error(void);
PHASELAB_API const char* phaselab_status_name(phaselab_status status);

PHASELAB_API void phaselab_string_free(char* s);

/* theory is "stab" or "spek", case-insensitive. */
PHASELAB_API phaselab_status phaselab_context_create(const char* theory, phaselab_context** out);
PHASELAB_API void phaselab_context_destroy(phaselab_context* ctx);

PHASELAB_API phaselab_status phaselab_theory_build(phaselab_context* ctx, char** json_out);
PHASELAB_API phaselab_status phaselab_theory_states(phaselab_context* ctx, unsigned arity, char** json_out);
PHASELAB_API phaselab_status phaselab_theory_observables(phaselab_context* ctx, char** json_out);
PHASELAB_API phaselab_status phaselab_theory_verify_muqt(phaselab_context* ctx, char** json_out);
/* observable is "Z", "X" or "Y". */
PHASELAB_API phaselab_status phaselab_phase_group(phaselab_context* ctx, const char* observable, char** json_out);
PHASELAB_API phaselab_status phaselab_ghz(phaselab_context* ctx, const char* observable, char** json_out);
PHASELAB_API phaselab_status phaselab_correlations(phaselab_context* ctx, char** json_out);
/* mode is "prob" or "poss". The JSON carries "verdict": "feasible" | "infeasible". */
PHASELAB_API phaselab_status phaselab_lhv(phaselab_context* ctx, const char* mode, char** json_out);
/* The JSON carries "certificate": null or the contradictory parity equations. */
PHASELAB_API phaselab_status phaselab_mermin(phaselab_context* ctx, char** json_out);
PHASELAB_API phaselab_status phaselab_spider_test(phaselab_context* ctx, size_t trials, uint64_t seed,
                                                  unsigned threads, char** json_out);

PHASELAB_API void phaselab_report_options_default(phaselab_report_options* options);
/* Both theories end to end. The JSON carries "ok" and a list of named checks. */
PHASELAB_API phaselab_status phaselab_full_report(const phaselab_report_options* options, char** json_out);
/* Text table rendered from a report JSON document. */
PHASELAB_API phaselab_status phaselab_render_report(const char* report_json, char** text_out);

#ifdef __cplusplus
}
#endif

#endif  /* PHASELAB_PHASELAB_H_ */
