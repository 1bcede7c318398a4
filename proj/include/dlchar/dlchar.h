/* Copyright (C) 2026 The dlchar Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef DLCHAR_DLCHAR_H
#define DLCHAR_DLCHAR_H

#include <stdint.h>

#if defined(_WIN32)
#define DLC_API __declspec(dllexport)
#elif defined(__GNUC__)
#define DLC_API __attribute__((visibility("default")))
#else
#define DLC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dlc_status {
  DLC_OK = 0,
  DLC_E_INVALID = 1,       /* bad argument or configuration */
  DLC_E_BUDGET = 2,        /* enumeration or field-size budget exceeded */
  DLC_E_PRECONDITION = 3,  /* input violates a mathematical precondition */
  DLC_E_CONTRACT = 4,      /* a lift failed the transporter condition */
  DLC_E_INTERNAL = 5,      /* an identity that must hold did not */
  DLC_E_IO = 6
} dlc_status;

typedef enum dlc_mode { DLC_MODE_FROBENIUS = 0, DLC_MODE_TRANSPOSE_INVERSE = 1 } dlc_mode;

typedef enum dlc_format { DLC_FORMAT_JSON = 0, DLC_FORMAT_TSV = 1, DLC_FORMAT_TEXT = 2 } dlc_format;

typedef enum dlc_check {
  DLC_CHECK_THEOREM = 0,
  DLC_CHECK_NORMALIZER = 1,
  DLC_CHECK_VANISHING = 2,
  DLC_CHECK_COUNTEREXAMPLE = 3,
  DLC_CHECK_LIFT = 4
} dlc_check;

/* Self-test mutations (bit flags). */
enum {
  DLC_MUTATE_DROP_NORM_IMAGE = 1,
  DLC_MUTATE_MISMATCHED_TORUS = 2,
  DLC_MUTATE_BAD_LIFT = 4
};

typedef struct dlc_options {
  dlc_mode mode;
  unsigned n, q, ell;
  /* Partitions for T, e.g. "1,1;2"; NULL or "" for all. */
  const char* partitions;
  /* Exponent tuple for one character, e.g. "1,0"; NULL for all characters. */
  const char* theta;
  /* Nonzero: a seeded sample of this many characters per torus. */
  unsigned theta_sample;
  /* Explicit s~ list: matrices "a,b;c,d" separated by '|'; NULL for the torus family. */
  const char* s_tilde;
  unsigned extra_conjugates;
  uint64_t budget;
  uint64_t seed;
  unsigned trials;
  int check_full_oracle;
  int timings;
  unsigned mutation;
} dlc_options;

typedef struct dlc_session dlc_session;

DLC_API void dlc_options_init(dlc_options* opts);

DLC_API dlc_status dlc_session_create(const dlc_options* opts, dlc_session** out);
DLC_API void dlc_session_destroy(dlc_session* session);

/* Runs a harness and writes the report to *out_report (free with dlc_free).
 * *out_success is 1 when the check succeeded: no failing case, or for the
 * counterexample search, at least one counterexample found. */
DLC_API dlc_status dlc_run_check(dlc_session* session, dlc_check check, dlc_format format, char** out_report,
                                 int* out_success);

/* Character value at one element.  `partition` selects T (ignored in
 * transpose-inverse mode), `theta` its character, `element` the matrix. */
DLC_API dlc_status dlc_dl_value(dlc_session* session, const char* partition, const char* theta, const char* element,
                                dlc_format format, char** out);
/* Twisted value at x~ in G~(k).  `full` nonzero uses the semidirect-product formula. */
DLC_API dlc_status dlc_twisted_value(dlc_session* session, const char* partition, const char* theta,
                                     const char* element, int full, dlc_format format, char** out);

/* Standard tori of G and the eps-stable torus family of G~. */
DLC_API dlc_status dlc_list_tori(dlc_session* session, dlc_format format, char** out);

/* Message for the last failing call on this thread, prefixed by a stable
 * code such as "E_BUDGET: ".  Empty after a successful call. */
DLC_API const char* dlc_last_error(void);
DLC_API const char* dlc_status_name(dlc_status status);
DLC_API void dlc_free(char* p);
DLC_API const char* dlc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* DLCHAR_DLCHAR_H */
