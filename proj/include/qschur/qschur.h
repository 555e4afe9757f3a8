/*
  Copyright 2026 qschur developers

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

/*
  C interface to the qschur library.

  A session owns one Weyl group together with a W-invariant weight set
  and everything derived from them (Hecke algebra, module, q-Schur
  algebra). All structured results come back as JSON in heap strings
  that the caller releases with qs_string_free. Functions return QS_OK
  on success; on failure qs_last_error(session) carries the message
  (pass NULL for errors raised before a session existed).

  Sessions are not thread-safe; use one per thread.
*/

#ifndef QSCHUR_QSCHUR_H
#define QSCHUR_QSCHUR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qs_session qs_session;

enum qs_status {
  QS_OK = 0,
  /* Malformed or out-of-range argument. */
  QS_ERR_ARGUMENT = 1,
  /* Valid request the build does not support (unknown Cartan type,
     group order above the session cap). */
  QS_ERR_UNSUPPORTED = 2,
  /* Unexpected internal failure. */
  QS_ERR_INTERNAL = 3
};

/* Library version as "major.minor.patch". Static storage; do not free. */
const char* qs_version(void);

/*
  Create a session.

  type_label: Cartan type such as "A2", "B2", "G2".
  weights_spec: one of
    "g2:n=N"     the type-G2 family X(N) (requires type_label "G2"),
    "file:PATH"  JSON file holding an array of seed weights,
    "[...]"      inline JSON array of seed weights.
  The seed weights are closed under the group action automatically.
  cap: refuse groups with more than this many elements; 0 means the
  built-in default.
*/
int qs_session_new(const char* type_label, const char* weights_spec,
                   long cap, qs_session** out);
void qs_session_free(qs_session* s);

/* Last error message for the session, or the process-wide creation
   error when s is NULL. Owned by the library; valid until the next
   failing call. */
const char* qs_last_error(const qs_session* s);

/* Census of the session: type, group order, weight count, orbit
   decomposition, triple count. */
int qs_info_json(qs_session* s, char** out_json);

/* Canonical basis of the Hecke algebra, one entry per group element. */
int qs_hecke_cbasis_json(qs_session* s, char** out_json);

/* Canonical basis of the module, one entry per weight. */
int qs_tmodule_cbasis_json(qs_session* s, char** out_json);

/* Bar involution of every standard basis vector of the module. */
int qs_tmodule_bar_json(qs_session* s, char** out_json);

/* Canonical basis element xi of the q-Schur algebra as a sparse matrix
   with its standard-basis coordinates; xi < 0 returns all of them. */
int qs_schur_cbasis_json(qs_session* s, long xi, char** out_json);

/* Product of canonical basis elements x and y with the canonical-basis
   coordinates of the result (structure constants). */
int qs_schur_compose_json(qs_session* s, long x, long y, char** out_json);

/* Standard-basis coordinates of canonical element xi; xi < 0 returns
   the full unitriangular table. */
int qs_schur_coords_json(qs_session* s, long xi, char** out_json);

/*
  Run a verification suite on the session.

  suite: "duality", "positivity", or "bar".
  options_json: NULL or an object with optional keys
    "q_samples"       array of rationals as strings, e.g. ["1","3/2"]
                      (duality; default ["1","2","3/2","5/2"]),
    "require_regular" bool (duality; default true),
    "samples"         int (bar; default 1000),
    "seed"            int (bar; default 20260819).
  out_pass receives 1 if the suite passed.
*/
int qs_verify_json(qs_session* s, const char* suite,
                   const char* options_json, char** out_json, int* out_pass);

/* Full deterministic dump of the session state; the "weights" array
   fed back as an inline seed spec reproduces the dump verbatim. */
int qs_dump_json(qs_session* s, char** out_json);

/*
  Type-G2 corpus suites; these build their own session for X(n).
  suite: "A" or "bar"       bar-involution tables,
         "B" or "action"    generator action tables,
         "C" or "relation"  q = 1 multiplication relations (n must be 2).
  out_pass receives 1 if every instance matched.
*/
int qs_g2_corpus_json(const char* suite, int n, char** out_json,
                      int* out_pass);

/* Dimension spanned by words in the G2 generators on X(n) at the
   rational sample point q_value, e.g. "1" or "3/2". */
int qs_g2_spanned_dimension(int n, const char* q_value, long* out_dim);

/* Release a string returned through any out_json parameter. */
void qs_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* QSCHUR_QSCHUR_H */
