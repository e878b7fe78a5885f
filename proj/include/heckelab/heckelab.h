/*
   Copyright 2026 the heckelab developers

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

/* C interface to the heckelab core. All computation requests and results
 * travel as JSON strings; handles are opaque and must be released with the
 * matching free function. Thread-safe for distinct sessions. */

#ifndef HECKELAB_H
#define HECKELAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hl_session hl_session;

typedef enum hl_status {
    HL_OK = 0,
    HL_ERR_VERIFY = 1,  /* run completed; at least one check failed */
    HL_ERR_CONFIG = 2,  /* malformed configuration */
    HL_ERR_INTERNAL = 3 /* unexpected failure; see hl_last_error */
} hl_status;

/* Library version as "major.minor.patch". The pointer is static. */
const char* hl_version(void);

/* Create / destroy a session. Sessions cache built algebra systems between
 * calls. A null return means allocation failed. */
hl_session* hl_session_new(void);
void hl_session_free(hl_session* session);

/* Human-readable message for the most recent failure on this session.
 * The pointer stays valid until the next call on the same session. */
const char* hl_last_error(const hl_session* session);

/* Run a verification suite. `config_json` follows the schema documented in
 * the README (keys: n, level, e, charge, mode, system, gamma, suites,
 * gram_variant, jobs, timing). On HL_OK or HL_ERR_VERIFY, *result_json is
 * set to a malloc'd JSON report that the caller releases with
 * hl_string_free. */
hl_status hl_run_suite(hl_session* session, const char* config_json, char** result_json);

/* Enumerate the standard tableaux of one shape with residues and degrees.
 * `shape` uses the text format "3,1,1|2,1|3,2"; `charge_csv` like "5,0"
 * (empty for the default separated charge). */
hl_status hl_tableaux(hl_session* session, const char* shape, const char* charge_csv,
                      int e, char** result_json);

/* Round-trip parse/print of a scalar in the given mode ("generic-t",
 * "cyclo" with e, "degenerate-p" with p = e, "linear-quiver"). Returns the
 * canonical rendering of the parsed value. */
hl_status hl_scalar_roundtrip(hl_session* session, const char* mode, int e,
                              const char* text, char** result);

void hl_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif /* HECKELAB_H */
