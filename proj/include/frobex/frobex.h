/*
   Copyright 2026 The frobex authors

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

#ifndef FROBEX_FROBEX_H_
#define FROBEX_FROBEX_H_

#include <stddef.h>

#if defined(_WIN32)
#define FROBEX_API __declspec(dllexport)
#else
#define FROBEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frobex_status {
  FROBEX_OK = 0,
  FROBEX_VERIFY_FAILED = 1, /* a requested check did not hold */
  FROBEX_CONFIG_ERROR = 2,  /* unreadable or invalid configuration */
  FROBEX_INVALID_ARGUMENT = 3,
  FROBEX_INTERNAL_ERROR = 4
} frobex_status;

typedef struct frobex_session frobex_session;

FROBEX_API const char* frobex_version(void);
FROBEX_API const char* frobex_report_schema_id(void);
/* JSON Schema of the report; static storage. */
FROBEX_API const char* frobex_report_schema(void);

/* Message of the most recent failure on this thread, or "". */
FROBEX_API const char* frobex_last_error(void);

FROBEX_API frobex_status frobex_session_open_file(const char* path, frobex_session** out);
FROBEX_API frobex_status frobex_session_open_text(const char* config_text, frobex_session** out);
FROBEX_API void frobex_session_free(frobex_session* s);

FROBEX_API frobex_status frobex_session_set_threads(frobex_session* s, unsigned threads);
/* NULL clears the directory; reports are then only kept in memory. */
FROBEX_API frobex_status frobex_session_set_output_dir(frobex_session* s, const char* dir);
FROBEX_API frobex_status frobex_session_set_csv(frobex_session* s, int enabled);

FROBEX_API const char* frobex_session_algebra(const frobex_session* s);
FROBEX_API size_t frobex_session_free_rank(const frobex_session* s);
FROBEX_API size_t frobex_session_character_count(const frobex_session* s);

/* Runs "verify", "gram", "nakayama", "dual-bases" or "centre-check". Returns FROBEX_OK when
   every check passed and FROBEX_VERIFY_FAILED otherwise; the report is available either way. */
FROBEX_API frobex_status frobex_session_run(frobex_session* s, const char* command);
/* Report JSON and one-line-per-character summary of the last run; owned by the session. */
FROBEX_API const char* frobex_session_report(const frobex_session* s);
FROBEX_API const char* frobex_session_summary(const frobex_session* s);
FROBEX_API size_t frobex_session_file_count(const frobex_session* s);
FROBEX_API const char* frobex_session_file(const frobex_session* s, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* FROBEX_FROBEX_H_ */
