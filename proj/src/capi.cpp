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

#include "frobex/frobex.h"

#include <memory>
#include <new>
#include <string>

#include "frobex/runner.hpp"

struct frobex_session {
  std::unique_ptr<frobex::Session> session;
  frobex::RunOptions opts;
  frobex::RunResult last;
};

namespace {

thread_local std::string tl_error;

template <class F>
frobex_status guarded(F&& f) {
  try {
    tl_error.clear();
    return f();
  } catch (const frobex::ConfigError& e) {
    tl_error = e.what();
    return FROBEX_CONFIG_ERROR;
  } catch (const std::bad_alloc&) {
    tl_error = "out of memory";
    return FROBEX_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    tl_error = e.what();
    return FROBEX_INTERNAL_ERROR;
  }
}

frobex_status open_with(frobex::RunConfig cfg, frobex_session** out) {
  auto s = std::make_unique<frobex_session>();
  s->session = std::make_unique<frobex::Session>(std::move(cfg));
  *out = s.release();
  return FROBEX_OK;
}

}  // namespace

extern "C" {

const char* frobex_version(void) { return frobex::kArtifactVersion; }
const char* frobex_report_schema_id(void) { return frobex::kReportSchema; }

const char* frobex_report_schema(void) {
  static const std::string schema = frobex::report_schema();
  return schema.c_str();
}

const char* frobex_last_error(void) { return tl_error.c_str(); }

frobex_status frobex_session_open_file(const char* path, frobex_session** out) {
  if (!path || !out) {
    tl_error = "null argument";
    return FROBEX_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] { return open_with(frobex::load_config_file(path), out); });
}

frobex_status frobex_session_open_text(const char* config_text, frobex_session** out) {
  if (!config_text || !out) {
    tl_error = "null argument";
    return FROBEX_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] { return open_with(frobex::load_config_text(config_text), out); });
}

void frobex_session_free(frobex_session* s) { delete s; }

frobex_status frobex_session_set_threads(frobex_session* s, unsigned threads) {
  if (!s || threads == 0) {
    tl_error = "need a session and a positive thread count";
    return FROBEX_INVALID_ARGUMENT;
  }
  s->opts.threads = threads;
  return FROBEX_OK;
}

frobex_status frobex_session_set_output_dir(frobex_session* s, const char* dir) {
  if (!s) {
    tl_error = "null session";
    return FROBEX_INVALID_ARGUMENT;
  }
  if (dir) {
    s->opts.out_dir = std::string(dir);
  } else {
    s->opts.out_dir.reset();
  }
  return FROBEX_OK;
}

frobex_status frobex_session_set_csv(frobex_session* s, int enabled) {
  if (!s) {
    tl_error = "null session";
    return FROBEX_INVALID_ARGUMENT;
  }
  s->opts.csv = enabled != 0;
  return FROBEX_OK;
}

const char* frobex_session_algebra(const frobex_session* s) {
  return s ? s->session->config().algebra.c_str() : "";
}

size_t frobex_session_free_rank(const frobex_session* s) { return s ? s->session->family().rank() : 0; }

size_t frobex_session_character_count(const frobex_session* s) {
  return s ? s->session->characters().size() : 0;
}

frobex_status frobex_session_run(frobex_session* s, const char* command) {
  if (!s || !command) {
    tl_error = "null argument";
    return FROBEX_INVALID_ARGUMENT;
  }
  return guarded([&] {
    s->opts.command = command;
    s->last = s->session->run(s->opts);
    return s->last.exit_code == 0 ? FROBEX_OK : FROBEX_VERIFY_FAILED;
  });
}

const char* frobex_session_report(const frobex_session* s) { return s ? s->last.report_json.c_str() : ""; }
const char* frobex_session_summary(const frobex_session* s) { return s ? s->last.summary.c_str() : ""; }
size_t frobex_session_file_count(const frobex_session* s) { return s ? s->last.files.size() : 0; }

const char* frobex_session_file(const frobex_session* s, size_t i) {
  return s && i < s->last.files.size() ? s->last.files[i].c_str() : nullptr;
}

}  // extern "C"
