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


#include <cstring>
#include <string>

#include "doctest.h"
#include "frobex/frobex.h"
#include "json.hpp"

namespace {

const char* kBorel = "algebra = \"uq-borel-sl2\"\nell = 3\nchi = [\"augmentation\"]\n";

}  // namespace

TEST_CASE("version and schema") {
  CHECK(std::strlen(frobex_version()) > 0);
  CHECK(std::string(frobex_report_schema_id()) == "frobex-report/1");
  CHECK(!nlohmann::json::parse(frobex_report_schema()).empty());
}

TEST_CASE("session lifecycle") {
  frobex_session* s = nullptr;
  REQUIRE(frobex_session_open_text(kBorel, &s) == FROBEX_OK);
  REQUIRE(s != nullptr);
  CHECK(std::string(frobex_session_algebra(s)) == "uq-borel-sl2");
  CHECK(frobex_session_free_rank(s) == 9);
  CHECK(frobex_session_character_count(s) == 1);
  CHECK(frobex_session_set_threads(s, 2) == FROBEX_OK);
  CHECK(frobex_session_set_output_dir(s, nullptr) == FROBEX_OK);
  CHECK(frobex_session_set_csv(s, 0) == FROBEX_OK);
  CHECK(frobex_session_run(s, "verify") == FROBEX_OK);
  const auto report = nlohmann::json::parse(frobex_session_report(s));
  CHECK(report["passed"] == true);
  CHECK(report["characters"][0]["report"]["symmetric"] == false);
  CHECK(std::string(frobex_session_summary(s)).find("verdict: PASS") != std::string::npos);
  CHECK(frobex_session_file_count(s) == 0);
  CHECK(frobex_session_file(s, 0) == nullptr);
  CHECK(frobex_session_run(s, "centre-check") == FROBEX_CONFIG_ERROR);
  CHECK(std::strlen(frobex_last_error()) > 0);
  frobex_session_free(s);
}

TEST_CASE("error codes") {
  frobex_session* s = nullptr;
  CHECK(frobex_session_open_text("algebra = \"cherednik\"\ngroup = \"E9\"\n", &s) == FROBEX_CONFIG_ERROR);
  CHECK(s == nullptr);
  CHECK(std::string(frobex_last_error()).find("E9") != std::string::npos);
  CHECK(frobex_session_open_file("/nonexistent.toml", &s) == FROBEX_CONFIG_ERROR);
  CHECK(frobex_session_open_text(nullptr, &s) == FROBEX_INVALID_ARGUMENT);
  CHECK(frobex_session_open_text(kBorel, nullptr) == FROBEX_INVALID_ARGUMENT);
  CHECK(frobex_session_run(nullptr, "verify") == FROBEX_INVALID_ARGUMENT);
  CHECK(frobex_session_set_threads(nullptr, 1) == FROBEX_INVALID_ARGUMENT);
  frobex_session_free(nullptr);
}
