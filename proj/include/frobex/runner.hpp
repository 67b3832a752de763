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

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobex/config.hpp"
#include "frobex/family.hpp"
#include "frobex/reflection_group.hpp"

namespace frobex {

inline constexpr const char* kReportSchema = "frobex-report/1";
inline constexpr const char* kArtifactVersion = "0.1.0";

struct RunOptions {
  std::string command = "verify";
  std::optional<unsigned> threads;
  std::optional<std::string> out_dir;
  bool csv = false;
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 verification failure
  std::string report_json;
  std::string summary;  // one line per character plus the verdict
  std::vector<std::string> files;
};

/// One algebra instance built from a config, with its resolved central characters.
class Session {
 public:
  /// Throws ConfigError for anything the config gets wrong (unknown group, bad Omega, ...).
  explicit Session(RunConfig cfg);
  ~Session();

  const RunConfig& config() const { return cfg_; }
  const FrobeniusFamily& family() const { return *family_; }
  const std::vector<CentralCharacter>& characters() const { return chis_; }

  /// Commands: verify, gram, nakayama, dual-bases, centre-check. Throws ConfigError when the
  /// command does not apply to the algebra.
  RunResult run(const RunOptions& opts);

 private:
  RunConfig cfg_;
  std::shared_ptr<const ReflectionGroup> group_;
  std::unique_ptr<FrobeniusFamily> family_;
  std::vector<CentralCharacter> chis_;
  std::string omega_note_;
};

/// JSON Schema (draft 2020-12) describing the report.
std::string report_schema();

}  // namespace frobex
