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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frobex/scalars.hpp"

namespace frobex {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Value of the TOML subset: strings, integers, booleans and (nested) arrays.
struct ConfigValue {
  std::variant<std::string, long, bool, std::vector<ConfigValue>> v;

  bool is_string() const { return std::holds_alternative<std::string>(v); }
  bool is_int() const { return std::holds_alternative<long>(v); }
  bool is_bool() const { return std::holds_alternative<bool>(v); }
  bool is_array() const { return std::holds_alternative<std::vector<ConfigValue>>(v); }
  const std::string& str() const;
  long integer() const;
  bool boolean() const;
  const std::vector<ConfigValue>& array() const;
  /// Strings and integers as scalar text ("3", "1/2", "z").
  std::string scalar_text() const;
};

/// Sections map to tables; top-level keys live in section "".
using ConfigTable = std::map<std::string, std::map<std::string, ConfigValue>>;

/// Parses: comments (#), [section] and [a.b] headers, key = value with basic strings,
/// integers, true/false and arrays (which may span lines). Errors carry line numbers.
ConfigTable parse_config_text(const std::string& text);

struct RunConfig {
  std::string algebra;
  std::string group;
  std::vector<std::string> c;                 // per reflection class, or one value
  std::string omega_mode = "solved";          // zero | solved | table
  std::map<std::string, std::vector<std::vector<std::string>>> omega_table;  // label -> matrix
  unsigned ell = 3;
  std::string v0 = "2";
  std::vector<std::string> zeta0;
  /// "augmentation", "random N", or a name defined under [chi.NAME].
  std::vector<std::string> characters;
  std::map<std::string, std::map<std::string, std::string>> named_characters;
  std::uint64_t seed = 1;
  std::vector<std::string> checks;
  int centre_check_degree = -1;
  std::size_t hypothesis_samples = 50;
  std::size_t engine_samples = 100;
  std::size_t crosscheck_limit = 64;
  std::size_t json_matrix_limit = 64;
  unsigned threads = 1;
  std::string output_dir;
  bool csv = false;
  std::string source;  // path or "<text>"

  bool wants(const std::string& check) const;
};

RunConfig load_config_text(const std::string& text, const std::string& source = "<text>");
RunConfig load_config_file(const std::string& path);

}  // namespace frobex
