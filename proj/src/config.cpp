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

#include "frobex/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace frobex {

const std::string& ConfigValue::str() const {
  if (!is_string()) throw ConfigError("expected a string");
  return std::get<std::string>(v);
}

long ConfigValue::integer() const {
  if (!is_int()) throw ConfigError("expected an integer");
  return std::get<long>(v);
}

bool ConfigValue::boolean() const {
  if (!is_bool()) throw ConfigError("expected true or false");
  return std::get<bool>(v);
}

const std::vector<ConfigValue>& ConfigValue::array() const {
  if (!is_array()) throw ConfigError("expected an array");
  return std::get<std::vector<ConfigValue>>(v);
}

std::string ConfigValue::scalar_text() const {
  if (is_string()) return str();
  if (is_int()) return std::to_string(integer());
  throw ConfigError("expected a scalar (string or integer)");
}

namespace {

class ValueParser {
 public:
  ValueParser(const std::string& s, int line) : s_(s), line_(line) {}

  ConfigValue parse() {
    ConfigValue v = value();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters after value");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError("line " + std::to_string(line_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  ConfigValue value() {
    skip_ws();
    if (pos_ >= s_.size()) fail("missing value");
    const char ch = s_[pos_];
    if (ch == '"') return {string()};
    if (ch == '[') return array();
    if (s_.compare(pos_, 4, "true") == 0) {
      pos_ += 4;
      return {true};
    }
    if (s_.compare(pos_, 5, "false") == 0) {
      pos_ += 5;
      return {false};
    }
    if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) return integer();
    fail("unrecognized value");
  }

  std::string string() {
    ++pos_;
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) {
        const char e = s_[++pos_];
        out += e == 'n' ? '\n' : e == 't' ? '\t' : e;
      } else {
        out += s_[pos_];
      }
      ++pos_;
    }
    if (pos_ >= s_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  ConfigValue integer() {
    const std::size_t start = pos_;
    if (s_[pos_] == '-' || s_[pos_] == '+') ++pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string digits;
    for (std::size_t i = start; i < pos_; ++i)
      if (s_[i] != '_') digits += s_[i];
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/' || s_[pos_] == 'e'))
      fail("only integers are allowed as bare numbers; quote rationals such as \"1/2\"");
    try {
      return {std::stol(digits)};
    } catch (const std::exception&) {
      fail("invalid integer '" + digits + "'");
    }
  }

  ConfigValue array() {
    ++pos_;
    std::vector<ConfigValue> items;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) fail("unterminated array");
      if (s_[pos_] == ']') {
        ++pos_;
        break;
      }
      items.push_back(value());
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ']') continue;
      fail("expected ',' or ']' in array");
    }
    return {std::move(items)};
  }

  const std::string& s_;
  int line_;
  std::size_t pos_ = 0;
};

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::string unquote_key(std::string k) {
  k = trim(k);
  if (k.size() >= 2 && k.front() == '"' && k.back() == '"') return k.substr(1, k.size() - 2);
  return k;
}

int bracket_balance(const std::string& s) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) in_string = !in_string;
    if (in_string) continue;
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
  }
  return depth;
}

}  // namespace

ConfigTable parse_config_text(const std::string& text) {
  ConfigTable table;
  table[""];
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) throw ConfigError("line " + std::to_string(lineno) + ": bad section header");
      section = trim(line.substr(1, line.size() - 2));
      table[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = unquote_key(line.substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    std::string value = trim(line.substr(eq + 1));
    const int start = lineno;
    while (bracket_balance(value) > 0 && std::getline(in, raw)) {
      ++lineno;
      value += " " + trim(strip_comment(raw));
    }
    auto& sec = table[section];
    if (sec.count(key)) throw ConfigError("line " + std::to_string(start) + ": duplicate key '" + key + "'");
    sec.emplace(key, ValueParser(value, start).parse());
  }
  return table;
}

bool RunConfig::wants(const std::string& check) const {
  return std::find(checks.begin(), checks.end(), check) != checks.end();
}

namespace {

const std::set<std::string> kAlgebras = {"cherednik",      "graded-hecke",        "affine-hecke-a1",
                                         "uq-sl2",         "uq-borel-sl2",        "oq-sl2-localized"};
const std::set<std::string> kChecks = {"gram", "nakayama", "dual", "hypothesis", "centre", "claims", "engine"};

std::vector<std::string> scalar_list(const ConfigValue& v) {
  std::vector<std::string> out;
  if (v.is_array()) {
    for (const auto& x : v.array()) out.push_back(x.scalar_text());
  } else {
    out.push_back(v.scalar_text());
  }
  return out;
}

}  // namespace

RunConfig load_config_text(const std::string& text, const std::string& source) {
  const ConfigTable t = parse_config_text(text);
  RunConfig cfg;
  cfg.source = source;
  cfg.checks = {"gram", "nakayama", "dual", "hypothesis", "claims", "engine"};
  const auto& top = t.at("");
  auto get = [&](const std::string& key) -> const ConfigValue* {
    auto it = top.find(key);
    return it == top.end() ? nullptr : &it->second;
  };
  static const std::set<std::string> known = {"algebra",  "group",          "c",         "omega",
                                              "ell",      "v0",             "zeta0",     "chi",
                                              "seed",     "checks",         "threads",   "centre_check_degree",
                                              "hypothesis_samples", "engine_samples", "crosscheck_limit",
                                              "json_matrix_limit"};
  for (const auto& [k, v] : top)
    if (!known.count(k)) throw ConfigError("unknown key '" + k + "'");
  try {
    const ConfigValue* alg = get("algebra");
    if (!alg) throw ConfigError("missing key 'algebra'");
    cfg.algebra = alg->str();
    if (!kAlgebras.count(cfg.algebra)) throw ConfigError("unknown algebra '" + cfg.algebra + "'");
    if (auto* v = get("group")) cfg.group = v->str();
    if ((cfg.algebra == "cherednik" || cfg.algebra == "graded-hecke") && cfg.group.empty())
      throw ConfigError("algebra '" + cfg.algebra + "' needs a 'group'");
    if (auto* v = get("c")) cfg.c = scalar_list(*v);
    if (auto* v = get("omega")) {
      cfg.omega_mode = v->str();
      if (cfg.omega_mode != "zero" && cfg.omega_mode != "solved" && cfg.omega_mode != "table")
        throw ConfigError("omega must be \"zero\", \"solved\" or \"table\"");
    }
    if (auto* v = get("ell")) {
      if (v->integer() < 3 || v->integer() % 2 == 0) throw ConfigError("ell must be odd and at least 3");
      cfg.ell = static_cast<unsigned>(v->integer());
    }
    if (auto* v = get("v0")) cfg.v0 = v->scalar_text();
    if (auto* v = get("zeta0")) cfg.zeta0 = scalar_list(*v);
    if (auto* v = get("chi")) {
      for (const auto& s : scalar_list(*v)) cfg.characters.push_back(s);
    }
    if (auto* v = get("seed")) {
      if (v->integer() < 0) throw ConfigError("seed must be non-negative");
      cfg.seed = static_cast<std::uint64_t>(v->integer());
    }
    if (auto* v = get("checks")) {
      cfg.checks.clear();
      for (const auto& s : scalar_list(*v)) {
        if (!kChecks.count(s)) throw ConfigError("unknown check '" + s + "'");
        cfg.checks.push_back(s);
      }
    }
    if (auto* v = get("threads")) {
      if (v->integer() < 1) throw ConfigError("threads must be positive");
      cfg.threads = static_cast<unsigned>(v->integer());
    }
    if (auto* v = get("centre_check_degree")) {
      cfg.centre_check_degree = static_cast<int>(v->integer());
      if (cfg.centre_check_degree < 0) throw ConfigError("centre_check_degree must be non-negative");
      if (!cfg.wants("centre")) cfg.checks.push_back("centre");
    }
    auto count = [&](const char* key, std::size_t& out) {
      if (auto* v = get(key)) {
        if (v->integer() < 0) throw ConfigError(std::string(key) + " must be non-negative");
        out = static_cast<std::size_t>(v->integer());
      }
    };
    count("hypothesis_samples", cfg.hypothesis_samples);
    count("engine_samples", cfg.engine_samples);
    count("crosscheck_limit", cfg.crosscheck_limit);
    count("json_matrix_limit", cfg.json_matrix_limit);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }

  for (const auto& [name, sec] : t) {
    if (name.empty()) continue;
    if (name == "omega") {
      for (const auto& [label, val] : sec) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : val.array()) rows.push_back(scalar_list(row));
        cfg.omega_table[label] = std::move(rows);
      }
      if (cfg.omega_mode == "solved" && !get("omega")) cfg.omega_mode = "table";
    } else if (name.rfind("chi.", 0) == 0) {
      const std::string label = name.substr(4);
      for (const auto& [var, val] : sec) cfg.named_characters[label][var] = val.scalar_text();
      if (std::find(cfg.characters.begin(), cfg.characters.end(), label) == cfg.characters.end() &&
          !get("chi"))
        cfg.characters.push_back(label);
    } else if (name == "output") {
      for (const auto& [k, v] : sec) {
        if (k == "dir") {
          cfg.output_dir = v.str();
        } else if (k == "csv") {
          cfg.csv = v.boolean();
        } else {
          throw ConfigError("unknown key 'output." + k + "'");
        }
      }
    } else {
      throw ConfigError("unknown section [" + name + "]");
    }
  }
  if (cfg.omega_mode == "table" && cfg.omega_table.empty())
    throw ConfigError("omega = \"table\" needs an [omega] section");
  for (const auto& ch : cfg.characters) {
    if (ch == "augmentation" || ch.rfind("random", 0) == 0) continue;
    if (!cfg.named_characters.count(ch)) throw ConfigError("character '" + ch + "' is not defined in [chi." + ch + "]");
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_config_text(ss.str(), path);
}

}  // namespace frobex
