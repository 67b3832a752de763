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

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "frobex/frobex.h"

namespace {

struct Flags {
  std::string config;
  unsigned threads = 0;
  std::string out;
  bool csv = false;
};

int run_command(const std::string& command, const Flags& f) {
  frobex_session* s = nullptr;
  frobex_status st = frobex_session_open_file(f.config.c_str(), &s);
  if (st != FROBEX_OK) {
    std::cerr << "frobex: " << frobex_last_error() << "\n";
    return st == FROBEX_CONFIG_ERROR ? 2 : 3;
  }
  if (f.threads) frobex_session_set_threads(s, f.threads);
  if (!f.out.empty()) frobex_session_set_output_dir(s, f.out.c_str());
  frobex_session_set_csv(s, f.csv ? 1 : 0);
  st = frobex_session_run(s, command.c_str());
  int code = 0;
  if (st == FROBEX_OK || st == FROBEX_VERIFY_FAILED) {
    code = st == FROBEX_OK ? 0 : 1;
    if (f.out.empty()) {
      std::cerr << frobex_session_summary(s);
      std::cout << frobex_session_report(s);
    } else {
      std::cout << frobex_session_summary(s);
      for (size_t i = 0; i < frobex_session_file_count(s); ++i) std::cout << "wrote " << frobex_session_file(s, i) << "\n";
    }
  } else {
    std::cerr << "frobex: " << frobex_last_error() << "\n";
    code = st == FROBEX_CONFIG_ERROR ? 2 : 3;
  }
  frobex_session_free(s);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frobex: exact verification of Frobenius extensions and Nakayama automorphisms"};
  app.set_version_flag("--version", std::string(frobex_version()));
  app.require_subcommand(1);
  Flags flags;
  std::string chosen;
  for (const char* name : {"verify", "gram", "nakayama", "dual-bases", "centre-check"}) {
    const std::string help = std::string(name) == "verify"         ? "run every check listed in the config"
                             : std::string(name) == "gram"         ? "Gram matrices, rank and symmetry"
                             : std::string(name) == "nakayama"     ? "Nakayama matrices and generator images"
                             : std::string(name) == "dual-bases"   ? "dual basis coordinates"
                                                                   : "graded Hecke centre dimensions by degree";
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", flags.config, "config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--threads", flags.threads, "worker threads for Gram assembly")->check(CLI::PositiveNumber);
    sub->add_option("--out", flags.out, "directory for the JSON report and CSV files");
    sub->add_flag("--csv", flags.csv, "also write Gram, Nakayama and dual matrices as CSV");
    sub->callback([&chosen, name] { chosen = name; });
  }
  app.add_subcommand("report-schema", "print the JSON schema of the report")->callback([&chosen] {
    chosen = "report-schema";
  });
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (chosen == "report-schema") {
    std::cout << frobex_report_schema();
    return 0;
  }
  return run_command(chosen, flags);
}
