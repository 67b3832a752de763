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


#include <filesystem>

#include "doctest.h"
#include "frobex/config.hpp"
#include "frobex/runner.hpp"
#include "json.hpp"

using namespace frobex;
using json = nlohmann::json;

namespace {

json without_timing(const std::string& text) {
  json j = json::parse(text);
  j.erase("timing");
  return j;
}

const char* kAffine = R"(
algebra = "affine-hecke-a1"
v0 = "2"
zeta0 = ["0", "3"]
seed = 5
)";

}  // namespace

TEST_CASE("config text parser") {
  const auto t = parse_config_text(R"(# comment
a = "x"   # trailing comment
n = -12
flag = true
list = [
  ["1", "2"],
  ["3", "4"],
]

[sec.sub]
k = "v"
)");
  CHECK(t.at("").at("a").str() == "x");
  CHECK(t.at("").at("n").integer() == -12);
  CHECK(t.at("").at("flag").boolean());
  const auto& list = t.at("").at("list").array();
  REQUIRE(list.size() == 2);
  CHECK(list[1].array()[0].str() == "3");
  CHECK(t.at("sec.sub").at("k").str() == "v");
}

TEST_CASE("config parse errors carry line numbers") {
  try {
    parse_config_text("a = \"x\"\nb = 1.5\n");
    FAIL("expected an error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config_text("a = \"x\"\na = \"y\"\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[unterminated\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("a = [\"1\"\n"), ConfigError);
}

TEST_CASE("run configuration validation") {
  const RunConfig cfg = load_config_text(kAffine);
  CHECK(cfg.algebra == "affine-hecke-a1");
  CHECK(cfg.zeta0 == std::vector<std::string>{"0", "3"});
  CHECK(cfg.seed == 5);
  CHECK(cfg.wants("gram"));
  CHECK(!cfg.wants("centre"));
  CHECK_THROWS_AS(load_config_text("algebra = \"lie\"\n"), ConfigError);
  CHECK_THROWS_AS(load_config_text("group = \"S3\"\n"), ConfigError);
  CHECK_THROWS_AS(load_config_text("algebra = \"cherednik\"\n"), ConfigError);
  CHECK_THROWS_AS(load_config_text("algebra = \"uq-sl2\"\nbogus = 1\n"), ConfigError);
  CHECK_THROWS_AS(load_config_text("algebra = \"uq-sl2\"\nchecks = [\"everything\"]\n"), ConfigError);
  CHECK_THROWS_AS(load_config_text("algebra = \"uq-sl2\"\nchi = [\"missing\"]\n"), ConfigError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/frobex.toml"), ConfigError);
}

TEST_CASE("session construction errors are config errors") {
  CHECK_THROWS_AS(Session(load_config_text("algebra = \"cherednik\"\ngroup = \"E9\"\n")), ConfigError);
  CHECK_THROWS_AS(Session(load_config_text("algebra = \"affine-hecke-a1\"\nv0 = \"1\"\n")), ConfigError);
  CHECK_THROWS_AS(Session(load_config_text("algebra = \"uq-sl2\"\nell = 4\n")), ConfigError);
  CHECK_THROWS_AS(Session(load_config_text("algebra = \"graded-hecke\"\ngroup = \"S3\"\nomega = \"table\"\n"
                                           "[omega]\n\"s1\" = [[\"0\", \"1\"], [\"-1\", \"0\"]]\n")),
                  ConfigError);
  Session s(load_config_text(kAffine));
  CHECK_THROWS_AS(s.run({"centre-check"}), ConfigError);
  CHECK_THROWS_AS(s.run({"dance"}), ConfigError);
}

TEST_CASE("reports are deterministic apart from timing") {
  Session a(load_config_text(kAffine)), b(load_config_text(kAffine));
  const RunResult ra = a.run({}), rb = b.run({});
  CHECK(ra.exit_code == 0);
  CHECK(without_timing(ra.report_json) == without_timing(rb.report_json));
  const json j = json::parse(ra.report_json);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["artifact_version"] == kArtifactVersion);
  CHECK(j["seed"] == 5);
  CHECK(j["instance"]["free_rank"] == 4);
  CHECK(j["characters"].size() == 2);
  CHECK(j.contains("timing"));
  CHECK(ra.summary.find("verdict: PASS") != std::string::npos);
}

TEST_CASE("random characters come from the grid and follow the seed") {
  const char* text = "algebra = \"uq-sl2\"\nell = 3\nchi = [\"random 4\"]\nseed = 9\n";
  Session a(load_config_text(text)), b(load_config_text(text));
  REQUIRE(a.characters().size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(a.characters()[i].values == b.characters()[i].values);
    for (const auto& [name, v] : a.characters()[i].values) {
      CHECK(v.is_rational());
      const Rational r = v.rational_value();
      CHECK((r == -2 || r == -1 || r == 0 || r == 1 || r == 2 || r == Rational(1, 2)));
      if (name == "Kl") CHECK(!v.is_zero());
    }
  }
}

TEST_CASE("commands and output files") {
  const auto dir = std::filesystem::temp_directory_path() / "frobex_runner_test";
  std::filesystem::remove_all(dir);
  Session s(load_config_text(kAffine));
  RunOptions opts;
  opts.command = "gram";
  opts.out_dir = dir.string();
  opts.csv = true;
  const RunResult r = s.run(opts);
  CHECK(r.exit_code == 0);
  CHECK(std::filesystem::exists(dir / "report.gram.json"));
  bool csv = false;
  for (const auto& f : r.files) csv = csv || f.ends_with(".csv");
  CHECK(csv);
  for (const char* cmd : {"nakayama", "dual-bases"}) {
    RunOptions o;
    o.command = cmd;
    CHECK(s.run(o).exit_code == 0);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("centre check command") {
  Session s(load_config_text("algebra = \"graded-hecke\"\ngroup = \"S3\"\ncentre_check_degree = 4\n"));
  RunOptions o;
  o.command = "centre-check";
  const RunResult r = s.run(o);
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.report_json);
  CHECK(j.dump().find("centre") != std::string::npos);
}

TEST_CASE("report schema is valid JSON naming the schema id") {
  const json schema = json::parse(report_schema());
  CHECK(schema.dump().find(kReportSchema) != std::string::npos);
}
