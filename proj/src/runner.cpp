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

#include "frobex/runner.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"

#include "frobex/affine_hecke.hpp"
#include "frobex/cherednik.hpp"
#include "frobex/frobenius.hpp"
#include "frobex/graded_hecke.hpp"
#include "frobex/quantum.hpp"

namespace frobex {

using json = nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

json matrix_json(const Matrix& m) { return m.to_strings(); }

std::size_t matrix_nonzeros(const Matrix& m) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) ++k;
  return k;
}

Cyc parse_scalar(const std::string& text, unsigned order, const std::string& what) {
  try {
    return Cyc::parse(text, order);
  } catch (const Error& e) {
    throw ConfigError("cannot parse " + what + " '" + text + "': " + e.what());
  }
}

std::string safe_label(const std::string& s) {
  std::string out;
  for (char ch : s) out += std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_' ? ch : '_';
  return out;
}

// Number of monomials in the fundamental invariants of each weighted degree <= d.
std::vector<std::size_t> invariant_counts(const std::vector<int>& degrees, int d) {
  std::vector<std::size_t> c(static_cast<std::size_t>(d) + 1, 0);
  c[0] = 1;
  for (int deg : degrees)
    for (int e = deg; e <= d; ++e) c[static_cast<std::size_t>(e)] += c[static_cast<std::size_t>(e - deg)];
  return c;
}

}  // namespace

Session::~Session() = default;

Session::Session(RunConfig cfg) : cfg_(std::move(cfg)) {
  const std::string& a = cfg_.algebra;
  try {
    if (a == "cherednik" || a == "graded-hecke") {
      try {
        group_ = std::make_shared<const ReflectionGroup>(ReflectionGroup::build(cfg_.group));
      } catch (const Error& e) {
        throw ConfigError("unknown group '" + cfg_.group + "': " + e.what());
      }
    }
    if (a == "cherednik") {
      std::vector<Cyc> c;
      for (const auto& t : cfg_.c) c.push_back(parse_scalar(t, group_->field_order(), "c value"));
      family_ = std::make_unique<CherednikAlgebra>(group_, std::move(c));
    } else if (a == "graded-hecke") {
      OmegaData omega;
      if (cfg_.omega_mode == "solved") {
        auto sols = solve_omega(*group_);
        if (sols.empty()) {
          omega_note_ = "no nonzero equivariant Omega exists; using Omega = 0";
        } else {
          omega = sols.front();
          omega_note_ = "first of " + std::to_string(sols.size()) + " solution(s) of the equivariance system";
        }
      } else if (cfg_.omega_mode == "table") {
        for (const auto& [label, rows] : cfg_.omega_table) {
          std::size_t w = ReflectionGroup::npos;
          for (std::size_t k = 0; k < group_->order(); ++k)
            if (group_->label(k) == label) w = k;
          if (w == ReflectionGroup::npos) throw ConfigError("omega table: no group element labelled '" + label + "'");
          if (rows.size() != group_->dim()) throw ConfigError("omega table: matrix for '" + label + "' has wrong size");
          Matrix m(group_->dim(), group_->dim());
          for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != group_->dim())
              throw ConfigError("omega table: matrix for '" + label + "' has wrong size");
            for (std::size_t j = 0; j < rows[i].size(); ++j)
              m(i, j) = parse_scalar(rows[i][j], group_->field_order(), "omega entry");
          }
          omega.emplace(w, std::move(m));
        }
        omega_note_ = "explicit table";
      } else {
        omega_note_ = "Omega = 0";
      }
      try {
        family_ = std::make_unique<GradedHeckeAlgebra>(group_, std::move(omega));
      } catch (const ConsistencyError& e) {
        throw ConfigError(e.what());
      }
    } else if (a == "affine-hecke-a1") {
      family_ = std::make_unique<AffineHeckeA1>(parse_scalar(cfg_.v0, 1, "v0"));
    } else if (a == "uq-sl2") {
      family_ = std::make_unique<QuantumSL2>(cfg_.ell);
    } else if (a == "uq-borel-sl2") {
      family_ = std::make_unique<QuantumBorelSL2>(cfg_.ell);
    } else if (a == "oq-sl2-localized") {
      family_ = std::make_unique<QuantumFunctionSL2>(cfg_.ell);
    } else {
      throw ConfigError("unknown algebra '" + a + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }

  // Central characters.
  const auto vars = family_->central_variables();
  const auto units = family_->unit_variables();
  const unsigned order = family_->field_order();
  std::vector<std::string> wanted = cfg_.characters;
  if (a == "affine-hecke-a1") {
    std::vector<std::string> grid = cfg_.zeta0;
    if (grid.empty() && wanted.empty()) grid = {"0", "3", "-1", "1/2"};
    for (const auto& z : grid) {
      chis_.push_back({"zeta=" + z, {{"zeta", parse_scalar(z, order, "zeta0")}}});
    }
  } else if (wanted.empty()) {
    wanted.push_back("augmentation");
  }
  std::mt19937_64 rng(cfg_.seed);
  const std::vector<Cyc> grid{Cyc(-2), Cyc(-1), Cyc(0), Cyc(1), Cyc(2), Cyc(1, 2)};
  for (const auto& name : wanted) {
    if (name == "augmentation") {
      chis_.push_back(family_->augmentation());
    } else if (name.rfind("random", 0) == 0) {
      long count = 1;
      const std::string rest = name.substr(6);
      if (!rest.empty()) {
        try {
          count = std::stol(rest);
        } catch (const std::exception&) {
          throw ConfigError("bad character spec '" + name + "'; use \"random N\"");
        }
      }
      for (long r = 0; r < count; ++r) {
        CentralCharacter chi;
        chi.label = "random-" + std::to_string(r + 1);
        for (const auto& v : vars) {
          const bool unit = std::find(units.begin(), units.end(), v) != units.end();
          Cyc val;
          do {
            val = grid[std::uniform_int_distribution<std::size_t>(0, grid.size() - 1)(rng)];
          } while (unit && val.is_zero());
          chi.values[v] = val;
        }
        chis_.push_back(std::move(chi));
      }
    } else {
      CentralCharacter chi;
      chi.label = name;
      for (const auto& [v, text] : cfg_.named_characters.at(name)) {
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
          throw ConfigError("character '" + name + "' assigns unknown central variable '" + v + "'");
        chi.values[v] = parse_scalar(text, order, "value of " + v);
      }
      for (const auto& v : vars)
        if (!chi.values.count(v)) throw ConfigError("character '" + name + "' has no value for '" + v + "'");
      for (const auto& v : units)
        if (chi.values.at(v).is_zero()) throw ConfigError("character '" + name + "' must give '" + v + "' a unit");
      chis_.push_back(std::move(chi));
    }
  }
}

namespace {

json instance_json(const FrobeniusFamily& fam, const RunConfig& cfg, const std::string& omega_note) {
  json j;
  j["algebra"] = fam.kind();
  j["summary"] = fam.summary();
  j["free_rank"] = fam.rank();
  j["field_order"] = fam.field_order();
  j["central_variables"] = fam.central_variables();
  j["unit_variables"] = fam.unit_variables();
  j["phi_index"] = fam.phi_index();
  j["phi_element"] = fam.basis_label(fam.phi_index());
  json params = json::object();
  if (auto* c = dynamic_cast<const CherednikAlgebra*>(&fam)) {
    params["group"] = c->group().name();
    params["group_order"] = c->group().order();
    json cs = json::array();
    for (const auto& v : c->c_values()) cs.push_back(v.str());
    params["c"] = cs;
  } else if (auto* g = dynamic_cast<const GradedHeckeAlgebra*>(&fam)) {
    params["group"] = g->group().name();
    params["group_order"] = g->group().order();
    params["omega_mode"] = cfg.omega_mode;
    params["omega_note"] = omega_note;
    json om = json::object();
    for (const auto& [w, m] : g->omega()) om[g->group().label(w)] = matrix_json(m);
    params["omega"] = om;
    json br = json::array();
    for (auto w : bireflection_set(g->group())) br.push_back(g->group().label(w));
    params["bireflections"] = br;
  } else if (auto* h = dynamic_cast<const AffineHeckeA1*>(&fam)) {
    params["v0"] = h->v0().str();
  } else if (auto* q = dynamic_cast<const QuantumFamilyBase*>(&fam)) {
    params["ell"] = q->ell();
    params["epsilon"] = q->epsilon().str();
    params["omega_alpha"] = q->root_datum().omega_alpha();
    params["two_rho_omega"] = q->root_datum().two_rho_omega();
  }
  j["parameters"] = params;
  return j;
}

json character_json(const CentralCharacter& chi) {
  json v = json::object();
  for (const auto& [k, x] : chi.values) v[k] = x.str();
  return {{"label", chi.label}, {"values", v}};
}

json frobenius_json(const FrobeniusReport& r, const VerifyOptions& o, std::size_t limit) {
  json j;
  j["dimension"] = r.dim;
  j["rank"] = r.rank;
  j["full_rank"] = r.full_rank;
  j["symmetric"] = r.symmetric;
  if (r.dim <= limit) j["gram"] = matrix_json(r.gram);
  j["gram_nonzeros"] = matrix_nonzeros(r.gram);
  if (r.full_rank && o.nakayama && r.nakayama.rows()) {
    j["nakayama_identity"] = r.nakayama_identity;
    j["nakayama_nonzeros"] = matrix_nonzeros(r.nakayama);
    if (r.dim <= limit) j["nakayama"] = matrix_json(r.nakayama);
    j["roundtrip"] = {{"ok", r.roundtrip_ok},
                      {"pairs", r.roundtrip_pairs},
                      {"exhaustive", r.dim <= o.roundtrip_exhaustive_limit}};
    j["automorphism"] = {{"ok", r.automorphism_ok}, {"pairs", r.automorphism_pairs}};
    json gens = json::array();
    for (const auto& g : r.generators) {
      json x;
      x["name"] = g.name;
      x["realized"] = g.realized ? json(g.realized->str()) : json(nullptr);
      if (g.has_expected) {
        x["expected"] = g.expected;
        if (!g.alternate.empty()) {
          x["alternate"] = g.alternate;
          x["matched_alternate"] = g.matched_alternate;
        }
        x["ok"] = g.ok;
      }
      gens.push_back(x);
    }
    j["generators"] = gens;
  }
  if (r.full_rank && o.dual && r.dual.rows()) {
    j["dual_ok"] = r.dual_ok;
    if (r.dim <= limit) j["dual"] = matrix_json(r.dual);
  }
  j["crosscheck"] = r.crosscheck_ok ? json(*r.crosscheck_ok) : json(nullptr);
  j["failures"] = r.failures;
  j["passed"] = r.passed();
  return j;
}

void write_file(const std::filesystem::path& p, const std::string& text, std::vector<std::string>& files) {
  std::ofstream out(p);
  if (!out) throw Error("cannot write " + p.string());
  out << text;
  files.push_back(p.string());
}

}  // namespace

RunResult Session::run(const RunOptions& opts) {
  const auto t_start = Clock::now();
  const std::string& cmd = opts.command;
  const bool verify = cmd == "verify";
  if (!verify && cmd != "gram" && cmd != "nakayama" && cmd != "dual-bases" && cmd != "centre-check")
    throw ConfigError("unknown command '" + cmd + "'");
  auto* gh = dynamic_cast<const GradedHeckeAlgebra*>(family_.get());
  if (cmd == "centre-check" && !gh) throw ConfigError("centre-check applies to graded-hecke only");
  const unsigned threads = opts.threads.value_or(cfg_.threads);
  std::optional<std::string> out_dir = opts.out_dir;
  if (!out_dir && !cfg_.output_dir.empty()) out_dir = cfg_.output_dir;
  const bool csv = opts.csv || cfg_.csv;

  RunResult res;
  json report;
  json timing = json::object();
  std::vector<std::string> failures;
  std::ostringstream summary;
  report["schema"] = kReportSchema;
  report["artifact_version"] = kArtifactVersion;
  report["command"] = cmd;
  report["seed"] = cfg_.seed;
  report["config"] = cfg_.source;
  report["instance"] = instance_json(*family_, cfg_, omega_note_);
  report["threads"] = threads;

  const FrobeniusFamily& fam = *family_;
  std::vector<FrobeniusReport> reps;

  if (cmd != "centre-check") {
    VerifyOptions vo;
    vo.nakayama = verify ? cfg_.wants("nakayama") : cmd == "nakayama";
    vo.dual = verify ? cfg_.wants("dual") : cmd == "dual-bases";
    vo.check_generators = vo.nakayama;
    vo.crosscheck_limit = verify ? cfg_.crosscheck_limit : 0;
    json chars = json::array();
    json char_times = json::array();
    std::filesystem::path dir;
    if (csv && out_dir) {
      dir = *out_dir;
      std::filesystem::create_directories(dir);
    }
    for (std::size_t k = 0; k < chis_.size(); ++k) {
      const auto t0 = Clock::now();
      Verifier v(fam, chis_[k], threads, cfg_.seed + k);
      FrobeniusReport r = v.run(vo);
      json cj = character_json(chis_[k]);
      cj["report"] = frobenius_json(r, vo, cfg_.json_matrix_limit);
      chars.push_back(cj);
      char_times.push_back({{"label", chis_[k].label}, {"seconds", seconds_since(t0)}});
      for (const auto& f : r.failures) failures.push_back("[" + chis_[k].label + "] " + f);
      summary << "chi=" << chis_[k].label << " dim=" << r.dim << " rank=" << r.rank
              << " symmetric=" << (r.symmetric ? "true" : "false");
      if (vo.nakayama && r.full_rank) summary << " nakayama=" << (r.nakayama_identity ? "identity" : "non-identity");
      for (const auto& g : r.generators)
        if (g.realized && !g.realized->is_one()) summary << " " << g.name << "->(" << g.realized->str() << ")*" << g.name;
      summary << (r.passed() ? " PASS" : " FAIL") << "\n";
      if (csv && out_dir) {
        const std::string base = safe_label(chis_[k].label);
        write_file(dir / ("gram_" + base + ".csv"), r.gram.csv(), res.files);
        if (r.nakayama.rows()) write_file(dir / ("nakayama_" + base + ".csv"), r.nakayama.csv(), res.files);
        if (r.dual.rows()) write_file(dir / ("dual_" + base + ".csv"), r.dual.csv(), res.files);
      }
      reps.push_back(std::move(r));
    }
    report["characters"] = chars;
    timing["characters"] = char_times;
  }

  json checks = json::object();
  if (verify && cfg_.wants("hypothesis")) {
    const auto t0 = Clock::now();
    const HypothesisLog log = check_hypothesis(fam, cfg_.hypothesis_samples, cfg_.seed);
    json entries = json::array();
    for (const auto& e : log.entries) {
      if (entries.size() >= 64 && e.ok) continue;
      entries.push_back({{"input", e.input},
                         {"leading", e.leading_label},
                         {"unit", e.unit},
                         {"z_b", e.z_b},
                         {"value", e.value},
                         {"ok", e.ok},
                         {"note", e.note}});
    }
    checks["hypothesis"] = {{"singles", log.singles},
                            {"combinations", log.combinations},
                            {"failures", log.failures},
                            {"entries_shown", entries.size()},
                            {"entries", entries},
                            {"passed", log.passed()}};
    if (!log.passed()) failures.push_back("hypothesis: " + std::to_string(log.failures) + " witness failure(s)");
    summary << "hypothesis singles=" << log.singles << " combinations=" << log.combinations
            << " failures=" << log.failures << "\n";
    timing["hypothesis"] = seconds_since(t0);
  }
  if (verify && cfg_.wants("engine")) {
    const auto t0 = Clock::now();
    const EngineCheck ec = check_engine(fam, cfg_.engine_samples, cfg_.seed);
    checks["engine"] = {{"associativity_triples", ec.associativity_triples},
                        {"idempotence_words", ec.idempotence_words},
                        {"degree_checks", ec.degree_checks},
                        {"failures", ec.failures},
                        {"passed", ec.passed()}};
    for (const auto& f : ec.failures) failures.push_back("engine: " + f);
    summary << "engine triples=" << ec.associativity_triples << " words=" << ec.idempotence_words
            << " failures=" << ec.failures.size() << "\n";
    timing["engine"] = seconds_since(t0);
  }
  if (verify && cfg_.wants("claims")) {
    const auto t0 = Clock::now();
    json claims = json::array();
    auto claim = [&](const std::string& name, bool ok, json detail) {
      claims.push_back({{"name", name}, {"ok", ok}, {"detail", std::move(detail)}});
      if (!ok) failures.push_back("claim " + name + " failed");
      summary << "claim " << name << (ok ? " PASS" : " FAIL") << "\n";
    };
    auto nontrivial_somewhere = [&]() {
      for (const auto& r : reps)
        if (r.full_rank && r.nakayama.rows() && !r.nakayama_identity) return true;
      return false;
    };
    const bool have_nakayama = cfg_.wants("nakayama") && !reps.empty();
    if (auto* c = dynamic_cast<const CherednikAlgebra*>(&fam)) {
      // Phi(a_i' u b_j' * b^j w^-1 a^i) = delta * eps_{V*}(w) at the augmentation character.
      const WitnessPairing wp = witness_pairing(fam, fam.augmentation(), threads);
      bool diag_ok = true;
      for (std::size_t i = 0; i < fam.rank(); ++i)
        if (wp.values(i, i) != c->y_coinvariants().epsilon(c->triple(i).w)) diag_ok = false;
      claim("dual_pairing_monomial", wp.diagonal() && diag_ok,
            {{"off_diagonal_nonzeros", wp.off_diagonal}, {"diagonal_matches_eps_vstar", diag_ok}});
    } else if (gh) {
      const OmegaReport orep = validate_omega(gh->group(), gh->omega());
      claim("omega_valid", orep.ok, orep.violations);
      if (have_nakayama) {
        bool has_nontrivial_eps = false;
        for (std::size_t w = 0; w < gh->group().order(); ++w)
          if (!gh->coinvariants().epsilon(w).is_one()) has_nontrivial_eps = true;
        if (has_nontrivial_eps) claim("nakayama_not_identity", nontrivial_somewhere(), json::object());
      }
    } else if (auto* h = dynamic_cast<const AffineHeckeA1*>(&fam)) {
      json pairs = json::array();
      bool ok = true;
      for (const auto& p : h->t_pair_test()) {
        pairs.push_back({{"x", p.x_is_s ? "s" : "e"}, {"w", p.w_is_s ? "s" : "e"}, {"h_e", p.h_e.str()}, {"ok", p.ok}});
        ok = ok && p.ok;
      }
      claim("t_pair_leading_coefficient", ok, pairs);
      if (have_nakayama) claim("nakayama_not_identity_somewhere", nontrivial_somewhere(), json::object());
    } else if (auto* q = dynamic_cast<const QuantumFamilyBase*>(&fam)) {
      const auto bad = q->centrality_failures();
      claim("l_centre_central", bad.empty(), bad);
      if (auto* u = dynamic_cast<const QuantumSL2*>(&fam)) {
        const auto low = u->claim_low_degree(500, cfg_.seed);
        claim("phi_vanishes_below_max_degree", low.empty(), {{"samples", 500}, {"violations", low.size()}});
      } else if (have_nakayama) {
        claim("nakayama_not_identity", nontrivial_somewhere(), json::object());
      }
    }
    checks["claims"] = claims;
    timing["claims"] = seconds_since(t0);
  }
  if (gh && (cmd == "centre-check" || (verify && cfg_.wants("centre")))) {
    const auto t0 = Clock::now();
    const int d = cfg_.centre_check_degree >= 0 ? cfg_.centre_check_degree : 4;
    const auto expected = invariant_counts(gh->coinvariants().invariant_degrees(), d);
    json per = json::array();
    bool ok = true;
    std::size_t prev = 0, cum_expected = 0;
    for (int e = 0; e <= d; ++e) {
      const std::size_t dim = gh->centre_in_degree(e).size();
      cum_expected += expected[static_cast<std::size_t>(e)];
      const bool good = dim == cum_expected;
      ok = ok && good;
      per.push_back({{"degree", e},
                     {"cumulative_dimension", dim},
                     {"new_in_degree", dim - prev},
                     {"expected_new", expected[static_cast<std::size_t>(e)]},
                     {"ok", good}});
      prev = dim;
    }
    checks["centre"] = {{"max_degree", d}, {"degrees", per}, {"passed", ok}};
    if (!ok) failures.push_back("centre dimensions differ from the invariant count");
    summary << "centre up to degree " << d << (ok ? " PASS" : " FAIL") << "\n";
    timing["centre"] = seconds_since(t0);
  }
  report["checks"] = checks;
  report["failures"] = failures;
  report["passed"] = failures.empty();
  timing["total_seconds"] = seconds_since(t_start);
  report["timing"] = timing;
  summary << (failures.empty() ? "verdict: PASS" : "verdict: FAIL") << "\n";
  res.exit_code = failures.empty() ? 0 : 1;
  res.report_json = report.dump(2) + "\n";
  res.summary = summary.str();
  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    std::string stem = "report";
    if (cfg_.source != "<text>") stem = std::filesystem::path(cfg_.source).stem().string();
    write_file(std::filesystem::path(*out_dir) / (stem + "." + cmd + ".json"), res.report_json, res.files);
  }
  return res;
}

std::string report_schema() {
  static const char* text = R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "$id": "frobex-report/1",
  "title": "frobex verification report",
  "type": "object",
  "required": ["schema", "artifact_version", "command", "seed", "instance", "checks", "failures", "passed", "timing"],
  "properties": {
    "schema": {"const": "frobex-report/1"},
    "artifact_version": {"type": "string"},
    "command": {"enum": ["verify", "gram", "nakayama", "dual-bases", "centre-check"]},
    "seed": {"type": "integer"},
    "config": {"type": "string"},
    "threads": {"type": "integer"},
    "instance": {
      "type": "object",
      "required": ["algebra", "summary", "free_rank", "field_order", "central_variables", "parameters"],
      "properties": {
        "algebra": {"type": "string"},
        "summary": {"type": "string"},
        "free_rank": {"type": "integer"},
        "field_order": {"type": "integer"},
        "central_variables": {"type": "array", "items": {"type": "string"}},
        "unit_variables": {"type": "array", "items": {"type": "string"}},
        "phi_index": {"type": "integer"},
        "phi_element": {"type": "string"},
        "parameters": {"type": "object"}
      }
    },
    "characters": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["label", "values", "report"],
        "properties": {
          "label": {"type": "string"},
          "values": {"type": "object", "additionalProperties": {"type": "string"}},
          "report": {
            "type": "object",
            "required": ["dimension", "rank", "full_rank", "symmetric", "failures", "passed"],
            "properties": {
              "dimension": {"type": "integer"},
              "rank": {"type": "integer"},
              "full_rank": {"type": "boolean"},
              "symmetric": {"type": "boolean"},
              "gram": {"$ref": "#/$defs/matrix"},
              "nakayama": {"$ref": "#/$defs/matrix"},
              "dual": {"$ref": "#/$defs/matrix"},
              "nakayama_identity": {"type": "boolean"},
              "roundtrip": {"type": "object"},
              "automorphism": {"type": "object"},
              "generators": {"type": "array"},
              "dual_ok": {"type": "boolean"},
              "crosscheck": {"type": ["boolean", "null"]},
              "failures": {"type": "array", "items": {"type": "string"}},
              "passed": {"type": "boolean"}
            }
          }
        }
      }
    },
    "checks": {"type": "object"},
    "failures": {"type": "array", "items": {"type": "string"}},
    "passed": {"type": "boolean"},
    "timing": {"type": "object", "description": "wall-clock data; excluded from determinism comparisons"}
  },
  "$defs": {
    "matrix": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}}
  }
}
)";
  return text;
}

}  // namespace frobex
