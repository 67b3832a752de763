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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "frobex/affine_hecke.hpp"
#include "frobex/cherednik.hpp"
#include "frobex/frobenius.hpp"
#include "frobex/graded_hecke.hpp"
#include "frobex/quantum.hpp"

using namespace frobex;

namespace {

struct Ctx {
  std::vector<std::string> problems;
  std::ostringstream notes;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// Families and Gram data shared between criteria.
struct Shared {
  std::vector<std::pair<std::string, std::shared_ptr<FrobeniusFamily>>> families;
  std::vector<std::pair<std::string, std::pair<Matrix, Matrix>>> grams;  // label -> (G, dual)

  void keep(const std::string& label, std::shared_ptr<FrobeniusFamily> f) { families.emplace_back(label, std::move(f)); }
};

std::shared_ptr<const ReflectionGroup> group(const char* name) {
  return std::make_shared<const ReflectionGroup>(ReflectionGroup::build(name));
}

CentralCharacter character(std::string label, std::map<std::string, Cyc> values) {
  return {std::move(label), std::move(values)};
}

FrobeniusReport verify(Ctx& ctx, Shared& sh, const FrobeniusFamily& fam, const CentralCharacter& chi,
                       const std::string& tag) {
  Verifier v(fam, chi, workers(), 1);
  VerifyOptions opts;
  opts.crosscheck_limit = 64;
  FrobeniusReport rep = v.run(opts);
  for (const auto& f : rep.failures) ctx.problems.push_back(tag + " [" + chi.label + "]: " + f);
  if (rep.dual.rows()) sh.grams.emplace_back(tag + "/" + chi.label, std::make_pair(rep.gram, rep.dual));
  return rep;
}

// sign(w) for a real reflection group, as the determinant of its matrix.
Cyc sign_of(const ReflectionGroup& g, std::size_t w) { return determinant(g.matrix(w)); }

void criterion1(Ctx& ctx, Shared& sh) {
  auto g = group("S2");
  auto h = std::make_shared<CherednikAlgebra>(g, std::vector<Cyc>{Cyc(1)});
  sh.keep("cherednik Z/2", h);
  const std::size_t n = g->order();
  ctx.require(h->rank() == n * n * n && h->rank() == 8, "reduced dimension is not 8");
  for (const auto& chi : {h->augmentation(), character("generic", {{"p1", Cyc(2)}, {"q1", Cyc(-1, 2)}})}) {
    const auto rep = verify(ctx, sh, *h, chi, "cherednik Z/2");
    ctx.require(rep.symmetric, chi.label + ": Gram not symmetric");
    ctx.require(rep.rank == 8, chi.label + ": rank " + std::to_string(rep.rank));
    ctx.require(rep.nakayama_identity, chi.label + ": Nakayama matrix is not the identity");
  }
  ctx.notes << "dim 8, chi = augmentation, (p1, q1) = (2, -1/2)";
}

void criterion2(Ctx& ctx, Shared& sh) {
  auto g = group("S3");
  auto h = std::make_shared<CherednikAlgebra>(g, std::vector<Cyc>{Cyc(1)});
  sh.keep("cherednik S3", h);
  ctx.require(h->rank() == 216, "dimension " + std::to_string(h->rank()));
  const auto rep = verify(ctx, sh, *h, h->augmentation(), "cherednik S3");
  ctx.require(rep.symmetric, "Gram not symmetric");
  ctx.require(rep.rank == 216, "rank " + std::to_string(rep.rank));
  const WitnessPairing wp = witness_pairing(*h, h->augmentation(), workers());
  ctx.require(wp.diagonal(), std::to_string(wp.off_diagonal) + " off-diagonal entries in the dual pairing");
  std::size_t bad = 0;
  for (std::size_t i = 0; i < h->rank(); ++i)
    if (wp.values(i, i) != sign_of(*g, h->triple(i).w)) ++bad;
  ctx.require(bad == 0, std::to_string(bad) + " diagonal entries differ from eps_{V*}(w)");
  ctx.notes << "dim 216, rank " << rep.rank << ", dual pairing monomial with sign(w) on the diagonal";
}

void criterion3(Ctx& ctx, Shared& sh) {
  auto g = group("S3");
  const auto sols = solve_omega(*g);
  ctx.require(sols.size() == 1, "expected a one-dimensional Omega solution space");
  if (sols.empty()) return;
  const OmegaData& omega = sols.front();
  bool on_3cycles = !omega.empty();
  for (const auto& [w, m] : omega) on_3cycles = on_3cycles && g->element_order(w) == 3 && !m.is_zero();
  ctx.require(on_3cycles, "solved Omega is not supported on the 3-cycles");
  ctx.require(validate_omega(*g, omega).ok, "solved Omega fails validation");
  for (const auto& [label, om] : {std::pair<std::string, OmegaData>{"Omega solved", omega}, {"Omega = 0", {}}}) {
    auto h = std::make_shared<GradedHeckeAlgebra>(g, om);
    sh.keep("graded Hecke S3, " + label, h);
    for (const auto& chi : {h->augmentation(), character("generic", {{"p1", Cyc(1)}, {"p2", Cyc(-2)}})}) {
      const std::string tag = "graded Hecke S3 " + label;
      Verifier v(*h, chi, workers());
      const auto rep = verify(ctx, sh, *h, chi, tag);
      ctx.require(rep.rank == 36, tag + ": rank " + std::to_string(rep.rank));
      ctx.require(!rep.nakayama_identity, tag + ": N is the identity");
      if (!rep.full_rank) continue;
      const Matrix& N = rep.nakayama;
      for (std::size_t w = 0; w < g->order(); ++w) {
        const auto e = v.reduce(h->group_element(w));
        auto expect = e;
        for (auto& c : expect) c *= sign_of(*g, w).inverse();
        ctx.require(N.apply(e) == expect, tag + ": nu(" + g->label(w) + ") != eps_V(w)^-1 w");
      }
      for (std::size_t i = 0; i < g->dim(); ++i) {
        const auto e = v.reduce(h->x(i));
        ctx.require(N.apply(e) == e, tag + ": nu(x" + std::to_string(i + 1) + ") != x");
      }
    }
  }
  ctx.notes << "rank 36, nu(w) = sign(w) w on all 6 elements, nu(x) = x, N != I (Omega solved and 0)";
}

void criterion4(Ctx& ctx, Shared&) {
  auto g = group("S3");
  // per-degree coefficients of 1/((1-t^2)(1-t^3)): #{(a, b) : 2a + 3b = d}
  std::vector<std::size_t> series;
  for (int d = 0; d <= 4; ++d) {
    std::size_t count = 0;
    for (int a = 0; 2 * a <= d; ++a) count += (d - 2 * a) % 3 == 0;
    series.push_back(count);
  }
  for (const auto& [label, om] : {std::pair<std::string, OmegaData>{"solved", solve_omega(*g).front()}, {"zero", {}}}) {
    GradedHeckeAlgebra h(g, om);
    std::size_t prev = 0;
    std::ostringstream dims;
    for (int d = 0; d <= 4; ++d) {
      const std::size_t cum = h.centre_in_degree(d).size();
      const std::size_t here = cum - prev;
      prev = cum;
      dims << (d ? "," : "") << here;
      ctx.require(here == series[static_cast<std::size_t>(d)],
                  "Omega " + label + ": degree " + std::to_string(d) + " has centre dimension " + std::to_string(here));
    }
    if (label == "solved") ctx.notes << "per-degree dims " << dims.str() << " (series 1,0,1,1,1)";
  }
}

void criterion5(Ctx& ctx, Shared& sh) {
  const std::vector<std::pair<Cyc, Cyc>> grid{{Cyc(2), Cyc(0)}, {Cyc(2), Cyc(3)}, {Cyc(3, 2), Cyc(-1)}, {Cyc(-3), Cyc(1, 2)}};
  bool nontrivial = false;
  for (const auto& [v0, z0] : grid) {
    auto h = std::make_shared<AffineHeckeA1>(v0);
    const std::string tag = "affine A1 v0=" + v0.str();
    const auto rep = verify(ctx, sh, *h, character("zeta=" + z0.str(), {{"zeta", z0}}), tag);
    ctx.require(rep.rank == 4, tag + ": rank " + std::to_string(rep.rank));
    nontrivial = nontrivial || (rep.full_rank && !rep.nakayama_identity);
    for (const auto& p : h->t_pair_test()) {
      const Cyc expect(p.x_is_s == p.w_is_s ? 1 : 0);
      ctx.require(p.ok && p.h_e == expect, tag + ": T-pair test failed");
    }
    if (v0 == Cyc(2) && z0 == Cyc(0)) sh.keep("affine A1", h);
  }
  ctx.require(nontrivial, "N is the identity at every grid point");
  ctx.notes << "rank 4 at 4 grid points, N != I somewhere, T-pair test exhaustive";
}

void criterion6(Ctx& ctx, Shared& sh) {
  for (unsigned ell : {3u, 5u}) {
    const auto t0 = std::chrono::steady_clock::now();
    auto u = std::make_shared<QuantumSL2>(ell);
    sh.keep("U_eps(sl2) l=" + std::to_string(ell), u);
    const std::string tag = "l=" + std::to_string(ell);
    ctx.require(u->centrality_failures().empty(), tag + ": l-th powers not central");
    const auto bad = u->claim_low_degree(500, 3);
    ctx.require(bad.empty(), tag + ": Phi nonzero on " + std::to_string(bad.size()) + " low-degree pairs");
    const CentralCharacter aug = u->augmentation();
    ctx.require(aug.values.at("El").is_zero() && aug.values.at("Fl").is_zero(), "augmentation has phi_E or phi_F nonzero");
    const std::size_t l3 = static_cast<std::size_t>(ell) * ell * ell;
    for (const auto& chi : {aug, character("generic", {{"Fl", Cyc(2)}, {"Kl", Cyc(-1)}, {"El", Cyc(1, 2)}}),
                            character("second", {{"Fl", Cyc(-1)}, {"Kl", Cyc(2)}, {"El", Cyc(0)}})}) {
      const auto rep = verify(ctx, sh, *u, chi, "U_eps(sl2) " + tag);
      ctx.require(rep.rank == l3, tag + " " + chi.label + ": rank " + std::to_string(rep.rank));
      ctx.require(rep.symmetric, tag + " " + chi.label + ": Gram not symmetric");
      ctx.require(rep.nakayama_identity, tag + " " + chi.label + ": N != I");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ctx.require(secs < (ell == 3 ? 30.0 : 900.0), tag + " exceeded its runtime budget");
    ctx.notes << tag << ": " << secs << " s; ";
  }
}

// (2 rho, omega) for sl2 from the Cartan matrix (2): alpha = 2 omega, 2 rho = alpha, (alpha, alpha) = 2.
long two_rho_omega_from_cartan() {
  const Rational alpha_alpha = 2;
  const Rational omega_in_alpha(1, 2);
  const Rational v = alpha_alpha * omega_in_alpha;
  return v.get_num().get_si();
}

const GeneratorImage* find_gen(const FrobeniusReport& rep, const std::string& name) {
  for (const auto& g : rep.generators)
    if (g.name == name) return &g;
  return nullptr;
}

void criterion7(Ctx& ctx, Shared& sh) {
  auto b = std::make_shared<QuantumBorelSL2>(3);
  sh.keep("Borel l=3", b);
  const long e = two_rho_omega_from_cartan();
  const Cyc k_expect = b->epsilon().pow(e);
  for (const auto& chi : {b->augmentation(), character("generic", {{"Kl", Cyc(2)}, {"El", Cyc(-1)}})}) {
    const auto rep = verify(ctx, sh, *b, chi, "Borel");
    ctx.require(rep.rank == 9, chi.label + ": rank " + std::to_string(rep.rank));
    ctx.require(!rep.nakayama_identity, chi.label + ": N is the identity");
    const auto* K = find_gen(rep, "K");
    const auto* E = find_gen(rep, "E");
    ctx.require(K && K->realized && *K->realized == k_expect, chi.label + ": K is not scaled by eps^(2rho,omega)");
    ctx.require(E && E->realized && E->realized->is_one(), chi.label + ": E is not fixed");
  }
  ctx.notes << "rank 9, K -> eps^" << e << " K, E fixed, N != I";
}

void criterion8(Ctx& ctx, Shared& sh) {
  auto f = std::make_shared<QuantumFunctionSL2>(3);
  sh.keep("function algebra l=3", f);
  ctx.require(f->rank() == 27, "dimension " + std::to_string(f->rank()));
  const auto rep = verify(ctx, sh, *f, character("generic", {{"Fl", Cyc(1)}, {"Tl", Cyc(-1)}, {"El", Cyc(2)}}), "O_eps");
  ctx.require(!rep.nakayama_identity, "N is the identity");
  for (const char* name : {"F", "E"}) {
    const auto* g = find_gen(rep, name);
    ctx.require(g && g->realized && g->realized->is_one(), std::string(name) + " is not fixed");
  }
  const long e = 2 * two_rho_omega_from_cartan();
  const auto* T = find_gen(rep, "T");
  int sign = 0;
  if (T && T->realized) {
    if (*T->realized == f->epsilon().pow(e)) sign = 1;
    if (*T->realized == f->epsilon().pow(-e)) sign = -1;
  }
  ctx.require(sign != 0, "K_{-omega} (x) K_omega is not scaled by eps^(+-2(2rho,omega))");
  ctx.notes << "dim 27, F and E fixed, T -> eps^(" << (sign < 0 ? "-" : "+") << e << ") T, realized sign "
            << (sign < 0 ? "-1" : "+1");
}

void criterion9(Ctx& ctx, Shared& sh) {
  std::size_t total = 0;
  for (const auto& [label, fam] : sh.families) {
    const HypothesisLog log = check_hypothesis(*fam, 50, 13);
    total += log.singles + log.combinations;
    ctx.require(log.singles == fam->rank() && log.combinations == 50, label + ": sample counts");
    ctx.require(log.failures == 0, label + ": " + std::to_string(log.failures) + " hypothesis failures");
  }
  ctx.notes << sh.families.size() << " families, " << total << " inputs";
}

void criterion10(Ctx& ctx, Shared& sh) {
  for (const auto& [label, fam] : sh.families) {
    const EngineCheck ec = check_engine(*fam, 100, 17);
    ctx.require(ec.associativity_triples == 100, label + ": associativity sample count");
    for (const auto& f : ec.failures) ctx.problems.push_back(label + ": " + f);
  }
  std::size_t residuals = 0;
  for (const auto& [label, gd] : sh.grams) {
    const auto& [g, dual] = gd;
    ctx.require((g * dual).is_identity() && (dual * g).is_identity(), label + ": inverse residual is nonzero");
    ++residuals;
  }
  ctx.notes << sh.families.size() << " engines, " << residuals << " exact inverse residuals";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds
    std::function<void(Ctx&, Shared&)> run;
  };
  const std::vector<Criterion> all{
      {1, "Cherednik Z/2 symmetric, N = I", 1, criterion1},
      {2, "Cherednik S3 dimension 216, dual pairing", 600, criterion2},
      {3, "graded Hecke S3 Nakayama images", 60, criterion3},
      {4, "graded Hecke S3 centre dimensions", 60, criterion4},
      {5, "affine Hecke A1 grid", 1, criterion5},
      {6, "U_eps(sl2) l = 3, 5", 930, criterion6},
      {7, "quantum Borel l = 3", 5, criterion7},
      {8, "quantized function algebra l = 3", 120, criterion8},
      {9, "hypothesis suite", 1e9, criterion9},
      {10, "engine properties and inverse residuals", 1e9, criterion10},
  };
  Shared sh;
  int failed = 0;
  for (const auto& c : all) {
    Ctx ctx;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(ctx, sh);
    } catch (const std::exception& e) {
      ctx.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget) ctx.problems.push_back("runtime " + std::to_string(secs) + " s over budget");
    const bool ok = ctx.problems.empty();
    failed += !ok;
    std::printf("criterion %2d: %s  %s (%.2f s) %s\n", c.id, ok ? "PASS" : "FAIL", c.name, secs, ctx.notes.str().c_str());
    for (const auto& p : ctx.problems) std::printf("    - %s\n", p.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
