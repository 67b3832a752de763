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


#include <atomic>

#include "doctest.h"
#include "frobex/affine_hecke.hpp"
#include "frobex/cherednik.hpp"
#include "frobex/frobenius.hpp"
#include "frobex/graded_hecke.hpp"
#include "frobex/quantum.hpp"

using namespace frobex;

namespace {

Matrix direct_gram(const FrobeniusFamily& fam, const CentralCharacter& chi) {
  const std::size_t n = fam.rank();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g(i, j) = poly_eval(fam.phi(fam.engine().multiply(fam.basis_element(i), fam.basis_element(j))), chi);
  return g;
}

// Phi(b_i b_j) = Phi(N(b_j) b_i) with N(b_j) = sum_k N(k, j) b_k.
bool nakayama_holds(const Matrix& g, const Matrix& n) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.rows(); ++j) {
      Cyc s(0);
      for (std::size_t k = 0; k < g.rows(); ++k) s += n(k, j) * g(k, i);
      if (s != g(i, j)) return false;
    }
  return true;
}

// Drops the phi coordinate, so the form vanishes identically.
class DegenerateAffine : public AffineHeckeA1 {
 public:
  DegenerateAffine() : AffineHeckeA1(Cyc(2)) {}
  Coordinates coordinates(const Element& h) const override {
    Coordinates c = AffineHeckeA1::coordinates(h);
    std::erase_if(c, [](const auto& p) { return p.first == 1; });
    return c;
  }
};

std::vector<std::unique_ptr<FrobeniusFamily>> small_families() {
  std::vector<std::unique_ptr<FrobeniusFamily>> out;
  auto z2 = std::make_shared<const ReflectionGroup>(ReflectionGroup::build("S2"));
  auto z3 = std::make_shared<const ReflectionGroup>(ReflectionGroup::build("Z/3"));
  auto s3 = std::make_shared<const ReflectionGroup>(ReflectionGroup::build("S3"));
  out.push_back(std::make_unique<CherednikAlgebra>(z2, std::vector<Cyc>{Cyc(1)}));
  out.push_back(std::make_unique<CherednikAlgebra>(z3, std::vector<Cyc>{Cyc(1), Cyc(2)}));
  out.push_back(std::make_unique<GradedHeckeAlgebra>(z3, OmegaData{}));
  out.push_back(std::make_unique<GradedHeckeAlgebra>(s3, solve_omega(*s3).front()));
  out.push_back(std::make_unique<AffineHeckeA1>(Cyc(3, 2)));
  out.push_back(std::make_unique<QuantumSL2>(3));
  out.push_back(std::make_unique<QuantumBorelSL2>(3));
  out.push_back(std::make_unique<QuantumFunctionSL2>(3));
  return out;
}

CentralCharacter generic(const FrobeniusFamily& fam) {
  CentralCharacter chi{"generic", {}};
  long v = 2;
  for (const auto& name : fam.central_variables()) chi.values[name] = Cyc(v++, 3);
  return chi;
}

}  // namespace

TEST_CASE("Gram matrix and Nakayama automorphism against direct evaluation") {
  for (const auto& fam : small_families()) {
    CAPTURE(fam->summary());
    for (const auto& chi : {fam->augmentation(), generic(*fam)}) {
      CAPTURE(chi.label);
      Verifier v(*fam, chi, 2);
      VerifyOptions opts;
      opts.crosscheck_limit = 64;
      const FrobeniusReport rep = v.run(opts);
      const Matrix g = direct_gram(*fam, chi);
      CHECK(rep.gram == g);
      CHECK(rep.rank == rank(g));
      CHECK(rep.full_rank);
      CHECK(rep.symmetric == g.is_symmetric());
      CHECK(nakayama_holds(g, rep.nakayama));
      CHECK(rep.nakayama_identity == rep.nakayama.is_identity());
      CHECK(rep.roundtrip_ok);
      CHECK(rep.dual_ok);
      CHECK(rep.automorphism_ok);
      CHECK(rep.crosscheck_ok.value_or(false));
      CHECK(rep.passed());
      CHECK((g * rep.dual).is_identity());
    }
  }
}

TEST_CASE("unspecialized pairing agrees with the Gram matrix") {
  AffineHeckeA1 h(Cyc(2));
  std::vector<Element> b;
  for (std::size_t i = 0; i < h.rank(); ++i) b.push_back(h.basis_element(i));
  const auto p = pairing(h, b, b);
  const CentralCharacter chi{"z", {{"zeta", Cyc(5)}}};
  Verifier v(h, chi);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(poly_eval(p[i][j], chi) == v.gram()(i, j));
}

TEST_CASE("degenerate form is reported as a failure") {
  DegenerateAffine h;
  Verifier v(h, {"z", {{"zeta", Cyc(1)}}});
  const FrobeniusReport rep = v.run({});
  CHECK(!rep.full_rank);
  CHECK(rep.rank == 0);
  CHECK(!rep.passed());
  CHECK(!rep.failures.empty());
  CHECK(!check_hypothesis(h, 5, 1).passed());
}

TEST_CASE("hypothesis and engine checks pass on every family") {
  for (const auto& fam : small_families()) {
    CAPTURE(fam->summary());
    const HypothesisLog log = check_hypothesis(*fam, 50, 7);
    CHECK(log.singles == fam->rank());
    CHECK(log.combinations == 50);
    CHECK(log.passed());
    const EngineCheck ec = check_engine(*fam, 100, 7);
    CHECK(ec.associativity_triples == 100);
    CHECK(ec.passed());
  }
}

TEST_CASE("witness pairing for Cherednik is monomial") {
  auto g = std::make_shared<const ReflectionGroup>(ReflectionGroup::build("S2"));
  CherednikAlgebra h(g, {Cyc(1)});
  const WitnessPairing wp = witness_pairing(h, h.augmentation());
  CHECK(wp.diagonal());
  for (std::size_t i = 0; i < h.rank(); ++i)
    CHECK(wp.values(i, i) == determinant(g->dual_matrix(h.triple(i).w)));
}

TEST_CASE("generator images") {
  QuantumBorelSL2 b(3);
  Verifier v(b, b.augmentation());
  const FrobeniusReport rep = v.run({});
  REQUIRE(rep.generators.size() == 2);
  for (const auto& gi : rep.generators) {
    CHECK(gi.ok);
    REQUIRE(gi.realized.has_value());
    if (gi.name == "K") CHECK(*gi.realized == Cyc::zeta(3));
    if (gi.name == "E") CHECK(gi.realized->is_one());
  }
  CHECK(!rep.nakayama_identity);
}

TEST_CASE("parallel_for covers the range and rethrows") {
  std::atomic<long> sum{0};
  parallel_for(1000, 4, [&](std::size_t i) { sum += static_cast<long>(i); });
  CHECK(sum == 499500);
  CHECK_THROWS_AS(parallel_for(10, 3,
                               [](std::size_t i) {
                                 if (i == 7) throw Error("boom");
                               }),
                  Error);
}
