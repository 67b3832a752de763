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


#include "doctest.h"
#include "frobex/affine_hecke.hpp"
#include "frobex/cherednik.hpp"
#include "frobex/graded_hecke.hpp"
#include "frobex/quantum.hpp"
#include "test_util.hpp"

using namespace frobex;
using namespace frobex::testing;

namespace {

// Central polynomial with each variable replaced by an element of the algebra.
Element realize(const Engine& eng, const CentralPoly& z, const std::vector<Element>& gens,
                const std::vector<Element>& invs) {
  Element out;
  for (const auto& [e, c] : z.terms()) {
    Element t = eng.one();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) t = eng.multiply(t, eng.power(gens[i], static_cast<unsigned>(e[i])));
      if (e[i] < 0) t = eng.multiply(t, eng.power(invs.at(i), static_cast<unsigned>(-e[i])));
    }
    out.add_scaled(t, c);
  }
  return out;
}

// h rebuilt as sum_i z_i * b_i from its coordinates.
Element rebuild(const FrobeniusFamily& fam, const Element& h, const std::vector<Element>& gens,
                const std::vector<Element>& invs = {}) {
  Element out;
  const auto& eng = fam.engine();
  for (const auto& [i, z] : fam.coordinates(h)) out += eng.multiply(realize(eng, z, gens, invs), fam.basis_element(i));
  return out;
}

Element random_word(const Engine& eng, Lcg& r, int max_len) {
  Word w;
  const long n = static_cast<long>(eng.rules().letter_count());
  for (long k = r.range(0, max_len); k > 0; --k) w.push_back(static_cast<int>(r.range(0, n - 1)));
  Element e = eng.normal_form(w);
  return e * Cyc(r.range(1, 3));
}

void check_central(const Engine& eng, const Element& z) {
  for (int l = 0; l < static_cast<int>(eng.rules().letter_count()); ++l)
    CHECK(eng.commutator(z, eng.letter(l)).is_zero());
}

}  // namespace

TEST_CASE("Cherednik: dimensions and group relations") {
  for (const char* name : {"S2", "Z/3", "S3"}) {
    CAPTURE(name);
    auto g = std::make_shared<const ReflectionGroup>(ReflectionGroup::build(name));
    CherednikAlgebra h(g, {Cyc(1)});
    const std::size_t n = g->order();
    CHECK(h.rank() == n * n * n);
    const auto& eng = h.engine();
    for (std::size_t w = 0; w < n; ++w) {
      const Element gw = h.group_element(w), gwi = h.group_element(g->inv(w));
      for (std::size_t i = 0; i < g->dim(); ++i) {
        Element expect_x, expect_y;
        for (std::size_t k = 0; k < g->dim(); ++k) {
          expect_x.add_scaled(h.x(k), g->matrix(w)(k, i));
          expect_y.add_scaled(h.y(k), g->dual_matrix(w)(k, i));
        }
        CHECK(eng.multiply(eng.multiply(gw, h.x(i)), gwi) == expect_x);
        CHECK(eng.multiply(eng.multiply(gw, h.y(i)), gwi) == expect_y);
      }
    }
  }
}

TEST_CASE("Cherednik: invariants are central and coordinates rebuild elements") {
  for (const char* name : {"S2", "Z/3", "S3"}) {
    CAPTURE(name);
    auto g = std::make_shared<const ReflectionGroup>(ReflectionGroup::build(name));
    CherednikAlgebra h(g, {Cyc(1, 2)});
    std::vector<Element> gens;
    for (const auto& p : h.x_coinvariants().invariants()) gens.push_back(h.from_x_poly(p));
    for (const auto& p : h.y_coinvariants().invariants()) gens.push_back(h.from_y_poly(p));
    for (const auto& z : gens) check_central(h.engine(), z);
    Lcg r(17);
    for (int t = 0; t < 12; ++t) {
      const Element e = random_word(h.engine(), r, 7);
      CHECK(rebuild(h, e, gens) == e);
    }
    CHECK(h.central_variables().size() == 2 * g->dim());
  }
}

TEST_CASE("Cherednik: reflection commutator for Z/2") {
  // With alpha = 2 and alphacheck = 1, [y, x] = -2 c s.
  auto g = std::make_shared<const ReflectionGroup>(ReflectionGroup::build("S2"));
  const Cyc c(3);
  CherednikAlgebra h(g, {c});
  const std::size_t s = g->reflections().front().element;
  CHECK(h.engine().commutator(h.y(0), h.x(0)) == h.group_element(s) * (Cyc(-2) * c));
}

TEST_CASE("graded Hecke: bireflections and solved Omega for S3") {
  const auto g = ReflectionGroup::build("S3");
  const auto bi = bireflection_set(g);
  CHECK(bi.size() == 2);
  for (auto w : bi) {
    CHECK(g.codim_fixed(w) == 2);
    CHECK(g.element_order(w) == 3);
  }
  const auto sols = solve_omega(g);
  REQUIRE(sols.size() == 1);
  CHECK(validate_omega(g, sols.front()).ok);
  OmegaData zero;
  CHECK(validate_omega(g, zero).ok);
  // Omega on an element outside the bireflection set is rejected.
  OmegaData bad;
  Matrix a(2, 2);
  a(0, 1) = 1;
  a(1, 0) = -1;
  bad[g.identity()] = a;
  CHECK(!validate_omega(g, bad).ok);
  auto gp = std::make_shared<const ReflectionGroup>(g);
  CHECK_THROWS_AS(GradedHeckeAlgebra(gp, bad), ConsistencyError);
}

TEST_CASE("graded Hecke: commutators and coordinates") {
  auto g = std::make_shared<const ReflectionGroup>(ReflectionGroup::build("S3"));
  const OmegaData omega = solve_omega(*g).front();
  GradedHeckeAlgebra h(g, omega);
  CHECK(h.rank() == 36);
  CHECK(!h.omega_is_zero());
  const auto& eng = h.engine();
  Element expect;
  for (const auto& [w, m] : omega) expect.add_scaled(h.group_element(w), m(0, 1));
  CHECK(eng.commutator(h.x(0), h.x(1)) == expect);
  for (std::size_t w = 0; w < g->order(); ++w)
    for (std::size_t i = 0; i < g->dim(); ++i) {
      Element rhs;
      for (std::size_t k = 0; k < g->dim(); ++k) rhs.add_scaled(h.x(k), g->matrix(w)(k, i));
      CHECK(eng.multiply(eng.multiply(h.group_element(w), h.x(i)), h.group_element(g->inv(w))) == rhs);
    }
  std::vector<Element> gens;
  for (std::size_t k = 0; k < h.coinvariants().invariants().size(); ++k) {
    check_central(eng, h.central_lift(k));
    gens.push_back(h.central_lift(k));
  }
  Lcg r(23);
  for (int t = 0; t < 12; ++t) {
    const Element e = random_word(eng, r, 7);
    CHECK(rebuild(h, e, gens) == e);
  }
}

TEST_CASE("graded Hecke: centre dimensions") {
  auto g = std::make_shared<const ReflectionGroup>(ReflectionGroup::build("S3"));
  GradedHeckeAlgebra h(g, solve_omega(*g).front());
  // cumulative coefficients of 1 / ((1 - t^2)(1 - t^3))
  const std::vector<std::size_t> expect{1, 1, 2, 3, 4};
  for (int d = 0; d <= 4; ++d) {
    const auto basis = h.centre_in_degree(d);
    CHECK(basis.size() == expect[static_cast<std::size_t>(d)]);
    for (const auto& z : basis) check_central(h.engine(), z);
  }
}

TEST_CASE("affine Hecke A1: principal series representation") {
  const Cyc v0(2), c = v0 - Cyc(1) / v0, lambda(3);
  AffineHeckeA1 h(v0);
  // basis v, T v of the module induced from theta -> lambda
  const Matrix t = Matrix::from_rows({{Cyc(0), Cyc(1)}, {Cyc(1), c}});
  const Matrix th = Matrix::from_rows({{lambda, c * lambda}, {Cyc(0), lambda.inverse()}});
  const Matrix thi = inverse(th);
  auto rep = [&](const Element& e) {
    Matrix out(2, 2);
    for (const auto& [m, coeff] : e.terms()) {
      Matrix p = Matrix::identity(2);
      if (m[0]) p = t;
      for (int j = 0; j < m[1]; ++j) p = p * th;
      for (int j = 0; j > m[1]; --j) p = p * thi;
      out = out + coeff * p;
    }
    return out;
  };
  const std::vector<Matrix> letters{t, th, thi};
  Lcg r(31);
  for (int k = 0; k < 40; ++k) {
    Word w;
    Matrix expect = Matrix::identity(2);
    for (long n = r.range(0, 7); n > 0; --n) {
      const int l = static_cast<int>(r.range(0, 2));
      w.push_back(l);
      expect = expect * letters[static_cast<std::size_t>(l)];
    }
    CHECK(rep(h.engine().normal_form(w)) == expect);
  }
  const Element zeta = h.theta(1) + h.theta(-1);
  check_central(h.engine(), zeta);
  for (int k = 0; k < 10; ++k) {
    const Element e = random_word(h.engine(), r, 6);
    CHECK(rebuild(h, e, {zeta}) == e);
  }
  CHECK_THROWS_AS(AffineHeckeA1(Cyc(1)), Error);
  CHECK_THROWS_AS(AffineHeckeA1(Cyc(-1)), Error);
}

TEST_CASE("affine Hecke A1: T-pair leading coefficients") {
  AffineHeckeA1 h(Cyc(2));
  const auto pairs = h.t_pair_test();
  CHECK(pairs.size() == 4);
  for (const auto& p : pairs) {
    CHECK(p.ok);
    CHECK(p.h_e == Cyc(p.x_is_s == p.w_is_s ? 1 : 0));
  }
}

TEST_CASE("U_eps(sl2): cyclic representation") {
  for (unsigned ell : {3u, 5u}) {
    CAPTURE(ell);
    QuantumSL2 u(ell);
    const Cyc eps = u.epsilon();
    const std::size_t n = ell;
    // v_0..v_{l-1}: K v_i = mu eps^-i v_i, F v_i = v_{i+1}, F v_{l-1} = b v_0, E v_i = a_i v_{i-1}.
    const Cyc mu(2), b(2);
    auto h = [&](std::size_t i) {
      const Cyc k2 = (mu * mu) * eps.pow(-2 * static_cast<long>(i));
      return (k2 - k2.inverse()) / (eps - eps.inverse());
    };
    std::vector<Cyc> a(n);
    Cyc run = 1;  // a_0 b
    a[0] = run / b;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Cyc prev = i == 0 ? run : a[i];
      a[i + 1] = prev + h(i);
    }
    Matrix K(n, n), F(n, n), E(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      K(i, i) = mu * eps.pow(-static_cast<long>(i));
      F((i + 1) % n, i) = i + 1 == n ? b : Cyc(1);
      E((i + n - 1) % n, i) = a[i];
    }
    CHECK(E * F - F * E == Cyc(1) / (eps - eps.inverse()) * (K * K - inverse(K * K)));
    const Matrix Ki = inverse(K);
    std::vector<Matrix> letters(4);
    letters[static_cast<std::size_t>(u.letter_a())] = F;
    letters[static_cast<std::size_t>(u.letter_b())] = K;
    letters[static_cast<std::size_t>(u.letter_b_inv())] = Ki;
    letters[static_cast<std::size_t>(u.letter_c())] = E;
    auto rep = [&](const Element& e) {
      Matrix out(n, n);
      for (const auto& [m, coeff] : e.terms()) {
        Matrix p = Matrix::identity(n);
        for (int j = 0; j < m[0]; ++j) p = p * F;
        for (int j = 0; j < m[1]; ++j) p = p * K;
        for (int j = 0; j > m[1]; --j) p = p * Ki;
        for (int j = 0; j < m[2]; ++j) p = p * E;
        out = out + coeff * p;
      }
      return out;
    };
    Lcg r(ell);
    for (int t = 0; t < 30; ++t) {
      Word w;
      Matrix expect = Matrix::identity(n);
      for (long k = r.range(0, 6); k > 0; --k) {
        const int l = static_cast<int>(r.range(0, 3));
        w.push_back(l);
        expect = expect * letters[static_cast<std::size_t>(l)];
      }
      CHECK(rep(u.engine().normal_form(w)) == expect);
    }
    CHECK(u.centrality_failures().empty());
    CHECK(u.rank() == ell * ell * ell);
    CHECK(u.claim_low_degree(100, 3).empty());
  }
}

TEST_CASE("quantum families: coordinates rebuild elements") {
  QuantumSL2 u(3);
  QuantumBorelSL2 bo(3);
  QuantumFunctionSL2 fn(3);
  const int l = 3;
  Lcg r(41);
  for (const QuantumFamilyBase* fam : std::initializer_list<const QuantumFamilyBase*>{&u, &fn}) {
    const std::vector<Element> gens{fam->monomial(l, 0, 0), fam->monomial(0, l, 0), fam->monomial(0, 0, l)};
    const std::vector<Element> invs{Element(), fam->monomial(0, -l, 0), Element()};
    for (int t = 0; t < 10; ++t) {
      const Element e = random_word(fam->engine(), r, 8);
      CHECK(rebuild(*fam, e, gens, invs) == e);
    }
  }
  const std::vector<Element> gens{bo.monomial(0, l, 0), bo.monomial(0, 0, l)};
  const std::vector<Element> invs{bo.monomial(0, -l, 0), Element()};
  for (int t = 0; t < 10; ++t) {
    const Element e = random_word(bo.engine(), r, 8);
    CHECK(rebuild(bo, e, gens, invs) == e);
  }
  CHECK(bo.rank() == 9);
  CHECK(fn.rank() == 27);
  CHECK(bo.centrality_failures().empty());
  CHECK(fn.centrality_failures().empty());
  CHECK_THROWS_AS(QuantumSL2(4), Error);
}

TEST_CASE("quantum function algebra relations") {
  QuantumFunctionSL2 fn(5);
  const auto& eng = fn.engine();
  const Element F = eng.letter(fn.letter_a()), T = eng.letter(fn.letter_b()), E = eng.letter(fn.letter_c());
  const Cyc q = fn.epsilon().inverse();
  CHECK(eng.multiply(T, E) == eng.multiply(E, T) * q);
  CHECK(eng.multiply(T, F) == eng.multiply(F, T) * q);
  CHECK(eng.commutator(E, F).is_zero());
  CHECK(eng.multiply(T, eng.letter(fn.letter_b_inv())) == eng.one());
}

TEST_CASE("root datum pairings") {
  const RootDatumSL2 d;
  // (alpha, alpha) = 2 with alpha = 2 omega
  CHECK(d.pairing(d.alpha, d.alpha) == Rational(2));
  CHECK(d.omega_alpha() == 1);
  CHECK(d.two_rho_omega() == 1);
}
