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


#include <numeric>

#include "doctest.h"
#include "frobex/scalars.hpp"
#include "test_util.hpp"

using frobex::Cyc;
using frobex::Rational;
using namespace frobex::testing;

namespace {

int mobius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

}  // namespace

TEST_CASE("euler_phi agrees with a gcd count") {
  for (unsigned n = 1; n <= 60; ++n) {
    unsigned count = 0;
    for (unsigned k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    CHECK(frobex::euler_phi(n) == count);
  }
}

TEST_CASE("cyclotomic polynomials of small order") {
  using V = std::vector<Rational>;
  CHECK(frobex::cyclotomic_polynomial(1) == V{-1, 1});
  CHECK(frobex::cyclotomic_polynomial(3) == V{1, 1, 1});
  CHECK(frobex::cyclotomic_polynomial(6) == V{1, -1, 1});
  CHECK(frobex::cyclotomic_polynomial(12) == V{1, 0, -1, 0, 1});
  for (unsigned n = 1; n <= 30; ++n) CHECK(frobex::cyclotomic_polynomial(n).size() == frobex::euler_phi(n) + 1);
}

TEST_CASE("roots of unity") {
  CHECK(Cyc::zeta(4).pow(2) == Cyc(-1));
  CHECK(Cyc::zeta(3) + Cyc::zeta(3, 2) == Cyc(-1));
  CHECK(Cyc::zeta(2) == Cyc(-1));
  for (unsigned n = 1; n <= 24; ++n) {
    CHECK(Cyc::zeta(n).pow(static_cast<long>(n)).is_one());
    // sum of primitive n-th roots is mu(n)
    Cyc s(0);
    for (unsigned k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) s += Cyc::zeta(n, static_cast<long>(k));
    CHECK(s == Cyc(mobius(n)));
  }
  CHECK(Cyc::zeta(6, 2) == Cyc::zeta(3));
  CHECK(Cyc::zeta(5, -1) == Cyc::zeta(5, 4));
}

TEST_CASE("field arithmetic matches complex evaluation") {
  Lcg r(3);
  for (unsigned order : {1u, 3u, 4u, 5u, 8u, 12u}) {
    for (int t = 0; t < 20; ++t) {
      const Cyc a = random_cyc(r, order), b = random_cyc(r, order);
      CHECK(close(to_complex(a + b), to_complex(a) + to_complex(b)));
      CHECK(close(to_complex(a * b), to_complex(a) * to_complex(b)));
      CHECK(close(to_complex(a - b), to_complex(a) - to_complex(b)));
      if (!b.is_zero()) {
        CHECK(close(to_complex(a / b), to_complex(a) / to_complex(b)));
        CHECK((b * b.inverse()).is_one());
      }
    }
  }
}

TEST_CASE("explicit embedding into a larger cyclotomic field") {
  const Cyc a = Cyc::zeta(3), b = Cyc::zeta(6);
  const Cyc p = a.embed(6) * b;
  CHECK(close(to_complex(p), to_complex(a) * to_complex(b)));
  CHECK(p == Cyc::zeta(2));
  CHECK(a.embed(6) == a);
  CHECK(close(to_complex(a.embed(12)), to_complex(a)));
  CHECK(a * Cyc(2) == a + a);
  CHECK_THROWS_AS(Cyc::zeta(3) * Cyc::zeta(4), frobex::IncompatibleOrders);
}

TEST_CASE("parse and print") {
  CHECK(Cyc::parse("3/4", 1) == Cyc(3, 4));
  CHECK(Cyc::parse("-2", 1) == Cyc(-2));
  CHECK(Cyc::parse("z", 3) == Cyc::zeta(3));
  CHECK(Cyc::parse("1 + 2*z^2", 5) == Cyc(1) + Cyc(2) * Cyc::zeta(5, 2));
  Lcg r(9);
  for (int t = 0; t < 20; ++t) {
    const Cyc a = random_cyc(r, 7);
    CHECK(Cyc::parse(a.str(), 7) == a);
  }
  CHECK_THROWS_AS(Cyc::parse("1 +", 3), frobex::Error);
  CHECK_THROWS_AS(Cyc::parse("q", 3), frobex::Error);
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(Cyc(0).inverse(), frobex::DivisionByZero);
  CHECK_THROWS_AS(Cyc(1) / (Cyc::zeta(3) + Cyc::zeta(3, 2) + Cyc(1)), frobex::DivisionByZero);
  CHECK_THROWS_AS(Cyc(0).pow(-1), frobex::DivisionByZero);
}

TEST_CASE("rational helpers") {
  CHECK(Cyc(6, 4) == Cyc(3, 2));
  CHECK(Cyc(3, 2).is_rational());
  CHECK(!Cyc::zeta(3).is_rational());
  CHECK(Cyc(5).pow(-2) == Cyc(1, 25));
  CHECK(frobex::to_string(Rational(-7, 3)) == "-7/3");
}
