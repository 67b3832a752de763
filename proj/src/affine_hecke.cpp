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

#include "frobex/affine_hecke.hpp"

namespace frobex {

namespace {

enum Letter : int { kT = 0, kTheta = 1, kThetaInv = 2 };

class AffineA1Rules : public RewriteSystem {
 public:
  explicit AffineA1Rules(Cyc c) : c_(std::move(c)) {}

  Monomial unit() const override { return {0, 0}; }
  std::size_t letter_count() const override { return 3; }
  std::string letter_name(int l) const override {
    return l == kT ? "T" : l == kTheta ? "theta" : "theta^-1";
  }
  int letter_rank(int l) const override { return l == kT ? 0 : 1; }
  int letter_weight(int l) const override { return l == kT ? 1 : 0; }

  Word spell(const Monomial& m) const override {
    Word w;
    if (m[0]) w.push_back(kT);
    for (int k = 0; k < std::abs(m[1]); ++k) w.push_back(m[1] > 0 ? kTheta : kThetaInv);
    return w;
  }

  std::optional<std::vector<std::pair<Monomial, Cyc>>> extend(const Monomial& m, int l) const override {
    Monomial r = m;
    if (l == kT) {
      if (m[0] || m[1]) return std::nullopt;
      r[0] = 1;
    } else {
      r[1] += l == kTheta ? 1 : -1;
    }
    return std::vector<std::pair<Monomial, Cyc>>{{std::move(r), Cyc(1)}};
  }

  int peel(Monomial& m) const override {
    if (m[1] > 0) {
      --m[1];
      return kTheta;
    }
    if (m[1] < 0) {
      ++m[1];
      return kThetaInv;
    }
    if (m[0]) {
      m[0] = 0;
      return kT;
    }
    throw Error("peel on the unit monomial");
  }

  std::vector<WordTerm> swap(int b, int a) const override {
    if (a != kT) throw Error("no rule for " + letter_name(b) + "*" + letter_name(a));
    switch (b) {
      case kT:  // T^2 = c T + 1
        return {{c_, {kT}}, {Cyc(1), {}}};
      case kTheta:  // theta T = T theta^-1 + c theta
        return {{Cyc(1), {kT, kThetaInv}}, {c_, {kTheta}}};
      default:  // theta^-1 T = T theta - c theta
        return {{Cyc(1), {kT, kTheta}}, {-c_, {kTheta}}};
    }
  }

  std::string render(const Monomial& m) const override {
    std::string s = m[0] ? "T" : "";
    if (m[1]) {
      if (!s.empty()) s += "*";
      s += m[1] == 1 ? "theta" : "theta^" + std::to_string(m[1]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  Cyc c_;
};

}  // namespace

AffineHeckeA1::AffineHeckeA1(Cyc v0) : v0_(std::move(v0)) {
  if (v0_.is_zero() || v0_ * v0_ == Cyc(1)) throw Error("affine-hecke-a1: v0^2 must avoid 0 and 1");
  engine_ = std::make_unique<Engine>(std::make_shared<AffineA1Rules>(v0_ - Cyc(1) / v0_));
  basis_ = {Element::monomial({0, 0}), Element::monomial({0, 1}), Element::monomial({1, 0}),
            Element::monomial({1, 1})};
}

std::string AffineHeckeA1::summary() const { return "extended affine Hecke algebra of type A1, v = " + v0_.str(); }

std::string AffineHeckeA1::basis_label(std::size_t i) const {
  static const char* labels[] = {"1", "theta", "T", "T*theta"};
  return labels[i];
}

Coordinates AffineHeckeA1::coordinates(const Element& h) const {
  // theta^j = P_j(zeta) + Q_j(zeta) theta, from theta^2 = zeta theta - 1.
  const CentralPoly zeta = CentralPoly::variable(1, 0).with_names({"zeta"});
  const CentralPoly one = zeta.constant_like(1), zero = zeta.zero();
  std::map<std::size_t, CentralPoly> acc;
  for (const auto& [m, c] : h.terms()) {
    CentralPoly p = one, q = zero;
    for (int k = 0; k < m[1]; ++k) {
      CentralPoly np = -q, nq = p + zeta * q;
      p = std::move(np);
      q = std::move(nq);
    }
    for (int k = 0; k > m[1]; --k) {
      CentralPoly np = zeta * p + q, nq = -p;
      p = std::move(np);
      q = std::move(nq);
    }
    const std::size_t base = m[0] ? 2 : 0;
    acc.try_emplace(base, zero).first->second += p * c;
    acc.try_emplace(base + 1, zero).first->second += q * c;
  }
  Coordinates out;
  for (auto& [i, z] : acc)
    if (!z.is_zero()) out.emplace_back(i, std::move(z));
  return out;
}

std::vector<GeneratorSpec> AffineHeckeA1::generators() const {
  return {{"T", T(), false, Cyc(1), std::nullopt}, {"theta", theta(1), false, Cyc(1), std::nullopt}};
}

int AffineHeckeA1::leading_rank(std::size_t i) const {
  // (e, theta) > (e, 1) > (s, theta) > (s, 1)
  static const int ranks[] = {2, 3, 0, 1};
  return ranks[i];
}

Element AffineHeckeA1::witness(std::size_t i) const {
  switch (i) {
    case 0:
      return theta(1);
    case 1:
      return engine_->one();
    case 2:
      return engine_->multiply(T(), theta(1));
    default:
      return T();
  }
}

Element AffineHeckeA1::T() const { return engine_->letter(kT); }

Element AffineHeckeA1::theta(long j) const { return Element::monomial({0, static_cast<int>(j)}); }

Element AffineHeckeA1::straighten(long j, bool s) const {
  return engine_->multiply(theta(j), s ? T() : engine_->one());
}

std::vector<AffineHeckeA1::TPair> AffineHeckeA1::t_pair_test() const {
  std::vector<TPair> out;
  for (bool x : {false, true})
    for (bool w : {false, true}) {
      const Element tx = x ? T() : engine_->one(), tw = w ? T() : engine_->one();
      const Cyc he = engine_->multiply(tx, tw).coeff({0, 0});
      // s is its own inverse, so w = x^-1 means w = x.
      out.push_back({x, w, he, he.is_zero() || x == w});
    }
  return out;
}

}  // namespace frobex
