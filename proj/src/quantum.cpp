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

#include "frobex/quantum.hpp"

#include <random>

namespace frobex {

int RootDatumSL2::omega_alpha() const {
  const Rational v = pairing(1, alpha);
  if (v.get_den() != 1) throw ConsistencyError("(omega, alpha) is not an integer");
  return static_cast<int>(v.get_num().get_si());
}

int RootDatumSL2::two_rho_omega() const {
  const Rational v = pairing(two_rho, 1);
  if (v.get_den() != 1) throw ConsistencyError("(2 rho, omega) is not an integer");
  return static_cast<int>(v.get_num().get_si());
}

namespace {

// Slots A < B, B^-1 < C. Straightening:
//   C B = s_cb B C,  B A = s_ba A B,  C A = A C + extra (words in B, B^-1).
struct QuantumData {
  bool has_a;
  std::vector<std::string> names;
  Cyc s_cb, s_ba;
  std::vector<WordTerm> extra;
};

class QuantumRules : public RewriteSystem {
 public:
  explicit QuantumRules(QuantumData d) : d_(std::move(d)) {
    const int base = d_.has_a ? 1 : 0;
    a_ = d_.has_a ? 0 : -1;
    b_ = base;
    bi_ = base + 1;
    c_ = base + 2;
  }
  int a() const { return a_; }
  int b() const { return b_; }
  int bi() const { return bi_; }
  int c() const { return c_; }

  Monomial unit() const override { return {0, 0, 0}; }
  std::size_t letter_count() const override { return static_cast<std::size_t>(c_ + 1); }
  std::string letter_name(int l) const override {
    if (l == a_) return d_.names[0];
    if (l == b_) return d_.names[1];
    if (l == bi_) return d_.names[1] + "^-1";
    return d_.names[2];
  }
  int letter_rank(int l) const override { return l == a_ ? 0 : l == c_ ? 2 : 1; }
  int letter_weight(int l) const override { return l == a_ || l == c_ ? 1 : 0; }

  Word spell(const Monomial& m) const override {
    Word w(static_cast<std::size_t>(m[0]), a_);
    for (int k = 0; k < std::abs(m[1]); ++k) w.push_back(m[1] > 0 ? b_ : bi_);
    for (int k = 0; k < m[2]; ++k) w.push_back(c_);
    return w;
  }

  std::optional<std::vector<std::pair<Monomial, Cyc>>> extend(const Monomial& m, int l) const override {
    Monomial r = m;
    if (l == a_) {
      if (m[1] || m[2]) return std::nullopt;
      ++r[0];
    } else if (l == b_ || l == bi_) {
      if (m[2]) return std::nullopt;
      r[1] += l == b_ ? 1 : -1;
    } else {
      ++r[2];
    }
    return std::vector<std::pair<Monomial, Cyc>>{{std::move(r), Cyc(1)}};
  }

  int peel(Monomial& m) const override {
    if (m[2] > 0) {
      --m[2];
      return c_;
    }
    if (m[1] > 0) {
      --m[1];
      return b_;
    }
    if (m[1] < 0) {
      ++m[1];
      return bi_;
    }
    if (m[0] > 0) {
      --m[0];
      return a_;
    }
    throw Error("peel on the unit monomial");
  }

  std::vector<WordTerm> swap(int x, int y) const override {
    if (x == c_ && y == a_) {
      std::vector<WordTerm> out{{Cyc(1), {a_, c_}}};
      out.insert(out.end(), d_.extra.begin(), d_.extra.end());
      return out;
    }
    if (x == c_ && y == b_) return {{d_.s_cb, {b_, c_}}};
    if (x == c_ && y == bi_) return {{d_.s_cb.inverse(), {bi_, c_}}};
    if (x == b_ && y == a_) return {{d_.s_ba, {a_, b_}}};
    if (x == bi_ && y == a_) return {{d_.s_ba.inverse(), {a_, bi_}}};
    throw Error("no rule for " + letter_name(x) + "*" + letter_name(y));
  }

  std::string render(const Monomial& m) const override {
    std::string s;
    auto part = [&](const std::string& name, int e) {
      if (!e) return;
      if (!s.empty()) s += "*";
      s += name + (e == 1 ? "" : "^" + std::to_string(e));
    };
    part(d_.names[0], m[0]);
    part(d_.names[1], m[1]);
    part(d_.names[2], m[2]);
    return s.empty() ? "1" : s;
  }

 private:
  QuantumData d_;
  int a_, b_, bi_, c_;
};

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

QuantumFamilyBase::QuantumFamilyBase(unsigned ell, bool has_a, std::vector<std::string> slot_names)
    : ell_(ell), has_a_(has_a), names_(std::move(slot_names)) {
  if (ell_ < 3 || ell_ % 2 == 0) throw Error("quantum: ell must be odd and at least 3");
  eps_ = Cyc::zeta(ell_);
}

void QuantumFamilyBase::finish(std::shared_ptr<const RewriteSystem> rules, int la, int lb, int lbi, int lc) {
  engine_ = std::make_unique<Engine>(std::move(rules));
  la_ = la;
  lb_ = lb;
  lbi_ = lbi;
  lc_ = lc;
  const int l = static_cast<int>(ell_);
  for (int k = 0; k < (has_a_ ? l : 1); ++k)
    for (int c = 0; c < l; ++c)
      for (int m = 0; m < l; ++m) basis_.push_back(Element::monomial({k, c, m}));
  auto bad = centrality_failures();
  if (!bad.empty()) throw ConsistencyError(kind() + ": l-th power is not central: " + bad.front());
}

std::size_t QuantumFamilyBase::index(int k, int c, int m) const {
  const auto l = static_cast<std::size_t>(ell_);
  return (static_cast<std::size_t>(k) * l + static_cast<std::size_t>(c)) * l + static_cast<std::size_t>(m);
}

Element QuantumFamilyBase::monomial(int k, int c, int m) const {
  if (!has_a_ && k != 0) throw Error("monomial outside the family");
  return Element::monomial({k, c, m});
}

std::string QuantumFamilyBase::basis_label(std::size_t i) const {
  return engine_->rules().render(basis_[i].terms().begin()->first);
}

std::vector<std::string> QuantumFamilyBase::central_variables() const {
  std::vector<std::string> v;
  if (has_a_) v.push_back(names_[0] + "l");
  v.push_back(names_[1] + "l");
  v.push_back(names_[2] + "l");
  return v;
}

std::vector<std::string> QuantumFamilyBase::unit_variables() const { return {names_[1] + "l"}; }

Coordinates QuantumFamilyBase::coordinates(const Element& h) const {
  const int l = static_cast<int>(ell_);
  std::map<std::size_t, CentralPoly> acc;
  const std::size_t off = has_a_ ? 1 : 0;
  Exponent e(off + 2);
  for (const auto& [m, c] : h.terms()) {
    const int qk = m[0] / l, qc = floor_div(m[1], l), qm = m[2] / l;
    if (has_a_) e[0] = qk;
    e[off] = qc;
    e[off + 1] = qm;
    auto [it, _] = acc.try_emplace(index(m[0] - qk * l, m[1] - qc * l, m[2] - qm * l), central_zero());
    it->second.add_term(e, c);
  }
  Coordinates out;
  for (auto& [i, z] : acc)
    if (!z.is_zero()) out.emplace_back(i, std::move(z));
  return out;
}

int QuantumFamilyBase::leading_rank(std::size_t i) const {
  const auto& m = basis_[i].terms().begin()->first;
  return m[0] + m[2];
}

Element QuantumFamilyBase::witness(std::size_t i) const {
  const auto& m = basis_[i].terms().begin()->first;
  const int l = static_cast<int>(ell_);
  return Element::monomial({has_a_ ? l - 1 - m[0] : 0, -m[1], l - 1 - m[2]});
}

std::vector<std::string> QuantumFamilyBase::centrality_failures() const {
  std::vector<std::string> out;
  const int l = static_cast<int>(ell_);
  std::vector<Element> powers;
  if (has_a_) powers.push_back(Element::monomial({l, 0, 0}));
  powers.push_back(Element::monomial({0, l, 0}));
  powers.push_back(Element::monomial({0, 0, l}));
  const auto& rs = engine_->rules();
  for (const auto& z : powers)
    for (int g = 0; g < static_cast<int>(rs.letter_count()); ++g)
      if (!engine_->commutator(z, engine_->letter(g)).is_zero())
        out.push_back("[" + z.str(rs) + ", " + rs.letter_name(g) + "] != 0");
  return out;
}

// ---------------------------------------------------------------------------

QuantumSL2::QuantumSL2(unsigned ell) : QuantumFamilyBase(ell, true, {"F", "K", "E"}) {
  const int oa = datum_.omega_alpha();
  // K E = eps^(omega,alpha) E K, K F = eps^-(omega,alpha) F K, [E, F] = (K^2 - K^-2) / (eps - eps^-1).
  const Cyc denom = Cyc(1) / (eps_ - eps_.inverse());
  QuantumData d{true, names_, eps_.pow(-oa), eps_.pow(-oa), {}};
  const int ka = datum_.alpha;  // K_alpha = K^alpha
  d.extra.push_back({denom, Word(static_cast<std::size_t>(ka), 1)});
  d.extra.push_back({-denom, Word(static_cast<std::size_t>(ka), 2)});
  auto rules = std::make_shared<QuantumRules>(std::move(d));
  finish(rules, rules->a(), rules->b(), rules->bi(), rules->c());
}

std::string QuantumSL2::summary() const {
  return "U_eps(sl2) at a primitive " + std::to_string(ell_) + "-th root of unity";
}

std::vector<GeneratorSpec> QuantumSL2::generators() const {
  return {{"F", engine_->letter(la_), true, Cyc(1), std::nullopt},
          {"K", engine_->letter(lb_), true, Cyc(1), std::nullopt},
          {"E", engine_->letter(lc_), true, Cyc(1), std::nullopt}};
}

std::vector<std::pair<std::size_t, std::size_t>> QuantumSL2::claim_low_degree(std::size_t samples,
                                                                              std::uint64_t seed) const {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  const int max = 2 * (static_cast<int>(ell_) - 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, rank() - 1);
  std::size_t done = 0;
  while (done < samples) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (leading_rank(i) + leading_rank(j) >= max) continue;
    ++done;
    if (!phi(engine_->multiply(basis_[i], basis_[j])).is_zero()) bad.emplace_back(i, j);
  }
  return bad;
}

// ---------------------------------------------------------------------------

QuantumBorelSL2::QuantumBorelSL2(unsigned ell) : QuantumFamilyBase(ell, false, {"", "K", "E"}) {
  QuantumData d{false, names_, eps_.pow(-datum_.omega_alpha()), Cyc(1), {}};
  auto rules = std::make_shared<QuantumRules>(std::move(d));
  finish(rules, -1, rules->b(), rules->bi(), rules->c());
}

std::string QuantumBorelSL2::summary() const {
  return "Borel part U_eps^{>=0}(sl2) at a primitive " + std::to_string(ell_) + "-th root of unity";
}

Cyc QuantumBorelSL2::k_scalar() const { return eps_.pow(datum_.two_rho_omega()); }

std::vector<GeneratorSpec> QuantumBorelSL2::generators() const {
  return {{"K", engine_->letter(lb_), true, k_scalar(), std::nullopt},
          {"E", engine_->letter(lc_), true, Cyc(1), std::nullopt}};
}

// ---------------------------------------------------------------------------

QuantumFunctionSL2::QuantumFunctionSL2(unsigned ell) : QuantumFamilyBase(ell, true, {"F", "T", "E"}) {
  // Both tensor factors carry the parameter q = eps^-1:
  //   K_omega E = q^(omega,alpha) E K_omega,  K_{-omega} F = q^(omega,alpha) F K_{-omega},
  // and the two factors commute, so T E = q E T, T F = q F T, E F = F E.
  const Cyc q = eps_.inverse().pow(datum_.omega_alpha());
  QuantumData d{true, names_, q.inverse(), q, {}};
  auto rules = std::make_shared<QuantumRules>(std::move(d));
  finish(rules, rules->a(), rules->b(), rules->bi(), rules->c());
}

std::string QuantumFunctionSL2::summary() const {
  return "localized quantized function algebra of SL2 at a primitive " + std::to_string(ell_) + "-th root of unity";
}

Cyc QuantumFunctionSL2::t_scalar() const { return eps_.pow(2 * datum_.two_rho_omega()); }

std::vector<GeneratorSpec> QuantumFunctionSL2::generators() const {
  return {{"F", engine_->letter(la_), true, Cyc(1), std::nullopt},
          {"E", engine_->letter(lc_), true, Cyc(1), std::nullopt},
          {"T", engine_->letter(lb_), true, t_scalar(), t_scalar().inverse()}};
}

}  // namespace frobex
