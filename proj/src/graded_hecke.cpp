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

#include "frobex/graded_hecke.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace frobex {

namespace {

// Letters: x_0..x_{n-1} (rank = index), then one letter per group element (rank n).
class GradedHeckeRules : public RewriteSystem {
 public:
  GradedHeckeRules(std::shared_ptr<const ReflectionGroup> g, OmegaData omega)
      : g_(std::move(g)), omega_(std::move(omega)), n_(g_->dim()) {}

  Monomial unit() const override { return Monomial(n_ + 1, 0); }
  std::size_t letter_count() const override { return n_ + g_->order(); }
  bool is_x(int l) const { return l < static_cast<int>(n_); }
  std::size_t group_of(int l) const { return static_cast<std::size_t>(l) - n_; }
  int group_letter(std::size_t w) const { return static_cast<int>(n_ + w); }

  std::string letter_name(int l) const override {
    return is_x(l) ? "x" + std::to_string(l + 1) : "[" + g_->label(group_of(l)) + "]";
  }
  int letter_rank(int l) const override { return is_x(l) ? l : static_cast<int>(n_); }
  int letter_weight(int l) const override { return is_x(l) ? 1 : 0; }

  Word spell(const Monomial& m) const override {
    Word w;
    for (std::size_t i = 0; i < n_; ++i)
      for (int k = 0; k < m[i]; ++k) w.push_back(static_cast<int>(i));
    if (m[n_] != 0) w.push_back(group_letter(static_cast<std::size_t>(m[n_])));
    return w;
  }

  std::optional<std::vector<std::pair<Monomial, Cyc>>> extend(const Monomial& m, int l) const override {
    Monomial r = m;
    if (is_x(l)) {
      if (m[n_] != 0) return std::nullopt;
      for (std::size_t k = static_cast<std::size_t>(l) + 1; k < n_; ++k)
        if (m[k] > 0) return std::nullopt;
      ++r[static_cast<std::size_t>(l)];
    } else {
      r[n_] = static_cast<int>(g_->mul(static_cast<std::size_t>(m[n_]), group_of(l)));
    }
    return std::vector<std::pair<Monomial, Cyc>>{{std::move(r), Cyc(1)}};
  }

  int peel(Monomial& m) const override {
    if (m[n_] != 0) {
      const int l = group_letter(static_cast<std::size_t>(m[n_]));
      m[n_] = 0;
      return l;
    }
    for (std::size_t i = n_; i-- > 0;)
      if (m[i] > 0) {
        --m[i];
        return static_cast<int>(i);
      }
    throw Error("peel on the unit monomial");
  }

  std::vector<WordTerm> swap(int b, int a) const override {
    std::vector<WordTerm> out;
    if (!is_x(b) && is_x(a)) {
      // w x_i = (w.x_i) w
      const Matrix& m = g_->matrix(group_of(b));
      const auto i = static_cast<std::size_t>(a);
      for (std::size_t k = 0; k < n_; ++k)
        if (!m(k, i).is_zero()) out.push_back({m(k, i), {static_cast<int>(k), b}});
      return out;
    }
    if (is_x(b) && is_x(a) && b > a) {
      // x_j x_i = x_i x_j + sum_w Omega_w(x_j, x_i) w
      out.push_back({Cyc(1), {a, b}});
      for (const auto& [w, form] : omega_) {
        const Cyc& v = form(static_cast<std::size_t>(b), static_cast<std::size_t>(a));
        if (!v.is_zero()) out.push_back({v, {group_letter(w)}});
      }
      return out;
    }
    throw Error("no rule for " + letter_name(b) + "*" + letter_name(a));
  }

  std::string render(const Monomial& m) const override {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i)
      if (m[i]) {
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1) + (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
      }
    if (m[n_] != 0) s += (s.empty() ? "" : "*") + ("[" + g_->label(static_cast<std::size_t>(m[n_])) + "]");
    return s.empty() ? "1" : s;
  }

 private:
  std::shared_ptr<const ReflectionGroup> g_;
  OmegaData omega_;
  std::size_t n_;
};

Cyc quotient_det(const ReflectionGroup& g, const Matrix& fixed, std::size_t h) {
  const Cyc d = g.det(h);
  if (fixed.cols() == 0) return d;
  auto c = solve(fixed, g.matrix(h) * fixed);
  if (!c) throw ConsistencyError("centralizer does not preserve the fixed space");
  return d / determinant(*c);
}

// Omega_{g w g^-1}(g x_a, g x_b) - Omega_w(x_a, x_b) as a linear form in the unknown entries.
using Form = std::map<std::size_t, Cyc>;

}  // namespace

std::vector<std::size_t> bireflection_set(const ReflectionGroup& g) {
  std::vector<std::size_t> out;
  const Matrix id = Matrix::identity(g.dim());
  for (std::size_t w = 0; w < g.order(); ++w) {
    if (g.codim_fixed(w) != 2) continue;
    const Matrix fixed = nullspace(g.matrix(w) - id);
    bool ok = true;
    for (std::size_t h : g.centralizer(w))
      if (quotient_det(g, fixed, h) != Cyc(1)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(w);
  }
  return out;
}

namespace {

// Unknown u_{w,a,b} for a < b, indexed by position in the bireflection list.
struct OmegaUnknowns {
  std::vector<std::size_t> support;
  std::size_t n;
  std::size_t per() const { return n * (n - 1) / 2; }
  std::size_t count() const { return support.size() * per(); }
  std::size_t pos(std::size_t w) const {
    return static_cast<std::size_t>(std::find(support.begin(), support.end(), w) - support.begin());
  }
  // Entry A_w(a, b) as (unknown index, sign); sign 0 on the diagonal.
  std::pair<std::size_t, int> entry(std::size_t w, std::size_t a, std::size_t b) const {
    if (a == b) return {0, 0};
    const int sign = a < b ? 1 : -1;
    if (a > b) std::swap(a, b);
    const std::size_t k = a * n - a * (a + 1) / 2 + (b - a - 1);
    return {pos(w) * per() + k, sign};
  }
};

void add_entry(Form& f, const OmegaUnknowns& u, std::size_t w, std::size_t a, std::size_t b, const Cyc& c) {
  if (c.is_zero()) return;
  auto [idx, sign] = u.entry(w, a, b);
  if (sign == 0) return;
  f[idx] += sign > 0 ? c : -c;
}

std::vector<Form> omega_conditions(const ReflectionGroup& g, const OmegaUnknowns& u) {
  const std::size_t n = g.dim();
  std::vector<Form> rows;
  for (std::size_t h = 1; h < g.order(); ++h) {
    const Matrix& m = g.matrix(h);
    for (std::size_t w : u.support) {
      const std::size_t cw = g.mul(g.mul(h, w), g.inv(h));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
          Form f;
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) add_entry(f, u, cw, k, l, m(k, a) * m(l, b));
          add_entry(f, u, w, a, b, Cyc(-1));
          rows.push_back(std::move(f));
        }
    }
  }
  // sum over cyclic (x, y, z) of Omega_w(y, z) (x - w.x) = 0, coefficient of x_k w.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t w : u.support) {
          const Matrix& m = g.matrix(w);
          for (std::size_t k = 0; k < n; ++k) {
            Form f;
            const std::size_t cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
            for (const auto& t : cyc) {
              const Cyc coef = Cyc(k == t[0] ? 1 : 0) - m(k, t[0]);
              add_entry(f, u, w, t[1], t[2], coef);
            }
            rows.push_back(std::move(f));
          }
        }
  return rows;
}

}  // namespace

std::vector<OmegaData> solve_omega(const ReflectionGroup& g) {
  OmegaUnknowns u{bireflection_set(g), g.dim()};
  if (u.count() == 0) return {};
  const auto rows = omega_conditions(g, u);
  Matrix sys(std::max<std::size_t>(rows.size(), 1), u.count());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [k, v] : rows[r]) sys(r, k) = v;
  const Matrix ns = nullspace(sys);
  std::vector<OmegaData> out;
  for (std::size_t col = 0; col < ns.cols(); ++col) {
    OmegaData om;
    for (std::size_t w : u.support) {
      Matrix a(g.dim(), g.dim());
      bool nonzero = false;
      for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
          auto [idx, sign] = u.entry(w, i, j);
          if (sign == 0) continue;
          a(i, j) = sign > 0 ? ns(idx, col) : -ns(idx, col);
          if (!a(i, j).is_zero()) nonzero = true;
        }
      if (nonzero) om.emplace(w, std::move(a));
    }
    out.push_back(std::move(om));
  }
  return out;
}

OmegaReport validate_omega(const ReflectionGroup& g, const OmegaData& omega, std::size_t samples, std::uint64_t seed) {
  OmegaReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  const std::size_t n = g.dim();
  const auto rset = bireflection_set(g);
  auto form = [&](std::size_t w, std::size_t a, std::size_t b) -> Cyc {
    auto it = omega.find(w);
    return it == omega.end() ? Cyc(0) : it->second(a, b);
  };
  for (const auto& [w, a] : omega) {
    if (w >= g.order()) {
      fail("Omega names a group element outside the group");
      return rep;
    }
    if (a.rows() != n || a.cols() != n) {
      fail("Omega_[" + g.label(w) + "] is not " + std::to_string(n) + "x" + std::to_string(n));
      return rep;
    }
    if (!(a + a.transpose()).is_zero()) fail("(skew) Omega_[" + g.label(w) + "] is not alternating");
    if (!a.is_zero() && std::find(rset.begin(), rset.end(), w) == rset.end())
      fail("(support) Omega_[" + g.label(w) + "] is nonzero but [" + g.label(w) + "] is not in the bireflection set");
  }
  if (!rep.ok) return rep;

  // (a) equivariance
  for (std::size_t h = 1; h < g.order() && rep.ok; ++h) {
    const Matrix& m = g.matrix(h);
    for (std::size_t w = 0; w < g.order() && rep.ok; ++w) {
      const std::size_t cw = g.mul(g.mul(h, w), g.inv(h));
      if (!omega.count(w) && !omega.count(cw)) continue;
      for (std::size_t a = 0; a < n && rep.ok; ++a)
        for (std::size_t b = a + 1; b < n && rep.ok; ++b) {
          Cyc lhs = 0;
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
              if (!m(k, a).is_zero() && !m(l, b).is_zero()) lhs += m(k, a) * m(l, b) * form(cw, k, l);
          if (lhs != form(w, a, b))
            fail("(a) equivariance: Omega_{g w g^-1}(g x" + std::to_string(a + 1) + ", g x" + std::to_string(b + 1) +
                 ") = " + lhs.str() + " but Omega_w(x" + std::to_string(a + 1) + ", x" + std::to_string(b + 1) +
                 ") = " + form(w, a, b).str() + " at g = [" + g.label(h) + "], w = [" + g.label(w) + "]");
        }
    }
  }
  if (!rep.ok) return rep;

  // (b) Jacobi
  for (std::size_t a = 0; a < n && rep.ok; ++a)
    for (std::size_t b = a + 1; b < n && rep.ok; ++b)
      for (std::size_t c = b + 1; c < n && rep.ok; ++c)
        for (const auto& [w, f] : omega) {
          const Matrix& m = g.matrix(w);
          const std::size_t cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
          for (std::size_t k = 0; k < n; ++k) {
            Cyc s = 0;
            for (const auto& t : cyc) s += f(t[1], t[2]) * (Cyc(k == t[0] ? 1 : 0) - m(k, t[0]));
            if (!s.is_zero()) {
              fail("(b) Jacobi: cyclic sum over (x" + std::to_string(a + 1) + ", x" + std::to_string(b + 1) + ", x" +
                   std::to_string(c + 1) + ") has coefficient " + s.str() + " on x" + std::to_string(k + 1) + "*[" +
                   g.label(w) + "]");
              break;
            }
          }
          if (!rep.ok) break;
        }
  if (!rep.ok) return rep;

  // (c) associativity on random letter triples
  auto gp = std::make_shared<const ReflectionGroup>(g);
  Engine eng(std::make_shared<GradedHeckeRules>(gp, omega));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n + g.order()) - 1);
  for (std::size_t t = 0; t < samples; ++t) {
    const Element a = eng.letter(pick(rng)), b = eng.letter(pick(rng)), c = eng.letter(pick(rng));
    const Element d = eng.letter(pick(rng));
    const Element ab = eng.multiply(a, b), cd = eng.multiply(c, d);
    if (eng.multiply(ab, cd) != eng.multiply(eng.multiply(ab, c), d) ||
        eng.multiply(eng.multiply(a, b), c) != eng.multiply(a, eng.multiply(b, c))) {
      fail("(c) associativity fails on a sampled product");
      break;
    }
  }
  return rep;
}

GradedHeckeAlgebra::GradedHeckeAlgebra(std::shared_ptr<const ReflectionGroup> group, OmegaData omega)
    : group_(std::move(group)), omega_(std::move(omega)) {
  if (!group_) throw Error("graded-hecke: missing group");
  for (auto it = omega_.begin(); it != omega_.end();)
    it = it->second.is_zero() ? omega_.erase(it) : std::next(it);
  const auto rep = validate_omega(*group_, omega_);
  if (!rep.ok) throw ConsistencyError("graded-hecke: invalid Omega: " + rep.violations.front());
  field_order_ = group_->field_order();
  for (const auto& [w, a] : omega_)
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (!a(i, j).is_rational()) field_order_ = std::lcm(field_order_, a(i, j).order());
  cv_ = std::make_unique<CoinvariantData>(*group_, false);
  engine_ = std::make_unique<Engine>(std::make_shared<GradedHeckeRules>(group_, omega_));
  const std::size_t n = group_->dim(), wn = group_->order();
  for (std::size_t i = 0; i < wn; ++i)
    for (std::size_t w = 0; w < wn; ++w) {
      Monomial m(n + 1, 0);
      std::copy(cv_->basis()[i].begin(), cv_->basis()[i].end(), m.begin());
      m[n] = static_cast<int>(w);
      basis_.push_back(Element::monomial(std::move(m)));
    }

  // Central lifts: a central element of degree <= deg p_k whose top symbol is p_k.
  for (std::size_t k = 0; k < cv_->invariants().size(); ++k) {
    const Polynomial& p = cv_->invariants()[k];
    const int d = cv_->invariant_degrees()[k];
    if (omega_is_zero()) {
      lifts_.push_back(from_poly(p));
      continue;
    }
    const auto centre = centre_in_degree(d);
    const auto tops = monomials_of_degree(n, d);
    Matrix sym(tops.size(), centre.size()), rhs(tops.size(), 1);
    for (std::size_t c = 0; c < centre.size(); ++c)
      for (const auto& [m, v] : centre[c].terms())
        if (m[n] == 0 && total_degree(Exponent(m.begin(), m.begin() + static_cast<long>(n))) == d) {
          const Exponent e(m.begin(), m.begin() + static_cast<long>(n));
          sym(static_cast<std::size_t>(std::find(tops.begin(), tops.end(), e) - tops.begin()), c) = v;
        }
    for (std::size_t r = 0; r < tops.size(); ++r) rhs(r, 0) = p.coeff(tops[r]);
    auto sol = solve(sym, rhs);
    if (!sol) throw ConsistencyError("graded-hecke: no central lift for invariant " + std::to_string(k + 1));
    Element z;
    for (std::size_t c = 0; c < centre.size(); ++c) z.add_scaled(centre[c], (*sol)(c, 0));
    lifts_.push_back(std::move(z));
  }
}

bool GradedHeckeAlgebra::omega_is_zero() const { return omega_.empty(); }

std::string GradedHeckeAlgebra::summary() const {
  std::string s = "graded Hecke algebra of " + group_->name() + ", Omega ";
  if (omega_.empty()) return s + "= 0";
  s += "supported on {";
  bool first = true;
  for (const auto& [w, a] : omega_) {
    s += (first ? "[" : ", [") + group_->label(w) + "]";
    first = false;
  }
  return s + "}";
}

std::string GradedHeckeAlgebra::basis_label(std::size_t idx) const {
  const std::size_t wn = group_->order();
  return "a" + std::to_string(idx / wn + 1) + "*[" + group_->label(idx % wn) + "]";
}

std::vector<std::string> GradedHeckeAlgebra::central_variables() const {
  std::vector<std::string> v;
  for (std::size_t k = 0; k < cv_->invariants().size(); ++k) v.push_back("p" + std::to_string(k + 1));
  return v;
}

Element GradedHeckeAlgebra::x(std::size_t i) const { return engine_->letter(static_cast<int>(i)); }

Element GradedHeckeAlgebra::group_element(std::size_t w) const {
  return engine_->letter(static_cast<int>(group_->dim() + w));
}

Element GradedHeckeAlgebra::from_poly(const Polynomial& f) const {
  const std::size_t n = group_->dim();
  Element e;
  for (const auto& [ex, c] : f.terms()) {
    Monomial m(n + 1, 0);
    std::copy(ex.begin(), ex.end(), m.begin());
    e.add_term(m, c);
  }
  return e;
}

const Element& GradedHeckeAlgebra::lift_power(const Exponent& gamma) const {
  {
    std::lock_guard lock(mu_);
    auto it = powers_.find(gamma);
    if (it != powers_.end()) return *it->second;
  }
  Element r = engine_->one();
  for (std::size_t k = 0; k < gamma.size(); ++k)
    for (int t = 0; t < gamma[k]; ++t) r = engine_->multiply(r, lifts_[k]);
  std::lock_guard lock(mu_);
  return *powers_.try_emplace(gamma, std::make_unique<Element>(std::move(r))).first->second;
}

Coordinates GradedHeckeAlgebra::coordinates(const Element& h0) const {
  // Peel the top-degree symbol: x^alpha w = sum p^gamma a_i w in gr H, then subtract the
  // corresponding products of central lifts and continue with the lower-degree remainder.
  const std::size_t n = group_->dim();
  std::map<std::size_t, CentralPoly> acc;
  Element h = h0;
  Exponent ex(n);
  while (!h.is_zero()) {
    const int top = engine_->weight(h);
    Element sub;
    for (const auto& [m, c] : h.terms()) {
      std::copy(m.begin(), m.begin() + static_cast<long>(n), ex.begin());
      if (!omega_is_zero() && total_degree(ex) != top) continue;
      const auto w = static_cast<std::size_t>(m[n]);
      for (const auto& [i, z] : cv_->decompose_monomial(ex)) {
        auto [it, _] = acc.try_emplace(index(i, w), central_zero());
        for (const auto& [gamma, zc] : z.terms()) {
          it->second.add_term(gamma, c * zc);
          if (omega_is_zero()) continue;
          sub.add_scaled(engine_->multiply(lift_power(gamma), basis_[index(i, w)]), c * zc);
        }
      }
    }
    if (omega_is_zero()) break;
    h -= sub;
    if (!h.is_zero() && engine_->weight(h) >= top) throw ConsistencyError("graded-hecke: symbol peeling stalled");
  }
  Coordinates out;
  for (auto& [i, z] : acc)
    if (!z.is_zero()) out.emplace_back(i, std::move(z));
  return out;
}

std::vector<GeneratorSpec> GradedHeckeAlgebra::generators() const {
  std::vector<GeneratorSpec> out;
  for (std::size_t i = 0; i < group_->dim(); ++i) out.push_back({"x" + std::to_string(i + 1), x(i), true, Cyc(1), std::nullopt});
  for (std::size_t w = 1; w < group_->order(); ++w)
    out.push_back({"[" + group_->label(w) + "]", group_element(w), true, Cyc(1) / cv_->epsilon(w), std::nullopt});
  return out;
}

Element GradedHeckeAlgebra::witness(std::size_t idx) const {
  // w^-1 a^i
  const std::size_t wn = group_->order();
  const std::size_t i = idx / wn, w = idx % wn;
  return engine_->multiply(group_element(group_->inv(w)), from_poly(cv_->duals()[i]));
}

std::vector<Element> GradedHeckeAlgebra::centre_in_degree(int d) const {
  if (d < 0) return {};
  if (d > 2 * std::max(cv_->top_degree(), 1))
    throw Error("centre_in_degree: degree " + std::to_string(d) + " exceeds the cost guard");
  const std::size_t n = group_->dim(), wn = group_->order();
  std::vector<Monomial> slice;
  for (int e = 0; e <= d; ++e)
    for (const auto& ex : monomials_of_degree(n, e))
      for (std::size_t w = 0; w < wn; ++w) {
        Monomial m(ex.begin(), ex.end());
        m.push_back(static_cast<int>(w));
        slice.push_back(std::move(m));
      }
  std::vector<Element> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(x(i));
  for (std::size_t w = 1; w < wn; ++w) gens.push_back(group_element(w));
  // Rows: (generator, output monomial); columns: slice monomials.
  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Cyc>>> cols(slice.size());
  for (std::size_t c = 0; c < slice.size(); ++c) {
    const Element b = Element::monomial(slice[c]);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const Element comm = engine_->commutator(b, gens[gi]);
      for (const auto& [m, v] : comm.terms()) {
        auto [it, _] = row_of.try_emplace({gi, m}, row_of.size());
        cols[c].emplace_back(it->second, v);
      }
    }
  }
  Matrix sys(std::max<std::size_t>(row_of.size(), 1), slice.size());
  for (std::size_t c = 0; c < slice.size(); ++c)
    for (const auto& [r, v] : cols[c]) sys(r, c) += v;
  const Matrix ns = nullspace(sys);
  std::vector<Element> out;
  for (std::size_t k = 0; k < ns.cols(); ++k) {
    Element z;
    for (std::size_t c = 0; c < slice.size(); ++c) z.add_term(slice[c], ns(c, k));
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace frobex
