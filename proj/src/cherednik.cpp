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

#include "frobex/cherednik.hpp"

#include <numeric>

namespace frobex {

namespace {

// Letters: x_0..x_{n-1}, then one letter per group element, then y_0..y_{n-1}.
class CherednikRules : public RewriteSystem {
 public:
  CherednikRules(std::shared_ptr<const ReflectionGroup> g, std::vector<Cyc> c)
      : g_(std::move(g)), c_(std::move(c)), n_(g_->dim()), order_(g_->order()) {}

  Monomial unit() const override { return Monomial(2 * n_ + 1, 0); }
  std::size_t letter_count() const override { return 2 * n_ + order_; }

  bool is_x(int l) const { return l < static_cast<int>(n_); }
  bool is_group(int l) const { return !is_x(l) && l < static_cast<int>(n_ + order_); }
  std::size_t group_of(int l) const { return static_cast<std::size_t>(l) - n_; }
  std::size_t y_of(int l) const { return static_cast<std::size_t>(l) - n_ - order_; }
  int x_letter(std::size_t i) const { return static_cast<int>(i); }
  int group_letter(std::size_t w) const { return static_cast<int>(n_ + w); }
  int y_letter(std::size_t j) const { return static_cast<int>(n_ + order_ + j); }

  std::string letter_name(int l) const override {
    if (is_x(l)) return "x" + std::to_string(l + 1);
    if (is_group(l)) return "[" + g_->label(group_of(l)) + "]";
    return "y" + std::to_string(y_of(l) + 1);
  }
  int letter_rank(int l) const override { return is_x(l) ? 0 : is_group(l) ? 1 : 2; }
  int letter_weight(int l) const override { return is_group(l) ? 0 : 1; }

  Word spell(const Monomial& m) const override {
    Word w;
    for (std::size_t i = 0; i < n_; ++i)
      for (int k = 0; k < m[i]; ++k) w.push_back(x_letter(i));
    if (m[n_] != 0) w.push_back(group_letter(static_cast<std::size_t>(m[n_])));
    for (std::size_t j = 0; j < n_; ++j)
      for (int k = 0; k < m[n_ + 1 + j]; ++k) w.push_back(y_letter(j));
    return w;
  }

  bool has_y(const Monomial& m) const {
    for (std::size_t j = 0; j < n_; ++j)
      if (m[n_ + 1 + j] != 0) return true;
    return false;
  }

  std::optional<std::vector<std::pair<Monomial, Cyc>>> extend(const Monomial& m, int l) const override {
    Monomial r = m;
    if (is_x(l)) {
      if (m[n_] != 0 || has_y(m)) return std::nullopt;
      ++r[static_cast<std::size_t>(l)];
    } else if (is_group(l)) {
      if (has_y(m)) return std::nullopt;
      r[n_] = static_cast<int>(g_->mul(static_cast<std::size_t>(m[n_]), group_of(l)));
    } else {
      ++r[n_ + 1 + y_of(l)];
    }
    return std::vector<std::pair<Monomial, Cyc>>{{std::move(r), Cyc(1)}};
  }

  int peel(Monomial& m) const override {
    for (std::size_t j = n_; j-- > 0;)
      if (m[n_ + 1 + j] > 0) {
        --m[n_ + 1 + j];
        return y_letter(j);
      }
    if (m[n_] != 0) {
      const int l = group_letter(static_cast<std::size_t>(m[n_]));
      m[n_] = 0;
      return l;
    }
    for (std::size_t i = n_; i-- > 0;)
      if (m[i] > 0) {
        --m[i];
        return x_letter(i);
      }
    throw Error("peel on the unit monomial");
  }

  std::vector<WordTerm> swap(int b, int a) const override {
    std::vector<WordTerm> out;
    if (is_group(b) && is_x(a)) {
      // w x_i = (w.x_i) w
      const std::size_t w = group_of(b);
      const Matrix& m = g_->matrix(w);
      for (std::size_t k = 0; k < n_; ++k)
        if (!m(k, static_cast<std::size_t>(a)).is_zero()) out.push_back({m(k, static_cast<std::size_t>(a)), {x_letter(k), b}});
      return out;
    }
    if (!is_x(b) && !is_group(b) && is_group(a)) {
      // y w = w (w^-1 . y)
      const std::size_t w = group_of(a);
      const Matrix& d = g_->dual_matrix(g_->inv(w));
      const std::size_t j = y_of(b);
      for (std::size_t k = 0; k < n_; ++k)
        if (!d(k, j).is_zero()) out.push_back({d(k, j), {a, y_letter(k)}});
      return out;
    }
    if (!is_x(b) && !is_group(b) && is_x(a)) {
      // y_j x_i = x_i y_j - sum_s c(s) alpha_s(x_i) y_j(alphacheck_s) s
      const std::size_t i = static_cast<std::size_t>(a), j = y_of(b);
      out.push_back({Cyc(1), {a, b}});
      std::map<std::size_t, Cyc> acc;
      for (const auto& r : g_->reflections()) {
        const Cyc v = c_[r.cls] * r.alpha[i] * r.alpha_check[j];
        if (!v.is_zero()) acc[r.element] -= v;
      }
      for (const auto& [s, v] : acc)
        if (!v.is_zero()) out.push_back({v, {group_letter(s)}});
      return out;
    }
    throw Error("no rule for " + letter_name(b) + "*" + letter_name(a));
  }

  std::string render(const Monomial& m) const override {
    std::string s;
    auto append = [&](const std::string& t) {
      if (!s.empty()) s += "*";
      s += t;
    };
    for (std::size_t i = 0; i < n_; ++i)
      if (m[i]) append("x" + std::to_string(i + 1) + (m[i] > 1 ? "^" + std::to_string(m[i]) : ""));
    if (m[n_] != 0) append("[" + g_->label(static_cast<std::size_t>(m[n_])) + "]");
    for (std::size_t j = 0; j < n_; ++j) {
      const int e = m[n_ + 1 + j];
      if (e) append("y" + std::to_string(j + 1) + (e > 1 ? "^" + std::to_string(e) : ""));
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::shared_ptr<const ReflectionGroup> g_;
  std::vector<Cyc> c_;
  std::size_t n_, order_;
};

}  // namespace

CherednikAlgebra::CherednikAlgebra(std::shared_ptr<const ReflectionGroup> group, std::vector<Cyc> c)
    : group_(std::move(group)), c_(std::move(c)) {
  if (!group_) throw Error("cherednik: missing group");
  if (c_.empty()) c_.assign(group_->num_reflection_classes(), Cyc(1));
  if (c_.size() == 1 && group_->num_reflection_classes() > 1) c_.assign(group_->num_reflection_classes(), c_[0]);
  if (c_.size() != group_->num_reflection_classes())
    throw Error("cherednik: need one c value per reflection class (" +
                std::to_string(group_->num_reflection_classes()) + ")");
  field_order_ = group_->field_order();
  for (const auto& v : c_)
    if (!v.is_rational()) field_order_ = std::lcm(field_order_, v.order());
  cv_x_ = std::make_unique<CoinvariantData>(*group_, false);
  cv_y_ = std::make_unique<CoinvariantData>(*group_, true);
  engine_ = std::make_unique<Engine>(std::make_shared<CherednikRules>(group_, c_));
  const std::size_t w_n = group_->order(), n = group_->dim();
  basis_.reserve(w_n * w_n * w_n);
  for (std::size_t i = 0; i < w_n; ++i)
    for (std::size_t w = 0; w < w_n; ++w)
      for (std::size_t j = 0; j < w_n; ++j) {
        Monomial m(2 * n + 1, 0);
        const auto& a = cv_x_->basis()[i];
        const auto& b = cv_y_->basis()[j];
        for (std::size_t k = 0; k < n; ++k) {
          m[k] = a[k];
          m[n + 1 + k] = b[k];
        }
        m[n] = static_cast<int>(w);
        basis_.push_back(Element::monomial(std::move(m)));
      }
}

std::string CherednikAlgebra::summary() const {
  std::string s = "rational Cherednik algebra H_{0,c} of " + group_->name() + ", c = (";
  for (std::size_t k = 0; k < c_.size(); ++k) s += (k ? ", " : "") + c_[k].str();
  return s + ")";
}

std::size_t CherednikAlgebra::index(std::size_t i, std::size_t w, std::size_t j) const {
  const std::size_t n = group_->order();
  return (i * n + w) * n + j;
}

CherednikAlgebra::Triple CherednikAlgebra::triple(std::size_t idx) const {
  const std::size_t n = group_->order();
  return {idx / (n * n), (idx / n) % n, idx % n};
}

std::string CherednikAlgebra::basis_label(std::size_t idx) const {
  const auto t = triple(idx);
  return "a" + std::to_string(t.i + 1) + "*[" + group_->label(t.w) + "]*b" + std::to_string(t.j + 1);
}

std::size_t CherednikAlgebra::phi_index() const { return index(cv_x_->max_index(), 0, cv_y_->max_index()); }

std::vector<std::string> CherednikAlgebra::central_variables() const {
  std::vector<std::string> v;
  for (std::size_t k = 0; k < group_->dim(); ++k) v.push_back("p" + std::to_string(k + 1));
  for (std::size_t k = 0; k < group_->dim(); ++k) v.push_back("q" + std::to_string(k + 1));
  return v;
}

namespace {

// z(p) * z'(q) as a polynomial in (p, q).
void add_tensor(CentralPoly& out, const Polynomial& zx, const Polynomial& zy, const Cyc& c) {
  const std::size_t n = zx.nvars();
  Exponent e(2 * n);
  for (const auto& [ex, cx] : zx.terms())
    for (const auto& [ey, cy] : zy.terms()) {
      std::copy(ex.begin(), ex.end(), e.begin());
      std::copy(ey.begin(), ey.end(), e.begin() + static_cast<long>(n));
      out.add_term(e, c * cx * cy);
    }
}

}  // namespace

Coordinates CherednikAlgebra::coordinates(const Element& h) const {
  const std::size_t n = group_->dim();
  std::map<std::size_t, CentralPoly> acc;
  Exponent ex(n), ey(n);
  for (const auto& [m, c] : h.terms()) {
    for (std::size_t k = 0; k < n; ++k) {
      ex[k] = m[k];
      ey[k] = m[n + 1 + k];
    }
    const std::size_t w = static_cast<std::size_t>(m[n]);
    const auto& dx = cv_x_->decompose_monomial(ex);
    const auto& dy = cv_y_->decompose_monomial(ey);
    for (const auto& [i, zx] : dx)
      for (const auto& [j, zy] : dy) {
        auto [it, _] = acc.try_emplace(index(i, w, j), central_zero());
        add_tensor(it->second, zx, zy, c);
      }
  }
  Coordinates out;
  for (auto& [i, z] : acc)
    if (!z.is_zero()) out.emplace_back(i, std::move(z));
  return out;
}

CentralPoly CherednikAlgebra::phi(const Element& h) const {
  const std::size_t n = group_->dim();
  const std::size_t imax = cv_x_->max_index(), jmax = cv_y_->max_index();
  const int nx = cv_x_->top_degree(), ny = cv_y_->top_degree();
  CentralPoly out = central_zero();
  Exponent ex(n), ey(n);
  for (const auto& [m, c] : h.terms()) {
    if (m[n] != 0) continue;
    int dx = 0, dy = 0;
    for (std::size_t k = 0; k < n; ++k) {
      ex[k] = m[k];
      ey[k] = m[n + 1 + k];
      dx += m[k];
      dy += m[n + 1 + k];
    }
    if (dx < nx || dy < ny) continue;
    const Polynomial* zx = nullptr;
    for (const auto& [i, z] : cv_x_->decompose_monomial(ex))
      if (i == imax) zx = &z;
    if (!zx) continue;
    for (const auto& [j, z] : cv_y_->decompose_monomial(ey))
      if (j == jmax) add_tensor(out, *zx, z, c);
  }
  return out;
}

Element CherednikAlgebra::x(std::size_t i) const { return engine_->letter(static_cast<int>(i)); }

Element CherednikAlgebra::y(std::size_t j) const {
  return engine_->letter(static_cast<int>(group_->dim() + group_->order() + j));
}

Element CherednikAlgebra::group_element(std::size_t w) const {
  return engine_->letter(static_cast<int>(group_->dim() + w));
}

Element CherednikAlgebra::from_x_poly(const Polynomial& f) const {
  const std::size_t n = group_->dim();
  Element e;
  for (const auto& [ex, c] : f.terms()) {
    Monomial m(2 * n + 1, 0);
    std::copy(ex.begin(), ex.end(), m.begin());
    e.add_term(m, c);
  }
  return e;
}

Element CherednikAlgebra::from_y_poly(const Polynomial& f) const {
  const std::size_t n = group_->dim();
  Element e;
  for (const auto& [ey, c] : f.terms()) {
    Monomial m(2 * n + 1, 0);
    std::copy(ey.begin(), ey.end(), m.begin() + static_cast<long>(n + 1));
    e.add_term(m, c);
  }
  return e;
}

std::vector<GeneratorSpec> CherednikAlgebra::generators() const {
  std::vector<GeneratorSpec> out;
  for (std::size_t i = 0; i < group_->dim(); ++i)
    out.push_back({"x" + std::to_string(i + 1), x(i), true, Cyc(1), std::nullopt});
  for (std::size_t j = 0; j < group_->dim(); ++j)
    out.push_back({"y" + std::to_string(j + 1), y(j), true, Cyc(1), std::nullopt});
  for (std::size_t w = 1; w < group_->order(); ++w)
    out.push_back({"[" + group_->label(w) + "]", group_element(w), true, Cyc(1), std::nullopt});
  return out;
}

int CherednikAlgebra::leading_rank(std::size_t idx) const {
  const auto t = triple(idx);
  return cv_x_->basis_degree(t.i) + cv_y_->basis_degree(t.j);
}

Element CherednikAlgebra::witness(std::size_t idx) const {
  // b^j w^-1 a^i
  const auto t = triple(idx);
  const Element yb = from_y_poly(cv_y_->duals()[t.j]);
  const Element xa = from_x_poly(cv_x_->duals()[t.i]);
  return engine_->multiply(engine_->multiply(yb, group_element(group_->inv(t.w))), xa);
}

}  // namespace frobex
