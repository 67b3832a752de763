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

#include "frobex/reflection_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>

namespace frobex {

namespace {

std::string matrix_key(const Matrix& m) {
  std::string k;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      k += m(i, j).str();
      k += '|';
    }
  return k;
}

// "s1*s1*s2" -> "s1^2*s2"
std::string compress_word(const std::vector<std::size_t>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += "*";
    out += "s" + std::to_string(word[i] + 1);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<Cyc> poly_vector(const Polynomial& f, const std::map<Exponent, std::size_t>& pos) {
  std::vector<Cyc> v(pos.size());
  for (const auto& [e, c] : f.terms()) {
    auto it = pos.find(e);
    if (it == pos.end()) throw ConsistencyError("polynomial has a monomial outside the expected degree");
    v[it->second] = c;
  }
  return v;
}

std::map<Exponent, std::size_t> positions(const std::vector<Exponent>& monos) {
  std::map<Exponent, std::size_t> pos;
  for (std::size_t i = 0; i < monos.size(); ++i) pos.emplace(monos[i], i);
  return pos;
}

// All gamma with sum_k gamma_k * deg_k == d.
void weighted_exponents(const std::vector<int>& deg, int d, std::vector<Exponent>& out) {
  Exponent g(deg.size(), 0);
  auto rec = [&](auto&& self, std::size_t k, int left) -> void {
    if (k == deg.size()) {
      if (left == 0) out.push_back(g);
      return;
    }
    for (int a = left / deg[k]; a >= 0; --a) {
      g[k] = a;
      self(self, k + 1, left - a * deg[k]);
    }
    g[k] = 0;
  };
  rec(rec, 0, d);
}

}  // namespace

Polynomial act(const Matrix& m, const Polynomial& f) {
  const std::size_t n = f.nvars();
  if (m.rows() != n || m.cols() != n) throw Error("act: matrix size does not match variables");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (m(k, i).is_zero()) continue;
      Exponent e(n, 0);
      e[k] = 1;
      img.add_term(e, m(k, i));
    }
    images.push_back(std::move(img));
  }
  if (n == 0) return f;
  return f.substitute(images);
}

ReflectionGroup ReflectionGroup::build(std::string_view descriptor) {
  const std::string d(descriptor);
  std::smatch mt;
  static const std::regex cyclic(R"(Z/(\d+))"), sym(R"(S(\d+))"), dihedral(R"(I2\((\d+)\))");
  if (std::regex_match(d, mt, cyclic)) {
    const int m = std::stoi(mt[1]);
    if (m < 2 || m > 12) throw Error("unsupported group '" + d + "': need 2 <= m <= 12");
    Matrix g(1, 1);
    g(0, 0) = Cyc::zeta(static_cast<unsigned>(m));
    return from_generators(d, {g});
  }
  if (std::regex_match(d, mt, sym)) {
    const int n = std::stoi(mt[1]);
    if (n < 2 || n > 4) throw Error("unsupported group '" + d + "': need 2 <= n <= 4");
    const std::size_t r = static_cast<std::size_t>(n - 1);
    std::vector<std::vector<Cyc>> a(r, std::vector<Cyc>(r));
    for (std::size_t i = 0; i < r; ++i) {
      a[i][i] = 2;
      if (i + 1 < r) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return from_cartan(d, a);
  }
  if (std::regex_match(d, mt, dihedral)) {
    const int m = std::stoi(mt[1]);
    if (m < 3 || m > 6) throw Error("unsupported group '" + d + "': need 3 <= m <= 6");
    const unsigned um = static_cast<unsigned>(m);
    // a12 * a21 = 4 cos^2(pi/m) = 2 + zeta_m + zeta_m^{-1}
    const Cyc prod = Cyc(2) + Cyc::zeta(um) + Cyc::zeta(um, -1);
    return from_cartan(d, {{Cyc(2), Cyc(-1)}, {-prod, Cyc(2)}});
  }
  throw Error("unsupported group '" + d + "'");
}

ReflectionGroup ReflectionGroup::from_cartan(std::string name, const std::vector<std::vector<Cyc>>& a) {
  const std::size_t r = a.size();
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < r; ++i) {
    Matrix s = Matrix::identity(r);
    for (std::size_t j = 0; j < r; ++j) s(i, j) -= a[i][j];
    gens.push_back(std::move(s));
  }
  return from_generators(std::move(name), gens);
}

ReflectionGroup ReflectionGroup::from_generators(std::string name, const std::vector<Matrix>& gens) {
  if (gens.empty()) throw Error("reflection group needs at least one generator");
  ReflectionGroup g;
  g.name_ = std::move(name);
  g.dim_ = gens[0].rows();
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<std::size_t>> words;
  auto add = [&](Matrix m, std::vector<std::size_t> word) {
    auto [it, inserted] = index.emplace(matrix_key(m), g.mats_.size());
    if (!inserted) return false;
    g.mats_.push_back(std::move(m));
    words.push_back(std::move(word));
    return true;
  };
  add(Matrix::identity(g.dim_), {});
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto w = words[u];
      w.push_back(k);
      if (add(g.mats_[u] * gens[k], std::move(w))) queue.push_back(g.mats_.size() - 1);
      if (g.mats_.size() > 10000) throw Error("group closure exceeded 10000 elements");
    }
  }
  const std::size_t n = g.mats_.size();
  for (const auto& w : words) g.labels_.push_back(compress_word(w));
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(matrix_key(g.mats_[a] * g.mats_[b]));
      if (it == index.end()) throw ConsistencyError("group is not closed under multiplication");
      g.table_[a * n + b] = it->second;
    }
  g.inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a * n + b] == 0) g.inv_[a] = b;
  for (std::size_t a = 0; a < n; ++a) g.dual_mats_.push_back(g.mats_[g.inv_[a]].transpose());

  unsigned fo = 1;
  for (const auto& m : g.mats_)
    for (std::size_t i = 0; i < g.dim_; ++i)
      for (std::size_t j = 0; j < g.dim_; ++j)
        if (!m(i, j).is_rational()) fo = std::lcm(fo, m(i, j).order());
  g.field_order_ = fo;

  const Matrix id = Matrix::identity(g.dim_);
  for (std::size_t a = 0; a < n; ++a) {
    g.dets_.push_back(determinant(g.mats_[a]));
    g.codims_.push_back(rank(id - g.mats_[a]));
  }

  // Reflections with root data and conjugacy classes.
  std::vector<std::size_t> cls_of(n, npos);
  for (std::size_t s = 0; s < n; ++s) {
    if (g.codims_[s] != 1) continue;
    const Matrix d = id - g.mats_[s];
    Reflection r;
    r.element = s;
    for (std::size_t i = 0; i < g.dim_ && r.alpha.empty(); ++i) {
      auto row = d.row(i);
      if (std::any_of(row.begin(), row.end(), [](const Cyc& x) { return !x.is_zero(); })) r.alpha = row;
    }
    std::vector<Cyc> col;
    for (std::size_t j = 0; j < g.dim_ && col.empty(); ++j) {
      auto c = d.col(j);
      if (std::any_of(c.begin(), c.end(), [](const Cyc& x) { return !x.is_zero(); })) col = c;
    }
    Cyc pairing = 0;
    for (std::size_t i = 0; i < g.dim_; ++i) pairing += r.alpha[i] * col[i];
    if (pairing.is_zero()) throw ConsistencyError("reflection root and coroot are orthogonal");
    const Cyc scale = Cyc(2) / pairing;
    for (auto& x : col) x *= scale;
    r.alpha_check = std::move(col);
    if (cls_of[s] == npos) {
      for (std::size_t h = 0; h < n; ++h) cls_of[g.mul(g.mul(h, s), g.inv_[h])] = g.num_classes_;
      ++g.num_classes_;
    }
    r.cls = cls_of[s];
    g.refl_.push_back(std::move(r));
  }
  return g;
}

std::size_t ReflectionGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::size_t ReflectionGroup::find(const Matrix& m) const {
  for (std::size_t i = 0; i < mats_.size(); ++i)
    if (mats_[i] == m) return i;
  throw Error("matrix is not an element of " + name_);
}

std::size_t ReflectionGroup::reflection_index(std::size_t w) const {
  for (std::size_t i = 0; i < refl_.size(); ++i)
    if (refl_[i].element == w) return i;
  return npos;
}

std::vector<std::size_t> ReflectionGroup::centralizer(std::size_t w) const {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < order(); ++h)
    if (mul(h, w) == mul(w, h)) out.push_back(h);
  return out;
}

// ---------------------------------------------------------------------------

CoinvariantData::CoinvariantData(const ReflectionGroup& g, bool dual) : nvars_(g.dim()) {
  const std::size_t order = g.order();
  for (std::size_t w = 0; w < order; ++w) actions_.push_back(dual ? g.dual_matrix(w) : g.matrix(w));

  // Fundamental invariants, degree by degree.
  std::size_t prod = 1;
  for (int d = 1; invariants_.size() < nvars_; ++d) {
    if (d > static_cast<int>(order)) throw ConsistencyError("fundamental invariant search did not terminate");
    const auto monos = monomials_of_degree(nvars_, d);
    const auto pos = positions(monos);
    IncrementalSpan span(monos.size());
    std::vector<Exponent> gammas;
    weighted_exponents(inv_degrees_.empty() ? std::vector<int>{} : inv_degrees_, d, gammas);
    if (!inv_degrees_.empty())
      for (const auto& gm : gammas) span.add(poly_vector(invariant_monomial(gm), pos));
    for (auto it = monos.rbegin(); it != monos.rend(); ++it) {
      Polynomial r = reynolds(Polynomial::monomial(*it));
      if (r.is_zero()) continue;
      if (!span.add(poly_vector(r, pos))) continue;
      // Scale so the coefficient of the largest monomial is 1.
      r *= r.terms().rbegin()->second.inverse();
      invariants_.push_back(r);
      inv_degrees_.push_back(d);
      prod *= static_cast<std::size_t>(d);
      pgamma_cache_.clear();
    }
  }
  if (invariants_.size() != nvars_ || prod != order)
    throw ConsistencyError("degrees of fundamental invariants do not multiply to |W|");

  // Coinvariant monomial basis, greedily per degree modulo the invariant ideal.
  for (int d = 0;; ++d) {
    const auto monos = monomials_of_degree(nvars_, d);
    const auto pos = positions(monos);
    IncrementalSpan span(monos.size());
    for (std::size_t k = 0; k < invariants_.size(); ++k) {
      if (inv_degrees_[k] > d) continue;
      for (const auto& m : monomials_of_degree(nvars_, d - inv_degrees_[k]))
        span.add(poly_vector(Polynomial::monomial(m) * invariants_[k], pos));
    }
    std::size_t added = 0;
    for (auto it = monos.rbegin(); it != monos.rend(); ++it) {
      std::vector<Cyc> v(monos.size());
      v[pos.at(*it)] = 1;
      if (span.add(std::move(v))) {
        basis_.push_back(*it);
        ++added;
      }
    }
    if (added == 0) break;
    top_degree_ = d;
    if (basis_.size() > order) break;
  }
  if (basis_.size() != order) throw ConsistencyError("coinvariant algebra dimension differs from |W|");
  std::size_t top_count = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (total_degree(basis_[i]) == top_degree_) {
      max_index_ = i;
      ++top_count;
    }
  if (top_count != 1) throw ConsistencyError("top coinvariant component is not one-dimensional");

  // Dual lifts from the pairing pi(a_i a_k).
  Matrix gram(order, order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t k = 0; k < order; ++k)
      if (basis_degree(i) + basis_degree(k) == top_degree_) gram(i, k) = pi(basis_poly(i) * basis_poly(k));
  const Matrix dinv = inverse(gram);
  for (std::size_t j = 0; j < order; ++j) {
    Polynomial p(nvars_);
    for (std::size_t k = 0; k < order; ++k)
      if (!dinv(k, j).is_zero()) p.add_term(basis_[k], dinv(k, j));
    duals_.push_back(std::move(p));
  }

  const Polynomial top = basis_poly(max_index_);
  for (std::size_t w = 0; w < order; ++w) {
    const Cyc e = pi(apply(w, top));
    if (e.is_zero()) throw ConsistencyError("top coinvariant line is not stable");
    eps_.push_back(e);
  }
}

Polynomial CoinvariantData::reynolds(const Polynomial& f) const {
  Polynomial r = f.zero();
  for (const auto& m : actions_) r += act(m, f);
  return r * Cyc(1, static_cast<long>(actions_.size()));
}

Polynomial CoinvariantData::invariant_monomial(const Exponent& gamma) const {
  auto it = pgamma_cache_.find(gamma);
  if (it != pgamma_cache_.end()) return it->second;
  Polynomial p = Polynomial::constant(nvars_, Cyc(1));
  for (std::size_t k = 0; k < gamma.size(); ++k)
    if (gamma[k] > 0) p = p * invariants_[k].pow(static_cast<unsigned>(gamma[k]));
  pgamma_cache_.emplace(gamma, p);
  return p;
}

const CoinvariantData::DegreeSlice& CoinvariantData::slice(int d) const {
  // Caller holds mu_.
  auto it = slices_.find(d);
  if (it != slices_.end()) return *it->second;
  auto s = std::make_unique<DegreeSlice>();
  s->monomials = monomials_of_degree(nvars_, d);
  s->position = positions(s->monomials);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const int rest = d - basis_degree(i);
    if (rest < 0) continue;
    std::vector<Exponent> gammas;
    weighted_exponents(inv_degrees_, rest, gammas);
    for (auto& gm : gammas) s->columns.emplace_back(std::move(gm), i);
  }
  const std::size_t dim = s->monomials.size();
  if (s->columns.size() != dim) throw ConsistencyError("free-module basis count differs from the slice dimension");
  Matrix m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const auto& [gm, i] = s->columns[c];
    const Polynomial p = invariant_monomial(gm) * basis_poly(i);
    for (const auto& [e, v] : p.terms()) m(s->position.at(e), c) = v;
  }
  s->inverse = inverse(m);
  return *slices_.emplace(d, std::move(s)).first->second;
}

const std::vector<std::pair<std::size_t, Polynomial>>& CoinvariantData::decompose_monomial(const Exponent& e) const {
  std::lock_guard lock(mu_);
  auto it = mono_cache_.find(e);
  if (it != mono_cache_.end()) return *it->second;
  const DegreeSlice& s = slice(total_degree(e));
  const std::size_t pos = s.position.at(e);
  std::map<std::size_t, Polynomial> acc;
  for (std::size_t c = 0; c < s.columns.size(); ++c) {
    const Cyc& v = s.inverse(c, pos);
    if (v.is_zero()) continue;
    const auto& [gm, i] = s.columns[c];
    auto [at, _] = acc.try_emplace(i, Polynomial(nvars_));
    at->second.add_term(gm, v);
  }
  auto out = std::make_unique<std::vector<std::pair<std::size_t, Polynomial>>>(acc.begin(), acc.end());
  return *mono_cache_.emplace(e, std::move(out)).first->second;
}

std::vector<std::pair<std::size_t, Polynomial>> CoinvariantData::decompose(const Polynomial& f,
                                                                          const std::vector<std::string>& names) const {
  if (f.nvars() != nvars_) throw Error("decompose: wrong variable count");
  std::map<std::size_t, Polynomial> acc;
  for (const auto& [e, c] : f.terms()) {
    for (const auto& [i, z] : decompose_monomial(e)) {
      auto [at, _] = acc.try_emplace(i, Polynomial(names));
      at->second += (z * c).with_names(names);
    }
  }
  std::vector<std::pair<std::size_t, Polynomial>> out;
  for (auto& [i, z] : acc)
    if (!z.is_zero()) out.emplace_back(i, std::move(z));
  return out;
}

Cyc CoinvariantData::pi(const Polynomial& f) const {
  Cyc total = 0;
  const Exponent zero(nvars_, 0);
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) != top_degree_) continue;
    for (const auto& [i, z] : decompose_monomial(e))
      if (i == max_index_) total += c * z.coeff(zero);
  }
  return total;
}

}  // namespace frobex
