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

#include "frobex/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace frobex {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent e(nvars, 0);
  // Recursive fill, first variable taking the largest share first.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {}

Polynomial::Polynomial(std::vector<std::string> names)
    : nvars_(names.size()), names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

Polynomial Polynomial::constant(std::size_t nvars, const Cyc& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error("variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const Cyc& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::with_names(std::vector<std::string> names) const {
  if (names.size() != nvars_) throw Error("variable name count does not match");
  Polynomial p = *this;
  p.names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  return p;
}

Polynomial Polynomial::zero() const {
  Polynomial p(nvars_);
  p.names_ = names_;
  return p;
}

Polynomial Polynomial::constant_like(const Cyc& c) const {
  Polynomial p = zero();
  p.add_term(Exponent(nvars_, 0), c);
  return p;
}

std::vector<std::string> Polynomial::names() const {
  if (names_) return *names_;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nvars_; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Cyc Polynomial::constant_term() const { return coeff(Exponent(nvars_, 0)); }

Cyc Polynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyc(0) : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -2;
  for (const auto& [e, c] : terms_) {
    const int k = total_degree(e);
    if (d != -2 && k != d) return false;
    d = k;
  }
  return true;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial p = zero();
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == d) p.terms_.emplace(e, c);
  return p;
}

void Polynomial::add_term(const Exponent& e, const Cyc& c) {
  if (e.size() != nvars_) throw Error("exponent length does not match variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw Error("polynomials live in different variable sets");
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  if (!names_) names_ = o.names_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  if (!names_) names_ = o.names_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Cyc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial p = a.zero();
  if (!p.names_) p.names_ = b.names_;
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant_like(Cyc(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw Error("substitute: image count does not match variables");
  if (terms_.empty()) return images.empty() ? Polynomial() : images[0].zero();
  const std::size_t target = images.empty() ? 0 : images[0].nvars();
  Polynomial out = images.empty() ? Polynomial() : images[0].zero();
  // Powers of each image, grown on demand.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] < 0) throw Error("substitute: negative exponent");
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(images[i]);
      while (static_cast<int>(pw.size()) < e[i]) pw.push_back(pw.back() * images[i]);
      term = term * pw[static_cast<std::size_t>(e[i]) - 1];
    }
    out += term;
  }
  return out;
}

Cyc Polynomial::eval(const std::vector<Cyc>& values) const {
  if (values.size() != nvars_) throw Error("eval: value count does not match variables");
  Cyc total = 0;
  for (const auto& [e, c] : terms_) {
    Cyc t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) t *= values[i].pow(e[i]);
    total += t;
  }
  return total;
}

std::vector<std::pair<Exponent, Cyc>> Polynomial::sorted_terms() const {
  std::vector<std::pair<Exponent, Cyc>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const auto nm = names();
  std::string out;
  for (const auto& [e, c] : sorted_terms()) {
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += nm[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef = c.str();
    const bool compound = coef.find(' ') != std::string::npos;
    bool negative = !compound && coef[0] == '-';
    if (negative) coef = coef.substr(1);
    if (compound) coef = "(" + coef + ")";
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (coef == "1") {
      term = mono;
    } else {
      term = coef + "*" + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

Cyc poly_eval(const Polynomial& p, const CentralCharacter& chi) {
  const auto names = p.names();
  std::vector<Cyc> values(p.nvars());
  std::vector<bool> used(p.nvars(), false);
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    if (!used[i]) continue;
    auto it = chi.values.find(names[i]);
    if (it == chi.values.end()) throw Error("central character assigns no value to '" + names[i] + "'");
    values[i] = it->second;
  }
  return p.eval(values);
}

}  // namespace frobex
