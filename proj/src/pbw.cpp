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

#include "frobex/pbw.hpp"

#include <sstream>

namespace frobex {

namespace {

constexpr int kMaxDepth = 10000;

thread_local std::size_t tl_steps = 0;
thread_local int tl_active = 0;

// Marks a public entry point; the step counter restarts for each outermost product.
struct ProductScope {
  ProductScope() {
    if (tl_active++ == 0) tl_steps = 0;
  }
  ~ProductScope() { --tl_active; }
  ProductScope(const ProductScope&) = delete;
  ProductScope& operator=(const ProductScope&) = delete;
};

}  // namespace

Element Element::monomial(Monomial m, const Cyc& c) {
  Element e;
  e.add_term(m, c);
  return e;
}

Cyc Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyc(0) : it->second;
}

void Element::add_term(const Monomial& m, const Cyc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::add_scaled(const Element& o, const Cyc& c) {
  if (c.is_zero()) return;
  for (const auto& [m, v] : o.terms_) add_term(m, v * c);
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Cyc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

std::string Element::str(const RewriteSystem& rs) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const std::string s = c.str();
    if (s.find(' ') != std::string::npos) {
      os << '(' << s << ')';
    } else {
      os << s;
    }
    os << " * " << rs.render(m);
  }
  return os.str();
}

int RewriteSystem::weight(const Monomial& m) const {
  int w = 0;
  for (int l : spell(m)) w += letter_weight(l);
  return w;
}

// ---------------------------------------------------------------------------

std::size_t Engine::KeyHash::operator()(const Key& k) const {
  std::size_t h = std::hash<int>()(k.letter) + 0x9e3779b97f4a7c15ULL;
  for (int x : k.m) h ^= std::hash<int>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Engine::Engine(std::shared_ptr<const RewriteSystem> rs, std::size_t step_budget)
    : rs_(std::move(rs)), budget_(step_budget) {
  if (!rs_) throw Error("engine needs a rewrite system");
}

Element Engine::letter(int l) const { return mul_letter(one(), l); }

const Element& Engine::right_mul(const Monomial& m, int l, int depth) const {
  Key key{m, l};
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      ++hits_;
      return it->second;
    }
  }
  if (depth > kMaxDepth) throw Error("normal form recursion exceeded depth guard; rule set is not terminating");
  Element result;
  if (auto ext = rs_->extend(m, l)) {
    for (const auto& [mm, c] : *ext) result.add_term(mm, c);
  } else {
    if (++tl_steps > budget_)
      throw Error("normal form exceeded the step budget of " + std::to_string(budget_) + " rule applications");
    Monomial prefix = m;
    const int last = rs_->peel(prefix);
    {
      std::lock_guard lock(mu_);
      ++applications_;
    }
    for (const auto& [coeff, word] : rs_->swap(last, l)) {
      Element cur = Element::monomial(prefix);
      for (int x : word) cur = mul_letter_impl(cur, x, depth + 1);
      result.add_scaled(cur, coeff);
    }
  }
  std::lock_guard lock(mu_);
  return cache_.try_emplace(std::move(key), std::move(result)).first->second;
}

Element Engine::mul_letter_impl(const Element& a, int l, int depth) const {
  Element r;
  for (const auto& [m, c] : a.terms()) r.add_scaled(right_mul(m, l, depth), c);
  return r;
}

Element Engine::mul_letter(const Element& a, int l) const {
  ProductScope scope;
  if (l < 0 || static_cast<std::size_t>(l) >= rs_->letter_count()) throw Error("unknown letter");
  return mul_letter_impl(a, l, 0);
}

Element Engine::normal_form(const Word& w) const {
  ProductScope scope;
  Element cur = one();
  for (int l : w) cur = mul_letter(cur, l);
  return cur;
}

Element Engine::multiply(const Element& a, const Element& b) const {
  ProductScope scope;
  Element r;
  for (const auto& [m, c] : b.terms()) {
    Element cur = a;
    for (int l : rs_->spell(m)) cur = mul_letter_impl(cur, l, 0);
    r.add_scaled(cur, c);
  }
  return r;
}

Element Engine::commutator(const Element& a, const Element& b) const { return multiply(a, b) - multiply(b, a); }

Element Engine::power(const Element& a, unsigned e) const {
  Element r = one();
  for (unsigned i = 0; i < e; ++i) r = multiply(r, a);
  return r;
}

int Engine::weight(const Element& a) const {
  int w = -1;
  for (const auto& [m, c] : a.terms()) w = std::max(w, rs_->weight(m));
  return w;
}

EngineStats Engine::stats() const {
  std::lock_guard lock(mu_);
  return {cache_.size(), hits_, applications_};
}

std::string Engine::validate_rules() const {
  const int n = static_cast<int>(rs_->letter_count());
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      if (rs_->letter_rank(b) <= rs_->letter_rank(a)) continue;
      const int in = rs_->letter_weight(b) + rs_->letter_weight(a);
      for (const auto& [coeff, word] : rs_->swap(b, a)) {
        int w = 0;
        for (int x : word) w += rs_->letter_weight(x);
        const std::string pair = rs_->letter_name(b) + "*" + rs_->letter_name(a);
        if (w > in) return "rule " + pair + " raises the filtration weight";
        if (w == in)
          for (std::size_t i = 1; i < word.size(); ++i)
            if (rs_->letter_rank(word[i - 1]) > rs_->letter_rank(word[i]))
              return "rule " + pair + " has an unsorted output of equal weight";
      }
    }
  return {};
}

}  // namespace frobex
