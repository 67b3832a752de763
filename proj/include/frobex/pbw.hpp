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

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "frobex/scalars.hpp"

namespace frobex {

/// Fixed-layout exponent record of one PBW monomial; the layout is family specific.
using Monomial = std::vector<int>;
using Word = std::vector<int>;

class RewriteSystem;

/// Finite linear combination of canonical PBW monomials.
class Element {
 public:
  Element() = default;
  static Element monomial(Monomial m, const Cyc& c = Cyc(1));

  const std::map<Monomial, Cyc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Cyc coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Cyc& c);
  void add_scaled(const Element& o, const Cyc& c);

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Cyc& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Cyc& c) { return a *= c; }
  friend Element operator*(const Cyc& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// "coeff * monomial + ..." using the rewrite system's monomial names.
  std::string str(const RewriteSystem& rs) const;

 private:
  std::map<Monomial, Cyc> terms_;
};

struct WordTerm {
  Cyc coeff;
  Word word;
};

/// Per-family normal-form data. Letters are small integers; a monomial is canonical exactly when
/// its spelling is sorted by letter_rank (equal ranks commute or are merged by extend()).
class RewriteSystem {
 public:
  virtual ~RewriteSystem() = default;

  virtual Monomial unit() const = 0;
  virtual std::size_t letter_count() const = 0;
  virtual std::string letter_name(int letter) const = 0;
  /// Order class of a letter; b * a with rank(b) > rank(a) is out of order.
  virtual int letter_rank(int letter) const = 0;
  virtual int letter_weight(int letter) const = 0;

  /// Canonical spelling of a monomial.
  virtual Word spell(const Monomial& m) const = 0;
  /// m * letter when no reordering is needed (including merges such as group products).
  virtual std::optional<std::vector<std::pair<Monomial, Cyc>>> extend(const Monomial& m, int letter) const = 0;
  /// Removes the last letter of the canonical spelling of m (m must not be the unit).
  virtual int peel(Monomial& m) const = 0;
  /// b * a for an out-of-order pair, as a combination of words.
  virtual std::vector<WordTerm> swap(int b, int a) const = 0;

  virtual std::string render(const Monomial& m) const = 0;

  int weight(const Monomial& m) const;
};

struct EngineStats {
  std::size_t cache_entries = 0;
  std::size_t cache_hits = 0;
  std::size_t rule_applications = 0;
};

/// Normal-form multiplication over a rewrite system, memoized on (monomial, letter).
/// Thread safe; every public product runs under a step budget.
class Engine {
 public:
  explicit Engine(std::shared_ptr<const RewriteSystem> rs, std::size_t step_budget = 1'000'000);

  const RewriteSystem& rules() const { return *rs_; }
  std::size_t step_budget() const { return budget_; }

  Element one() const { return Element::monomial(rs_->unit()); }
  Element letter(int l) const;
  Element normal_form(const Word& w) const;
  Element multiply(const Element& a, const Element& b) const;
  Element mul_letter(const Element& a, int l) const;
  Element commutator(const Element& a, const Element& b) const;
  Element power(const Element& a, unsigned e) const;

  int weight(const Element& a) const;  // -1 for zero
  EngineStats stats() const;

  /// Termination witness on every out-of-order letter pair: outputs never gain weight, and
  /// outputs of equal weight are sorted words. Returns a diagnostic, empty when valid.
  std::string validate_rules() const;

 private:
  struct Key {
    Monomial m;
    int letter;
    bool operator==(const Key& o) const { return letter == o.letter && m == o.m; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  const Element& right_mul(const Monomial& m, int l, int depth) const;
  Element mul_letter_impl(const Element& a, int l, int depth) const;
  void begin_product() const;

  std::shared_ptr<const RewriteSystem> rs_;
  std::size_t budget_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Key, Element, KeyHash> cache_;
  mutable std::size_t hits_ = 0, applications_ = 0;
};

}  // namespace frobex
