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
#include <string>
#include <vector>

#include "frobex/scalars.hpp"

namespace frobex {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// All exponent vectors in `nvars` variables of total degree `d`, x1^d first.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int d);

/// Sparse commutative polynomial over Q(zeta_n). Negative exponents are allowed (Laurent
/// monomials); evaluation then needs an invertible value for that variable.
class Polynomial {
 public:
  Polynomial() : Polynomial(std::size_t{0}) {}
  explicit Polynomial(std::size_t nvars);
  explicit Polynomial(std::vector<std::string> names);

  static Polynomial constant(std::size_t nvars, const Cyc& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Exponent& e, const Cyc& c = Cyc(1));

  /// Same polynomial, variables renamed; the count must match.
  Polynomial with_names(std::vector<std::string> names) const;
  /// Zero polynomial sharing this polynomial's variables.
  Polynomial zero() const;
  Polynomial constant_like(const Cyc& c) const;

  std::size_t nvars() const { return nvars_; }
  std::vector<std::string> names() const;
  const std::map<Exponent, Cyc>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Cyc constant_term() const;
  Cyc coeff(const Exponent& e) const;
  /// Highest total degree, or -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(int d) const;

  void add_term(const Exponent& e, const Cyc& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Cyc& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Cyc& c) { return a *= c; }
  friend Polynomial operator*(const Cyc& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const;

  /// Replaces x_i by images[i]; exponents must be non-negative.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  Cyc eval(const std::vector<Cyc>& values) const;

  /// Graded order, lowest degree first; inside a degree x1^k sorts first.
  std::vector<std::pair<Exponent, Cyc>> sorted_terms() const;
  std::string str() const;

 private:
  void check_compatible(const Polynomial& o) const;

  std::size_t nvars_;
  std::shared_ptr<const std::vector<std::string>> names_;
  std::map<Exponent, Cyc> terms_;
};

using CentralPoly = Polynomial;

/// Values for named central generators; defines the maximal ideal m_chi.
struct CentralCharacter {
  std::string label;
  std::map<std::string, Cyc> values;
};

/// Evaluates p at chi; every variable occurring in p must be assigned.
Cyc poly_eval(const Polynomial& p, const CentralCharacter& chi);

}  // namespace frobex
