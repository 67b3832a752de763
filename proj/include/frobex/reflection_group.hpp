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
#include <string>
#include <string_view>
#include <vector>

#include "frobex/matrix.hpp"
#include "frobex/polynomial.hpp"

namespace frobex {

struct Reflection {
  std::size_t element;
  std::vector<Cyc> alpha;        // covector on V vanishing on V^s
  std::vector<Cyc> alpha_check;  // vector in V spanning the image of id - s
  std::size_t cls;               // conjugacy class index among reflections
};

/// Finite reflection group given by its full list of matrices on V = C^n.
/// Element 0 is the identity. Element w sends x_i to sum_k M(w)_{ki} x_k.
class ReflectionGroup {
 public:
  /// "Z/m" (m >= 2), "S2".."S4", "I2(m)" (3 <= m <= 6).
  static ReflectionGroup build(std::string_view descriptor);
  /// Closure of the reflections attached to a Cartan matrix: s_i(e_j) = e_j - A_ij e_i.
  static ReflectionGroup from_cartan(std::string name, const std::vector<std::vector<Cyc>>& cartan);
  static ReflectionGroup from_generators(std::string name, const std::vector<Matrix>& gens);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::size_t order() const { return mats_.size(); }
  /// lcm of the cyclotomic orders of all matrix entries.
  unsigned field_order() const { return field_order_; }

  const Matrix& matrix(std::size_t w) const { return mats_[w]; }
  /// Contragredient action on V*: M(w^{-1})^T.
  const Matrix& dual_matrix(std::size_t w) const { return dual_mats_[w]; }
  std::size_t identity() const { return 0; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t element_order(std::size_t a) const;
  std::size_t find(const Matrix& m) const;  // throws if absent
  const std::string& label(std::size_t w) const { return labels_[w]; }
  Cyc det(std::size_t w) const { return dets_[w]; }
  /// rank(id - M(w)).
  std::size_t codim_fixed(std::size_t w) const { return codims_[w]; }

  const std::vector<Reflection>& reflections() const { return refl_; }
  std::size_t num_reflection_classes() const { return num_classes_; }
  /// Index into reflections(), or npos.
  std::size_t reflection_index(std::size_t w) const;
  std::vector<std::size_t> centralizer(std::size_t w) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::string name_;
  std::size_t dim_ = 0;
  unsigned field_order_ = 1;
  std::vector<Matrix> mats_, dual_mats_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> table_, inv_, codims_;
  std::vector<Cyc> dets_;
  std::vector<Reflection> refl_;
  std::size_t num_classes_ = 0;
};

/// The linear substitution x_i -> sum_k m(k, i) x_k applied to f.
Polynomial act(const Matrix& m, const Polynomial& f);

/// Invariants, coinvariant basis and dual bases of S(U) for U = V (matrices) or V*
/// (dual matrices). Immutable after construction apart from internal caches.
class CoinvariantData {
 public:
  CoinvariantData(const ReflectionGroup& g, bool dual);

  std::size_t nvars() const { return nvars_; }
  std::size_t group_order() const { return actions_.size(); }

  const std::vector<Polynomial>& invariants() const { return invariants_; }
  const std::vector<int>& invariant_degrees() const { return inv_degrees_; }

  /// Monomial lifts a_1..a_|W| ordered by degree.
  const std::vector<Exponent>& basis() const { return basis_; }
  Polynomial basis_poly(std::size_t i) const { return Polynomial::monomial(basis_[i]); }
  int basis_degree(std::size_t i) const { return total_degree(basis_[i]); }
  std::size_t max_index() const { return max_index_; }
  int top_degree() const { return top_degree_; }
  /// Dual lifts a^i: pi(a_k a^i) = delta_{ki}.
  const std::vector<Polynomial>& duals() const { return duals_; }

  /// Top-line character: w a_max = eps(w) a_max modulo the invariant ideal.
  const Cyc& epsilon(std::size_t w) const { return eps_[w]; }

  Polynomial apply(std::size_t w, const Polynomial& f) const { return act(actions_[w], f); }
  Polynomial reynolds(const Polynomial& f) const;

  /// f = sum_i z_i a_i with z_i in the invariant ring; z_i as polynomials in the fundamental
  /// invariants, variables named by `names`. Sparse: only nonzero z_i are returned.
  std::vector<std::pair<std::size_t, Polynomial>> decompose(const Polynomial& f,
                                                            const std::vector<std::string>& names) const;
  /// Decomposition of a single monomial in unnamed invariant variables; cached.
  const std::vector<std::pair<std::size_t, Polynomial>>& decompose_monomial(const Exponent& e) const;

  /// Projection to the top line: the constant part of the a_max coordinate of f's degree-N part.
  Cyc pi(const Polynomial& f) const;

 private:
  struct DegreeSlice {
    std::vector<Exponent> monomials;              // basis of S_d
    std::map<Exponent, std::size_t> position;     // monomial -> row
    std::vector<std::pair<Exponent, std::size_t>> columns;  // (gamma, i) for p^gamma a_i
    Matrix inverse;                               // coords of monomials in the columns
  };
  const DegreeSlice& slice(int d) const;
  Polynomial invariant_monomial(const Exponent& gamma) const;

  std::size_t nvars_;
  std::vector<Matrix> actions_;
  std::vector<Polynomial> invariants_;
  std::vector<int> inv_degrees_;
  std::vector<Exponent> basis_;
  std::size_t max_index_ = 0;
  int top_degree_ = 0;
  std::vector<Polynomial> duals_;
  std::vector<Cyc> eps_;

  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<DegreeSlice>> slices_;
  mutable std::map<Exponent, std::unique_ptr<std::vector<std::pair<std::size_t, Polynomial>>>> mono_cache_;
  mutable std::map<Exponent, Polynomial> pgamma_cache_;
};

}  // namespace frobex
