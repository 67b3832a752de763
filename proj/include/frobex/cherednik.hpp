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

#include <memory>

#include "frobex/family.hpp"
#include "frobex/reflection_group.hpp"

namespace frobex {

/// Rational Cherednik algebra at t = 0: generated by x in V, y in V* and W with
///   w x w^-1 = w.x,  w y w^-1 = w.y,  [x, y] = sum_s c(s) alpha_s(x) y(alphacheck_s) s.
/// Monomials are laid out as [alpha_1..alpha_n, w, beta_1..beta_n] for x^alpha w y^beta.
class CherednikAlgebra : public FrobeniusFamily {
 public:
  /// `c` holds one value per reflection conjugacy class; empty means c = 1.
  CherednikAlgebra(std::shared_ptr<const ReflectionGroup> group, std::vector<Cyc> c = {});

  std::string kind() const override { return "cherednik"; }
  std::string summary() const override;
  const Engine& engine() const override { return *engine_; }
  unsigned field_order() const override { return field_order_; }

  std::size_t rank() const override { return basis_.size(); }
  const Element& basis_element(std::size_t i) const override { return basis_[i]; }
  std::string basis_label(std::size_t i) const override;
  std::size_t phi_index() const override;

  std::vector<std::string> central_variables() const override;
  Coordinates coordinates(const Element& h) const override;
  CentralPoly phi(const Element& h) const override;

  std::vector<GeneratorSpec> generators() const override;
  int leading_rank(std::size_t i) const override;
  Element witness(std::size_t i) const override;
  WitnessSide witness_side() const override { return WitnessSide::Right; }

  const ReflectionGroup& group() const { return *group_; }
  const CoinvariantData& x_coinvariants() const { return *cv_x_; }
  const CoinvariantData& y_coinvariants() const { return *cv_y_; }
  const std::vector<Cyc>& c_values() const { return c_; }

  /// Basis index of a_i w b_j.
  std::size_t index(std::size_t i, std::size_t w, std::size_t j) const;
  struct Triple {
    std::size_t i, w, j;
  };
  Triple triple(std::size_t idx) const;

  Element x(std::size_t i) const;
  Element y(std::size_t j) const;
  Element group_element(std::size_t w) const;
  /// Embeds f in S(V) (or S(V*) when dual) as an element.
  Element from_x_poly(const Polynomial& f) const;
  Element from_y_poly(const Polynomial& f) const;

 private:
  std::shared_ptr<const ReflectionGroup> group_;
  std::vector<Cyc> c_;
  std::unique_ptr<CoinvariantData> cv_x_, cv_y_;
  std::unique_ptr<Engine> engine_;
  std::vector<Element> basis_;
  unsigned field_order_ = 1;
};

}  // namespace frobex
