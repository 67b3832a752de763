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

#include "frobex/family.hpp"
#include "frobex/reflection_group.hpp"

namespace frobex {

/// Omega_w as an alternating matrix A_w with Omega_w(x_a, x_b) = A_w(a, b).
using OmegaData = std::map<std::size_t, Matrix>;

/// Bireflections whose centralizer acts with determinant 1 on V / V^w.
std::vector<std::size_t> bireflection_set(const ReflectionGroup& g);

struct OmegaReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Support, skewness, equivariance, the Jacobi condition and sampled associativity.
OmegaReport validate_omega(const ReflectionGroup& g, const OmegaData& omega, std::size_t samples = 50,
                           std::uint64_t seed = 1);

/// All Omega supported on the bireflection set satisfying equivariance and Jacobi, as a basis
/// of the solution space. Empty when only Omega = 0 exists.
std::vector<OmegaData> solve_omega(const ReflectionGroup& g);

/// Graded Hecke algebra: S(V) and W with w x w^-1 = w.x and [x, y] = sum_w Omega_w(x, y) w.
/// Monomials are [alpha_1..alpha_n, w] for x^alpha w, x's sorted by index.
class GradedHeckeAlgebra : public FrobeniusFamily {
 public:
  /// Throws ConsistencyError when validate_omega rejects omega.
  GradedHeckeAlgebra(std::shared_ptr<const ReflectionGroup> group, OmegaData omega);

  std::string kind() const override { return "graded-hecke"; }
  std::string summary() const override;
  const Engine& engine() const override { return *engine_; }
  unsigned field_order() const override { return field_order_; }

  std::size_t rank() const override { return basis_.size(); }
  const Element& basis_element(std::size_t i) const override { return basis_[i]; }
  std::string basis_label(std::size_t i) const override;
  std::size_t phi_index() const override { return index(cv_->max_index(), 0); }

  std::vector<std::string> central_variables() const override;
  Coordinates coordinates(const Element& h) const override;

  std::vector<GeneratorSpec> generators() const override;
  int leading_rank(std::size_t i) const override { return cv_->basis_degree(i / group_->order()); }
  Element witness(std::size_t i) const override;
  WitnessSide witness_side() const override { return WitnessSide::Right; }

  const ReflectionGroup& group() const { return *group_; }
  const OmegaData& omega() const { return omega_; }
  const CoinvariantData& coinvariants() const { return *cv_; }
  bool omega_is_zero() const;

  std::size_t index(std::size_t i, std::size_t w) const { return i * group_->order() + w; }
  Element x(std::size_t i) const;
  Element group_element(std::size_t w) const;
  Element from_poly(const Polynomial& f) const;

  /// Central element with leading symbol the k-th fundamental invariant.
  const Element& central_lift(std::size_t k) const { return lifts_[k]; }

  /// Basis of the central elements of filtration degree <= d (d at most twice the top degree).
  std::vector<Element> centre_in_degree(int d) const;

 private:
  const Element& lift_power(const Exponent& gamma) const;

  std::shared_ptr<const ReflectionGroup> group_;
  OmegaData omega_;
  std::unique_ptr<CoinvariantData> cv_;
  std::unique_ptr<Engine> engine_;
  std::vector<Element> basis_;
  std::vector<Element> lifts_;
  unsigned field_order_ = 1;
  mutable std::mutex mu_;
  mutable std::map<Exponent, std::unique_ptr<Element>> powers_;
};

}  // namespace frobex
