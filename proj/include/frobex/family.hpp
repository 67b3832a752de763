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
#include <optional>
#include <string>
#include <vector>

#include "frobex/pbw.hpp"
#include "frobex/polynomial.hpp"

namespace frobex {

enum class WitnessSide { Left, Right };

/// A generator g with its predicted Nakayama image nu(g) = expected * g.
struct GeneratorSpec {
  std::string name;
  Element element;
  bool has_expected = false;
  Cyc expected = 1;
  /// A second accepted scalar where the sign convention is not pinned down.
  std::optional<Cyc> alternate;
};

using Coordinates = std::vector<std::pair<std::size_t, CentralPoly>>;

/// An algebra free of finite rank over a central subalgebra, with its functional Phi.
class FrobeniusFamily {
 public:
  virtual ~FrobeniusFamily() = default;

  virtual std::string kind() const = 0;
  virtual std::string summary() const = 0;
  virtual const Engine& engine() const = 0;
  /// Cyclotomic order of the coefficient field.
  virtual unsigned field_order() const = 0;

  /// Free rank over the central subalgebra = dimension of every reduced algebra.
  virtual std::size_t rank() const = 0;
  virtual const Element& basis_element(std::size_t i) const = 0;
  virtual std::string basis_label(std::size_t i) const = 0;
  /// Index of the basis element that Phi sends to 1.
  virtual std::size_t phi_index() const = 0;

  /// Names of the central polynomial generators.
  virtual std::vector<std::string> central_variables() const = 0;
  /// Variables that must take invertible values in a central character.
  virtual std::vector<std::string> unit_variables() const { return {}; }
  /// h = sum_i z_i b_i over the central subalgebra; zero z_i omitted.
  virtual Coordinates coordinates(const Element& h) const = 0;
  virtual CentralPoly phi(const Element& h) const;

  virtual std::vector<GeneratorSpec> generators() const = 0;

  /// Order used to pick the leading basis element in the hypothesis check (larger first).
  virtual int leading_rank(std::size_t i) const = 0;
  virtual Element witness(std::size_t i) const = 0;
  virtual WitnessSide witness_side() const = 0;

  /// Zero polynomial in the central variables.
  CentralPoly central_zero() const { return CentralPoly(central_variables()); }
  CentralCharacter augmentation() const;
};

}  // namespace frobex
