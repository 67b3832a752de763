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

namespace frobex {

/// Extended affine Hecke algebra of type A1 with equal parameters, v specialized to v0.
/// X = Z omega, alpha = 2 omega. Monomials [w, j] stand for T_w theta^j with w in {0 = e, 1 = s}.
/// Relations: T^2 = (v0 - v0^-1) T + 1 and theta T = T theta^-1 + (v0 - v0^-1) theta.
/// The centre is generated by zeta = theta + theta^-1; basis over it: 1, theta, T, T theta.
class AffineHeckeA1 : public FrobeniusFamily {
 public:
  /// Requires v0^2 outside {0, 1}.
  explicit AffineHeckeA1(Cyc v0);

  std::string kind() const override { return "affine-hecke-a1"; }
  std::string summary() const override;
  const Engine& engine() const override { return *engine_; }
  unsigned field_order() const override { return v0_.order(); }

  std::size_t rank() const override { return 4; }
  const Element& basis_element(std::size_t i) const override { return basis_[i]; }
  std::string basis_label(std::size_t i) const override;
  std::size_t phi_index() const override { return 1; }

  std::vector<std::string> central_variables() const override { return {"zeta"}; }
  Coordinates coordinates(const Element& h) const override;

  std::vector<GeneratorSpec> generators() const override;
  int leading_rank(std::size_t i) const override;
  Element witness(std::size_t i) const override;
  WitnessSide witness_side() const override { return WitnessSide::Right; }

  const Cyc& v0() const { return v0_; }
  Element T() const;
  Element theta(long j) const;
  /// theta^j T expanded in the standard basis.
  Element straighten(long j, bool s) const;

  struct TPair {
    bool x_is_s, w_is_s;
    Cyc h_e;
    bool ok;
  };
  /// T_x T_w for x, w in {e, s}: the T_e coefficient is nonzero only when w = x^-1.
  std::vector<TPair> t_pair_test() const;

 private:
  Cyc v0_;
  std::unique_ptr<Engine> engine_;
  std::vector<Element> basis_;
};

}  // namespace frobex
