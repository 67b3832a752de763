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

/// Root datum of SL2: P = Z omega, Q = Z alpha with alpha = 2 omega, form normalized by
/// (alpha, alpha) = 2. Weights are stored as integer multiples of omega.
struct RootDatumSL2 {
  int alpha = 2;     // alpha in units of omega
  int two_rho = 2;   // sum of positive roots in units of omega
  Rational omega_omega{1, 2};

  /// (a omega, b omega)
  Rational pairing(int a, int b) const { return Rational(a * b) * omega_omega; }
  /// (omega, alpha), the exponent in K E K^-1 = eps^(omega, alpha) E.
  int omega_alpha() const;
  /// (2 rho, omega)
  int two_rho_omega() const;
};

/// Common shape of the three quantum families: monomials [k, c, m] for A^k B^c C^m with
/// k, m >= 0 and c in Z, central l-th powers, basis 0 <= k, c, m < l.
class QuantumFamilyBase : public FrobeniusFamily {
 public:
  unsigned field_order() const override { return ell_; }
  const Engine& engine() const override { return *engine_; }
  std::size_t rank() const override { return basis_.size(); }
  const Element& basis_element(std::size_t i) const override { return basis_[i]; }
  std::string basis_label(std::size_t i) const override;
  std::vector<std::string> central_variables() const override;
  std::vector<std::string> unit_variables() const override;
  Coordinates coordinates(const Element& h) const override;
  int leading_rank(std::size_t i) const override;
  Element witness(std::size_t i) const override;
  WitnessSide witness_side() const override { return WitnessSide::Left; }

  unsigned ell() const { return ell_; }
  const Cyc& epsilon() const { return eps_; }
  const RootDatumSL2& root_datum() const { return datum_; }
  /// Monomial index; slots that a family lacks must be 0.
  std::size_t index(int k, int c, int m) const;
  Element monomial(int k, int c, int m) const;
  /// Letters of each slot; -1 when the slot is absent.
  int letter_a() const { return la_; }
  int letter_b() const { return lb_; }
  int letter_b_inv() const { return lbi_; }
  int letter_c() const { return lc_; }

  /// [z, g] = 0 for every l-th power z and every generator letter g; failures as text.
  std::vector<std::string> centrality_failures() const;

 protected:
  QuantumFamilyBase(unsigned ell, bool has_a, std::vector<std::string> slot_names);
  void finish(std::shared_ptr<const RewriteSystem> rules, int la, int lb, int lbi, int lc);

  unsigned ell_;
  Cyc eps_;
  RootDatumSL2 datum_;
  bool has_a_;
  std::vector<std::string> names_;  // A, B, C
  std::unique_ptr<Engine> engine_;
  std::vector<Element> basis_;
  int la_ = -1, lb_ = -1, lbi_ = -1, lc_ = -1;
};

/// U_eps(sl2) at a primitive odd l-th root of unity: F^k K^c E^m.
class QuantumSL2 : public QuantumFamilyBase {
 public:
  /// Throws ConsistencyError if the l-th powers fail to be central.
  explicit QuantumSL2(unsigned ell);
  std::string kind() const override { return "uq-sl2"; }
  std::string summary() const override;
  std::size_t phi_index() const override { return index(static_cast<int>(ell_) - 1, 0, static_cast<int>(ell_) - 1); }
  std::vector<GeneratorSpec> generators() const override;

  /// Phi(b_i b_j) = 0 whenever deg b_i + deg b_j < 2(l - 1), on `samples` random pairs with
  /// that degree bound. Returns the offending pairs.
  std::vector<std::pair<std::size_t, std::size_t>> claim_low_degree(std::size_t samples, std::uint64_t seed) const;
};

/// Borel part U_eps^{>=0}: K^c E^m.
class QuantumBorelSL2 : public QuantumFamilyBase {
 public:
  explicit QuantumBorelSL2(unsigned ell);
  std::string kind() const override { return "uq-borel-sl2"; }
  std::string summary() const override;
  std::size_t phi_index() const override { return index(0, 0, static_cast<int>(ell_) - 1); }
  std::vector<GeneratorSpec> generators() const override;
  /// eps^(2 rho, omega), the expected Nakayama scalar on K.
  Cyc k_scalar() const;
};

/// Localized quantized function algebra of SL2 on the tensor basis: F^k T^c E^m with
/// F = F (x) 1, E = 1 (x) E and T = K_{-omega} (x) K_omega, factors at parameter eps^-1.
class QuantumFunctionSL2 : public QuantumFamilyBase {
 public:
  explicit QuantumFunctionSL2(unsigned ell);
  std::string kind() const override { return "oq-sl2-localized"; }
  std::string summary() const override;
  std::size_t phi_index() const override { return index(static_cast<int>(ell_) - 1, 0, static_cast<int>(ell_) - 1); }
  std::vector<GeneratorSpec> generators() const override;
  /// eps^(2 (2 rho, omega)); the T-line scalar is accepted as this or its inverse.
  Cyc t_scalar() const;
};

}  // namespace frobex
