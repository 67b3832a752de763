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

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frobex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class IncompatibleOrders : public Error {
 public:
  IncompatibleOrders(unsigned a, unsigned b)
      : Error("cyclotomic orders " + std::to_string(a) + " and " + std::to_string(b) +
              " are incompatible") {}
};

/// Internal invariant broken; a bug or an input the theory rules out.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

using Rational = mpq_class;

std::string to_string(const Rational& r);

/// Euler phi.
unsigned euler_phi(unsigned n);

/// Coefficients (lowest degree first) of the n-th cyclotomic polynomial; monic of degree phi(n).
const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

/// Element of Q(zeta_n) in the power basis {zeta_n^i : 0 <= i < phi(n)}.
///
/// Values of order 1 are plain rationals and combine with any order. Two values of different
/// orders > 1 combine only if one of them is rational; otherwise IncompatibleOrders is thrown.
class Cyc {
 public:
  Cyc() : order_(1), c_(1) {}
  Cyc(long v) : order_(1), c_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  Cyc(const Rational& r) : order_(1), c_{r} {}  // NOLINT(google-explicit-constructor)
  Cyc(long num, long den);

  /// zeta_n^k, k taken modulo n.
  static Cyc zeta(unsigned n, long k = 1);
  static Cyc from_coeffs(unsigned order, std::vector<Rational> coeffs);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant coefficient; meaningful when is_rational().
  const Rational& rational_value() const { return c_[0]; }

  /// Same element written over Q(zeta_n); n must be a multiple of order() or order() == 1,
  /// or the element must be rational.
  Cyc embed(unsigned n) const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  Cyc inverse() const;
  Cyc pow(long e) const;

  /// Number of nonzero power-basis coefficients; a cheap sparsity measure for pivoting.
  std::size_t support() const;
  /// Rough bit size of the coefficients.
  std::size_t bit_size() const;

  /// Canonical text "a0 + a1*z + a2*z^2"; rationals print as p/q and z stands for zeta_order.
  std::string str() const;
  /// Parses the canonical text (also accepts plain rationals, "z", "-z^3", "3/2*z").
  static Cyc parse(std::string_view text, unsigned order);

 private:
  Cyc(unsigned order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {}
  static unsigned common_order(const Cyc& a, const Cyc& b);

  unsigned order_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyc& c);

}  // namespace frobex
