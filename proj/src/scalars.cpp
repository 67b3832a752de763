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

#include "frobex/scalars.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>

namespace frobex {

namespace {

using QPoly = std::vector<Rational>;  // lowest degree first

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q*b + r
void poly_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    Rational f = a.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

// In place reduction modulo a monic polynomial of degree d; result has length exactly d.
void reduce_monic(QPoly& a, const QPoly& m) {
  const std::size_t d = m.size() - 1;
  for (std::size_t k = a.size(); k-- > d;) {
    if (sgn(a[k]) == 0) continue;
    const Rational f = a[k];
    const std::size_t shift = k - d;
    for (std::size_t i = 0; i <= d; ++i) a[shift + i] -= f * m[i];
  }
  a.resize(d);
}

}  // namespace

std::string to_string(const Rational& r) { return r.get_str(); }

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rational>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<unsigned, QPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  QPoly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    QPoly q, r;
    poly_divmod(p, cyclotomic_polynomial(d), q, r);
    if (!r.empty()) throw ConsistencyError("cyclotomic division left a remainder");
    p = std::move(q);
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

Cyc::Cyc(long num, long den) : order_(1), c_{Rational(num, den)} {
  if (den == 0) throw DivisionByZero();
  c_[0].canonicalize();
}

Cyc Cyc::zeta(unsigned n, long k) {
  if (n == 0) throw Error("cyclotomic order must be positive");
  const long e = ((k % static_cast<long>(n)) + n) % n;
  if (n == 1) return Cyc(1);
  if (n == 2) return Cyc(e == 0 ? 1 : -1);
  const QPoly& m = cyclotomic_polynomial(n);
  QPoly a(static_cast<std::size_t>(e) + 1);
  a[static_cast<std::size_t>(e)] = 1;
  if (a.size() < m.size() - 1) a.resize(m.size() - 1);
  reduce_monic(a, m);
  return Cyc(n, std::move(a));
}

Cyc Cyc::from_coeffs(unsigned order, std::vector<Rational> coeffs) {
  if (order == 0) throw Error("cyclotomic order must be positive");
  const std::size_t d = euler_phi(order);
  if (order <= 2) {
    // zeta_2 = -1 is rational; keep the order-1 representation.
    Rational v = 0;
    Rational z = order == 2 ? Rational(-1) : Rational(1);
    Rational zp = 1;
    for (const auto& c : coeffs) {
      v += c * zp;
      zp *= z;
    }
    return Cyc(v);
  }
  if (coeffs.size() < d) coeffs.resize(d);
  if (coeffs.size() > d) reduce_monic(coeffs, cyclotomic_polynomial(order));
  return Cyc(order, std::move(coeffs));
}

bool Cyc::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool Cyc::is_one() const { return is_rational() && c_[0] == 1; }

unsigned Cyc::common_order(const Cyc& a, const Cyc& b) {
  if (a.order_ == b.order_) return a.order_;
  if (a.order_ == 1 || a.is_rational()) return b.order_;
  if (b.order_ == 1 || b.is_rational()) return a.order_;
  throw IncompatibleOrders(a.order_, b.order_);
}

Cyc Cyc::embed(unsigned n) const {
  if (n == order_) return *this;
  if (is_rational()) {
    if (n <= 2) return Cyc(c_[0]);
    std::vector<Rational> c(euler_phi(n));
    c[0] = c_[0];
    return Cyc(n, std::move(c));
  }
  if (n % order_ != 0) throw IncompatibleOrders(order_, n);
  // zeta_order = zeta_n^(n/order)
  const unsigned step = n / order_;
  QPoly a(static_cast<std::size_t>(step) * (c_.size() - 1) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) a[i * step] = c_[i];
  return from_coeffs(n, std::move(a));
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (order_ == o.order_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  const unsigned n = common_order(*this, o);
  *this = embed(n);
  Cyc b = o.embed(n);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc& Cyc::operator*=(const Cyc& o) {
  if (order_ == 1 && o.order_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.is_rational()) {
    const Rational f = o.c_[0];
    for (auto& c : c_) c *= f;
    return *this;
  }
  if (is_rational()) {
    const Rational f = c_[0];
    *this = o;
    for (auto& c : c_) c *= f;
    return *this;
  }
  const unsigned n = common_order(*this, o);
  QPoly prod(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  reduce_monic(prod, cyclotomic_polynomial(n));
  c_ = std::move(prod);
  order_ = n;
  return *this;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) {
    Cyc r = *this;
    r.c_.assign(c_.size(), Rational(0));
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Extended Euclid in Q[x]: s*a + t*m = 1, so a^{-1} = s mod m.
  const QPoly& m = cyclotomic_polynomial(order_);
  QPoly r0 = m, r1 = c_;
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since m is irreducible and a is not a multiple of it.
  if (r0.size() != 1) throw ConsistencyError("cyclotomic inverse: gcd is not constant");
  for (auto& c : s0) c /= r0[0];
  if (s0.size() < m.size() - 1) s0.resize(m.size() - 1);
  reduce_monic(s0, m);
  return Cyc(order_, std::move(s0));
}

Cyc& Cyc::operator/=(const Cyc& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (o.is_rational()) {
    if (order_ == 1 && o.order_ != 1) *this = embed(o.order_);
    const Rational f = o.c_[0];
    for (auto& c : c_) c /= f;
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  if (a.is_rational() || b.is_rational()) return false;
  if (b.order_ % a.order_ == 0) return a.embed(b.order_).c_ == b.c_;
  if (a.order_ % b.order_ == 0) return b.embed(a.order_).c_ == a.c_;
  return false;
}

Cyc Cyc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyc result = Cyc(1).embed(order_);
  Cyc base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::size_t Cyc::support() const {
  std::size_t n = 0;
  for (const auto& c : c_)
    if (sgn(c) != 0) ++n;
  return n;
}

std::size_t Cyc::bit_size() const {
  std::size_t n = 0;
  for (const auto& c : c_)
    if (sgn(c) != 0)
      n += mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
  return n;
}

std::string Cyc::str() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    std::string term;
    if (i == 0) {
      term = mag.get_str();
    } else {
      if (mag != 1) term = mag.get_str() + "*";
      term += "z";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty()) {
      out = (sgn(c) < 0 ? "-" : "") + term;
    } else {
      out += (sgn(c) < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

Cyc Cyc::parse(std::string_view text, unsigned order) {
  auto fail = [&](const std::string& why) {
    return Error("cannot parse scalar '" + std::string(text) + "': " + why);
  };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw fail("empty");
  std::vector<Rational> coeffs(1);
  std::size_t pos = 0;
  auto read_int = [&](std::string& digits) {
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits.push_back(s[pos++]);
  };
  bool any = false;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      throw fail("expected + or -");
    }
    Rational coef = 1;
    bool have_coef = false;
    std::string num;
    read_int(num);
    if (!num.empty()) {
      have_coef = true;
      coef = Rational(num);
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string den;
        read_int(den);
        if (den.empty()) throw fail("missing denominator");
        mpz_class d(den);
        if (d == 0) throw DivisionByZero();
        coef /= Rational(d);
      }
    }
    std::size_t power = 0;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'z')) {
      if (s[pos] == '*') {
        if (!have_coef) throw fail("dangling *");
        ++pos;
      }
      if (pos >= s.size() || s[pos] != 'z') throw fail("expected z");
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string e;
        read_int(e);
        if (e.empty()) throw fail("missing exponent");
        power = std::stoul(e);
      }
    } else if (!have_coef) {
      throw fail("expected a number or z");
    }
    if (power > 0 && order == 1) throw fail("z used in a rational field");
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += sign * coef;
    any = true;
  }
  if (order <= 1) return Cyc(coeffs[0]);
  return from_coeffs(order, std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.str(); }

}  // namespace frobex
