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

#include "frobex/matrix.hpp"

#include <sstream>

namespace frobex {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Cyc>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Cyc> Matrix::row(std::size_t r) const {
  return {a_.begin() + static_cast<long>(r * cols_), a_.begin() + static_cast<long>((r + 1) * cols_)};
}

std::vector<Cyc> Matrix::col(std::size_t c) const {
  std::vector<Cyc> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Cyc& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : a_)
    if (!x.is_zero()) ++n;
  return n;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cyc& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Cyc& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum: dimension mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix difference: dimension mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

Matrix operator*(const Cyc& s, const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.a_) x = s * x;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

std::vector<Cyc> Matrix::apply(const std::vector<Cyc>& v) const {
  if (v.size() != cols_) throw Error("matrix apply: dimension mismatch");
  std::vector<Cyc> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Cyc& x = (*this)(i, j);
      if (!x.is_zero() && !v[j].is_zero()) out[i] += x * v[j];
    }
  return out;
}

std::string Matrix::csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      const std::string s = (*this)(i, j).str();
      if (s.find(' ') != std::string::npos) {
        os << '"' << s << '"';
      } else {
        os << s;
      }
    }
    os << '\n';
  }
  return os.str();
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).str();
  return out;
}

RrefResult rref(Matrix m) {
  RrefResult res;
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    // Sparsest, then smallest, nonzero entry in column c at or below row r.
    std::size_t best = R;
    std::size_t best_support = 0, best_bits = 0;
    for (std::size_t i = r; i < R; ++i) {
      const Cyc& x = m(i, c);
      if (x.is_zero()) continue;
      const std::size_t s = x.support(), b = x.bit_size();
      if (best == R || s < best_support || (s == best_support && b < best_bits)) {
        best = i;
        best_support = s;
        best_bits = b;
      }
    }
    if (best == R) continue;
    if (best != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(r, j), m(best, j));
    const Cyc inv = m(r, c).inverse();
    support.clear();
    for (std::size_t j = c; j < C; ++j) {
      if (m(r, j).is_zero()) continue;
      m(r, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      const Cyc f = m(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j : support) m(i, j) -= f * m(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.m = std::move(m);
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) throw Error("solve: row count mismatch");
  const std::size_t R = m.rows(), C = m.cols(), K = rhs.cols();
  Matrix aug(R, C + K);
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) aug(i, j) = m(i, j);
    for (std::size_t j = 0; j < K; ++j) aug(i, C + j) = rhs(i, j);
  }
  RrefResult rr = rref(std::move(aug));
  Matrix x(C, K);
  for (std::size_t k = 0; k < rr.rank; ++k) {
    const std::size_t p = rr.pivots[k];
    if (p >= C) return std::nullopt;  // pivot in the right-hand side: inconsistent
    for (std::size_t j = 0; j < K; ++j) x(p, j) = rr.m(k, C + j);
  }
  if (m * x != rhs) throw ConsistencyError("solve: residual check failed");
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse: matrix is not square");
  const std::size_t n = m.rows();
  auto x = solve(m, Matrix::identity(n));
  if (!x) throw Error("inverse: matrix is singular");
  return *x;
}

Matrix nullspace(const Matrix& m) {
  RrefResult rr = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < C; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix ns(C, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    ns(f, k) = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) ns(rr.pivots[r], k) = -rr.m(r, f);
  }
  return ns;
}

Cyc determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix is not square");
  Matrix a = m;
  const std::size_t n = a.rows();
  Cyc det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Cyc(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Cyc inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Cyc f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

void IncrementalSpan::reduce(std::vector<Cyc>& v) const {
  if (v.size() != dim_) throw Error("IncrementalSpan: dimension mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Cyc f = v[pivots_[k]];
    if (f.is_zero()) continue;
    const auto& r = rows_[k];
    for (std::size_t j = 0; j < dim_; ++j)
      if (!r[j].is_zero()) v[j] -= f * r[j];
  }
}

bool IncrementalSpan::add(std::vector<Cyc> v) {
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Cyc inv = v[p].inverse();
  for (auto& x : v) x *= inv;
  // Keep earlier rows reduced at the new pivot.
  for (auto& r : rows_) {
    const Cyc f = r[p];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!v[j].is_zero()) r[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool IncrementalSpan::contains(std::vector<Cyc> v) const {
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace frobex
