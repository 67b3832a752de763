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

#include <optional>
#include <string>
#include <vector>

#include "frobex/scalars.hpp"

namespace frobex {

/// Dense row-major matrix over Q(zeta_n).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Cyc>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Cyc& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Cyc& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<Cyc> row(std::size_t r) const;
  std::vector<Cyc> col(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;
  std::size_t nonzeros() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Cyc& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<Cyc> apply(const std::vector<Cyc>& v) const;

  /// One line per row, entries in canonical scalar text, quoted when they contain spaces.
  std::string csv() const;
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Cyc> a_;
};

struct RrefResult {
  Matrix m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; per column the pivot is the sparsest nonzero entry.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Some x with m * x = rhs, or nullopt when inconsistent. The result is re-verified.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);
/// Throws Error when m is singular or not square.
Matrix inverse(const Matrix& m);
/// Columns form a basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m);
Cyc determinant(const Matrix& m);

/// Row space built one vector at a time; add() reports whether the vector was independent.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}
  bool add(std::vector<Cyc> v);
  bool contains(std::vector<Cyc> v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(std::vector<Cyc>& v) const;
  std::size_t dim_;
  std::vector<std::vector<Cyc>> rows_;  // each normalized to 1 at its pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace frobex
