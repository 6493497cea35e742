// Copyright 2026 The relsymp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file matrix.hpp
 * @brief Dense matrices over a runtime ring.
 *
 * Indices in this header are 0-based. The elementary and Steinberg layers
 * use the 1-based convention of the generator formulas and translate at the
 * boundary.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relsymp/ring.hpp"

namespace relsymp {

class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(const Ring& ring, size_t rows, size_t cols);

  static Matrix identity(const Ring& ring, size_t n);
  /// Throws SizeMismatch on ragged input, DescriptorMismatch on mixed rings.
  static Matrix from_rows(const Ring& ring,
                          const std::vector<std::vector<Element>>& rows);
  static Matrix from_ints(const Ring& ring,
                          const std::vector<std::vector<long>>& rows);
  static Matrix row_vector(const Ring& ring, const std::vector<Element>& v);

  const Ring& ring() const noexcept { return ring_; }
  size_t rows() const noexcept { return rows_; }
  size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Element& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(size_t r, size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<Element>& entries() const noexcept { return data_; }
  std::vector<Element> row(size_t r) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Element& s, const Matrix& a);

 private:
  Ring ring_;
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Element> data_;
};

/// Reference product, one thread.
Matrix multiply_serial(const Matrix& a, const Matrix& b);
/// Row-parallel OpenMP product; bit-identical to multiply_serial.
Matrix multiply_parallel(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);
/// Block-diagonal sum a (+) b.
Matrix perp(const Matrix& a, const Matrix& b);
/// Rows [r0, r0+nr), columns [c0, c0+nc).
Matrix block(const Matrix& a, size_t r0, size_t c0, size_t nr, size_t nc);

enum class StandardForm { Chi, Sigma, Identity };
/// Chi and Sigma are 2n x 2n; Identity is n x n.
Matrix standard_form(StandardForm kind, size_t n, const Ring& ring);
Matrix chi(size_t n, const Ring& ring);
Matrix sigma(size_t n, const Ring& ring);

/// Bareiss elimination over domains, Laplace expansion over subsets
/// otherwise. Throws NotSquare.
Element det(const Matrix& a);
/// Coefficients of det(xI - A), highest degree first, computed division-free
/// (Berkowitz).
std::vector<Element> charpoly(const Matrix& a);
/// Throws NotAlternating / OddSize.
Element pfaffian(const Matrix& a);

std::optional<Matrix> try_inverse(const Matrix& a);
/// Throws NotInvertible.
Matrix inverse(const Matrix& a);

Matrix apply_hom(const RingHom& h, const Matrix& a);

/// Skew-symmetric with zero diagonal.
bool is_alternating(const Matrix& a);
/// a^T phi a == phi.
bool is_symplectic_wrt(const Matrix& a, const Matrix& phi);
/// Every entry of a - reference lies in I (reference defaults to identity).
bool is_relative_to(const Matrix& a, const Ideal& ideal);
bool is_relative_to(const Matrix& a, const Ideal& ideal,
                    const Matrix& reference);
bool is_invertible(const Matrix& a);

std::string to_string(const Matrix& a);

}  // namespace relsymp
