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

#include "relsymp/matrix.hpp"

#include <bit>
#include <cstdint>
#include <exception>

namespace relsymp {

namespace {

void same_ring(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring()))
    fail(Errc::DescriptorMismatch, "matrices over " + a.ring().describe() +
                                       " and " + b.ring().describe());
}

void same_shape(const Matrix& a, const Matrix& b) {
  same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::SizeMismatch, "matrix shapes differ");
}

void require_square(const Matrix& a) {
  if (!a.is_square()) fail(Errc::NotSquare, "matrix is not square");
}

// Products below this many inner multiplications stay on one thread.
constexpr size_t kParallelThreshold = 512;

}  // namespace

Matrix::Matrix(const Ring& ring, size_t rows, size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, ring.zero()) {}

Matrix Matrix::identity(const Ring& ring, size_t n) {
  Matrix m(ring, n, n);
  Element one = ring.one();
  for (size_t k = 0; k < n; ++k) m(k, k) = one;
  return m;
}

Matrix Matrix::from_rows(const Ring& ring,
                         const std::vector<std::vector<Element>>& rows) {
  if (rows.empty() || rows[0].empty())
    fail(Errc::SizeMismatch, "matrix needs at least one entry");
  Matrix m(ring, rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      fail(Errc::SizeMismatch, "ragged matrix rows");
    for (size_t c = 0; c < m.cols_; ++c) {
      if (!(rows[r][c].ring() == ring))
        fail(Errc::DescriptorMismatch, "matrix entry outside " +
                                           ring.describe());
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_ints(const Ring& ring,
                         const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Element>> e;
  for (const auto& row : rows) {
    e.emplace_back();
    for (long v : row) e.back().push_back(ring.from_int(v));
  }
  return from_rows(ring, e);
}

Matrix Matrix::row_vector(const Ring& ring, const std::vector<Element>& v) {
  return from_rows(ring, {v});
}

std::vector<Element> Matrix::row(size_t r) const {
  return {data_.begin() + static_cast<long>(r * cols_),
          data_.begin() + static_cast<long>((r + 1) * cols_)};
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  same_shape(a, b);
  Matrix out = a;
  for (size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  same_shape(a, b);
  Matrix out = a;
  for (size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

Matrix operator*(const Element& s, const Matrix& a) {
  if (!(s.ring() == a.ring_))
    fail(Errc::DescriptorMismatch, "scalar outside the matrix ring");
  Matrix out = a;
  for (Element& e : out.data_) e = s * e;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.rows() * a.cols() * b.cols() >= kParallelThreshold)
    return multiply_parallel(a, b);
  return multiply_serial(a, b);
}

namespace {

void check_product(const Matrix& a, const Matrix& b) {
  same_ring(a, b);
  if (a.cols() != b.rows())
    fail(Errc::SizeMismatch, "inner dimensions differ in product");
}

Element dot_row_col(const Matrix& a, const Matrix& b, size_t i, size_t j) {
  Element acc = a.ring().zero();
  for (size_t k = 0; k < a.cols(); ++k) {
    const Element& x = a(i, k);
    if (x.is_zero()) continue;
    acc += x * b(k, j);
  }
  return acc;
}

}  // namespace

Matrix multiply_serial(const Matrix& a, const Matrix& b) {
  check_product(a, b);
  Matrix out(a.ring(), a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) out(i, j) = dot_row_col(a, b, i, j);
  return out;
}

Matrix multiply_parallel(const Matrix& a, const Matrix& b) {
  check_product(a, b);
  Matrix out(a.ring(), a.rows(), b.cols());
  const long n = static_cast<long>(a.rows() * b.cols());
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < n; ++idx) {
    try {
      const size_t i = static_cast<size_t>(idx) / b.cols();
      const size_t j = static_cast<size_t>(idx) % b.cols();
      out(i, j) = dot_row_col(a, b, i, j);
    } catch (...) {
#pragma omp critical(relsymp_matmul_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.ring(), a.cols(), a.rows());
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  return out;
}

Matrix perp(const Matrix& a, const Matrix& b) {
  same_ring(a, b);
  if (!a.is_square() || !b.is_square())
    fail(Errc::NotSquare, "perp needs square blocks");
  Matrix out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (size_t r = 0; r < b.rows(); ++r)
    for (size_t c = 0; c < b.cols(); ++c)
      out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

Matrix block(const Matrix& a, size_t r0, size_t c0, size_t nr, size_t nc) {
  if (r0 + nr > a.rows() || c0 + nc > a.cols())
    fail(Errc::SizeMismatch, "block outside the matrix");
  Matrix out(a.ring(), nr, nc);
  for (size_t r = 0; r < nr; ++r)
    for (size_t c = 0; c < nc; ++c) out(r, c) = a(r0 + r, c0 + c);
  return out;
}

Matrix standard_form(StandardForm kind, size_t n, const Ring& ring) {
  if (kind == StandardForm::Identity) return Matrix::identity(ring, n);
  Matrix out(ring, 2 * n, 2 * n);
  Element one = ring.one();
  Element low = kind == StandardForm::Chi ? -one : one;
  for (size_t k = 0; k < n; ++k) {
    out(2 * k, 2 * k + 1) = one;
    out(2 * k + 1, 2 * k) = low;
  }
  return out;
}

Matrix chi(size_t n, const Ring& ring) {
  return standard_form(StandardForm::Chi, n, ring);
}

Matrix sigma(size_t n, const Ring& ring) {
  return standard_form(StandardForm::Sigma, n, ring);
}

// ---------------------------------------------------------------------------
// Determinant and characteristic polynomial

namespace {

Element det_bareiss(Matrix m) {
  const size_t n = m.rows();
  const Ring& r = m.ring();
  Element prev = r.one();
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return r.zero();
      for (size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = r.zero();
    }
    prev = m(k, k);
  }
  Element d = m(n - 1, n - 1);
  return negate ? -d : d;
}

// Expansion along rows; f[mask] is the minor on the first popcount(mask) rows
// and the columns in mask.
Element det_subsets(const Matrix& m) {
  const size_t n = m.rows();
  std::vector<Element> f(size_t{1} << n, m.ring().zero());
  f[0] = m.ring().one();
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    const size_t k = static_cast<size_t>(std::popcount(mask));
    Element acc = m.ring().zero();
    for (size_t c = 0; c < n; ++c) {
      if (!(mask & (uint32_t{1} << c))) continue;
      const Element& a = m(k - 1, c);
      if (a.is_zero()) continue;
      const uint32_t sub = mask & ~(uint32_t{1} << c);
      if (f[sub].is_zero()) continue;
      const int after = std::popcount(mask >> (c + 1));
      Element term = a * f[sub];
      if (after % 2) acc -= term;
      else acc += term;
    }
    f[mask] = std::move(acc);
  }
  return f.back();
}

constexpr size_t kMaxSubsetDet = 18;
constexpr size_t kMaxPfaffian = 24;

}  // namespace

Element det(const Matrix& a) {
  require_square(a);
  if (a.rows() == 0) return a.ring().one();
  if (a.ring().is_domain()) return det_bareiss(a);
  if (a.rows() <= kMaxSubsetDet) return det_subsets(a);
  const auto p = charpoly(a);
  return a.rows() % 2 ? -p.back() : p.back();
}

std::vector<Element> charpoly(const Matrix& a) {
  require_square(a);
  const Ring& ring = a.ring();
  const size_t n = a.rows();
  std::vector<Element> p{ring.one()};
  for (size_t k = 0; k < n; ++k) {
    // a restricted to the leading (k+1) block is [[A, S], [R, a_kk]].
    std::vector<Element> t{ring.one(), -a(k, k)};
    std::vector<Element> v(k);
    for (size_t i = 0; i < k; ++i) v[i] = a(i, k);
    for (size_t step = 0; step < k; ++step) {
      Element rs = ring.zero();
      for (size_t i = 0; i < k; ++i) rs += a(k, i) * v[i];
      t.push_back(-rs);
      std::vector<Element> w(k, ring.zero());
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) w[i] += a(i, j) * v[j];
      v = std::move(w);
    }
    std::vector<Element> q(k + 2, ring.zero());
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < p.size() && j <= i; ++j)
        if (i - j < t.size()) q[i] += t[i - j] * p[j];
    p = std::move(q);
  }
  return p;
}

Element pfaffian(const Matrix& a) {
  require_square(a);
  if (a.rows() % 2) fail(Errc::OddSize, "Pfaffian of an odd-sized matrix");
  if (!is_alternating(a)) fail(Errc::NotAlternating, "matrix is not alternating");
  const size_t n = a.rows();
  if (n == 0) return a.ring().one();
  if (n > kMaxPfaffian) fail(Errc::InvalidArgument, "Pfaffian size too large");
  std::vector<std::optional<Element>> memo(size_t{1} << n);
  memo[0] = a.ring().one();
  // Pf over the index set `mask`, expanded along its smallest index.
  auto pf = [&](auto& self, uint32_t mask) -> const Element& {
    auto& slot = memo[mask];
    if (slot) return *slot;
    const int i = std::countr_zero(mask);
    const uint32_t rest = mask & ~(uint32_t{1} << i);
    Element acc = a.ring().zero();
    int pos = 0;
    for (uint32_t m = rest; m; m &= m - 1) {
      const int j = std::countr_zero(m);
      const Element& aij = a(static_cast<size_t>(i), static_cast<size_t>(j));
      if (!aij.is_zero()) {
        Element term = aij * self(self, rest & ~(uint32_t{1} << j));
        if (pos % 2) acc -= term;
        else acc += term;
      }
      ++pos;
    }
    slot = std::move(acc);
    return *slot;
  };
  return pf(pf, static_cast<uint32_t>((uint64_t{1} << n) - 1));
}

std::optional<Matrix> try_inverse(const Matrix& a) {
  require_square(a);
  const size_t n = a.rows();
  if (n == 0) return a;
  // Cayley-Hamilton: A^n + c_{n-1} A^{n-1} + ... + c_0 I = 0.
  const auto p = charpoly(a);
  auto c0inv = try_unit_inverse(p[n]);
  if (!c0inv) return std::nullopt;
  Matrix acc = Matrix::identity(a.ring(), n);
  for (size_t k = 1; k < n; ++k)
    acc = a * acc + p[k] * Matrix::identity(a.ring(), n);
  return (-*c0inv) * acc;
}

Matrix inverse(const Matrix& a) {
  auto inv = try_inverse(a);
  if (!inv) fail(Errc::NotInvertible, "matrix is not invertible");
  return *inv;
}

Matrix apply_hom(const RingHom& h, const Matrix& a) {
  if (!(a.ring() == h.source()))
    fail(Errc::DescriptorMismatch, "homomorphism source is " +
                                       h.source().describe() + ", matrix is over " +
                                       a.ring().describe());
  Matrix out(h.target(), a.rows(), a.cols());
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c) out(r, c) = h(a(r, c));
  return out;
}

bool is_alternating(const Matrix& a) {
  if (!a.is_square()) return false;
  for (size_t r = 0; r < a.rows(); ++r) {
    if (!a(r, r).is_zero()) return false;
    for (size_t c = r + 1; c < a.cols(); ++c)
      if (!(a(r, c) == -a(c, r))) return false;
  }
  return true;
}

bool is_symplectic_wrt(const Matrix& a, const Matrix& phi) {
  require_square(a);
  same_shape(a, phi);
  return transpose(a) * phi * a == phi;
}

bool is_relative_to(const Matrix& a, const Ideal& ideal) {
  require_square(a);
  return is_relative_to(a, ideal, Matrix::identity(a.ring(), a.rows()));
}

bool is_relative_to(const Matrix& a, const Ideal& ideal,
                    const Matrix& reference) {
  same_shape(a, reference);
  if (!(ideal.ring() == a.ring()))
    fail(Errc::DescriptorMismatch, "ideal of a different ring");
  for (size_t k = 0; k < a.entries().size(); ++k)
    if (!ideal.contains(a.entries()[k] - reference.entries()[k])) return false;
  return true;
}

bool is_invertible(const Matrix& a) {
  return a.is_square() && is_unit(det(a));
}

std::string to_string(const Matrix& a) {
  std::string s = "[";
  for (size_t r = 0; r < a.rows(); ++r) {
    if (r) s += ",";
    s += "[";
    for (size_t c = 0; c < a.cols(); ++c) {
      if (c) s += ",";
      s += to_string(a(r, c));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace relsymp
