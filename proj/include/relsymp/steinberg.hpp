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
 * @file steinberg.hpp
 * @brief ESD transvections and symplectic Steinberg words.
 *
 * The form on R^{2n} is <e_i, e_j> = eps_i delta_{i, sigma(j)}, and
 *   T(u, v, a)(w) = w + (<v,w> + a <u,w>) u + <u,w> v     for <u,v> = 0.
 * Generators X_ij(a) evaluate to
 *   T_{i sigma(i)}(a) = T(e_i, 0, eps_i a),
 *   T_ij(a)           = T(e_i, eps_{sigma(j)} a e_{sigma(j)}, 0)   otherwise.
 */

#pragma once

#include <optional>
#include <vector>

#include "relsymp/elementary.hpp"

namespace relsymp {

using Vec = std::vector<Element>;

/// sum_i eps_i u_i w_{sigma(i)}.
Element symplectic_form(const Vec& u, const Vec& w);
/// e_i (1-based) of length `size`.
Vec basis_vector(const Ring& ring, size_t size, size_t i);
Vec scale(const Element& a, const Vec& v);
Vec add(const Vec& u, const Vec& v);
Vec matrix_times(const Matrix& m, const Vec& v);

/// T(u,v,a)(w). Throws NotIsotropicPair.
Vec esd_apply(const Vec& u, const Vec& v, const Element& a, const Vec& w);
/// Matrix whose columns are the images of the basis.
Matrix esd_matrix(const Vec& u, const Vec& v, const Element& a);
/// Matrix of T_ij(a) on R^{size}.
Matrix transvection(size_t size, size_t i, size_t j, const Element& a);

struct SteinbergAtom {
  size_t i = 0;
  size_t j = 0;
  Element a;
  int exp = 1;
};

class SteinbergWord {
 public:
  SteinbergWord() = default;
  /// Throws InvalidArgument for n < 3.
  SteinbergWord(size_t n, const Ring& ring);

  size_t half_rank() const noexcept { return n_; }
  const Ring& ring() const noexcept { return ring_; }
  const std::vector<SteinbergAtom>& atoms() const noexcept { return atoms_; }

  SteinbergWord& x(size_t i, size_t j, const Element& a, int exp = 1);
  SteinbergWord& append(const SteinbergWord& w);
  SteinbergWord inverse() const;

  friend bool operator==(const SteinbergWord& a, const SteinbergWord& b);

 private:
  size_t n_ = 0;
  Ring ring_;
  std::vector<SteinbergAtom> atoms_;
};

/// Product of transvection matrices; exponent -1 evaluates as T_ij(-a).
Matrix steinberg_phi(const SteinbergWord& w);

enum class SymbolKind { Sw, Sh, Curly, Square };

/// Sw, Sh use (i, j) and r. Curly {r,s} fixes (1,3) and Square [r,s] fixes
/// (1,2) unless `ij` is given. Throws NotAUnit.
SteinbergWord symbol_build(SymbolKind kind, const Element& r,
                           const std::optional<Element>& s, size_t n,
                           std::optional<std::pair<size_t, size_t>> ij =
                               std::nullopt);

bool kernel_check(const SteinbergWord& w);
/// phi(w mod I) is the identity over R/I. Throws QuotientNotComputable.
bool residue_trivial(const SteinbergWord& w, const Ideal& ideal);

std::string to_string(const SteinbergWord& w);

}  // namespace relsymp
