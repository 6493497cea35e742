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
 * @file elementary.hpp
 * @brief Elementary generators and words of elementary generators.
 *
 * Indices are 1-based, as in the generator formulas:
 *   sigma(2i) = 2i-1, sigma(2i-1) = 2i, eps_i = (-1)^(i+1),
 *   e_ij(a)  = I + a E_ij,
 *   se_ij(a) = I + a E_ij                                   if i = sigma(j),
 *            = I + a E_ij - (-1)^(i+j) a E_sigma(j)sigma(i)  otherwise.
 */

#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "relsymp/matrix.hpp"
#include "relsymp/row.hpp"

namespace relsymp {

enum class Family { Linear, Symplectic };

size_t sigma_index(size_t i);
int eps(size_t i);

/// Throws BadIndex.
Matrix elem_generator(Family family, size_t size, size_t i, size_t j,
                      const Element& a);

/// m <- m * gen(i, j, a), as column operations.
void apply_generator_right(Matrix& m, Family family, size_t i, size_t j,
                           const Element& a);

class ElementaryWord;

struct GenAtom {
  size_t i = 0;
  size_t j = 0;
  Element a;
};

/// outer * gen(i, j, a) * outer^-1.
struct ConjAtom {
  std::shared_ptr<const ElementaryWord> outer;
  size_t i = 0;
  size_t j = 0;
  Element a;
};

using Atom = std::variant<GenAtom, ConjAtom>;

class ElementaryWord {
 public:
  ElementaryWord() = default;
  ElementaryWord(Family family, size_t size, const Ring& ring);

  Family family() const noexcept { return family_; }
  size_t size() const noexcept { return size_; }
  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  bool empty() const noexcept { return atoms_.empty(); }

  ElementaryWord& gen(size_t i, size_t j, const Element& a);
  ElementaryWord& conj(const ElementaryWord& outer, size_t i, size_t j,
                       const Element& a);
  ElementaryWord& append(const ElementaryWord& w);
  ElementaryWord& push(const Atom& atom);

  /// Reversed atoms with negated arguments.
  ElementaryWord inverse() const;

  friend bool operator==(const ElementaryWord& a, const ElementaryWord& b);

 private:
  void check_indices(size_t i, size_t j, const Element& a) const;

  Family family_ = Family::Linear;
  size_t size_ = 0;
  Ring ring_;
  std::vector<Atom> atoms_;
};

Matrix word_eval(const ElementaryWord& w);
/// m * word_eval(w), without forming word_eval(w).
void apply_word_right(Matrix& m, const ElementaryWord& w);
std::vector<Element> row_times(const std::vector<Element>& v,
                               const ElementaryWord& w);

/// Every inner argument lies in I.
bool certifies_relative(const ElementaryWord& w, const Ideal& ideal);

/// Word of size 2n evaluating to gamma (+) gamma^-1. Throws NotInvertible.
ElementaryWord whitehead_word(const Matrix& gamma);

/// Word over R[var] with every inner argument a replaced by var * a.
ElementaryWord homotopy_word(const ElementaryWord& w,
                             const std::string& var = "X");

struct PrincipalReduction {
  ElementaryWord word;
  UnimodularRow reduced;
};

/// v = (1 - a_1, a_2, ..., a_n) with a_k in I; returns prod_k e_1k(-a_k) and
/// v' = (1 - a_1, a_1 a_2, ..., a_1 a_n), relative to <a_1>.
PrincipalReduction reduce_to_principal(const UnimodularRow& v);

/// Word w with v * word_eval(w) = e_1 over a Euclidean ring.
ElementaryWord row_reduce_euclidean(const std::vector<Element>& v);

std::string to_string(const ElementaryWord& w);

}  // namespace relsymp
