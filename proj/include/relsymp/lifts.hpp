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
 * @file lifts.hpp
 * @brief Lifts of relative data over R into R (+) I, relative to 0 (+) I.
 *
 * A relative row v = (1 + v_1, v_2, ..., v_n) lifts to
 * ((1, v_1), (0, v_2), ..., (0, v_n)); a matrix alpha = I + gamma with gamma
 * in M(I) lifts to I + gamma_L where gamma_L has entries (0, gamma_ij).
 */

#pragma once

#include <optional>
#include <vector>

#include "relsymp/elementary.hpp"

namespace relsymp {

constexpr long kDefaultWitnessBudget = 64;

/// Witness w = e_1 mod I with sum v_k w_k = 1, i.e.
/// (1 + v_1)(1 + w_1) + sum_{k>=2} v_k w_k = 1 in the shifted notation.
/// Extended gcd over Euclidean rings; otherwise enumeration of
/// w_k = d c_k with |c_k| <= budget. Throws WitnessNotFound / NotRelative.
std::vector<Element> find_relative_witness(const UnimodularRow& v,
                                           long budget = kDefaultWitnessBudget);

/// v_L over R (+) I relative to 0 (+) I. Uses `witness` when given (it must
/// be congruent to e_1 mod I), else the stored witness when it is, else
/// searches.
UnimodularRow lift_row(const UnimodularRow& v,
                       const std::optional<std::vector<Element>>& witness =
                           std::nullopt,
                       long budget = kDefaultWitnessBudget);

enum class GroupTag { GL, SL, Sp };

/// alpha_L = I + (alpha - I)_L, with the SL / Sp postcondition verified.
/// Throws NotRelative, NotSpecial.
Matrix lift_matrix(const Matrix& alpha, const Ideal& ideal,
                   GroupTag tag = GroupTag::GL);
/// Entrywise b -> (0, b) for a matrix with entries in I (any shape).
Matrix lift_ideal_matrix(const Matrix& beta, const Ideal& ideal);
/// Entrywise r -> (r, 0).
Matrix include_matrix(const Matrix& alpha, const Ideal& ideal);
/// chi + (alpha - chi)_L for alpha = chi mod I.
Matrix lift_alt(const Matrix& alpha, const Ideal& ideal);

/// Conjugators map by r -> (r,0), inner arguments by a -> (0,a).
/// Throws NotRelative for a plain generator with argument outside I.
ElementaryWord lift_word(const ElementaryWord& w, const Ideal& ideal);

/// Gamma * incl(bar Gamma)^-1. Throws NotInvertible.
Matrix normalize_relative(const Matrix& gamma);

/// (alpha_L)_(f,0) and (alpha_f)_L agree under (R (+) I)_(f,0) = R_f (+) I_f.
/// Throws NotADomain.
bool localization_compat(const Matrix& alpha, const Ideal& ideal,
                         const Element& f);

}  // namespace relsymp
