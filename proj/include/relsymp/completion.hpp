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

#pragma once

#include <optional>

#include "relsymp/lifts.hpp"

namespace relsymp {

/// Glues alpha1 over R_s and alpha2 over R_t (s, t comaximal in a Euclidean
/// domain R) into the unique alpha over R with alpha_s = alpha1 and
/// alpha_t = alpha2; symplectic and relative to I. Throws NotComaximal,
/// Incompatible, NotDivisible, HypothesisFailed.
Matrix patch_symplectic(const Element& s, const Element& t, const Matrix& alpha1,
                        const Matrix& alpha2, const Ideal& ideal);

/// a/s^k = b/t^m in R_st  =>  s^k | a; returns a/s^k. Throws Incompatible,
/// NotDivisible.
Element patch_entry(const Element& a, unsigned long k, const Element& s,
                    const Element& b, unsigned long m, const Element& t);

/// Word w with v * word_eval(w) = e_1, verified. Euclidean rings use
/// gcd-driven column operations; excision rings R (+) <d> over a Euclidean
/// R use a gcd-guided relative reduction (length >= 3); anything else falls
/// back to enumeration of words over small integer arguments. `budget`
/// bounds the number of candidates tried. Throws ExhaustedBudget.
ElementaryWord bounded_search_completer(const std::vector<Element>& v,
                                        size_t budget);

struct ExcisionCompletion {
  UnimodularRow lifted;
  ElementaryWord word;     // over R (+) I, completing the lifted row
  Matrix normalized;       // Gamma * incl(bar Gamma)^-1
  Matrix gamma;            // pi(normalized) over R
};

/// lift -> complete over R (+) I -> normalize -> project, with the running
/// invariant v_L Gamma = e_1 checked between stages.
ExcisionCompletion complete_row_via_excision(const UnimodularRow& v,
                                             size_t budget);

/// v * gamma = e_1, and gamma = I mod I when v is relative.
/// Throws SizeMismatch.
bool verify_completion(const UnimodularRow& v, const Matrix& gamma);
bool verify_completion(const UnimodularRow& v, const ElementaryWord& gamma);

}  // namespace relsymp
