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
#include <vector>

#include "relsymp/matrix.hpp"

namespace relsymp {

/// A row v with a witness column w such that sum v_k w_k = 1, optionally
/// relative to an ideal I (v = e_1 mod I).
struct UnimodularRow {
  Ring ring;
  std::vector<Element> entries;
  std::vector<Element> witness;
  std::optional<Ideal> ideal;

  size_t size() const noexcept { return entries.size(); }
};

/// Validates the witness identity (NotUnimodular) and, when `ideal` is
/// given, the congruence v = e_1 mod I (NotRelative).
UnimodularRow make_row(const Ring& ring, std::vector<Element> entries,
                       std::vector<Element> witness,
                       std::optional<Ideal> ideal = std::nullopt);

bool witness_holds(const UnimodularRow& v);
/// v_1 - 1 and v_2..v_n lie in I.
bool congruent_to_e1(const std::vector<Element>& v, const Ideal& ideal);
/// Row e_1 of length n with witness e_1.
UnimodularRow unit_row(const Ring& ring, size_t n,
                       std::optional<Ideal> ideal = std::nullopt);

/// v as a 1 x n matrix, and v * m as a plain vector.
Matrix as_row_matrix(const UnimodularRow& v);
std::vector<Element> row_times(const std::vector<Element>& v, const Matrix& m);
/// m * w for a column w.
std::vector<Element> times_column(const Matrix& m, const std::vector<Element>& w);
bool is_e1(const std::vector<Element>& v);

}  // namespace relsymp
