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

#include "relsymp/row.hpp"

namespace relsymp {

UnimodularRow make_row(const Ring& ring, std::vector<Element> entries,
                       std::vector<Element> witness,
                       std::optional<Ideal> ideal) {
  if (entries.empty() || entries.size() != witness.size())
    fail(Errc::SizeMismatch, "row and witness lengths differ");
  for (size_t k = 0; k < entries.size(); ++k)
    if (!(entries[k].ring() == ring) || !(witness[k].ring() == ring))
      fail(Errc::DescriptorMismatch, "row entry outside " + ring.describe());
  UnimodularRow v{ring, std::move(entries), std::move(witness),
                  std::move(ideal)};
  if (!witness_holds(v))
    fail(Errc::NotUnimodular, "witness does not pair with the row to 1");
  if (v.ideal && !congruent_to_e1(v.entries, *v.ideal))
    fail(Errc::NotRelative, "row is not congruent to e1 modulo " +
                                v.ideal->describe());
  return v;
}

bool witness_holds(const UnimodularRow& v) {
  Element s = v.ring.zero();
  for (size_t k = 0; k < v.entries.size(); ++k)
    s += v.entries[k] * v.witness[k];
  return s.is_one();
}

bool congruent_to_e1(const std::vector<Element>& v, const Ideal& ideal) {
  for (size_t k = 0; k < v.size(); ++k) {
    Element d = k == 0 ? v[0] - v[0].ring().one() : v[k];
    if (!ideal.contains(d)) return false;
  }
  return true;
}

UnimodularRow unit_row(const Ring& ring, size_t n, std::optional<Ideal> ideal) {
  std::vector<Element> e(n, ring.zero());
  e[0] = ring.one();
  return UnimodularRow{ring, e, e, std::move(ideal)};
}

Matrix as_row_matrix(const UnimodularRow& v) {
  return Matrix::row_vector(v.ring, v.entries);
}

std::vector<Element> row_times(const std::vector<Element>& v, const Matrix& m) {
  if (v.size() != m.rows())
    fail(Errc::SizeMismatch, "row length differs from matrix height");
  std::vector<Element> out(m.cols(), m.ring().zero());
  for (size_t c = 0; c < m.cols(); ++c)
    for (size_t r = 0; r < m.rows(); ++r) out[c] += v[r] * m(r, c);
  return out;
}

std::vector<Element> times_column(const Matrix& m,
                                  const std::vector<Element>& w) {
  if (w.size() != m.cols())
    fail(Errc::SizeMismatch, "column length differs from matrix width");
  std::vector<Element> out(m.rows(), m.ring().zero());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * w[c];
  return out;
}

bool is_e1(const std::vector<Element>& v) {
  for (size_t k = 0; k < v.size(); ++k)
    if (k == 0 ? !v[0].is_one() : !v[k].is_zero()) return false;
  return !v.empty();
}

}  // namespace relsymp
