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

// Slow, obviously-correct reference computations for the unit tests. None
// of these share code with the library routines they check.

#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "relsymp/matrix.hpp"

namespace oracle {

using relsymp::Element;
using relsymp::Matrix;
using relsymp::Ring;

inline int perm_sign(const std::vector<size_t>& p) {
  int s = 1;
  for (size_t a = 0; a < p.size(); ++a)
    for (size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) s = -s;
  return s;
}

/// Leibniz sum over all permutations.
inline Element leibniz_det(const Matrix& m) {
  const size_t n = m.rows();
  std::vector<size_t> p(n);
  std::iota(p.begin(), p.end(), size_t{0});
  Element total = m.ring().zero();
  do {
    Element term = m.ring().from_int(perm_sign(p));
    for (size_t r = 0; r < n; ++r) term *= m(r, p[r]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Sum over perfect matchings {(p1,q1),...} with p < q, signed by the
/// permutation (p1 q1 p2 q2 ...).
inline Element matching_pfaffian(const Matrix& m) {
  const size_t n = m.rows();
  Element total = m.ring().zero();
  std::vector<size_t> order;
  std::vector<bool> used(n, false);
  auto rec = [&](auto& self) -> void {
    size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      Element term = m.ring().from_int(perm_sign(order));
      for (size_t k = 0; k < order.size(); k += 2) term *= m(order[k], order[k + 1]);
      total += term;
      return;
    }
    used[first] = true;
    for (size_t q = first + 1; q < n; ++q) {
      if (used[q]) continue;
      used[q] = true;
      order.push_back(first);
      order.push_back(q);
      self(self);
      order.pop_back();
      order.pop_back();
      used[q] = false;
    }
    used[first] = false;
  };
  rec(rec);
  return total;
}

inline size_t sig(size_t i) { return i % 2 == 0 ? i - 1 : i + 1; }

/// se_ij(a) from its entrywise definition (1-based indices).
inline Matrix se(const Ring& r, size_t size, size_t i, size_t j, const Element& a) {
  Matrix m = Matrix::identity(r, size);
  m(i - 1, j - 1) += a;
  if (i != sig(j)) {
    const Element c = (i + j) % 2 == 0 ? a : -a;
    m(sig(j) - 1, sig(i) - 1) -= c;
  }
  return m;
}

inline Matrix e(const Ring& r, size_t size, size_t i, size_t j, const Element& a) {
  Matrix m = Matrix::identity(r, size);
  m(i - 1, j - 1) += a;
  return m;
}

/// <u,w> = sum_i eps_i u_i w_sigma(i).
inline Element form(const std::vector<Element>& u, const std::vector<Element>& w) {
  Element s = u[0].ring().zero();
  for (size_t i = 1; i <= u.size(); ++i) {
    const Element t = u[i - 1] * w[sig(i) - 1];
    s += i % 2 == 1 ? t : -t;
  }
  return s;
}

/// Matrix of w -> w + (<v,w> + a<u,w>) u + <u,w> v, column by column.
inline Matrix esd(const std::vector<Element>& u, const std::vector<Element>& v,
                  const Element& a) {
  const Ring& r = a.ring();
  const size_t n = u.size();
  Matrix m(r, n, n);
  for (size_t c = 0; c < n; ++c) {
    std::vector<Element> w(n, r.zero());
    w[c] = r.one();
    const Element uw = form(u, w), vw = form(v, w);
    for (size_t k = 0; k < n; ++k) m(k, c) = w[k] + (vw + a * uw) * u[k] + uw * v[k];
  }
  return m;
}

}  // namespace oracle
