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

#include "relsymp/elementary.hpp"

namespace relsymp {

size_t sigma_index(size_t i) { return i % 2 ? i + 1 : i - 1; }

int eps(size_t i) { return i % 2 ? 1 : -1; }

namespace {

void check_generator(Family family, size_t size, size_t i, size_t j) {
  if (i < 1 || j < 1 || i > size || j > size || i == j)
    fail(Errc::BadIndex, "generator index (" + std::to_string(i) + "," +
                             std::to_string(j) + ") invalid for size " +
                             std::to_string(size));
  if (family == Family::Symplectic && size % 2)
    fail(Errc::BadIndex, "symplectic generators need even size");
}

}  // namespace

Matrix elem_generator(Family family, size_t size, size_t i, size_t j,
                      const Element& a) {
  check_generator(family, size, i, j);
  Matrix m = Matrix::identity(a.ring(), size);
  apply_generator_right(m, family, i, j, a);
  return m;
}

void apply_generator_right(Matrix& m, Family family, size_t i, size_t j,
                           const Element& a) {
  check_generator(family, m.cols(), i, j);
  if (a.is_zero()) return;
  const size_t ci = i - 1;
  const size_t cj = j - 1;
  // Column j gains a * column i.
  for (size_t r = 0; r < m.rows(); ++r)
    if (!m(r, ci).is_zero()) m(r, cj) += a * m(r, ci);
  if (family == Family::Linear || i == sigma_index(j)) return;
  // The mirrored term -(-1)^(i+j) a E_sigma(j)sigma(i): column sigma(i)
  // gains that multiple of column sigma(j). Columns i, sigma(j) are only read.
  const size_t src = sigma_index(j) - 1;
  const size_t dst = sigma_index(i) - 1;
  const Element b = (i + j) % 2 ? a : -a;
  for (size_t r = 0; r < m.rows(); ++r)
    if (!m(r, src).is_zero()) m(r, dst) += b * m(r, src);
}

ElementaryWord::ElementaryWord(Family family, size_t size, const Ring& ring)
    : family_(family), size_(size), ring_(ring) {
  if (family == Family::Symplectic && size % 2)
    fail(Errc::BadIndex, "symplectic words need even size");
}

void ElementaryWord::check_indices(size_t i, size_t j, const Element& a) const {
  check_generator(family_, size_, i, j);
  if (!(a.ring() == ring_))
    fail(Errc::DescriptorMismatch, "generator argument outside " +
                                       ring_.describe());
}

ElementaryWord& ElementaryWord::gen(size_t i, size_t j, const Element& a) {
  check_indices(i, j, a);
  atoms_.push_back(GenAtom{i, j, a});
  return *this;
}

ElementaryWord& ElementaryWord::conj(const ElementaryWord& outer, size_t i,
                                     size_t j, const Element& a) {
  check_indices(i, j, a);
  if (outer.family_ != family_ || outer.size_ != size_ ||
      !(outer.ring_ == ring_))
    fail(Errc::SizeMismatch, "conjugating word has a different shape");
  atoms_.push_back(
      ConjAtom{std::make_shared<const ElementaryWord>(outer), i, j, a});
  return *this;
}

ElementaryWord& ElementaryWord::push(const Atom& atom) {
  if (const auto* g = std::get_if<GenAtom>(&atom)) return gen(g->i, g->j, g->a);
  const auto& c = std::get<ConjAtom>(atom);
  check_indices(c.i, c.j, c.a);
  atoms_.push_back(c);
  return *this;
}

ElementaryWord& ElementaryWord::append(const ElementaryWord& w) {
  if (w.family_ != family_ || w.size_ != size_ || !(w.ring_ == ring_))
    fail(Errc::SizeMismatch, "appended word has a different shape");
  atoms_.insert(atoms_.end(), w.atoms_.begin(), w.atoms_.end());
  return *this;
}

ElementaryWord ElementaryWord::inverse() const {
  ElementaryWord out(family_, size_, ring_);
  for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) {
    if (const auto* g = std::get_if<GenAtom>(&*it)) {
      out.atoms_.push_back(GenAtom{g->i, g->j, -g->a});
    } else {
      const auto& c = std::get<ConjAtom>(*it);
      out.atoms_.push_back(ConjAtom{c.outer, c.i, c.j, -c.a});
    }
  }
  return out;
}

bool operator==(const ElementaryWord& a, const ElementaryWord& b) {
  if (a.family_ != b.family_ || a.size_ != b.size_ || !(a.ring_ == b.ring_) ||
      a.atoms_.size() != b.atoms_.size())
    return false;
  for (size_t k = 0; k < a.atoms_.size(); ++k) {
    const Atom& x = a.atoms_[k];
    const Atom& y = b.atoms_[k];
    if (x.index() != y.index()) return false;
    if (const auto* g = std::get_if<GenAtom>(&x)) {
      const auto& h = std::get<GenAtom>(y);
      if (g->i != h.i || g->j != h.j || !(g->a == h.a)) return false;
    } else {
      const auto& c = std::get<ConjAtom>(x);
      const auto& d = std::get<ConjAtom>(y);
      if (c.i != d.i || c.j != d.j || !(c.a == d.a) || !(*c.outer == *d.outer))
        return false;
    }
  }
  return true;
}

void apply_word_right(Matrix& m, const ElementaryWord& w) {
  if (m.cols() != w.size() || !(m.ring() == w.ring()))
    fail(Errc::SizeMismatch, "word does not act on this matrix");
  for (const Atom& atom : w.atoms()) {
    if (const auto* g = std::get_if<GenAtom>(&atom)) {
      apply_generator_right(m, w.family(), g->i, g->j, g->a);
    } else {
      const auto& c = std::get<ConjAtom>(atom);
      apply_word_right(m, *c.outer);
      apply_generator_right(m, w.family(), c.i, c.j, c.a);
      apply_word_right(m, c.outer->inverse());
    }
  }
}

Matrix word_eval(const ElementaryWord& w) {
  Matrix m = Matrix::identity(w.ring(), w.size());
  apply_word_right(m, w);
  return m;
}

std::vector<Element> row_times(const std::vector<Element>& v,
                               const ElementaryWord& w) {
  Matrix m = Matrix::row_vector(w.ring(), v);
  apply_word_right(m, w);
  return m.row(0);
}

bool certifies_relative(const ElementaryWord& w, const Ideal& ideal) {
  for (const Atom& atom : w.atoms()) {
    const Element& a = std::holds_alternative<GenAtom>(atom)
                           ? std::get<GenAtom>(atom).a
                           : std::get<ConjAtom>(atom).a;
    if (!ideal.contains(a)) return false;
  }
  return true;
}

namespace {

// [[I, M], [0, I]] (upper) or [[I, 0], [M, I]] (lower), one generator per
// nonzero entry of M in row-major order.
void push_block(ElementaryWord& w, const Matrix& m, bool upper) {
  const size_t n = m.rows();
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      if (m(r, c).is_zero()) continue;
      if (upper) w.gen(r + 1, n + c + 1, m(r, c));
      else w.gen(n + r + 1, c + 1, m(r, c));
    }
}

}  // namespace

ElementaryWord whitehead_word(const Matrix& gamma) {
  if (!gamma.is_square()) fail(Errc::NotSquare, "whitehead_word needs a square matrix");
  auto inv = try_inverse(gamma);
  if (!inv) fail(Errc::NotInvertible, "whitehead_word needs an invertible matrix");
  const Ring& ring = gamma.ring();
  const size_t n = gamma.rows();
  const Matrix id = Matrix::identity(ring, n);
  const Matrix neg_id = (-ring.one()) * id;
  ElementaryWord w(Family::Linear, 2 * n, ring);
  // diag(A, A^-1) = [[I,A],[0,I]] [[I,0],[-A^-1,I]] [[I,A],[0,I]] [[0,-I],[I,0]]
  push_block(w, gamma, true);
  push_block(w, (-ring.one()) * *inv, false);
  push_block(w, gamma, true);
  // [[0,-I],[I,0]] = [[I,-I],[0,I]] [[I,0],[I,I]] [[I,-I],[0,I]]
  push_block(w, neg_id, true);
  push_block(w, id, false);
  push_block(w, neg_id, true);
  return w;
}

ElementaryWord homotopy_word(const ElementaryWord& w, const std::string& var) {
  const Ring px = Ring::polynomial(w.ring(), var);
  const RingHom inc = RingHom::constant_inclusion(px);
  auto scaled = [&](const Element& a) {
    return Element::poly(px, {w.ring().zero(), a});
  };
  // Conjugators carry over unchanged through the constant inclusion.
  auto constant = [&](const ElementaryWord& outer, auto& self) -> ElementaryWord {
    ElementaryWord out(outer.family(), outer.size(), px);
    for (const Atom& atom : outer.atoms()) {
      if (const auto* g = std::get_if<GenAtom>(&atom)) {
        out.gen(g->i, g->j, inc(g->a));
      } else {
        const auto& c = std::get<ConjAtom>(atom);
        out.conj(self(*c.outer, self), c.i, c.j, inc(c.a));
      }
    }
    return out;
  };
  ElementaryWord out(w.family(), w.size(), px);
  for (const Atom& atom : w.atoms()) {
    if (const auto* g = std::get_if<GenAtom>(&atom)) {
      out.gen(g->i, g->j, scaled(g->a));
    } else {
      const auto& c = std::get<ConjAtom>(atom);
      out.conj(constant(*c.outer, constant), c.i, c.j, scaled(c.a));
    }
  }
  return out;
}

PrincipalReduction reduce_to_principal(const UnimodularRow& v) {
  if (!v.ideal)
    fail(Errc::NotRelative, "reduce_to_principal needs a relative row");
  if (!congruent_to_e1(v.entries, *v.ideal))
    fail(Errc::NotRelative, "row is not congruent to e1 modulo " +
                                v.ideal->describe());
  const Ring& ring = v.ring;
  const size_t n = v.size();
  const Element a1 = ring.one() - v.entries[0];
  ElementaryWord w(Family::Linear, n, ring);
  for (size_t k = 2; k <= n; ++k) w.gen(1, k, -v.entries[k - 1]);
  std::vector<Element> reduced = row_times(v.entries, w);
  // (v E)(E^-1 w) = 1.
  std::vector<Element> witness =
      times_column(word_eval(w.inverse()), v.witness);
  return {w, make_row(ring, std::move(reduced), std::move(witness),
                      Ideal(ring, {a1}))};
}

ElementaryWord row_reduce_euclidean(const std::vector<Element>& v) {
  if (v.empty()) fail(Errc::SizeMismatch, "empty row");
  const Ring& ring = v[0].ring();
  if (!ring.is_euclidean())
    fail(Errc::NotEuclidean, ring.describe() + " is not Euclidean");
  Element g = ring.zero();
  for (const Element& e : v) g = gcd(g, e);
  if (!g.is_one()) fail(Errc::NotUnimodular, "entries generate a proper ideal");
  const size_t n = v.size();
  ElementaryWord w(Family::Linear, n, ring);
  if (is_e1(v)) return w;
  if (n == 1)
    fail(Errc::NeedsDimensionThree, "a unit of length 1 cannot be cleared");

  std::vector<Element> cur = v;
  auto apply = [&](size_t i, size_t j, const Element& a) {
    w.gen(i, j, a);
    cur[j - 1] += a * cur[i - 1];
  };
  // Euclid across the columns until one nonzero entry remains.
  while (true) {
    size_t p = n;
    for (size_t k = 0; k < n; ++k)
      if (!cur[k].is_zero() &&
          (p == n || euclid_size(cur[k]) < euclid_size(cur[p])))
        p = k;
    bool reduced = false;
    for (size_t q = 0; q < n; ++q) {
      if (q == p || cur[q].is_zero()) continue;
      Element quot = divmod(cur[q], cur[p]).first;
      apply(p + 1, q + 1, -quot);
      reduced = true;
    }
    if (!reduced) break;
  }
  size_t p = 0;
  while (cur[p].is_zero()) ++p;
  const Element u = cur[p];
  const Element uinv = unit_inverse(u);
  if (p != 0) {
    apply(p + 1, 1, (ring.one() - cur[0]) * uinv);
    apply(1, p + 1, -u);
  } else if (!u.is_one()) {
    // (u, 0, ...) -> (u, u, ...) -> (1, u, ...) -> (1, 0, ...).
    apply(1, 2, ring.one());
    apply(2, 1, (ring.one() - u) * uinv);
    apply(1, 2, -u);
  }
  return w;
}

std::string to_string(const ElementaryWord& w) {
  std::string s;
  for (const Atom& atom : w.atoms()) {
    if (!s.empty()) s += " ";
    if (const auto* g = std::get_if<GenAtom>(&atom)) {
      s += "gen(" + std::to_string(g->i) + "," + std::to_string(g->j) + "," +
           to_string(g->a) + ")";
    } else {
      const auto& c = std::get<ConjAtom>(atom);
      s += "conj(" + to_string(*c.outer) + "; " + std::to_string(c.i) + "," +
           std::to_string(c.j) + "," + to_string(c.a) + ")";
    }
  }
  return s;
}

}  // namespace relsymp
