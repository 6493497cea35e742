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

#include "relsymp/steinberg.hpp"

namespace relsymp {

Element symplectic_form(const Vec& u, const Vec& w) {
  if (u.size() != w.size() || u.empty() || u.size() % 2)
    fail(Errc::SizeMismatch, "form needs two vectors of equal even length");
  Element s = u[0].ring().zero();
  for (size_t i = 1; i <= u.size(); ++i) {
    const Element& x = u[i - 1];
    if (x.is_zero()) continue;
    Element t = x * w[sigma_index(i) - 1];
    if (eps(i) > 0) s += t;
    else s -= t;
  }
  return s;
}

Vec basis_vector(const Ring& ring, size_t size, size_t i) {
  if (i < 1 || i > size) fail(Errc::BadIndex, "basis index out of range");
  Vec e(size, ring.zero());
  e[i - 1] = ring.one();
  return e;
}

Vec scale(const Element& a, const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (const Element& x : v) out.push_back(a * x);
  return out;
}

Vec add(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) fail(Errc::SizeMismatch, "vector lengths differ");
  Vec out = u;
  for (size_t k = 0; k < v.size(); ++k) out[k] += v[k];
  return out;
}

Vec matrix_times(const Matrix& m, const Vec& v) { return times_column(m, v); }

Vec esd_apply(const Vec& u, const Vec& v, const Element& a, const Vec& w) {
  if (!symplectic_form(u, v).is_zero())
    fail(Errc::NotIsotropicPair, "<u,v> is not zero");
  const Element uw = symplectic_form(u, w);
  const Element vw = symplectic_form(v, w);
  return add(add(w, scale(vw + a * uw, u)), scale(uw, v));
}

Matrix esd_matrix(const Vec& u, const Vec& v, const Element& a) {
  if (!symplectic_form(u, v).is_zero())
    fail(Errc::NotIsotropicPair, "<u,v> is not zero");
  const size_t size = u.size();
  const Ring& ring = a.ring();
  Matrix m(ring, size, size);
  for (size_t c = 1; c <= size; ++c) {
    Vec img = esd_apply(u, v, a, basis_vector(ring, size, c));
    for (size_t r = 0; r < size; ++r) m(r, c - 1) = img[r];
  }
  return m;
}

Matrix transvection(size_t size, size_t i, size_t j, const Element& a) {
  if (size % 2 || i < 1 || j < 1 || i > size || j > size || i == j)
    fail(Errc::BadIndex, "transvection index out of range");
  const Ring& ring = a.ring();
  const Vec ei = basis_vector(ring, size, i);
  if (j == sigma_index(i)) {
    const Element b = eps(i) > 0 ? a : -a;
    return esd_matrix(ei, Vec(size, ring.zero()), b);
  }
  const size_t sj = sigma_index(j);
  const Element b = eps(sj) > 0 ? a : -a;
  return esd_matrix(ei, scale(b, basis_vector(ring, size, sj)), ring.zero());
}

SteinbergWord::SteinbergWord(size_t n, const Ring& ring) : n_(n), ring_(ring) {
  if (n < 3) fail(Errc::InvalidArgument, "Steinberg words need n >= 3");
}

SteinbergWord& SteinbergWord::x(size_t i, size_t j, const Element& a, int exp) {
  if (i < 1 || j < 1 || i > 2 * n_ || j > 2 * n_ || i == j)
    fail(Errc::BadIndex, "Steinberg generator index out of range");
  if (exp != 1 && exp != -1)
    fail(Errc::InvalidArgument, "exponent must be 1 or -1");
  if (!(a.ring() == ring_))
    fail(Errc::DescriptorMismatch, "argument outside " + ring_.describe());
  atoms_.push_back({i, j, a, exp});
  return *this;
}

SteinbergWord& SteinbergWord::append(const SteinbergWord& w) {
  if (w.n_ != n_ || !(w.ring_ == ring_))
    fail(Errc::SizeMismatch, "appended word has a different shape");
  atoms_.insert(atoms_.end(), w.atoms_.begin(), w.atoms_.end());
  return *this;
}

SteinbergWord SteinbergWord::inverse() const {
  SteinbergWord out(n_, ring_);
  for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it)
    out.atoms_.push_back({it->i, it->j, it->a, -it->exp});
  return out;
}

bool operator==(const SteinbergWord& a, const SteinbergWord& b) {
  if (a.n_ != b.n_ || !(a.ring_ == b.ring_) ||
      a.atoms_.size() != b.atoms_.size())
    return false;
  for (size_t k = 0; k < a.atoms_.size(); ++k) {
    const auto& x = a.atoms_[k];
    const auto& y = b.atoms_[k];
    if (x.i != y.i || x.j != y.j || x.exp != y.exp || !(x.a == y.a))
      return false;
  }
  return true;
}

Matrix steinberg_phi(const SteinbergWord& w) {
  const size_t size = 2 * w.half_rank();
  Matrix m = Matrix::identity(w.ring(), size);
  for (const SteinbergAtom& t : w.atoms())
    m = m * transvection(size, t.i, t.j, t.exp > 0 ? t.a : -t.a);
  return m;
}

namespace {

SteinbergWord sw(size_t n, size_t i, size_t j, const Element& r) {
  SteinbergWord w(n, r.ring());
  w.x(i, j, r).x(j, i, -unit_inverse(r)).x(i, j, r);
  return w;
}

SteinbergWord sh(size_t n, size_t i, size_t j, const Element& r) {
  SteinbergWord w = sw(n, i, j, r);
  w.append(sw(n, i, j, -r.ring().one()));
  return w;
}

}  // namespace

SteinbergWord symbol_build(SymbolKind kind, const Element& r,
                           const std::optional<Element>& s, size_t n,
                           std::optional<std::pair<size_t, size_t>> ij) {
  if (!is_unit(r)) fail(Errc::NotAUnit, to_string(r) + " is not a unit");
  if (s && !is_unit(*s)) fail(Errc::NotAUnit, to_string(*s) + " is not a unit");
  std::pair<size_t, size_t> idx =
      ij ? *ij
         : (kind == SymbolKind::Square ? std::pair<size_t, size_t>{1, 2}
                                       : std::pair<size_t, size_t>{1, 3});
  const auto [i, j] = idx;
  switch (kind) {
    case SymbolKind::Sw:
      return sw(n, i, j, r);
    case SymbolKind::Sh:
      return sh(n, i, j, r);
    case SymbolKind::Curly:
    case SymbolKind::Square: {
      if (!s) fail(Errc::InvalidArgument, "symbol needs two units");
      // {r,s}_ij = sh(rs) sh(r)^-1 sh(s)^-1
      SteinbergWord w = sh(n, i, j, r * *s);
      w.append(sh(n, i, j, r).inverse());
      w.append(sh(n, i, j, *s).inverse());
      return w;
    }
  }
  fail(Errc::InvalidArgument, "unknown symbol kind");
}

bool kernel_check(const SteinbergWord& w) {
  const Matrix m = steinberg_phi(w);
  return m == Matrix::identity(w.ring(), m.rows());
}

bool residue_trivial(const SteinbergWord& w, const Ideal& ideal) {
  if (!(ideal.ring() == w.ring()))
    fail(Errc::DescriptorMismatch, "ideal of a different ring");
  const RingHom h = RingHom::residue_mod(ideal);
  SteinbergWord reduced(w.half_rank(), h.target());
  for (const SteinbergAtom& t : w.atoms()) reduced.x(t.i, t.j, h(t.a), t.exp);
  return kernel_check(reduced);
}

std::string to_string(const SteinbergWord& w) {
  std::string s;
  for (const SteinbergAtom& t : w.atoms()) {
    if (!s.empty()) s += " ";
    s += "x(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," +
         to_string(t.a) + ")";
    if (t.exp < 0) s += "^-1";
  }
  return s;
}

}  // namespace relsymp
