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

#include "relsymp/lifts.hpp"

namespace relsymp {

namespace {

const Ideal& row_ideal(const UnimodularRow& v) {
  if (!v.ideal) fail(Errc::NotRelative, "row carries no ideal");
  if (!congruent_to_e1(v.entries, *v.ideal))
    fail(Errc::NotRelative, "row is not congruent to e1 modulo " +
                                v.ideal->describe());
  return *v.ideal;
}

bool pairs_to_one(const std::vector<Element>& v, const std::vector<Element>& w) {
  Element s = v[0].ring().zero();
  for (size_t k = 0; k < v.size(); ++k) s += v[k] * w[k];
  return s.is_one();
}

// Odometer over c in [-budget, budget]^n.
std::optional<std::vector<Element>> enumerate_witness(
    const std::vector<Element>& v, const Element& d, long budget) {
  const Ring& ring = d.ring();
  const size_t n = v.size();
  constexpr double kMaxCandidates = 2e6;
  double total = 1;
  for (size_t k = 0; k < n; ++k) total *= static_cast<double>(2 * budget + 1);
  if (total > kMaxCandidates) return std::nullopt;
  std::vector<long> c(n, -budget);
  while (true) {
    std::vector<Element> w(n);
    for (size_t k = 0; k < n; ++k) w[k] = d * ring.from_int(c[k]);
    w[0] += ring.one();
    if (pairs_to_one(v, w)) return w;
    size_t k = 0;
    while (k < n && c[k] == budget) c[k++] = -budget;
    if (k == n) return std::nullopt;
    ++c[k];
  }
}

}  // namespace

std::vector<Element> find_relative_witness(const UnimodularRow& v, long budget) {
  const Ideal& I = row_ideal(v);
  const Ring& ring = v.ring;
  const size_t n = v.size();
  if (v.witness.size() == n && congruent_to_e1(v.witness, I) &&
      pairs_to_one(v.entries, v.witness))
    return v.witness;
  auto d = I.principal_generator();
  if (!d) fail(Errc::WitnessNotFound, "no principal generator for " + I.describe());
  if (d->is_zero()) {
    // I = 0 forces v = e_1.
    std::vector<Element> e(n, ring.zero());
    e[0] = ring.one();
    return e;
  }
  if (ring.is_euclidean()) {
    // With v_1 - 1 = d m and sum v_k p_k = 1, w = e_1 - d m p.
    const Element m = exact_divide(v.entries[0] - ring.one(), *d);
    std::vector<Element> p(n, ring.zero());
    Element g = ring.zero();
    for (size_t k = 0; k < n; ++k) {
      auto [h, s, t] = ext_gcd(g, v.entries[k]);
      for (size_t j = 0; j < k; ++j) p[j] *= s;
      p[k] = t;
      g = h;
    }
    if (!g.is_one()) fail(Errc::WitnessNotFound, "row is not unimodular");
    std::vector<Element> w(n);
    for (size_t k = 0; k < n; ++k) w[k] = -(*d * m * p[k]);
    w[0] += ring.one();
    return w;
  }
  if (auto w = enumerate_witness(v.entries, *d, budget)) return *w;
  fail(Errc::WitnessNotFound, "no relative witness within budget " +
                                  std::to_string(budget));
}

UnimodularRow lift_row(const UnimodularRow& v,
                       const std::optional<std::vector<Element>>& witness,
                       long budget) {
  const Ideal& I = row_ideal(v);
  std::vector<Element> w;
  if (witness) {
    if (witness->size() != v.size())
      fail(Errc::SizeMismatch, "witness length differs from row length");
    if (!congruent_to_e1(*witness, I) || !pairs_to_one(v.entries, *witness))
      fail(Errc::WitnessNotFound, "supplied witness is not a relative witness");
    w = *witness;
  } else {
    w = find_relative_witness(v, budget);
  }
  const Ring ex = Ring::excision(I);
  const Ring& base = v.ring;
  std::vector<Element> vl, wl;
  for (size_t k = 0; k < v.size(); ++k) {
    const Element top = k == 0 ? base.one() : base.zero();
    vl.push_back(Element::pair_unchecked(ex, top, v.entries[k] - top));
    wl.push_back(Element::pair_unchecked(ex, top, w[k] - top));
  }
  return make_row(ex, std::move(vl), std::move(wl), Ideal::split(ex));
}

Matrix lift_ideal_matrix(const Matrix& beta, const Ideal& ideal) {
  if (!(beta.ring() == ideal.ring()))
    fail(Errc::DescriptorMismatch, "ideal of a different ring");
  const Ring ex = Ring::excision(ideal);
  Matrix out(ex, beta.rows(), beta.cols());
  for (size_t r = 0; r < beta.rows(); ++r)
    for (size_t c = 0; c < beta.cols(); ++c) {
      if (!ideal.contains(beta(r, c)))
        fail(Errc::NotRelative, "entry " + to_string(beta(r, c)) +
                                    " is not in " + ideal.describe());
      out(r, c) = Element::pair_unchecked(ex, ideal.ring().zero(), beta(r, c));
    }
  return out;
}

Matrix include_matrix(const Matrix& alpha, const Ideal& ideal) {
  return apply_hom(RingHom::canonical_inclusion(Ring::excision(ideal)), alpha);
}

Matrix lift_matrix(const Matrix& alpha, const Ideal& ideal, GroupTag tag) {
  if (!alpha.is_square()) fail(Errc::NotSquare, "lift_matrix needs a square matrix");
  const size_t n = alpha.rows();
  const Matrix id = Matrix::identity(alpha.ring(), n);
  if (tag == GroupTag::SL && !det(alpha).is_one())
    fail(Errc::NotSpecial, "determinant is not 1");
  if (tag == GroupTag::Sp &&
      (n % 2 || !is_symplectic_wrt(alpha, chi(n / 2, alpha.ring()))))
    fail(Errc::NotSpecial, "matrix is not symplectic");
  const Matrix gl = lift_ideal_matrix(alpha - id, ideal);
  const Matrix out = Matrix::identity(gl.ring(), n) + gl;
  if (tag == GroupTag::SL && !det(out).is_one())
    fail(Errc::HypothesisFailed, "lift lost determinant 1");
  if (tag == GroupTag::Sp && !is_symplectic_wrt(out, chi(n / 2, out.ring())))
    fail(Errc::HypothesisFailed, "lift is not symplectic");
  return out;
}

Matrix lift_alt(const Matrix& alpha, const Ideal& ideal) {
  if (!alpha.is_square() || alpha.rows() % 2)
    fail(Errc::OddSize, "lift_alt needs an even square matrix");
  const size_t n = alpha.rows() / 2;
  const Matrix gl = lift_ideal_matrix(alpha - chi(n, alpha.ring()), ideal);
  return chi(n, gl.ring()) + gl;
}

ElementaryWord lift_word(const ElementaryWord& w, const Ideal& ideal) {
  if (!(w.ring() == ideal.ring()))
    fail(Errc::DescriptorMismatch, "ideal of a different ring");
  const Ring ex = Ring::excision(ideal);
  const RingHom inc = RingHom::canonical_inclusion(ex);
  auto inner = [&](const Element& a) {
    if (!ideal.contains(a))
      fail(Errc::NotRelative, "argument " + to_string(a) + " is not in " +
                                  ideal.describe());
    return Element::pair_unchecked(ex, ideal.ring().zero(), a);
  };
  auto outer = [&](const ElementaryWord& o, auto& self) -> ElementaryWord {
    ElementaryWord out(o.family(), o.size(), ex);
    for (const Atom& atom : o.atoms()) {
      if (const auto* g = std::get_if<GenAtom>(&atom)) {
        out.gen(g->i, g->j, inc(g->a));
      } else {
        const auto& c = std::get<ConjAtom>(atom);
        out.conj(self(*c.outer, self), c.i, c.j, inc(c.a));
      }
    }
    return out;
  };
  ElementaryWord out(w.family(), w.size(), ex);
  for (const Atom& atom : w.atoms()) {
    if (const auto* g = std::get_if<GenAtom>(&atom)) {
      out.gen(g->i, g->j, inner(g->a));
    } else {
      const auto& c = std::get<ConjAtom>(atom);
      out.conj(outer(*c.outer, outer), c.i, c.j, inner(c.a));
    }
  }
  return out;
}

Matrix normalize_relative(const Matrix& gamma) {
  const Ring& ex = gamma.ring();
  if (!ex.valid() || ex.kind() != RingKind::Excision)
    fail(Errc::DescriptorMismatch, "normalize_relative needs an excision ring");
  const Matrix bar = apply_hom(RingHom::bar_split(ex), gamma);
  auto inv = try_inverse(bar);
  if (!inv) fail(Errc::NotInvertible, "bar of the matrix is not invertible");
  return gamma * apply_hom(RingHom::canonical_inclusion(ex), *inv);
}

bool localization_compat(const Matrix& alpha, const Ideal& ideal,
                         const Element& f) {
  const Ring& base = alpha.ring();
  if (!base.is_domain())
    fail(Errc::NotADomain, base.describe() + " is not an integral domain");
  const Ring ex = Ring::excision(ideal);
  const Matrix al = lift_matrix(alpha, ideal);
  // Left: localize the lift at (f,0), then apply the canonical iso.
  const Ring ex_f = Ring::localized(Element::pair_unchecked(ex, f, base.zero()));
  const Matrix left = apply_hom(RingHom::excision_localization(ex_f),
                                apply_hom(RingHom::localization_inclusion(ex_f), al));
  // Right: lift the localization.
  const Ring rf = Ring::localized(f);
  const Matrix af = apply_hom(RingHom::localization_inclusion(rf), alpha);
  const Matrix right = lift_matrix(af, localize_ideal(ideal, rf));
  return left == right;
}

}  // namespace relsymp
