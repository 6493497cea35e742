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

#include "relsymp/witt.hpp"

#include <algorithm>

namespace relsymp {

AltRep make_alt(Matrix matrix, std::optional<Ideal> ideal) {
  if (!matrix.is_square() || matrix.rows() % 2)
    fail(Errc::OddSize, "alternating representatives have even size");
  if (!is_alternating(matrix))
    fail(Errc::NotAlternating, "matrix is not alternating");
  const Element pf = pfaffian(matrix);
  if (!is_unit(pf)) fail(Errc::NotInvertible, "Pfaffian is not a unit");
  if (ideal && !is_relative_to(matrix, *ideal,
                               chi(matrix.rows() / 2, matrix.ring())))
    fail(Errc::NotRelative, "matrix is not congruent to chi modulo " +
                                ideal->describe());
  return AltRep{std::move(matrix), std::move(ideal), pf.is_one()};
}

ElementaryWord pad_word(const ElementaryWord& w, size_t size) {
  if (size < w.size()) fail(Errc::SizeMismatch, "padding cannot shrink a word");
  ElementaryWord out(w.family(), size, w.ring());
  for (const Atom& atom : w.atoms()) {
    if (const auto* g = std::get_if<GenAtom>(&atom)) {
      out.gen(g->i, g->j, g->a);
    } else {
      const auto& c = std::get<ConjAtom>(atom);
      out.conj(pad_word(*c.outer, size), c.i, c.j, c.a);
    }
  }
  return out;
}

EquivCertificate pad_certificate(const EquivCertificate& cert) {
  return {cert.t + 1, pad_word(cert.word, cert.word.size() + 2)};
}

namespace {

void same_relativity(const AltRep& a, const AltRep& b) {
  if (!(a.matrix.ring() == b.matrix.ring()))
    fail(Errc::DescriptorMismatch, "representatives over different rings");
  if (a.ideal.has_value() != b.ideal.has_value() ||
      (a.ideal && a.ideal->describe() != b.ideal->describe()))
    fail(Errc::DescriptorMismatch, "representatives relative to different ideals");
}

}  // namespace

AltRep witt_perp(const AltRep& a, const AltRep& b) {
  same_relativity(a, b);
  return AltRep{perp(a.matrix, b.matrix), a.ideal,
                a.pfaffian_one && b.pfaffian_one};
}

AltRep witt_inverse_rep(const AltRep& a) {
  auto inv = try_inverse(a.matrix);
  if (!inv) fail(Errc::NotInvertible, "representative is not invertible");
  const Matrix s = sigma(a.half_size(), a.matrix.ring());
  return make_alt(s * *inv * s, a.ideal);
}

Element witt_pf(const AltRep& a) {
  const Element pf = pfaffian(a.matrix);
  if (!is_unit(pf)) fail(Errc::PfaffianNotUnit, "Pfaffian is not a unit");
  if (a.ideal && !a.ideal->contains(pf - pf.ring().one()))
    fail(Errc::PfaffianNotUnit, "Pfaffian " + to_string(pf) +
                                    " is not congruent to 1 modulo " +
                                    a.ideal->describe());
  return pf;
}

AltRep pf_section(const Element& a, const Ideal& ideal) {
  if (!(a.ring() == ideal.ring()))
    fail(Errc::DescriptorMismatch, "element outside the ideal's ring");
  if (!is_unit(a) || !ideal.contains(a - a.ring().one()))
    fail(Errc::NotInKernelC, to_string(a) + " is not in C");
  const Ring& r = a.ring();
  return make_alt(Matrix::from_rows(r, {{r.zero(), a}, {-a, r.zero()}}), ideal);
}

AltRep hyperbolic_H(const Matrix& alpha, std::optional<Ideal> ideal) {
  if (!alpha.is_square() || alpha.rows() % 2)
    fail(Errc::OddSize, "hyperbolic map needs an even square matrix");
  if (!is_invertible(alpha)) fail(Errc::NotInvertible, "matrix is not invertible");
  const Matrix h = transpose(alpha) * chi(alpha.rows() / 2, alpha.ring()) * alpha;
  if (ideal && !is_relative_to(alpha, *ideal)) ideal.reset();
  return make_alt(h, std::move(ideal));
}

Matrix split_conjugator(const Element& b) {
  const Ring& r = b.ring();
  const Matrix gb = Matrix::from_rows(r, {{b, r.zero()}, {r.zero(), r.one()}});
  return perp(inverse(gb), gb);
}

EquivCertificate split_certificate(const Element& b) {
  const Ring& r = b.ring();
  const Matrix gb = Matrix::from_rows(r, {{b, r.zero()}, {r.zero(), r.one()}});
  // eps = (gamma_b^-1 (+) gamma_b)^-1 (+) I_4 = gamma_b (+) gamma_b^-1 (+) I_4.
  return {0, pad_word(whitehead_word(gb), 8)};
}

EquivCheck check_equiv_detail(const AltRep& a, const AltRep& b,
                              const EquivCertificate& cert) {
  same_relativity(a, b);
  const Ring& r = a.matrix.ring();
  const size_t m = a.half_size();
  const size_t n = b.half_size();
  const size_t total = 2 * (m + n + cert.t);
  if (cert.word.size() != total || !(cert.word.ring() == r))
    fail(Errc::SizeMismatch, "certificate word has size " +
                                 std::to_string(cert.word.size()) + ", expected " +
                                 std::to_string(total));
  const Matrix eps_m = word_eval(cert.word);
  const Matrix lhs = perp(a.matrix, chi(n + cert.t, r));
  const Matrix rhs = transpose(eps_m) * perp(b.matrix, chi(m + cert.t, r)) * eps_m;
  EquivCheck out;
  out.identity_holds = lhs == rhs;
  if (!a.ideal) {
    out.level = RelativeLevel::Syntactic;
  } else if (certifies_relative(cert.word, *a.ideal)) {
    out.level = RelativeLevel::Syntactic;
  } else if (is_relative_to(eps_m, *a.ideal)) {
    out.level = RelativeLevel::ResidueOnly;
  } else {
    out.level = RelativeLevel::None;
  }
  out.valid = out.identity_holds && out.level != RelativeLevel::None;
  return out;
}

bool check_equiv(const AltRep& a, const AltRep& b, const EquivCertificate& cert) {
  return check_equiv_detail(a, b, cert).valid;
}

EquivCertificate search_equiv(const AltRep& a, const AltRep& b, size_t budget) {
  same_relativity(a, b);
  const Ring& r = a.matrix.ring();
  const size_t size = 2 * (a.half_size() + b.half_size());
  ElementaryWord empty(Family::Linear, size, r);
  size_t spent = 0;
  if (budget == 0) fail(Errc::ExhaustedBudget, "search budget exhausted");
  ++spent;
  if (check_equiv(a, b, {0, empty})) return {0, empty};

  Element unit = r.one();
  if (a.ideal) {
    auto d = a.ideal->principal_generator();
    if (!d) fail(Errc::ExhaustedBudget, "no principal generator to enumerate");
    unit = *d;
  }
  if (unit.is_zero()) fail(Errc::ExhaustedBudget, "zero ideal has no nontrivial words");
  // Single atoms ordered by height, then sign, then index pair.
  constexpr long kMaxHeight = 3;
  std::vector<GenAtom> atoms;
  for (long h = 1; h <= kMaxHeight; ++h)
    for (long sgn : {1L, -1L})
      for (size_t i = 1; i <= size; ++i)
        for (size_t j = 1; j <= size; ++j)
          if (i != j) atoms.push_back({i, j, r.from_int(sgn * h) * unit});

  const size_t na = atoms.size();
  constexpr size_t kChunk = 256;
  for (size_t len = 1; len <= 3; ++len) {
    size_t count = 1;
    for (size_t k = 0; k < len; ++k) count *= na;
    for (size_t start = 0; start < count; start += kChunk) {
      if (spent >= budget) fail(Errc::ExhaustedBudget, "search budget exhausted");
      const size_t stop = std::min({count, start + kChunk, start + (budget - spent)});
      std::vector<char> ok(stop - start, 0);
      std::vector<ElementaryWord> words(stop - start);
#pragma omp parallel for schedule(static)
      for (long idx = static_cast<long>(start); idx < static_cast<long>(stop); ++idx) {
        ElementaryWord w(Family::Linear, size, r);
        size_t code = static_cast<size_t>(idx);
        for (size_t k = 0; k < len; ++k) {
          const GenAtom& g = atoms[code % na];
          w.gen(g.i, g.j, g.a);
          code /= na;
        }
        try {
          ok[static_cast<size_t>(idx) - start] = check_equiv(a, b, {0, w}) ? 1 : 0;
        } catch (const Error&) {
          ok[static_cast<size_t>(idx) - start] = 0;
        }
        words[static_cast<size_t>(idx) - start] = std::move(w);
      }
      spent += stop - start;
      for (size_t k = 0; k < ok.size(); ++k)
        if (ok[k]) return {0, words[k]};
    }
  }
  fail(Errc::ExhaustedBudget, "search space exhausted");
}

Matrix kernel_of_H_construct(const Matrix& alpha, const AltRep& gamma,
                             const EquivCertificate& cert) {
  if (!alpha.is_square() || alpha.rows() % 2)
    fail(Errc::OddSize, "alpha needs even size");
  const Ring& r = alpha.ring();
  const size_t n = alpha.rows() / 2;
  const size_t s = cert.t;
  const size_t m = n + s;
  if (gamma.matrix.rows() != 2 * n || !(gamma.matrix.ring() == r))
    fail(Errc::SizeMismatch, "gamma must have the size of alpha");
  if (cert.word.size() != 2 * m || !(cert.word.ring() == r))
    fail(Errc::CertificateInvalid, "certificate word has the wrong size");
  const Matrix eps_m = word_eval(cert.word);
  const Matrix h = transpose(alpha) * chi(n, r) * alpha;
  if (!(transpose(eps_m) * perp(h, chi(s, r)) * eps_m == chi(m, r)))
    fail(Errc::CertificateInvalid,
         "certificate does not carry H(alpha) to the standard form");
  const Matrix alpha_p = perp(alpha, Matrix::identity(r, 2 * m)) *
                         perp(eps_m, Matrix::identity(r, 2 * n));
  const Matrix phi = perp(chi(m, r), gamma.matrix);
  if (!is_symplectic_wrt(alpha_p, phi))
    fail(Errc::CertificateInvalid, "constructed matrix does not preserve phi");
  return alpha_p;
}

Matrix extract_block(const Matrix& delta, const AltRep& theta1,
                     const AltRep& theta2) {
  const Ring& r = delta.ring();
  const size_t n2 = theta1.matrix.rows();
  if (!delta.is_square() || delta.rows() != n2 + 2 ||
      theta2.matrix.rows() != n2)
    fail(Errc::SizeMismatch, "delta must be (2 + 2n) square with 2n-blocks theta");
  for (size_t k = 0; k < delta.rows(); ++k)
    if (!(delta(k, 0) == (k == 0 ? r.one() : r.zero())))
      fail(Errc::HypothesisFailed, "first column of delta is not e_1");
  const Matrix lhs = transpose(delta) * perp(chi(1, r), theta1.matrix) * delta;
  if (!(lhs == perp(chi(1, r), theta2.matrix)))
    fail(Errc::HypothesisFailed,
         "delta does not carry chi_1 (+) theta1 to chi_1 (+) theta2");
  if (!delta(1, 1).is_one())
    fail(Errc::HypothesisFailed, "q != 1");
  for (size_t c = 2; c < delta.cols(); ++c)
    if (!delta(1, c).is_zero()) fail(Errc::HypothesisFailed, "v != 0");
  Matrix beta = block(delta, 2, 2, n2, n2);
  if (!(transpose(beta) * theta1.matrix * beta == theta2.matrix))
    fail(Errc::HypothesisFailed, "beta^T theta1 beta != theta2");
  return beta;
}

}  // namespace relsymp
