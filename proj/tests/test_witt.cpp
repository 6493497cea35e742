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


#include "relsymp/random.hpp"
#include "relsymp/witt.hpp"
#include "test_helpers.hpp"

using namespace relsymp;
using testing::Z;

namespace {

const Ring& z8() {
  static const Ring r = Ring::integers_mod(8);
  return r;
}

const Ideal& four() {
  static const Ideal I(z8(), {z8().from_int(4)});
  return I;
}

Matrix alpha_of(const Element& a) {
  Matrix m(a.ring(), 2, 2);
  m(0, 1) = a;
  m(1, 0) = -a;
  return m;
}

}  // namespace

TEST_CASE("alternating representatives") {
  const Ring zz = Ring::integers();
  CHECK_ERRC(make_alt(Matrix::identity(zz, 2)), Errc::NotAlternating);
  CHECK_ERRC(make_alt(Matrix(zz, 3, 3)), Errc::OddSize);
  CHECK_ERRC(make_alt(alpha_of(Z(2))), Errc::NotInvertible);
  CHECK_ERRC(make_alt(alpha_of(Z(-1)), Ideal(zz, {Z(3)})), Errc::NotRelative);
  const AltRep c = make_alt(chi(2, zz));
  CHECK(c.half_size() == 2);
  CHECK(c.pfaffian_one);
}

TEST_CASE("perp, inverse and pfaffian") {
  const Ring zz = Ring::integers();
  const AltRep c1 = make_alt(chi(1, zz));
  CHECK(witt_perp(c1, c1).matrix == chi(2, zz));
  for (size_t n = 1; n <= 3; ++n) {
    const AltRep c = make_alt(chi(n, zz), Ideal(zz, {Z(2)}));
    CHECK(witt_inverse_rep(c).matrix == chi(n, zz));
    CHECK(witt_pf(c).is_one());
  }
  for (long a : {1, 5}) {
    const Element x = z8().from_int(a);
    const AltRep p = pf_section(x, four());
    CHECK(p.matrix == alpha_of(x));
    CHECK(witt_pf(p) == x);
    CHECK(witt_pf(witt_perp(p, make_alt(chi(2, z8()), four()))) == x);
  }
  CHECK(pf_section(z8().one(), four()).matrix == chi(1, z8()));
  CHECK_ERRC(pf_section(z8().from_int(3), four()), Errc::NotInKernelC);
}

TEST_CASE("property: pfaffian of random relative reps lies in C") {
  Rng rng(83, 0);
  const auto c = unit_kernel(z8(), four());
  for (int k = 0; k < 100; ++k) {
    const size_t n = 1 + rng.index(3);
    const Matrix e = word_eval(random_word(Family::Linear, 2 * n, z8(), 3, rng, four()));
    const Element u = c[rng.index(c.size())];
    const Matrix base = perp(alpha_of(u), chi(n - 1, z8()));
    const AltRep a = make_alt(transpose(e) * base * e, four());
    const Element pf = witt_pf(a);
    CHECK(pf == u);
    CHECK(std::find(c.begin(), c.end(), pf) != c.end());
  }
}

TEST_CASE("hyperbolic map") {
  const Ring q = Ring::rationals();
  Matrix d(q, 4, 4);
  d(0, 0) = q.from_int(2);
  d(1, 1) = q.from_int(3);
  d(2, 2) = q.one();
  d(3, 3) = Element::rational(q, mpq_class(1, 6));
  const AltRep h = hyperbolic_H(d);
  CHECK(pfaffian(h.matrix) == det(d));
  CHECK(pfaffian(h.matrix).is_one());
  const Ring zz = Ring::integers();
  Rng rng(89, 0);
  for (int k = 0; k < 30; ++k) {
    const Matrix s = word_eval(random_word(Family::Symplectic, 4, zz, 3, rng));
    CHECK(hyperbolic_H(s).matrix == chi(2, zz));
    const Ring f5 = Ring::integers_mod(5);
    const Matrix g = word_eval(random_word(Family::Linear, 4, f5, 4, rng));
    CHECK(pfaffian(hyperbolic_H(g).matrix).is_one());
  }
  CHECK_ERRC(hyperbolic_H(Matrix::identity(zz, 3)), Errc::OddSize);
}

TEST_CASE("split certificate for the pfaffian section") {
  const Element five = z8().from_int(5);
  const Matrix g = split_conjugator(five);
  const Matrix lhs = transpose(g) * perp(alpha_of(five * five), chi(1, z8())) * g;
  CHECK(lhs == perp(alpha_of(five), alpha_of(five)));
  const AltRep a = witt_perp(pf_section(five * five, four()), make_alt(chi(1, z8()), four()));
  const AltRep b = witt_perp(pf_section(five, four()), pf_section(five, four()));
  const EquivCertificate cert = split_certificate(five);
  const EquivCheck detail = check_equiv_detail(a, b, cert);
  CHECK(detail.identity_holds);
  CHECK(detail.valid);
  CHECK(detail.level == RelativeLevel::ResidueOnly);
}

TEST_CASE("equivalence checking") {
  const Ring zz = Ring::integers();
  const Ideal I(zz, {Z(2)});
  const AltRep a = make_alt(chi(2, zz), I);
  const EquivCertificate trivial{0, ElementaryWord(Family::Linear, 8, zz)};
  CHECK(check_equiv(a, a, trivial));
  EquivCertificate wrong = trivial;
  wrong.word.gen(1, 3, Z(2));
  CHECK_FALSE(check_equiv(a, a, wrong));
  EquivCertificate badsize{0, ElementaryWord(Family::Linear, 6, zz)};
  CHECK_ERRC(check_equiv(a, a, badsize), Errc::SizeMismatch);
  // a perp chi_1 and a agree up to padding.
  const AltRep ap = witt_perp(a, make_alt(chi(1, zz), I));
  CHECK(check_equiv(a, ap, EquivCertificate{0, ElementaryWord(Family::Linear, 10, zz)}));
  // Padding a valid certificate keeps it valid.
  const EquivCertificate padded = pad_certificate(trivial);
  CHECK(padded.t == 1);
  CHECK(padded.word.size() == 10);
  CHECK(check_equiv(a, a, padded));
}

TEST_CASE("search for an equivalence") {
  const Ring zz = Ring::integers();
  const Ideal I(zz, {Z(2)});
  const AltRep b = make_alt(chi(2, zz), I);
  const EquivCertificate self = search_equiv(b, b, 10);
  CHECK(self.word.empty());
  ElementaryWord eps(Family::Linear, 4, zz);
  eps.gen(1, 3, Z(2));
  const Matrix e = word_eval(eps);
  const AltRep a = make_alt(transpose(e) * b.matrix * e, I);
  const EquivCertificate found = search_equiv(a, b, 200000);
  CHECK(check_equiv(a, b, found));
  CHECK_ERRC(search_equiv(a, b, 1), Errc::ExhaustedBudget);
}

TEST_CASE("kernel of the hyperbolic map") {
  const Ring f5 = Ring::integers_mod(5);
  Rng rng(97, 0);
  const Matrix s = word_eval(random_word(Family::Symplectic, 4, f5, 3, rng));
  const AltRep gamma = make_alt(chi(2, f5));
  const EquivCertificate trivial{0, ElementaryWord(Family::Linear, 4, f5)};
  const Matrix out = kernel_of_H_construct(s, gamma, trivial);
  CHECK(out == perp(s, Matrix::identity(f5, 4)));
  CHECK(is_symplectic_wrt(out, perp(chi(2, f5), gamma.matrix)));
  // Planted: alpha = s eps^-1, so eps^T H(alpha) eps = chi.
  for (int k = 0; k < 20; ++k) {
    const ElementaryWord eps = random_word(Family::Linear, 4, f5, 3, rng);
    const Matrix alpha = s * word_eval(eps.inverse());
    const EquivCertificate cert{0, eps};
    const Matrix a2 = kernel_of_H_construct(alpha, gamma, cert);
    CHECK(is_symplectic_wrt(a2, perp(chi(2, f5), gamma.matrix)));
  }
  ElementaryWord bad(Family::Linear, 4, f5);
  bad.gen(1, 3, f5.one());
  const Matrix plain = s * word_eval(bad);
  CHECK_ERRC(kernel_of_H_construct(plain, gamma, trivial), Errc::CertificateInvalid);
}

TEST_CASE("block extraction") {
  const Ring zz = Ring::integers();
  const Ideal I(zz, {Z(2)});
  const AltRep t = make_alt(chi(1, zz), I);
  CHECK(extract_block(Matrix::identity(zz, 4), t, t) == Matrix::identity(zz, 2));
  const AltRep t4 = make_alt(chi(2, zz), I);
  const Matrix b0 = word_eval(ElementaryWord(Family::Symplectic, 4, zz).gen(1, 3, Z(2)));
  CHECK(extract_block(perp(Matrix::identity(zz, 2), b0), t4, t4) == b0);
  Matrix bad = Matrix::identity(zz, 4);
  bad(1, 0) = Z(2);
  CHECK_ERRC(extract_block(bad, t, t), Errc::HypothesisFailed);
}
