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


#include "oracles.hpp"
#include "relsymp/random.hpp"
#include "test_helpers.hpp"

using namespace relsymp;
using testing::Z;

TEST_CASE("index helpers") {
  CHECK(sigma_index(1) == 2);
  CHECK(sigma_index(2) == 1);
  CHECK(sigma_index(5) == 6);
  CHECK(eps(1) == 1);
  CHECK(eps(2) == -1);
}

TEST_CASE("symplectic generator entries") {
  const Ring zz = Ring::integers();
  const Element a = Z(5);
  Matrix expect = Matrix::identity(zz, 4);
  expect(0, 2) = a;
  expect(3, 1) = -a;
  CHECK(elem_generator(Family::Symplectic, 4, 1, 3, a) == expect);
  // i = sigma(j): single entry.
  Matrix single = Matrix::identity(zz, 4);
  single(0, 1) = a;
  CHECK(elem_generator(Family::Symplectic, 4, 1, 2, a) == single);
  CHECK_ERRC(elem_generator(Family::Symplectic, 4, 1, 1, a), Errc::BadIndex);
  CHECK_ERRC(elem_generator(Family::Linear, 4, 0, 1, a), Errc::BadIndex);
  CHECK_ERRC(elem_generator(Family::Symplectic, 5, 1, 2, a), Errc::BadIndex);
}

TEST_CASE("property: generators match their entrywise definition") {
  const std::vector<Ring> rings{Ring::integers(), Ring::integers_mod(8),
                                Ring::polynomial(Ring::integers_mod(5))};
  for (const Ring& r : rings) {
    Rng rng(17, stream_id(r.describe()));
    for (int k = 0; k < 200; ++k) {
      const size_t size = 2 * (1 + rng.index(4));
      auto [i, j] = random_pair(size, rng);
      const Element a = random_element(r, rng);
      const Matrix g = elem_generator(Family::Symplectic, size, i, j, a);
      CHECK(g == oracle::se(r, size, i, j, a));
      CHECK(is_symplectic_wrt(g, chi(size / 2, r)));
      CHECK(elem_generator(Family::Linear, size, i, j, a) == oracle::e(r, size, i, j, a));
      Matrix m = random_matrix(r, size, size, rng);
      const Matrix before = m;
      apply_generator_right(m, Family::Symplectic, i, j, a);
      CHECK(m == before * g);
    }
  }
}

TEST_CASE("words and their inverses") {
  const Ring z8 = Ring::integers_mod(8);
  Rng rng(19, 0);
  for (int k = 0; k < 100; ++k) {
    const Family f = k % 2 ? Family::Symplectic : Family::Linear;
    const ElementaryWord w = random_word(f, 6, z8, 1 + rng.index(6), rng);
    const Matrix m = word_eval(w);
    CHECK(m * word_eval(w.inverse()) == Matrix::identity(z8, 6));
    CHECK(det(m).is_one());
    if (f == Family::Symplectic) CHECK(is_symplectic_wrt(m, chi(3, z8)));
    Matrix x = random_matrix(z8, 2, 6, rng);
    const Matrix expect = x * m;
    apply_word_right(x, w);
    CHECK(x == expect);
  }
  CHECK(word_eval(ElementaryWord(Family::Linear, 3, z8)) == Matrix::identity(z8, 3));
}

TEST_CASE("relative words") {
  const Ring zz = Ring::integers();
  const Ideal I(zz, {Z(3)});
  Rng rng(23, 0);
  for (int k = 0; k < 100; ++k) {
    const ElementaryWord w = random_word(Family::Symplectic, 6, zz, 4, rng, I);
    CHECK(certifies_relative(w, I));
    CHECK(is_relative_to(word_eval(w), I));
  }
  ElementaryWord bad(Family::Linear, 3, zz);
  bad.gen(1, 2, Z(1));
  CHECK_FALSE(certifies_relative(bad, I));
}

TEST_CASE("whitehead word") {
  const Ring f5 = Ring::integers_mod(5);
  Matrix g(f5, 1, 1);
  g(0, 0) = f5.from_int(2);
  const Matrix m = word_eval(whitehead_word(g));
  Matrix expect(f5, 2, 2);
  expect(0, 0) = f5.from_int(2);
  expect(1, 1) = f5.from_int(3);
  CHECK(m == expect);
  Rng rng(29, 0);
  const Ring z8 = Ring::integers_mod(8);
  for (int k = 0; k < 30; ++k) {
    const Matrix a = random_matrix(z8, 3, 3, rng);
    auto inv = try_inverse(a);
    if (!inv) continue;
    CHECK(word_eval(whitehead_word(a)) == perp(a, *inv));
  }
  CHECK_ERRC(whitehead_word(Matrix::from_ints(Ring::integers(), {{2}})),
             Errc::NotInvertible);
}

TEST_CASE("homotopy word") {
  const Ring zz = Ring::integers();
  ElementaryWord w(Family::Symplectic, 4, zz);
  w.gen(1, 2, Z(3));
  const ElementaryWord h = homotopy_word(w, "T");
  const Ring& zt = h.ring();
  CHECK(zt.describe() == "poly Z T");
  const Matrix ht = word_eval(h);
  CHECK(apply_hom(RingHom::eval_at(zt, Z(0)), ht) == Matrix::identity(zz, 4));
  CHECK(apply_hom(RingHom::eval_at(zt, Z(1)), ht) == word_eval(w));
  Rng rng(31, 0);
  for (int k = 0; k < 20; ++k) {
    const ElementaryWord r = random_word(Family::Symplectic, 4, zz, 3, rng);
    const Matrix m = word_eval(homotopy_word(r));
    const Ring& zx = m.ring();
    CHECK(apply_hom(RingHom::eval_at(zx, Z(0)), m) == Matrix::identity(zz, 4));
    CHECK(apply_hom(RingHom::eval_at(zx, Z(1)), m) == word_eval(r));
  }
}

TEST_CASE("reduction to a principal ideal") {
  const Ring zz = Ring::integers();
  const Ideal I(zz, {Z(2)});
  const UnimodularRow v = make_row(zz, {Z(-1), Z(4), Z(6)}, {Z(-1), Z(0), Z(0)}, I);
  const PrincipalReduction red = reduce_to_principal(v);
  CHECK(red.reduced.entries == std::vector<Element>{Z(-1), Z(8), Z(12)});
  CHECK(row_times(v.entries, red.word) == red.reduced.entries);
  REQUIRE(red.reduced.ideal.has_value());
  CHECK(red.reduced.ideal->contains(Z(8)));
}

TEST_CASE("euclidean row reduction") {
  const Ring zz = Ring::integers();
  const std::vector<Element> v{Z(3), Z(5), Z(0)};
  const ElementaryWord w = row_reduce_euclidean(v);
  CHECK(is_e1(row_times(v, w)));
  CHECK_ERRC(row_reduce_euclidean({Z(2), Z(4)}), Errc::NotUnimodular);
  Rng rng(37, 0);
  for (int k = 0; k < 100; ++k) {
    std::vector<Element> r;
    for (int c = 0; c < 4; ++c) r.push_back(random_element(zz, rng));
    if (!gcd(gcd(r[0], r[1]), gcd(r[2], r[3])).is_one()) continue;
    CHECK(is_e1(row_times(r, row_reduce_euclidean(r))));
  }
}

TEST_CASE("rows") {
  const Ring zz = Ring::integers();
  CHECK_ERRC(make_row(zz, {Z(2), Z(4)}, {Z(1), Z(0)}), Errc::NotUnimodular);
  CHECK_ERRC(make_row(zz, {Z(4), Z(3)}, {Z(1), Z(-1)}, Ideal(zz, {Z(2)})),
             Errc::NotRelative);
  const UnimodularRow u = unit_row(zz, 3);
  CHECK(is_e1(u.entries));
  CHECK(witness_holds(u));
}
