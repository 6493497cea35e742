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
#include "relsymp/random.hpp"
#include "test_helpers.hpp"

using namespace relsymp;
using testing::pair;
using testing::Z;

namespace {

const Ring& zz() {
  static const Ring r = Ring::integers();
  return r;
}

const Ideal& two() {
  static const Ideal I(zz(), {Z(2)});
  return I;
}

}  // namespace

TEST_CASE("lift of a relative row") {
  const Ring ex = Ring::excision(two());
  const UnimodularRow v = make_row(zz(), {Z(3), Z(2)}, {Z(-1), Z(2)}, two());
  const std::vector<Element> w = find_relative_witness(v);
  CHECK(w == std::vector<Element>{Z(-1), Z(2)});
  const UnimodularRow vl = lift_row(v);
  CHECK(vl.ring == ex);
  CHECK(vl.entries == std::vector<Element>{pair(ex, 1, 2), pair(ex, 0, 2)});
  CHECK(vl.witness == std::vector<Element>{pair(ex, 1, -2), pair(ex, 0, 2)});
  CHECK(vl.entries[0] * vl.witness[0] + vl.entries[1] * vl.witness[1] == pair(ex, 1, 0));
  const UnimodularRow e1 = lift_row(unit_row(zz(), 3, two()));
  CHECK(is_e1(e1.entries));
  CHECK(is_e1(e1.witness));
  CHECK_ERRC(lift_row(make_row(zz(), {Z(2), Z(1)}, {Z(0), Z(1)}, std::nullopt)),
             Errc::NotRelative);
}

TEST_CASE("witness search on random relative rows") {
  Rng rng(59, 0);
  const Ideal I(zz(), {Z(5)});
  for (int k = 0; k < 100; ++k) {
    // v = e_1 g for g relative gives a relative unimodular row.
    const ElementaryWord g = random_word(Family::Linear, 3, zz(), 4, rng, I);
    const Matrix m = word_eval(g);
    const Matrix mi = word_eval(g.inverse());
    std::vector<Element> v = m.row(0);
    std::vector<Element> w{mi(0, 0), mi(1, 0), mi(2, 0)};
    const UnimodularRow row = make_row(zz(), v, w, I);
    const std::vector<Element> found = find_relative_witness(
        UnimodularRow{zz(), v, {}, I});
    Element s = Z(0);
    for (size_t c = 0; c < 3; ++c) s += v[c] * found[c];
    CHECK(s.is_one());
    CHECK(congruent_to_e1(found, I));
    const UnimodularRow vl = lift_row(row);
    CHECK(apply_hom(RingHom::project_pi(vl.ring), as_row_matrix(vl)) == as_row_matrix(row));
  }
}

TEST_CASE("lift of a relative matrix") {
  const Ring ex = Ring::excision(two());
  const Matrix a = Matrix::from_ints(zz(), {{1, 2}, {0, 1}});
  const Matrix al = lift_matrix(a, two(), GroupTag::SL);
  Matrix expect = Matrix::identity(ex, 2);
  expect(0, 1) = pair(ex, 0, 2);
  CHECK(al == expect);
  CHECK(det(al) == pair(ex, 1, 0));
  CHECK(lift_matrix(Matrix::identity(zz(), 3), two()) == Matrix::identity(ex, 3));
  CHECK_ERRC(lift_matrix(Matrix::from_ints(zz(), {{1, 1}, {0, 1}}), two()),
             Errc::NotRelative);
  CHECK_ERRC(lift_matrix(Matrix::from_ints(zz(), {{3, 0}, {0, 1}}), two(), GroupTag::SL),
             Errc::NotSpecial);
  Rng rng(61, 0);
  for (int k = 0; k < 50; ++k) {
    const Matrix s = word_eval(random_word(Family::Symplectic, 4, zz(), 3, rng, two()));
    const Matrix sl = lift_matrix(s, two(), GroupTag::Sp);
    CHECK(is_symplectic_wrt(sl, chi(2, ex)));
    CHECK(is_relative_to(sl, Ideal::split(ex)));
    CHECK(apply_hom(RingHom::project_pi(ex), sl) == s);
  }
}

TEST_CASE("lift of a word") {
  const Ring ex = Ring::excision(two());
  ElementaryWord outer(Family::Symplectic, 4, zz());
  outer.gen(1, 3, Z(5));
  ElementaryWord w(Family::Symplectic, 4, zz());
  w.conj(outer, 1, 2, Z(4));
  const ElementaryWord wl = lift_word(w, two());
  REQUIRE(wl.atoms().size() == 1);
  const auto& c = std::get<ConjAtom>(wl.atoms()[0]);
  CHECK(c.a == pair(ex, 0, 4));
  CHECK(c.i == 1);
  CHECK(c.j == 2);
  REQUIRE(c.outer->atoms().size() == 1);
  CHECK(std::get<GenAtom>(c.outer->atoms()[0]).a == pair(ex, 5, 0));
  CHECK(lift_word(ElementaryWord(Family::Linear, 3, zz()), two()).empty());
  Rng rng(67, 0);
  for (int k = 0; k < 50; ++k) {
    const ElementaryWord r = random_word(Family::Symplectic, 6, zz(), 4, rng, two());
    const Matrix m = word_eval(lift_word(r, two()));
    CHECK(apply_hom(RingHom::project_pi(ex), m) == word_eval(r));
    CHECK(is_relative_to(m, Ideal::split(ex)));
    CHECK(apply_hom(RingHom::bar_split(ex), m) == Matrix::identity(zz(), 6));
  }
  ElementaryWord bad(Family::Linear, 2, zz());
  bad.gen(1, 2, Z(1));
  CHECK_ERRC(lift_word(bad, two()), Errc::NotRelative);
}

TEST_CASE("normalization") {
  const Ring ex = Ring::excision(two());
  const Matrix beta = Matrix::from_ints(zz(), {{2, 1}, {1, 1}});
  CHECK(normalize_relative(include_matrix(beta, two())) == Matrix::identity(ex, 2));
  const Matrix rel = lift_matrix(Matrix::from_ints(zz(), {{1, 2}, {0, 1}}), two());
  CHECK(normalize_relative(rel) == rel);
  Rng rng(71, 0);
  for (int k = 0; k < 50; ++k) {
    const Matrix g = word_eval(random_word(Family::Linear, 2, ex, 4, rng));
    const Matrix n = normalize_relative(g);
    CHECK(is_relative_to(n, Ideal::split(ex)));
    CHECK(det(n).is_one());
  }
  CHECK_ERRC(normalize_relative(beta), Errc::DescriptorMismatch);
}

TEST_CASE("lifts commute with products and block sums") {
  Rng rng(73, 0);
  const Ring ex = Ring::excision(two());
  for (int k = 0; k < 50; ++k) {
    const size_t n = 1 + rng.index(3);
    const size_t c = 1 + rng.index(3);
    const Matrix beta = random_ideal_matrix(two(), 2 * n, c, rng);
    CHECK(chi(n, ex) * lift_ideal_matrix(beta, two()) ==
          lift_ideal_matrix(chi(n, zz()) * beta, two()));
    const Matrix gamma = random_ideal_matrix(two(), c, 2 * n, rng);
    CHECK(lift_ideal_matrix(gamma, two()) * chi(n, ex) ==
          lift_ideal_matrix(gamma * chi(n, zz()), two()));
  }
}

TEST_CASE("localization compatibility") {
  const Matrix a = Matrix::from_ints(zz(), {{1, 2}, {0, 1}});
  CHECK(localization_compat(a, two(), Z(3)));
  CHECK(localization_compat(a, two(), Z(1)));
  Rng rng(79, 0);
  for (long f : {2, 3, 5}) {
    const Matrix s = word_eval(random_word(Family::Symplectic, 4, zz(), 3, rng, two()));
    CHECK(localization_compat(s, two(), Z(f)));
  }
  const Ring z8 = Ring::integers_mod(8);
  CHECK_ERRC(localization_compat(Matrix::identity(z8, 2), Ideal(z8, {z8.from_int(4)}),
                                 z8.from_int(3)),
             Errc::NotADomain);
}
