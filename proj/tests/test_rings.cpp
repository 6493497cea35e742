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
#include "test_helpers.hpp"

using namespace relsymp;
using testing::pair;
using testing::Z;

TEST_CASE("excision product") {
  const Ring zz = Ring::integers();
  const Ring ex = Ring::excision(Ideal(zz, {Z(2)}));
  // rs = 3, rj + si + ij = 3(-2) + 1(2) + 2(-2) = -8
  CHECK(pair(ex, 3, 2) * pair(ex, 1, -2) == pair(ex, 3, -8));
  CHECK(pair(ex, 3, 2) * ex.one() == pair(ex, 3, 2));
  CHECK(ex.one() == pair(ex, 1, 0));
  CHECK_ERRC(pair(ex, 1, 3), Errc::NotRelative);
}

TEST_CASE("modular arithmetic") {
  const Ring z8 = Ring::integers_mod(8);
  CHECK((z8.from_int(5) * z8.from_int(5)).is_one());
  CHECK(z8.from_int(-3) == z8.from_int(5));
  CHECK(unit_inverse(z8.from_int(3)) == z8.from_int(3));
  CHECK_FALSE(is_unit(z8.from_int(4)));
  CHECK(Ring::integers_mod(7).is_field());
  CHECK_FALSE(z8.is_domain());
}

TEST_CASE("unit inverses") {
  const Ring zz = Ring::integers();
  const Ring ex = Ring::excision(Ideal(zz, {Z(2)}));
  CHECK(unit_inverse(ex.one()) == ex.one());
  // (-1, 2) has r + i = 1, so it is a unit; check by multiplication.
  const Element u = pair(ex, -1, 2);
  CHECK((u * unit_inverse(u)).is_one());
  CHECK_ERRC(unit_inverse(Z(2)), Errc::NotAUnit);
  const Ring q = Ring::rationals();
  const Element x = Element::rational(q, mpq_class(-3, 7));
  CHECK(unit_inverse(x) == Element::rational(q, mpq_class(-7, 3)));
  const Ring loc = Ring::localized(Z(6));
  const Element six = Element::fraction(loc, Z(6), 0);
  CHECK((six * unit_inverse(six)).is_one());
  CHECK_FALSE(is_unit(Element::fraction(loc, Z(5), 0)));
}

TEST_CASE("exact division") {
  CHECK(exact_divide(Z(6), Z(2)) == Z(3));
  CHECK_ERRC(exact_divide(Z(5), Z(2)), Errc::NotDivisible);
  const Ring qx = Ring::polynomial(Ring::rationals());
  auto P = [&](std::vector<long> c) {
    std::vector<Element> e;
    for (long x : c) e.push_back(qx.base().from_int(x));
    return Element::poly(qx, e);
  };
  CHECK(exact_divide(P({-1, 0, 1}), P({-1, 1})) == P({1, 1}));
  CHECK_ERRC(exact_divide(P({1, 0, 1}), P({-1, 1})), Errc::NotDivisible);
  auto [quot, rem] = divmod(P({1, 0, 1}), P({-1, 1}));
  CHECK(quot == P({1, 1}));
  CHECK(rem == P({2}));
}

TEST_CASE("gcd and extended gcd") {
  auto [g, s, t] = ext_gcd(Z(12), Z(42));
  CHECK(g == Z(6));
  CHECK(s * Z(12) + t * Z(42) == g);
  CHECK(gcd(Z(-4), Z(6)) == Z(2));
  const Ring f5 = Ring::polynomial(Ring::integers_mod(5), "T");
  const Element a = Element::poly(f5, {f5.base().from_int(1), f5.base().one()});
  const Element b = Element::poly(f5, {f5.base().from_int(2), f5.base().one()});
  CHECK(is_unit(gcd(a, b)));
}

TEST_CASE("ideal membership") {
  const Ring zz = Ring::integers();
  const Ideal I(zz, {Z(2)});
  CHECK(I.contains(Z(6)));
  CHECK_FALSE(I.contains(Z(3)));
  CHECK(I.mode() == Membership::GcdDecidable);
  const Ring ex = Ring::excision(I);
  const Ideal split = Ideal::split(ex);
  CHECK(split.contains(pair(ex, 0, 4)));
  CHECK_FALSE(split.contains(pair(ex, 1, 4)));
  CHECK(Ideal(zz, {Z(4), Z(6)}).principal_generator().value() == Z(2));
  CHECK(Ideal(zz, {Z(3), Z(5)}).is_whole());
  // Certificates work in every mode.
  std::vector<Element> cert{Z(3)};
  CHECK(I.contains(Z(6), cert));
  CHECK_FALSE(I.contains(Z(8), cert));
}

TEST_CASE("certificate-only membership") {
  const Ring zx = Ring::polynomial(Ring::integers());
  const Element x = Element::poly(zx, {Z(0), Z(1)});
  const Ideal I(zx, {x, Element::poly(zx, {Z(2)})});
  CHECK(I.mode() == Membership::CertificateOnly);
  CHECK_ERRC(I.contains(x), Errc::CertificateRequired);
  std::vector<Element> cert{Element::poly(zx, {Z(3)}), Element::poly(zx, {Z(1)})};
  CHECK(I.contains(x * Element::poly(zx, {Z(3)}) + Element::poly(zx, {Z(2)}), cert));
}

TEST_CASE("double ring isomorphism") {
  const Ring zz = Ring::integers();
  const Ideal I(zz, {Z(2)});
  const Ring ex = Ring::excision(I);
  const Ring dd = Ring::double_ring(I);
  const RingHom u = RingHom::double_u(ex), v = RingHom::double_v(dd);
  CHECK(u(pair(ex, 3, 2)) == pair(dd, 3, 5));
  CHECK(v(pair(dd, 3, 5)) == pair(ex, 3, 2));
  Rng rng(1, 2);
  for (int k = 0; k < 200; ++k) {
    const Element x = random_element(ex, rng);
    CHECK(v(u(x)) == x);
  }
}

TEST_CASE("unit kernel") {
  const Ring z8 = Ring::integers_mod(8);
  const auto c = unit_kernel(z8, Ideal(z8, {z8.from_int(4)}));
  REQUIRE(c.size() == 2);
  CHECK(c[0] == z8.from_int(1));
  CHECK(c[1] == z8.from_int(5));
  CHECK(unit_kernel(z8, Ideal(z8, {z8.one()})).size() == 4);
  const auto trivial = unit_kernel(z8, Ideal(z8, {z8.zero()}));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].is_one());
  CHECK_ERRC(unit_kernel(Ring::integers(), Ideal(Ring::integers(), {Z(2)})),
             Errc::NotEnumerable);
}

TEST_CASE("ring descriptors are interned") {
  CHECK(Ring::integers_mod(8) == Ring::integers_mod(8));
  CHECK_FALSE(Ring::integers_mod(8) == Ring::integers_mod(9));
  CHECK(Ring::polynomial(Ring::integers(), "T").describe() == "poly Z T");
  CHECK(Ring::excision(Ideal(Ring::integers(), {Z(2)})).describe() == "excision Z <2>");
  CHECK(Ring::localized(Z(3)).describe() == "loc Z 3");
}

TEST_CASE("localization") {
  const Ring loc = Ring::localized(Z(2));
  const Element half = Element::fraction(loc, Z(1), 1);
  const Element two = Element::fraction(loc, Z(2), 0);
  CHECK((half * two).is_one());
  // 12/2^2 = 3
  CHECK(Element::fraction(loc, Z(12), 2) == Element::fraction(loc, Z(3), 0));
  CHECK(to_string(Element::fraction(loc, Z(3), 1)) == "3@1");
  CHECK(to_string(Element::fraction(loc, Z(4), 1)) == "2");
}

TEST_CASE("quotient of a polynomial ring") {
  const Ring f5 = Ring::polynomial(Ring::integers_mod(5));
  const Element m = Element::poly(f5, {f5.base().from_int(2), f5.base().zero(),
                                       f5.base().one()});  // X^2 + 2, irreducible mod 5
  const Ring k = Ring::quotient(m);
  const Element x = Element::residue(k, Element::poly(f5, {f5.base().zero(), f5.base().one()}));
  CHECK(x * x == k.from_int(-2));
  CHECK((x * unit_inverse(x)).is_one());
  CHECK(Ring::quotient(Z(8)) == Ring::integers_mod(8));
}

TEST_CASE("homomorphisms") {
  const Ring zz = Ring::integers();
  const Ideal I(zz, {Z(2)});
  const Ring ex = Ring::excision(I);
  CHECK(RingHom::project_pi(ex)(pair(ex, 3, 2)) == Z(5));
  CHECK(RingHom::bar_split(ex)(pair(ex, 3, 2)) == Z(3));
  CHECK(RingHom::canonical_inclusion(ex)(Z(3)) == pair(ex, 3, 0));
  const Ring zx = Ring::polynomial(zz);
  const Element p = Element::poly(zx, {Z(1), Z(2), Z(3)});
  CHECK(RingHom::eval_at(zx, Z(2))(p) == Z(17));
  const RingHom red = RingHom::residue_mod(Ideal(zz, {Z(3)}));
  CHECK(red(Z(7)) == Ring::integers_mod(3).from_int(1));
}

TEST_CASE("property: ring axioms on every descriptor kind") {
  const Ring zz = Ring::integers();
  const Ideal I(zz, {Z(6)});
  const std::vector<Ring> rings{zz, Ring::rationals(), Ring::integers_mod(12),
                                Ring::polynomial(Ring::integers_mod(3)),
                                Ring::localized(Z(10)), Ring::excision(I),
                                Ring::double_ring(I)};
  for (const Ring& r : rings) {
    Rng rng(99, stream_id(r.describe()));
    for (int k = 0; k < 100; ++k) {
      const Element a = random_element(r, rng), b = random_element(r, rng),
                    c = random_element(r, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK((a - a).is_zero());
    }
  }
}
