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
#include "relsymp/steinberg.hpp"
#include "test_helpers.hpp"

using namespace relsymp;
using testing::Z;

namespace {

// Random v with <u,v> = 0, built from the partner formula.
Vec partner(const Vec& u, Rng& rng) {
  const Ring& r = u[0].ring();
  const size_t size = u.size();
  Vec v = scale(random_element(r, rng), u);
  for (size_t k = 1; k <= size; ++k)
    for (size_t l = k + 1; l <= size; ++l) {
      const Element c = random_element(r, rng);
      const Element gk = oracle::form(u, basis_vector(r, size, k));
      const Element gl = oracle::form(u, basis_vector(r, size, l));
      v = add(v, scale(c * gl, basis_vector(r, size, k)));
      v = add(v, scale(-(c * gk), basis_vector(r, size, l)));
    }
  return v;
}

std::pair<Vec, Vec> isotropic_pair(const Ring& r, size_t size, Rng& rng) {
  Vec u = random_vector(r, size, rng);
  Vec v = partner(u, rng);
  return {std::move(u), std::move(v)};
}

}  // namespace

TEST_CASE("symplectic form") {
  const Ring zz = Ring::integers();
  CHECK(symplectic_form(basis_vector(zz, 4, 1), basis_vector(zz, 4, 2)) == Z(1));
  CHECK(symplectic_form(basis_vector(zz, 4, 2), basis_vector(zz, 4, 1)) == Z(-1));
  CHECK(symplectic_form(basis_vector(zz, 4, 1), basis_vector(zz, 4, 3)).is_zero());
  Rng rng(41, 0);
  for (int k = 0; k < 100; ++k) {
    const Vec u = random_vector(zz, 6, rng), w = random_vector(zz, 6, rng);
    CHECK(symplectic_form(u, w) == oracle::form(u, w));
    CHECK(symplectic_form(u, u).is_zero());
  }
}

TEST_CASE("transvections of basis vectors are the generators") {
  const Ring z8 = Ring::integers_mod(8);
  Rng rng(43, 0);
  for (size_t i = 1; i <= 6; ++i)
    for (size_t j = 1; j <= 6; ++j) {
      if (i == j) continue;
      const Element a = random_element(z8, rng);
      const Matrix g = elem_generator(Family::Symplectic, 6, i, j, a);
      CHECK(transvection(6, i, j, a) == g);
      if (j == sigma_index(i)) {
        const Vec zero(6, z8.zero());
        CHECK(esd_matrix(basis_vector(z8, 6, i), zero, z8.from_int(eps(i)) * a) == g);
      } else {
        const size_t sj = sigma_index(j);
        CHECK(esd_matrix(basis_vector(z8, 6, i),
                         scale(z8.from_int(eps(sj)) * a, basis_vector(z8, 6, sj)),
                         z8.zero()) == g);
      }
    }
}

TEST_CASE("property: esd matrix agrees with its defining formula") {
  const std::vector<Ring> rings{Ring::integers(), Ring::integers_mod(8)};
  for (const Ring& r : rings) {
    Rng rng(47, stream_id(r.describe()));
    for (int k = 0; k < 100; ++k) {
      auto [u, v] = isotropic_pair(r, 6, rng);
      REQUIRE(oracle::form(u, v).is_zero());
      const Element a = random_element(r, rng);
      const Matrix t = esd_matrix(u, v, a);
      CHECK(t == oracle::esd(u, v, a));
      CHECK(is_symplectic_wrt(t, chi(3, r)));
      const Vec w = random_vector(r, 6, rng);
      CHECK(esd_apply(u, v, a, w) == matrix_times(t, w));
      // Composition along a common u.
      const Element b = random_element(r, rng);
      const Vec x = partner(u, rng);
      CHECK(t * esd_matrix(u, x, b) ==
            esd_matrix(u, add(v, x), a + b + oracle::form(v, x)));
    }
  }
  const Ring zz = Ring::integers();
  CHECK_ERRC(esd_matrix(basis_vector(zz, 4, 1), basis_vector(zz, 4, 2), Z(0)),
             Errc::NotIsotropicPair);
}

TEST_CASE("steinberg words and phi") {
  const Ring zz = Ring::integers();
  const Element a = Z(4), b = Z(-7);
  SteinbergWord x12(3, zz);
  x12.x(1, 2, a);
  CHECK(steinberg_phi(x12) == oracle::se(zz, 6, 1, 2, a));
  CHECK(steinberg_phi(SteinbergWord(3, zz)) == Matrix::identity(zz, 6));
  SteinbergWord add(3, zz);
  add.x(1, 3, a).x(1, 3, b).x(1, 3, a + b, -1);
  CHECK(steinberg_phi(add) == Matrix::identity(zz, 6));
  CHECK(kernel_check(add));
  CHECK_FALSE(kernel_check(x12));
  CHECK(kernel_check(SteinbergWord(3, zz)));
  CHECK(steinberg_phi(x12.inverse()) == oracle::se(zz, 6, 1, 2, -a));
  CHECK_ERRC(SteinbergWord(2, zz), Errc::InvalidArgument);
}

TEST_CASE("symbols") {
  const Ring f7 = Ring::integers_mod(7);
  const Element r = f7.from_int(3);
  const SteinbergWord sw = symbol_build(SymbolKind::Sw, r, std::nullopt, 3,
                                        std::pair<size_t, size_t>{1, 3});
  REQUIRE(sw.atoms().size() == 3);
  CHECK(sw.atoms()[0].i == 1);
  CHECK(sw.atoms()[0].j == 3);
  CHECK(sw.atoms()[0].a == r);
  CHECK(sw.atoms()[1].i == 3);
  CHECK(sw.atoms()[1].j == 1);
  CHECK(sw.atoms()[1].a == -unit_inverse(r));
  CHECK(sw.atoms()[2].a == r);
  CHECK(kernel_check(symbol_build(SymbolKind::Curly, r, f7.from_int(5), 3)));
  for (long v = 1; v < 7; ++v) {
    const Element x = f7.from_int(v);
    CHECK(kernel_check(symbol_build(SymbolKind::Square, x, f7.one(), 3)));
    CHECK(kernel_check(symbol_build(SymbolKind::Square, f7.one(), x, 3)));
  }
  CHECK_FALSE(kernel_check(sw));
  CHECK_ERRC(symbol_build(SymbolKind::Sw, Z(2), std::nullopt, 3), Errc::NotAUnit);
}

TEST_CASE("residue triviality") {
  const Ring zz = Ring::integers();
  const Ideal I(zz, {Z(3)});
  SteinbergWord w(3, zz);
  w.x(1, 2, Z(3)).x(2, 5, Z(-6)).x(4, 3, Z(9));
  CHECK(residue_trivial(w, I));
  SteinbergWord one(3, zz);
  one.x(1, 2, Z(1));
  CHECK_FALSE(residue_trivial(one, I));
  CHECK(residue_trivial(SteinbergWord(3, zz), I));
}

TEST_CASE("relations hold through phi") {
  const Ring zz = Ring::integers();
  Rng rng(53, 0);
  for (int k = 0; k < 100; ++k) {
    const Element a = random_element(zz, rng), b = random_element(zz, rng);
    // [X_12(a), X_23(b)] = X_13(ab), indices distinct and not paired.
    SteinbergWord w(3, zz);
    w.x(1, 3, a).x(3, 5, b).x(1, 3, a, -1).x(3, 5, b, -1).x(1, 5, a * b, -1);
    CHECK(kernel_check(w));
    // Mirror: X_ij(a) = X_{sigma j, sigma i}(-eps_i eps_j a).
    SteinbergWord m(3, zz);
    m.x(1, 3, a).x(4, 2, zz.from_int(-eps(1) * eps(3)) * a, -1);
    CHECK(kernel_check(m));
  }
}
