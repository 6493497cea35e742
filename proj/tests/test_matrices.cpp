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

namespace {

const Ring& zz() {
  static const Ring r = Ring::integers();
  return r;
}

}  // namespace

TEST_CASE("standard forms") {
  const Matrix c1 = chi(1, zz());
  CHECK(c1 == Matrix::from_ints(zz(), {{0, 1}, {-1, 0}}));
  CHECK(sigma(1, zz()) == Matrix::from_ints(zz(), {{0, 1}, {1, 0}}));
  CHECK(det(sigma(1, zz())) == zz().from_int(-1));
  for (size_t n = 1; n <= 4; ++n) {
    const Matrix c = chi(n, zz()), s = sigma(n, zz());
    CHECK(s * c * s == inverse(c));
    CHECK(pfaffian(c).is_one());
    CHECK(is_alternating(c));
    CHECK(standard_form(StandardForm::Identity, n, zz()) == Matrix::identity(zz(), n));
  }
}

TEST_CASE("pfaffian of small matrices") {
  const Element a = zz().from_int(7);
  Matrix m(zz(), 2, 2);
  m(0, 1) = a;
  m(1, 0) = -a;
  CHECK(pfaffian(m) == a);
  // Pf of the 4x4 alternating matrix is a12 a34 - a13 a24 + a14 a23.
  const Matrix b = Matrix::from_ints(zz(), {{0, 1, 2, 3}, {-1, 0, 4, 5},
                                            {-2, -4, 0, 6}, {-3, -5, -6, 0}});
  CHECK(pfaffian(b) == zz().from_int(1 * 6 - 2 * 5 + 3 * 4));
  CHECK_ERRC(pfaffian(Matrix::identity(zz(), 2)), Errc::NotAlternating);
  CHECK_ERRC(pfaffian(Matrix(zz(), 3, 3)), Errc::OddSize);
}

TEST_CASE("property: pfaffian squared is the determinant") {
  const std::vector<Ring> rings{zz(), Ring::integers_mod(8),
                                Ring::polynomial(Ring::integers_mod(5))};
  for (const Ring& r : rings) {
    Rng rng(3, stream_id(r.describe()));
    RandomOptions opt;
    opt.max_degree = 1;
    for (int k = 0; k < 40; ++k) {
      const size_t size = 2 * (1 + rng.index(3));
      const Matrix a = random_alternating(r, size, rng, opt);
      const Element pf = pfaffian(a);
      CHECK(pf == oracle::matching_pfaffian(a));
      CHECK(pf * pf == det(a));
      CHECK(det(a) == oracle::leibniz_det(a));
      const Matrix g = random_matrix(r, size, size, rng, opt);
      CHECK(pfaffian(transpose(g) * a * g) == det(g) * pf);
    }
  }
}

TEST_CASE("property: determinant against Leibniz") {
  const std::vector<Ring> rings{zz(), Ring::rationals(), Ring::integers_mod(12),
                                Ring::excision(Ideal(zz(), {zz().from_int(2)}))};
  for (const Ring& r : rings) {
    Rng rng(5, stream_id(r.describe()));
    for (int k = 0; k < 40; ++k) {
      const size_t n = 1 + rng.index(5);
      const Matrix a = random_matrix(r, n, n, rng), b = random_matrix(r, n, n, rng);
      CHECK(det(a) == oracle::leibniz_det(a));
      CHECK(det(a * b) == det(a) * det(b));
    }
  }
}

TEST_CASE("charpoly") {
  const Matrix a = Matrix::from_ints(zz(), {{2, 1}, {3, 4}});
  const auto c = charpoly(a);
  REQUIRE(c.size() == 3);
  CHECK(c[0].is_one());
  CHECK(c[1] == zz().from_int(-6));
  CHECK(c[2] == zz().from_int(5));
}

TEST_CASE("inverse") {
  const Matrix a = Matrix::from_ints(zz(), {{2, 1}, {1, 1}});
  CHECK(inverse(a) == Matrix::from_ints(zz(), {{1, -1}, {-1, 2}}));
  CHECK_ERRC(inverse(Matrix::from_ints(zz(), {{2, 0}, {0, 1}})), Errc::NotInvertible);
  const Ring z8 = Ring::integers_mod(8);
  Rng rng(11, 0);
  for (int k = 0; k < 50; ++k) {
    const Matrix m = random_matrix(z8, 3, 3, rng);
    if (auto inv = try_inverse(m)) {
      CHECK(*inv * m == Matrix::identity(z8, 3));
      CHECK(is_unit(det(m)));
    } else {
      CHECK_FALSE(is_unit(det(m)));
    }
  }
}

TEST_CASE("serial and parallel products agree") {
  Rng rng(13, 0);
  for (int k = 0; k < 10; ++k) {
    const Matrix a = random_matrix(zz(), 7, 5, rng), b = random_matrix(zz(), 5, 6, rng);
    CHECK(multiply_serial(a, b) == multiply_parallel(a, b));
    CHECK(a * b == multiply_serial(a, b));
  }
  CHECK_ERRC(Matrix(zz(), 2, 3) * Matrix(zz(), 2, 3), Errc::SizeMismatch);
}

TEST_CASE("block structure") {
  const Matrix a = Matrix::from_ints(zz(), {{1, 2}, {3, 4}});
  const Matrix p = perp(a, chi(1, zz()));
  CHECK(p.rows() == 4);
  CHECK(block(p, 0, 0, 2, 2) == a);
  CHECK(block(p, 2, 2, 2, 2) == chi(1, zz()));
  CHECK(block(p, 0, 2, 2, 2) == Matrix(zz(), 2, 2));
  CHECK(transpose(transpose(p)) == p);
  CHECK_ERRC(Matrix::from_ints(zz(), {{1, 2}, {3}}), Errc::SizeMismatch);
}

TEST_CASE("relative and symplectic predicates") {
  const Ideal I(zz(), {zz().from_int(3)});
  const Matrix a = Matrix::from_ints(zz(), {{4, 3}, {-3, -2}});
  CHECK(is_relative_to(a, I));
  CHECK(is_symplectic_wrt(a, chi(1, zz())));
  CHECK_FALSE(is_relative_to(Matrix::from_ints(zz(), {{1, 1}, {0, 1}}), I));
  CHECK(is_relative_to(chi(1, zz()), I, chi(1, zz())));
}
