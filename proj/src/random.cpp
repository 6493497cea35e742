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

namespace relsymp {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t stream_id(std::string_view name) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rng::Rng(uint64_t seed, uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ stream)) {}

// std::uniform_int_distribution is implementation-defined; this is not.
long Rng::uniform(long lo, long hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(next());
  const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

namespace {

mpz_class random_mod(const mpz_class& m, Rng& rng) {
  mpz_class x = 0;
  // 128 random bits are plenty for the moduli that show up in tests.
  for (int k = 0; k < 2; ++k) {
    x <<= 64;
    x += mpz_class(static_cast<unsigned long>(rng.next()));
  }
  return x % m;
}

}  // namespace

Element random_element(const Ring& ring, Rng& rng, const RandomOptions& opt) {
  switch (ring.kind()) {
    case RingKind::Integers:
      return ring.from_int(rng.uniform(-opt.bound, opt.bound));
    case RingKind::Rationals:
      return Element::rational(
          ring, mpq_class(rng.uniform(-opt.bound, opt.bound),
                          rng.uniform(1, std::max(1L, opt.bound))));
    case RingKind::IntegersMod:
      return ring.from_mpz(random_mod(ring.modulus(), rng));
    case RingKind::Polynomial: {
      const long deg = rng.uniform(0, opt.max_degree);
      std::vector<Element> c;
      for (long k = 0; k <= deg; ++k)
        c.push_back(random_element(ring.base(), rng, opt));
      return Element::poly(ring, std::move(c));
    }
    case RingKind::Localized:
      return Element::fraction(ring, random_element(ring.base(), rng, opt),
                               static_cast<unsigned long>(rng.uniform(0, 2)));
    case RingKind::Quotient:
      return Element::residue(ring, random_element(ring.base(), rng, opt));
    case RingKind::Excision:
      return Element::pair_unchecked(ring, random_element(ring.base(), rng, opt),
                                     random_ideal_member(ring.ideal(), rng, opt));
    case RingKind::Double: {
      const Element a = random_element(ring.base(), rng, opt);
      return Element::pair_unchecked(ring, a,
                                     a + random_ideal_member(ring.ideal(), rng, opt));
    }
  }
  return ring.zero();
}

Element random_nonzero(const Ring& ring, Rng& rng, const RandomOptions& opt) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Element x = random_element(ring, rng, opt);
    if (!x.is_zero()) return x;
  }
  return ring.one();
}

Element random_unit(const Ring& ring, Rng& rng, const RandomOptions& opt) {
  const Element sign = rng.coin() ? ring.one() : -ring.one();
  switch (ring.kind()) {
    case RingKind::Rationals:
      return random_nonzero(ring, rng, opt);
    case RingKind::IntegersMod:
      for (int attempt = 0; attempt < 1000; ++attempt) {
        Element x = random_element(ring, rng, opt);
        if (is_unit(x)) return x;
      }
      return ring.one();
    case RingKind::Localized: {
      const auto up = static_cast<unsigned long>(rng.uniform(0, 2));
      const Element sgn = rng.coin() ? ring.base().one() : -ring.base().one();
      return Element::fraction(ring, sgn * pow(ring.generator(), up),
                               static_cast<unsigned long>(rng.uniform(0, 2)));
    }
    default:
      return sign;
  }
}

Element random_ideal_member(const Ideal& ideal, Rng& rng, const RandomOptions& opt) {
  const Ring& ring = ideal.ring();
  Element s = ring.zero();
  if (ideal.is_split()) {
    // 0 (+) I inside R (+) I.
    return Element::pair_unchecked(ring, ring.base().zero(),
                                   random_ideal_member(ring.ideal(), rng, opt));
  }
  for (const Element& g : ideal.generators())
    s += random_element(ring, rng, opt) * g;
  return s;
}

Matrix random_matrix(const Ring& ring, size_t rows, size_t cols, Rng& rng,
                     const RandomOptions& opt) {
  Matrix m(ring, rows, cols);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) m(r, c) = random_element(ring, rng, opt);
  return m;
}

Matrix random_ideal_matrix(const Ideal& ideal, size_t rows, size_t cols,
                           Rng& rng, const RandomOptions& opt) {
  Matrix m(ideal.ring(), rows, cols);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c)
      m(r, c) = random_ideal_member(ideal, rng, opt);
  return m;
}

Matrix random_alternating(const Ring& ring, size_t size, Rng& rng,
                          const RandomOptions& opt) {
  Matrix m(ring, size, size);
  for (size_t r = 0; r < size; ++r)
    for (size_t c = r + 1; c < size; ++c) {
      m(r, c) = random_element(ring, rng, opt);
      m(c, r) = -m(r, c);
    }
  return m;
}

Vec random_vector(const Ring& ring, size_t size, Rng& rng,
                  const RandomOptions& opt) {
  Vec v;
  for (size_t k = 0; k < size; ++k) v.push_back(random_element(ring, rng, opt));
  return v;
}

std::pair<size_t, size_t> random_pair(size_t size, Rng& rng) {
  const size_t i = rng.index(size) + 1;
  size_t j = rng.index(size - 1) + 1;
  if (j >= i) ++j;
  return {i, j};
}

ElementaryWord random_word(Family family, size_t size, const Ring& ring,
                           size_t atoms, Rng& rng,
                           const std::optional<Ideal>& ideal,
                           const RandomOptions& opt) {
  ElementaryWord w(family, size, ring);
  for (size_t k = 0; k < atoms; ++k) {
    auto [i, j] = random_pair(size, rng);
    if (!ideal) {
      w.gen(i, j, random_element(ring, rng, opt));
      continue;
    }
    const Element a = random_ideal_member(*ideal, rng, opt);
    if (k % 2 == 0) {
      w.gen(i, j, a);
    } else {
      ElementaryWord outer(family, size, ring);
      const size_t len = 1 + rng.index(2);
      for (size_t m = 0; m < len; ++m) {
        auto [p, q] = random_pair(size, rng);
        outer.gen(p, q, random_element(ring, rng, opt));
      }
      w.conj(outer, i, j, a);
    }
  }
  return w;
}

}  // namespace relsymp
