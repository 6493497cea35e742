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

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "relsymp/elementary.hpp"
#include "relsymp/steinberg.hpp"

namespace relsymp {

/// Deterministic generator keyed by (seed, stream). Every trial of every
/// check gets its own stream, so results do not depend on thread schedule.
class Rng {
 public:
  Rng(uint64_t seed, uint64_t stream);

  uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi], hi >= lo.
  long uniform(long lo, long hi);
  bool coin() { return (next() >> 63) != 0; }
  size_t index(size_t n) { return static_cast<size_t>(uniform(0, long(n) - 1)); }

 private:
  std::mt19937_64 engine_;
};

uint64_t splitmix64(uint64_t x);
/// FNV-1a, used to derive per-check streams from names.
uint64_t stream_id(std::string_view name);

struct RandomOptions {
  long bound = 9;         // integer coefficients in [-bound, bound]
  int max_degree = 3;     // polynomial degree
};

Element random_element(const Ring& ring, Rng& rng, const RandomOptions& opt = {});
/// Nonzero element; for domains this is a non-zero-divisor.
Element random_nonzero(const Ring& ring, Rng& rng, const RandomOptions& opt = {});
/// Unit of Z/m, Q, or Z (+-1); other rings get +-1.
Element random_unit(const Ring& ring, Rng& rng, const RandomOptions& opt = {});
/// sum c_k g_k over the generators.
Element random_ideal_member(const Ideal& ideal, Rng& rng,
                            const RandomOptions& opt = {});

Matrix random_matrix(const Ring& ring, size_t rows, size_t cols, Rng& rng,
                     const RandomOptions& opt = {});
/// Entries in the ideal.
Matrix random_ideal_matrix(const Ideal& ideal, size_t rows, size_t cols,
                           Rng& rng, const RandomOptions& opt = {});
Matrix random_alternating(const Ring& ring, size_t size, Rng& rng,
                          const RandomOptions& opt = {});
Vec random_vector(const Ring& ring, size_t size, Rng& rng,
                  const RandomOptions& opt = {});

/// Word of `atoms` generators with random indices and arguments. With an
/// ideal, plain generators take arguments in I and every other atom is an
/// absolute conjugation, so the word is syntactically relative.
ElementaryWord random_word(Family family, size_t size, const Ring& ring,
                           size_t atoms, Rng& rng,
                           const std::optional<Ideal>& ideal = std::nullopt,
                           const RandomOptions& opt = {});

/// Random valid index pair (i, j), i != j, for the family.
std::pair<size_t, size_t> random_pair(size_t size, Rng& rng);

}  // namespace relsymp
