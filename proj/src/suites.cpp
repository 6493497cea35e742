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

#include "relsymp/suites.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "relsymp/completion.hpp"
#include "relsymp/random.hpp"
#include "relsymp/witt.hpp"

namespace relsymp {

bool SuiteReport::passed() const noexcept {
  for (const CheckResult& c : checks)
    if (!c.passed()) return false;
  return !checks.empty();
}

namespace {

using Outcome = std::optional<std::string>;
using Trial = std::function<Outcome(Rng&, size_t)>;

Outcome expect(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return what;
}

class Runner {
 public:
  Runner(const SuiteOptions& opt, SuiteReport& out) : opt_(opt), out_(out) {}

  size_t count(size_t default_trials) const {
    return opt_.trials ? *opt_.trials : default_trials;
  }

  void check(const std::string& name, size_t trials, const Trial& trial) {
    std::vector<Outcome> results(trials);
    const uint64_t stream = stream_id(name);
    auto one = [&](size_t k) {
      Rng rng(opt_.seed, stream + k);
      try {
        results[k] = trial(rng, k);
      } catch (const Error& e) {
        results[k] = std::string(errc_name(e.code())) + ": " + e.what();
      } catch (const std::exception& e) {
        results[k] = std::string("exception: ") + e.what();
      }
    };
    if (opt_.parallel) {
#pragma omp parallel for schedule(dynamic, 4)
      for (size_t k = 0; k < trials; ++k) one(k);
    } else {
      for (size_t k = 0; k < trials; ++k) one(k);
    }
    CheckResult r{name, trials, 0, {}};
    for (size_t k = 0; k < trials; ++k) {
      if (!results[k]) continue;
      if (r.failures++ == 0)
        r.first_failure = "trial " + std::to_string(k) + ": " + *results[k];
    }
    out_.checks.push_back(std::move(r));
  }

 private:
  const SuiteOptions& opt_;
  SuiteReport& out_;
};

Ideal ideal_of(const Ring& r, long g) { return Ideal(r, {r.from_int(g)}); }

// C = units congruent to 1 mod I.
std::vector<Element> kernel_units(const Ideal& I) {
  const Ring& r = I.ring();
  if (r.kind() == RingKind::IntegersMod) return unit_kernel(r, I);
  std::vector<Element> out{r.one()};
  if (I.contains(r.from_int(-2))) out.push_back(-r.one());
  return out;
}

Matrix commutator(const Matrix& x, const Matrix& y, const Matrix& xi,
                  const Matrix& yi) {
  return x * y * xi * yi;
}

// --- index sampling shared by the E and R relations ----------------------

struct Idx {
  size_t i = 0, j = 0, h = 0, k = 0;
};

Idx sample_indices(int rel, size_t size, Rng& rng) {
  auto s = sigma_index;
  Idx x;
  while (true) {
    x.i = rng.index(size) + 1;
    x.j = rng.index(size) + 1;
    x.h = rng.index(size) + 1;
    x.k = rng.index(size) + 1;
    if (x.i == x.j) continue;
    switch (rel) {
      case 0:
      case 1:
        return x;
      case 2:
        if (x.h == x.k || x.h == x.j || x.h == s(x.i) || x.k == x.i ||
            x.k == s(x.j))
          continue;
        return x;
      case 3:
        if (x.k == x.i || x.k == x.j || x.i == s(x.j) || x.i == s(x.k) ||
            x.j == s(x.k))
          continue;
        return x;
      default:  // long and double commutators: j outside {i, sigma(i)}
        if (x.j == s(x.i)) continue;
        return x;
    }
  }
}

Element sign_elem(const Ring& r, int e) { return r.from_int(e); }

// --- elementary ----------------------------------------------------------

const char* const kRelationNames[] = {"mirror", "additive", "commuting",
                                      "chain", "long_commutator", "double_commutator"};

Outcome elementary_trial(int rel, const Ring& ring, Rng& rng, size_t trial) {
  const size_t size = trial % 2 == 0 ? 6 : 8;
  RandomOptions opt;
  const Idx x = sample_indices(rel, size, rng);
  const Element a = random_element(ring, rng, opt);
  const Element b = random_element(ring, rng, opt);
  auto se = [&](size_t i, size_t j, const Element& c) {
    return elem_generator(Family::Symplectic, size, i, j, c);
  };
  const size_t i = x.i, j = x.j, k = x.k, h = x.h;
  const size_t si = sigma_index(i), sj = sigma_index(j);
  const Element ee = sign_elem(ring, eps(i) * eps(j));
  Matrix left, right;
  switch (rel) {
    case 0:
      left = se(i, j, a);
      right = se(sj, si, -(ee * a));
      break;
    case 1:
      left = se(i, j, a) * se(i, j, b);
      right = se(i, j, a + b);
      break;
    case 2:
      left = commutator(se(i, j, a), se(h, k, b), se(i, j, -a), se(h, k, -b));
      right = Matrix::identity(ring, size);
      break;
    case 3:
      left = commutator(se(i, j, a), se(j, k, b), se(i, j, -a), se(j, k, -b));
      right = se(i, k, a * b);
      break;
    case 4:
      left = commutator(se(i, si, a), se(si, j, b), se(i, si, -a), se(si, j, -b));
      right = se(i, j, a * b) * se(sj, j, ee * a * b * b);
      break;
    default:
      left = commutator(se(i, j, a), se(j, si, b), se(i, j, -a), se(j, si, -b));
      right = se(i, si, ring.from_int(2) * a * b);
      break;
  }
  return expect(left == right, std::string(kRelationNames[rel]) + " fails at size " +
                                   std::to_string(size) + " i=" + std::to_string(i) +
                                   " j=" + std::to_string(j) + " a=" + to_string(a) +
                                   " b=" + to_string(b));
}

void suite_elementary(Runner& run) {
  const Ring zz = Ring::integers();
  const std::vector<std::pair<std::string, Ring>> rings{
      {"Z", zz},
      {"Zmod8", Ring::integers_mod(8)},
      {"F5[X]", Ring::polynomial(Ring::integers_mod(5))},
  };
  for (int rel = 0; rel <= 5; ++rel)
    for (const auto& [label, ring] : rings)
      run.check(std::string("elementary.") + kRelationNames[rel] + "." + label, run.count(1000),
                [rel, ring](Rng& rng, size_t t) {
                  return elementary_trial(rel, ring, rng, t);
                });
}

// --- steinberg -----------------------------------------------------------

Outcome steinberg_trial(int rel, const Ring& ring, Rng& rng) {
  constexpr size_t n = 3;
  const Idx x = sample_indices(rel, 2 * n, rng);
  const Element a = random_element(ring, rng);
  const Element b = random_element(ring, rng);
  const size_t i = x.i, j = x.j, k = x.k, h = x.h;
  const size_t si = sigma_index(i), sj = sigma_index(j);
  const Element ee = sign_elem(ring, eps(i) * eps(j));
  SteinbergWord left(n, ring), right(n, ring);
  auto comm = [&](SteinbergWord& w, size_t p, size_t q, const Element& c,
                  size_t r, size_t s, const Element& d) {
    w.x(p, q, c).x(r, s, d).x(p, q, c, -1).x(r, s, d, -1);
  };
  switch (rel) {
    case 0:
      left.x(i, j, a);
      right.x(sj, si, -(ee * a));
      break;
    case 1:
      left.x(i, j, a).x(i, j, b);
      right.x(i, j, a + b);
      break;
    case 2:
      comm(left, i, j, a, h, k, b);
      break;
    case 3:
      comm(left, i, j, a, j, k, b);
      right.x(i, k, a * b);
      break;
    case 4:
      comm(left, i, si, a, si, j, b);
      right.x(i, j, a * b).x(sj, j, ee * a * b * b);
      break;
    default:
      comm(left, i, j, a, j, si, b);
      right.x(i, si, ring.from_int(2) * a * b);
      break;
  }
  SteinbergWord w = left;
  w.append(right.inverse());
  return expect(kernel_check(w),
                std::string(kRelationNames[rel]) + " fails: " + to_string(w));
}

void suite_steinberg(Runner& run) {
  const std::vector<std::pair<std::string, Ring>> rings{
      {"Z", Ring::integers()}, {"Zmod8", Ring::integers_mod(8)}};
  for (int rel = 0; rel <= 5; ++rel)
    for (const auto& [label, ring] : rings)
      run.check(std::string("steinberg.") + kRelationNames[rel] + "." + label, run.count(1000),
                [rel, ring](Rng& rng, size_t) { return steinberg_trial(rel, ring, rng); });

  const std::vector<std::pair<std::string, Ring>> unit_rings{
      {"Zmod7", Ring::integers_mod(7)}, {"Q", Ring::rationals()}};
  for (const auto& [label, ring] : unit_rings) {
    run.check("steinberg.symbols." + label, run.count(100), [ring](Rng& rng, size_t) {
      RandomOptions opt;
      opt.bound = 5;
      const Element r = random_unit(ring, rng, opt);
      const Element s = random_unit(ring, rng, opt);
      if (!kernel_check(symbol_build(SymbolKind::Curly, r, s, 3)))
        return Outcome("{" + to_string(r) + "," + to_string(s) + "} not in kernel");
      if (!kernel_check(symbol_build(SymbolKind::Square, r, s, 3)))
        return Outcome("[" + to_string(r) + "," + to_string(s) + "] not in kernel");
      // sw(r) sw(-r) and sh(r) sh(r^-1) are trivial under phi.
      SteinbergWord w = symbol_build(SymbolKind::Sw, r, std::nullopt, 3);
      w.append(symbol_build(SymbolKind::Sw, -r, std::nullopt, 3));
      if (!kernel_check(w)) return Outcome("sw(r) sw(-r) != 1 for r=" + to_string(r));
      SteinbergWord h = symbol_build(SymbolKind::Sh, r, std::nullopt, 3);
      h.append(symbol_build(SymbolKind::Sh, unit_inverse(r), std::nullopt, 3));
      if (!kernel_check(h)) return Outcome("sh(r) sh(1/r) != 1 for r=" + to_string(r));
      return Outcome();
    });
  }
}

// --- esd -----------------------------------------------------------------

// v = c0 u + sum c_kl (g_l e_k - g_k e_l) with g_k = <u, e_k>, k,l in support.
Vec isotropic_partner(const Vec& u, const std::vector<size_t>& support, Rng& rng) {
  const Ring& ring = u[0].ring();
  const size_t size = u.size();
  std::vector<Element> g(size);
  for (size_t k = 0; k < size; ++k)
    g[k] = symplectic_form(u, basis_vector(ring, size, k + 1));
  Vec v = scale(ring.from_int(rng.uniform(-2, 2)), u);
  for (size_t p = 0; p < support.size(); ++p)
    for (size_t q = p + 1; q < support.size(); ++q) {
      const Element c = ring.from_int(rng.uniform(-2, 2));
      const size_t k = support[p], l = support[q];
      v[k] += c * g[l];
      v[l] -= c * g[k];
    }
  return v;
}

Vec random_supported(const Ring& ring, size_t size,
                     const std::vector<size_t>& support, Rng& rng) {
  Vec u(size, ring.zero());
  for (size_t k : support) u[k] = ring.from_int(rng.uniform(-3, 3));
  return u;
}

std::vector<size_t> all_indices(size_t size) {
  std::vector<size_t> s(size);
  std::iota(s.begin(), s.end(), size_t{0});
  return s;
}

// Random element of Sp_6 as a product of se generators, with its inverse.
std::pair<Matrix, Matrix> random_symplectic(const Ring& ring, size_t size,
                                            size_t atoms, Rng& rng) {
  Matrix g = Matrix::identity(ring, size), gi = Matrix::identity(ring, size);
  for (size_t k = 0; k < atoms; ++k) {
    auto [i, j] = random_pair(size, rng);
    const Element a = ring.from_int(rng.uniform(-3, 3));
    g = g * elem_generator(Family::Symplectic, size, i, j, a);
    gi = elem_generator(Family::Symplectic, size, i, j, -a) * gi;
  }
  return {g, gi};
}

void suite_esd(Runner& run) {
  const Ring zz = Ring::integers();
  constexpr size_t size = 6;
  run.check("esd.generators", run.count(100), [zz](Rng& rng, size_t) {
    for (size_t i = 1; i <= size; ++i)
      for (size_t j = 1; j <= size; ++j) {
        if (i == j) continue;
        const Element a = random_element(zz, rng);
        if (!(transvection(size, i, j, a) ==
              elem_generator(Family::Symplectic, size, i, j, a)))
          return Outcome("T_" + std::to_string(i) + std::to_string(j) + "(" +
                         to_string(a) + ") != se");
      }
    return Outcome();
  });
  const auto full = all_indices(size);
  run.check("esd.symplectic", run.count(500), [&, zz](Rng& rng, size_t) {
    const Vec u = random_supported(zz, size, full, rng);
    const Vec v = isotropic_partner(u, full, rng);
    const Matrix t = esd_matrix(u, v, random_element(zz, rng));
    return expect(is_symplectic_wrt(t, chi(size / 2, zz)), "T(u,v,a) not symplectic");
  });
  run.check("esd.composition", run.count(500), [&, zz](Rng& rng, size_t) {
    const Vec u = random_supported(zz, size, full, rng);
    const Vec v = isotropic_partner(u, full, rng);
    const Vec w = isotropic_partner(u, full, rng);
    const Element a = random_element(zz, rng), b = random_element(zz, rng);
    return expect(esd_matrix(u, v, a) * esd_matrix(u, w, b) ==
                      esd_matrix(u, add(v, w), a + b + symplectic_form(v, w)),
                  "T(u,v,a)T(u,w,b) != T(u,v+w,a+b+<v,w>)");
  });
  run.check("esd.swap", run.count(500), [&, zz](Rng& rng, size_t) {
    const Vec u = random_supported(zz, size, full, rng);
    const Vec v = isotropic_partner(u, full, rng);
    const Element a = random_element(zz, rng);
    return expect(esd_matrix(u, scale(a, v), zz.zero()) ==
                      esd_matrix(v, scale(a, u), zz.zero()),
                  "T(u,av,0) != T(v,au,0)");
  });
  run.check("esd.conjugation", run.count(500), [&, zz](Rng& rng, size_t) {
    const Vec u = random_supported(zz, size, full, rng);
    const Vec v = isotropic_partner(u, full, rng);
    auto [g, gi] = random_symplectic(zz, size, 3, rng);
    return expect(g * esd_matrix(u, v, zz.zero()) * gi ==
                      esd_matrix(matrix_times(g, u), matrix_times(g, v), zz.zero()),
                  "g T(u,v,0) g^-1 != T(gu,gv,0)");
  });
  run.check("esd.commutator", run.count(500), [zz](Rng& rng, size_t) {
    const size_t i = rng.index(size) + 1;
    const size_t si = sigma_index(i);
    std::vector<size_t> support;
    for (size_t k = 1; k <= size; ++k)
      if (k != i && k != si) support.push_back(k - 1);
    const Vec u = random_supported(zz, size, support, rng);
    const Vec v = isotropic_partner(u, support, rng);
    const Element a = random_element(zz, rng);
    const Vec ei = basis_vector(zz, size, i), esi = basis_vector(zz, size, si);
    const Matrix x = esd_matrix(ei, u, zz.zero());
    const Matrix y = esd_matrix(esi, v, a);
    const Matrix left = commutator(x, y, inverse(x), inverse(y));
    const Matrix right =
        esd_matrix(u, scale(zz.from_int(eps(i)), v), a) *
        esd_matrix(esi, scale(-(zz.from_int(eps(si)) * a), u), zz.zero());
    return expect(left == right, "commutator formula fails at i=" + std::to_string(i));
  });
}

// --- pfaffian ------------------------------------------------------------

void suite_pfaffian(Runner& run) {
  const std::vector<std::pair<std::string, Ring>> rings{
      {"Z", Ring::integers()}, {"Zmod7", Ring::integers_mod(7)}};
  for (const auto& [label, ring] : rings)
    for (size_t n = 1; n <= 4; ++n) {
      run.check("pfaffian.size" + std::to_string(2 * n) + "." + label, run.count(500),
                [n, ring](Rng& rng, size_t) {
                  const Matrix A = random_alternating(ring, 2 * n, rng);
                  const Element pa = pfaffian(A);
                  const size_t nb = 1 + rng.index(2);
                  const Matrix B = random_alternating(ring, 2 * nb, rng);
                  if (!(pfaffian(perp(A, B)) == pa * pfaffian(B)))
                    return Outcome("Pf(A perp B) != Pf(A) Pf(B)");
                  const Element sign = ring.from_int(n % 2 ? -1 : 1);
                  if (!(pfaffian(transpose(A)) == sign * pa))
                    return Outcome("Pf(A^T) != (-1)^n Pf(A)");
                  if (!(pa * pa == det(A))) return Outcome("Pf(A)^2 != det(A)");
                  const Matrix C = random_matrix(ring, 2 * n, 2 * n, rng);
                  if (!(pfaffian(transpose(C) * A * C) == det(C) * pa))
                    return Outcome("Pf(C^T A C) != det(C) Pf(A)");
                  if (!pfaffian(chi(n, ring)).is_one()) return Outcome("Pf(chi) != 1");
                  return Outcome();
                });
    }
}

// --- excision ------------------------------------------------------------

Outcome ring_axioms(const Ring& r, Rng& rng) {
  RandomOptions opt;
  opt.bound = 6;
  opt.max_degree = 2;
  const Element x = random_element(r, rng, opt), y = random_element(r, rng, opt),
                z = random_element(r, rng, opt);
  if (!((x + y) + z == x + (y + z))) return "additive associativity";
  if (!(x + y == y + x)) return "additive commutativity";
  if (!((x * y) * z == x * (y * z))) return "multiplicative associativity";
  if (!(x * y == y * x)) return "multiplicative commutativity";
  if (!(x * (y + z) == x * y + x * z)) return "distributivity";
  if (!(x + r.zero() == x) || !(x * r.one() == x)) return "identities";
  if (!(x + (-x)).is_zero()) return "additive inverse";
  if (!(x - y == x + (-y))) return "subtraction";
  return std::nullopt;
}

struct RelCase {
  std::string label;
  Ideal ideal;
};

std::vector<RelCase> relative_cases() {
  const Ring zz = Ring::integers();
  const Ring z8 = Ring::integers_mod(8);
  return {{"Z<2>", ideal_of(zz, 2)}, {"Zmod8<4>", ideal_of(z8, 4)}};
}

// beta^T (alpha_c (+) chi_{n-1}) beta with beta a relative word, c in C.
Matrix random_relative_alt(const Ideal& I, size_t n, Rng& rng, bool pf_one) {
  const Ring& r = I.ring();
  RandomOptions small;
  small.bound = 2;
  const auto units = kernel_units(I);
  const Element c = units[rng.index(units.size())];
  Matrix core = pf_section(c, I).matrix;
  if (pf_one) {
    if (n >= 2) {
      core = perp(core, pf_section(unit_inverse(c), I).matrix);
      if (n > 2) core = perp(core, chi(n - 2, r));
    } else {
      core = chi(1, r);
    }
  } else if (n > 1) {
    core = perp(core, chi(n - 1, r));
  }
  const Matrix beta =
      word_eval(random_word(Family::Linear, 2 * n, r, 3, rng, I, small));
  return transpose(beta) * core * beta;
}

void suite_excision(Runner& run) {
  const Ring zz = Ring::integers();
  const Ring z8 = Ring::integers_mod(8);
  const Ideal i2 = ideal_of(zz, 2);
  const Ideal i4 = ideal_of(z8, 4);
  const Ring f5x = Ring::polynomial(Ring::integers_mod(5));
  const Element xx = Element::poly(f5x, {f5x.base().from_int(2), f5x.base().zero(),
                                         f5x.base().one()});
  const std::vector<Ring> rings{
      zz,
      Ring::rationals(),
      z8,
      Ring::integers_mod(7),
      Ring::polynomial(zz),
      f5x,
      Ring::localized(zz.from_int(6)),
      Ring::quotient(xx),
      Ring::excision(i2),
      Ring::double_ring(i2),
      Ring::excision(i4),
      Ring::double_ring(i4),
  };
  for (const Ring& r : rings)
    run.check("excision.ring_axioms[" + r.describe() + "]", run.count(1000),
              [r](Rng& rng, size_t) { return ring_axioms(r, rng); });

  for (const Ideal& I : {i2, i4}) {
    const Ring ex = Ring::excision(I);
    const Ring dd = Ring::double_ring(I);
    run.check("excision.uv_maps[" + ex.describe() + "]", run.count(1000),
              [ex, dd](Rng& rng, size_t) {
                const RingHom u = RingHom::double_u(ex), v = RingHom::double_v(dd);
                const Element x = random_element(ex, rng), y = random_element(ex, rng);
                const Element p = random_element(dd, rng);
                if (!(v(u(x)) == x)) return Outcome("v(u(x)) != x");
                if (!(u(v(p)) == p)) return Outcome("u(v(p)) != p");
                if (!(u(x * y) == u(x) * u(y)) || !(u(x + y) == u(x) + u(y)) ||
                    !u(ex.one()).is_one())
                  return Outcome("u is not a unital homomorphism");
                const Element q = random_element(dd, rng);
                if (!(v(p * q) == v(p) * v(q)) || !(v(p + q) == v(p) + v(q)))
                  return Outcome("v is not a homomorphism");
                return Outcome();
              });
    run.check("excision.split_maps[" + ex.describe() + "]", run.count(1000),
              [ex, I](Rng& rng, size_t) {
                const RingHom pi = RingHom::project_pi(ex), bar = RingHom::bar_split(ex),
                              inc = RingHom::canonical_inclusion(ex);
                const Element x = random_element(ex, rng), y = random_element(ex, rng);
                const Element r = random_element(I.ring(), rng);
                if (!(pi(x * y) == pi(x) * pi(y)) || !(bar(x * y) == bar(x) * bar(y)))
                  return Outcome("projection not multiplicative");
                if (!(bar(inc(r)) == r) || !(pi(inc(r)) == r))
                  return Outcome("inclusion is not a section");
                const Element b = random_ideal_member(I, rng),
                              c = random_ideal_member(I, rng);
                const Element zb = Element::pair_unchecked(ex, I.ring().zero(), b);
                const Element zc = Element::pair_unchecked(ex, I.ring().zero(), c);
                return expect(zb * zc == Element::pair_unchecked(ex, I.ring().zero(), b * c),
                              "(0,b)(0,c) != (0,bc)");
              });
  }

  for (const RelCase& rc : relative_cases()) {
    const Ideal I = rc.ideal;
    const Ring& r = I.ring();
    run.check("excision.lifts_multiplication[" + rc.label + "]", run.count(500),
              [I, r](Rng& rng, size_t) {
                const size_t n = 1 + rng.index(3);
                const size_t k = 1 + rng.index(3);
                const Matrix c = chi(n, r);
                const Matrix cl = include_matrix(c, I);
                const Matrix beta = random_ideal_matrix(I, 2 * n, k, rng);
                const Matrix gamma = random_ideal_matrix(I, k, 2 * n, rng);
                if (!(cl * lift_ideal_matrix(beta, I) == lift_ideal_matrix(c * beta, I)))
                  return Outcome("chi beta_L != (chi beta)_L");
                return expect(lift_ideal_matrix(gamma, I) * cl ==
                                  lift_ideal_matrix(gamma * c, I),
                              "gamma_L chi != (gamma chi)_L");
              });
    run.check("excision.tilde[" + rc.label + "]", run.count(500),
              [I, r](Rng& rng, size_t) {
                const size_t n = 1 + rng.index(2), m = 1 + rng.index(2);
                const Matrix a = random_relative_alt(I, n, rng, false);
                const Matrix b = random_relative_alt(I, m, rng, false);
                if (!(lift_alt(perp(a, b), I) == perp(lift_alt(a, I), lift_alt(b, I))))
                  return Outcome("(a perp b)_L != a_L perp b_L");
                const Matrix s = sigma(n, r);
                const Matrix al = lift_alt(a, I);
                const Matrix sl = sigma(n, al.ring());
                return expect(lift_alt(s * inverse(a) * s, I) == sl * inverse(al) * sl,
                              "(sigma a^-1 sigma)_L != sigma a_L^-1 sigma");
              });
    run.check("excision.lift_sl[" + rc.label + "]", run.count(200),
              [I, r](Rng& rng, size_t) {
                const size_t n = 2 + rng.index(3);
                const Matrix a = word_eval(random_word(Family::Linear, n, r, 4, rng, I));
                const Matrix al = lift_matrix(a, I, GroupTag::SL);
                return expect(det(al).is_one() && det(al).first().is_one(),
                              "det(alpha_L) != (1,0)");
              });
    run.check("excision.lift_sp[" + rc.label + "]", run.count(200),
              [I, r](Rng& rng, size_t) {
                const size_t n = 2 + rng.index(2);
                const Matrix a =
                    word_eval(random_word(Family::Symplectic, 2 * n, r, 4, rng, I));
                const Matrix al = lift_matrix(a, I, GroupTag::Sp);
                const Matrix c = chi(n, al.ring());
                return expect(transpose(al) * c * al == c, "alpha_L^T chi alpha_L != chi");
              });
    run.check("excision.project_lift[" + rc.label + "]", run.count(200),
              [I, r](Rng& rng, size_t) {
                const size_t n = 2 + rng.index(3);
                const ElementaryWord w = random_word(Family::Linear, n, r, 4, rng, I);
                const Matrix m = word_eval(w);
                const Ring ex = Ring::excision(I);
                const RingHom pi = RingHom::project_pi(ex);
                // Row: first row of m, witness: first column of m^-1.
                const Matrix mi = inverse(m);
                std::vector<Element> v = m.row(0), wit;
                for (size_t k = 0; k < n; ++k) wit.push_back(mi(k, 0));
                const UnimodularRow row = make_row(r, v, wit, I);
                const UnimodularRow lifted = lift_row(row);
                for (size_t k = 0; k < n; ++k)
                  if (!(pi(lifted.entries[k]) == v[k])) return Outcome("pi(v_L) != v");
                if (!(apply_hom(pi, lift_matrix(m, I)) == m))
                  return Outcome("pi(alpha_L) != alpha");
                const Matrix wl = word_eval(lift_word(w, I));
                if (!(apply_hom(pi, wl) == m)) return Outcome("pi(w_L) != w");
                if (!is_relative_to(wl, Ideal::split(ex)) ||
                    !(apply_hom(RingHom::bar_split(ex), wl) == Matrix::identity(r, n)))
                  return Outcome("lifted word leaves E(n, R (+) I, 0 (+) I)");
                return Outcome();
              });
  }

  run.check("excision.normalize", run.count(200), [i2](Rng& rng, size_t) {
    const Ring ex = Ring::excision(i2);
    RandomOptions opt;
    opt.bound = 3;
    const Matrix g = word_eval(random_word(Family::Linear, 2, ex, 4, rng, std::nullopt, opt));
    return expect(is_relative_to(normalize_relative(g), Ideal::split(ex)),
                  "normalized matrix is not relative");
  });
  run.check("excision.localization_compat", run.count(100), [i2](Rng& rng, size_t) {
    const Ring& zz = i2.ring();
    const long fs[] = {2, 3, 5};
    const Element f = zz.from_int(fs[rng.index(3)]);
    const size_t n = 2 + rng.index(2);
    const Matrix a = word_eval(random_word(Family::Linear, n, zz, 3, rng, i2));
    return expect(localization_compat(a, i2, f), "lift does not commute with localization");
  });
}

// --- witt ----------------------------------------------------------------

void suite_witt(Runner& run) {
  const Ring z8 = Ring::integers_mod(8);
  const Ideal i4 = ideal_of(z8, 4);
  const std::vector<Element> cc = unit_kernel(z8, i4);
  run.check("witt.pf_section", cc.size(), [cc, i4](Rng&, size_t t) {
    const Element& a = cc[t];
    return expect(witt_pf(pf_section(a, i4)) == a, "Pf(pf_section(a)) != a");
  });
  run.check("witt.split_certificate", cc.size() * cc.size(), [cc, i4, z8](Rng&, size_t t) {
    const Element& a = cc[t / cc.size()];
    const Element& b = cc[t % cc.size()];
    const AltRep A = make_alt(perp(pf_section(a * b, i4).matrix, chi(1, z8)), i4);
    const AltRep B = make_alt(perp(pf_section(a, i4).matrix, pf_section(b, i4).matrix), i4);
    const Matrix m = split_conjugator(b);
    if (!(transpose(m) * A.matrix * m == B.matrix))
      return Outcome("conjugation identity fails for a=" + to_string(a) +
                     " b=" + to_string(b));
    return expect(check_equiv(A, B, split_certificate(b)),
                  "certificate rejected for a=" + to_string(a) + " b=" + to_string(b));
  });
  run.check("witt.hyperbolic_symplectic", run.count(100), [](Rng& rng, size_t t) {
    const Ring r = t % 2 ? Ring::integers() : Ring::integers_mod(8);
    const size_t n = 2 + rng.index(2);
    const Matrix a = word_eval(random_word(Family::Symplectic, 2 * n, r, 5, rng));
    return expect(hyperbolic_H(a).matrix == chi(n, r), "H(symplectic) != chi");
  });
  for (const RelCase& rc : relative_cases()) {
    const Ideal I = rc.ideal;
    run.check("witt.inverse_pf[" + rc.label + "]", run.count(200), [I](Rng& rng, size_t) {
      const size_t n = 1 + rng.index(4);
      const AltRep a = make_alt(random_relative_alt(I, n, rng, true), I);
      if (!witt_pf(a).is_one()) return Outcome("Pf of a Pf-1 rep is not 1");
      const AltRep inv = witt_inverse_rep(a);
      if (!is_relative_to(inv.matrix, I, chi(n, I.ring())))
        return Outcome("inverse rep is not relative");
      return expect(witt_pf(inv).is_one(), "Pf of inverse rep is not 1");
    });
    run.check("witt.perp_pf[" + rc.label + "]", run.count(200), [I](Rng& rng, size_t) {
      const AltRep a = make_alt(random_relative_alt(I, 1 + rng.index(2), rng, false), I);
      const AltRep b = make_alt(random_relative_alt(I, 1 + rng.index(2), rng, false), I);
      return expect(witt_pf(witt_perp(a, b)) == witt_pf(a) * witt_pf(b),
                    "Pf(a perp b) != Pf(a) Pf(b)");
    });
    run.check("witt.padding[" + rc.label + "]", run.count(100), [I](Rng& rng, size_t) {
      const Ring& r = I.ring();
      const size_t m = 1 + rng.index(2);
      const AltRep B = make_alt(random_relative_alt(I, m, rng, false), I);
      const ElementaryWord e0 = random_word(Family::Linear, 2 * m, r, 3, rng, I);
      const Matrix e = word_eval(e0);
      const AltRep A = make_alt(transpose(e) * B.matrix * e, I);
      EquivCertificate cert{0, pad_word(e0, 4 * m)};
      for (int pad = 0; pad < 3; ++pad) {
        if (!check_equiv(A, B, cert))
          return Outcome("planted certificate rejected at t=" + std::to_string(cert.t));
        cert = pad_certificate(cert);
      }
      return Outcome();
    });
    run.check("witt.extract_block[" + rc.label + "]", run.count(200), [I](Rng& rng, size_t) {
      const Ring& r = I.ring();
      const size_t n = 1 + rng.index(2);
      const AltRep t1 = make_alt(random_relative_alt(I, n, rng, false), I);
      const Matrix b0 = word_eval(random_word(Family::Linear, 2 * n, r, 3, rng, I));
      const AltRep t2 = make_alt(transpose(b0) * t1.matrix * b0, I);
      const Matrix u = random_ideal_matrix(I, 2 * n, 1, rng);
      const Element p = random_ideal_member(I, rng);
      const Matrix x = transpose(u) * t1.matrix * b0;
      const size_t sz = 2 * n + 2;
      Matrix delta = Matrix::identity(r, sz);
      delta(0, 1) = p;
      for (size_t k = 0; k < 2 * n; ++k) {
        delta(0, 2 + k) = x(0, k);
        delta(2 + k, 1) = u(k, 0);
        for (size_t l = 0; l < 2 * n; ++l) delta(2 + k, 2 + l) = b0(k, l);
      }
      const Matrix beta = extract_block(delta, t1, t2);
      if (!(beta == b0)) return Outcome("extracted block differs from the planted one");
      return expect(is_relative_to(beta, I), "extracted block is not relative");
    });
  }
}

// --- completion ----------------------------------------------------------

struct CuratedRow {
  long m;
  std::vector<long> v;
};

const std::vector<CuratedRow>& curated_rows() {
  static const std::vector<CuratedRow> rows{
      {5, {6, 5, 10}},       {2, {1, 0, 10}},        {2, {9, -10, 4}},
      {2, {-1, 10, -10}},    {2, {-3, -8, 0, 4}},    {2, {-1, 2, 6, -8}},
      {2, {-1, -10, -4, 2}}, {3, {1, -9, 3}},        {3, {-5, -12, -9}},
      {3, {10, -9, -9}},     {3, {-11, -15, -6, -6}}, {3, {-5, -9, -3, 0}},
      {3, {-2, 9, 15, 15}},  {5, {-4, -15, -10}},    {5, {11, -5, -25}},
      {5, {6, 5, -15, -15}}, {5, {1, -20, 0, -5}},   {5, {-19, 20, 25, 0}},
      {5, {16, 5, 0}},       {3, {7, 3, 0, 0}},
  };
  return rows;
}

// Relative word over (Z, <6>) or (F5[T], <T+2>) and its two localizations.
Outcome patch_trial(bool poly, Rng& rng) {
  Ring r;
  Ideal I;
  Element s, t;
  RandomOptions opt;
  if (!poly) {
    r = Ring::integers();
    I = ideal_of(r, 6);
    do {
      s = r.from_int(rng.uniform(2, 30));
      t = r.from_int(rng.uniform(2, 30));
    } while (!is_unit(gcd(s, t)));
    opt.bound = 3;
  } else {
    r = Ring::polynomial(Ring::integers_mod(5), "T");
    const Ring& f = r.base();
    I = Ideal(r, {Element::poly(r, {f.from_int(2), f.one()})});
    opt.bound = 4;
    opt.max_degree = 1;
    do {
      s = random_nonzero(r, rng, opt);
      t = random_nonzero(r, rng, opt);
    } while (is_unit(s) || is_unit(t) || !is_unit(gcd(s, t)));
    opt.max_degree = 0;
  }
  const size_t n = 1 + rng.index(2);
  const Matrix a = word_eval(random_word(Family::Symplectic, 2 * n, r, 3, rng, I, opt));
  const Ring rs = Ring::localized(s), rt = Ring::localized(t);
  const Matrix a1 = apply_hom(RingHom::localization_inclusion(rs), a);
  const Matrix a2 = apply_hom(RingHom::localization_inclusion(rt), a);
  if (!(patch_symplectic(s, t, a1, a2, I) == a)) return "patch(s,t) does not recover alpha";
  return expect(patch_symplectic(t, s, a2, a1, I) == a,
                "patch(t,s) disagrees with patch(s,t)");
}

void suite_completion(Runner& run) {
  run.check("completion.patch.Z", run.count(200),
            [](Rng& rng, size_t) { return patch_trial(false, rng); });
  run.check("completion.patch.F5[T]", run.count(200),
            [](Rng& rng, size_t) { return patch_trial(true, rng); });
  run.check("completion.curated_relative", curated_rows().size(), [](Rng&, size_t t) {
    const Ring zz = Ring::integers();
    const CuratedRow& c = curated_rows()[t];
    std::vector<Element> v;
    for (long x : c.v) v.push_back(zz.from_int(x));
    const Ideal I = ideal_of(zz, c.m);
    UnimodularRow row;
    row.ring = zz;
    row.entries = v;
    row.ideal = I;
    row.witness = find_relative_witness(row);
    row = make_row(zz, v, row.witness, I);
    const ExcisionCompletion out = complete_row_via_excision(row, 1 << 16);
    return expect(verify_completion(row, out.gamma), "completion fails verification");
  });
  run.check("completion.euclidean_rows", run.count(500), [](Rng& rng, size_t) {
    const Ring zz = Ring::integers();
    const size_t n = 3 + rng.index(2);
    std::vector<Element> v;
    Element g;
    do {
      v.clear();
      g = zz.zero();
      for (size_t k = 0; k < n; ++k) {
        v.push_back(zz.from_int(rng.uniform(-20, 20)));
        g = gcd(g, v.back());
      }
    } while (!g.is_one());
    const ElementaryWord w = row_reduce_euclidean(v);
    return expect(is_e1(row_times(v, w)), "reduction does not reach e1");
  });
}

using SuiteFn = void (*)(Runner&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> m{
      {"esd", suite_esd},           {"elementary", suite_elementary},
      {"steinberg", suite_steinberg}, {"pfaffian", suite_pfaffian},
      {"excision", suite_excision}, {"witt", suite_witt},
      {"completion", suite_completion},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "esd", "elementary", "steinberg", "pfaffian", "excision", "witt", "completion"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  SuiteReport report;
  report.suite = name;
  report.seed = options.seed;
  Runner run(options, report);
  if (name == "all") {
    for (const std::string& s : suite_names()) registry().at(s)(run);
    return report;
  }
  auto it = registry().find(name);
  if (it == registry().end()) fail(Errc::InvalidArgument, "unknown suite '" + name + "'");
  it->second(run);
  return report;
}

}  // namespace relsymp
