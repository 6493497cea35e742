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

/**
 * @file ring.hpp
 * @brief Exact commutative rings chosen at run time.
 *
 * A Ring is a handle to an interned, immutable descriptor. Two descriptors
 * with the same textual description are the same object, so ring equality
 * is pointer equality and Elements can be compared cheaply.
 *
 * Supported descriptors:
 *   Z, Q, Z/m, R[X], R_g (g a non-zero-divisor), F[X]/(f),
 *   the excision algebra R (+) I with product (r,i)(s,j) = (rs, rj + si + ij),
 *   and the double ring D(R,I) = {(a,b) : a - b in I}.
 *
 * Every Element is kept in canonical form, so equality is structural except
 * for localizations, which compare by cross-multiplication.
 */

#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "relsymp/error.hpp"

namespace relsymp {

class Element;
class Ideal;
struct RingData;

enum class RingKind {
  Integers,
  Rationals,
  IntegersMod,
  Polynomial,
  Localized,
  Quotient,
  Excision,
  Double,
};

class Ring {
 public:
  Ring() = default;

  static Ring integers();
  static Ring rationals();
  static Ring integers_mod(const mpz_class& modulus);
  static Ring polynomial(const Ring& base, const std::string& variable = "X");
  /// R_g. `g` must be a non-zero-divisor of its ring; this is checked only
  /// where it is decidable (domains: g != 0).
  static Ring localized(const Element& denominator);
  /// F[X]/(f) for a polynomial ring over a field; Z/(m) maps to IntegersMod.
  static Ring quotient(const Element& modulus);
  static Ring excision(const Ideal& ideal);
  static Ring double_ring(const Ideal& ideal);

  bool valid() const noexcept { return d_ != nullptr; }
  RingKind kind() const;
  const Ring& base() const;
  const mpz_class& modulus() const;
  const std::string& variable() const;
  /// Localized: the denominator generator. Quotient: the monic modulus.
  const Element& generator() const;
  const Ideal& ideal() const;

  /// Canonical textual descriptor (the CLI `ring` grammar).
  const std::string& describe() const;

  bool is_domain() const;
  bool is_field() const;
  bool is_euclidean() const;

  Element zero() const;
  Element one() const;
  Element from_int(long value) const;
  Element from_mpz(const mpz_class& value) const;

  friend bool operator==(const Ring& a, const Ring& b) noexcept {
    return a.d_ == b.d_;
  }

 private:
  explicit Ring(const RingData* d) : d_(d) {}
  const RingData* data() const;
  const RingData* d_ = nullptr;
  friend class RingFactory;
};

class Element {
 public:
  struct Compound {
    std::vector<Element> parts;
    unsigned long exp = 0;
  };

  Element() = default;

  const Ring& ring() const noexcept { return ring_; }
  bool valid() const noexcept { return ring_.valid(); }

  const mpz_class& integer() const;             // Integers, IntegersMod
  const mpq_class& rational() const;            // Rationals
  const std::vector<Element>& coeffs() const;   // Polynomial
  const Element& numerator() const;             // Localized
  unsigned long exponent() const;               // Localized
  const Element& residue() const;               // Quotient
  const Element& first() const;                 // Excision, Double
  const Element& second() const;                // Excision, Double

  bool is_zero() const;
  bool is_one() const;

  // Canonicalizing constructors. `pair` checks the ideal condition whenever
  // the ideal's membership is decidable.
  static Element integer(const Ring& r, mpz_class v);
  static Element rational(const Ring& r, mpq_class v);
  static Element poly(const Ring& r, std::vector<Element> coeffs);
  static Element fraction(const Ring& r, Element num, unsigned long exp);
  static Element residue(const Ring& r, Element lift);
  static Element pair(const Ring& r, Element a, Element b);
  /// Pair constructor used where the ideal condition holds by construction.
  static Element pair_unchecked(const Ring& r, Element a, Element b);

  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator-(const Element& x);
  Element& operator+=(const Element& y) { return *this = *this + y; }
  Element& operator-=(const Element& y) { return *this = *this - y; }
  Element& operator*=(const Element& y) { return *this = *this * y; }
  friend bool operator==(const Element& x, const Element& y);

 private:
  Ring ring_;
  std::variant<std::monostate, mpz_class, mpq_class, Compound> v_;
};

Element pow(const Element& x, unsigned long e);

/// Multiplicative inverse or std::nullopt when x is not a unit.
std::optional<Element> try_unit_inverse(const Element& x);
/// Throws NotAUnit.
Element unit_inverse(const Element& x);
bool is_unit(const Element& x);

/// c with b*c == a. Returns nullopt when no quotient was found; over
/// non-domains only division by units is attempted.
std::optional<Element> try_divide(const Element& a, const Element& b);
/// Exact division in an integral domain. Throws NotADomain / NotDivisible.
Element exact_divide(const Element& a, const Element& b);

// Euclidean structure (Z, fields, polynomials over a field).
/// Size function: 0 exactly for zero.
mpz_class euclid_size(const Element& x);
std::pair<Element, Element> divmod(const Element& a, const Element& b);
/// Normalized gcd (non-negative over Z, monic over F[X]).
Element gcd(const Element& a, const Element& b);
/// (g, s, t) with s*a + t*b == g == gcd(a, b).
std::tuple<Element, Element, Element> ext_gcd(const Element& a,
                                              const Element& b);

/// Canonical literal in the document grammar.
std::string to_string(const Element& x);

enum class Membership { GcdDecidable, CertificateOnly };

class Ideal {
 public:
  Ideal() = default;
  Ideal(const Ring& ring, std::vector<Element> generators);
  /// The split ideal 0 (+) I of an excision algebra R (+) I.
  static Ideal split(const Ring& excision);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Element>& generators() const noexcept { return gens_; }
  Membership mode() const noexcept { return mode_; }
  bool is_split() const noexcept { return split_; }

  /// Decides membership; throws CertificateRequired for CertificateOnly
  /// ideals.
  bool contains(const Element& x) const;
  /// Verifies x == sum cert[k] * gens[k]. Valid in every mode.
  bool contains(const Element& x, std::span<const Element> cert) const;
  bool is_whole() const;
  /// Single generator of the ideal, when the ideal is GcdDecidable and
  /// principal by construction (Z, Z/m, F[X], F[X]/(f), localizations of
  /// those).
  std::optional<Element> principal_generator() const;

  std::string describe() const;

 private:
  Ring ring_;
  std::vector<Element> gens_;
  Membership mode_ = Membership::CertificateOnly;
  bool split_ = false;
};

/// R/I for computable quotients. Throws QuotientNotComputable (including
/// the zero ring, I = R).
Ring quotient_ring(const Ideal& ideal);

/// Image of I in a localization R_g of its ring.
Ideal localize_ideal(const Ideal& ideal, const Ring& localized);

/// C = ker(R* -> (R/I)*) for R = Z/m. Throws NotEnumerable otherwise.
std::vector<Element> unit_kernel(const Ring& ring, const Ideal& ideal);

enum class HomKind {
  EvalAt,
  ResidueMod,
  LocalizationInclusion,
  ProjectPi,
  BarSplit,
  CanonicalInclusion,
  DoubleU,
  DoubleV,
  ConstantInclusion,
  ExcisionLocalization,
};

/// Unital ring homomorphism between two interned rings.
class RingHom {
 public:
  /// R[X] -> R, p |-> p(point).
  static RingHom eval_at(const Ring& poly, const Element& point);
  /// R -> R/I.
  static RingHom residue_mod(const Ideal& ideal);
  /// R -> R_g.
  static RingHom localization_inclusion(const Ring& localized);
  /// R (+) I -> R, (r,i) |-> r + i.
  static RingHom project_pi(const Ring& excision);
  /// R (+) I -> R, (r,i) |-> r.
  static RingHom bar_split(const Ring& excision);
  /// R -> R (+) I, r |-> (r,0).
  static RingHom canonical_inclusion(const Ring& excision);
  /// R (+) I -> D(R,I), (a,i) |-> (a, a+i).
  static RingHom double_u(const Ring& excision);
  /// D(R,I) -> R (+) I, (x,y) |-> (x, y-x).
  static RingHom double_v(const Ring& double_ring);
  /// R -> R[X], constants.
  static RingHom constant_inclusion(const Ring& poly);
  /// (R (+) I)_(f,0) -> R_f (+) I_f, (r,i)/(f,0)^n |-> (r/f^n, i/f^n).
  static RingHom excision_localization(const Ring& localized_excision);

  HomKind kind() const noexcept { return kind_; }
  const Ring& source() const noexcept { return source_; }
  const Ring& target() const noexcept { return target_; }

  Element operator()(const Element& x) const;

 private:
  HomKind kind_ = HomKind::EvalAt;
  Ring source_;
  Ring target_;
  std::vector<Element> param_;
};

}  // namespace relsymp
