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

#include "relsymp/ring.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace relsymp {

struct RingData {
  RingKind kind = RingKind::Integers;
  std::string desc;
  Ring base;
  mpz_class modulus;
  std::string var;
  Element gen;
  Ideal ideal;
  bool domain = false;
  bool field = false;
  bool euclidean = false;
};

class RingFactory {
 public:
  static Ring intern(std::unique_ptr<RingData> proto) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<RingData>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(proto->desc);
    if (it != registry.end()) return Ring(it->second.get());
    const RingData* raw = proto.get();
    registry.emplace(proto->desc, std::move(proto));
    return Ring(raw);
  }
  static const RingData& get(const Ring& r) { return *r.data(); }
};

namespace {

void same_ring(const Element& x, const Element& y) {
  if (!x.valid() || !(x.ring() == y.ring()))
    fail(Errc::DescriptorMismatch,
         "operands live in different rings: " +
             (x.valid() ? x.ring().describe() : std::string("<none>")) +
             " vs " +
             (y.valid() ? y.ring().describe() : std::string("<none>")));
}

void expect_kind(const Ring& r, RingKind k, const char* what) {
  if (!r.valid() || r.kind() != k)
    fail(Errc::DescriptorMismatch, std::string(what) + ": wrong ring kind");
}

bool gcd_decidable(const Ring& r) {
  switch (r.kind()) {
    case RingKind::IntegersMod:
    case RingKind::Quotient:
      return true;
    case RingKind::Localized:
      return r.base().is_euclidean();
    default:
      return r.is_euclidean();
  }
}

long degree(const Element& p) {
  return static_cast<long>(p.coeffs().size()) - 1;
}

// Unit normalizing x in a Euclidean ring: sign over Z, inverse over a field,
// inverse leading coefficient over F[X].
Element normalizer(const Element& x) {
  const Ring& r = x.ring();
  if (x.is_zero()) return r.one();
  switch (r.kind()) {
    case RingKind::Integers:
      return r.from_int(sgn(x.integer()) < 0 ? -1 : 1);
    case RingKind::Polynomial:
      return Element::poly(r, {unit_inverse(x.coeffs().back())});
    default:
      return unit_inverse(x);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Ring

const RingData* Ring::data() const {
  if (d_ == nullptr) fail(Errc::DescriptorMismatch, "uninitialized ring");
  return d_;
}

RingKind Ring::kind() const { return data()->kind; }
const Ring& Ring::base() const { return data()->base; }
const mpz_class& Ring::modulus() const { return data()->modulus; }
const std::string& Ring::variable() const { return data()->var; }
const Element& Ring::generator() const { return data()->gen; }
const Ideal& Ring::ideal() const { return data()->ideal; }
const std::string& Ring::describe() const { return data()->desc; }
bool Ring::is_domain() const { return data()->domain; }
bool Ring::is_field() const { return data()->field; }
bool Ring::is_euclidean() const { return data()->euclidean; }

Ring Ring::integers() {
  static const Ring z = [] {
    auto d = std::make_unique<RingData>();
    d->kind = RingKind::Integers;
    d->desc = "Z";
    d->domain = d->euclidean = true;
    return RingFactory::intern(std::move(d));
  }();
  return z;
}

Ring Ring::rationals() {
  static const Ring q = [] {
    auto d = std::make_unique<RingData>();
    d->kind = RingKind::Rationals;
    d->desc = "Q";
    d->domain = d->field = d->euclidean = true;
    return RingFactory::intern(std::move(d));
  }();
  return q;
}

Ring Ring::integers_mod(const mpz_class& modulus) {
  if (modulus < 2)
    fail(Errc::InvalidArgument, "Zmod modulus must be at least 2");
  auto d = std::make_unique<RingData>();
  d->kind = RingKind::IntegersMod;
  d->modulus = modulus;
  d->desc = "Zmod " + modulus.get_str();
  bool prime = mpz_probab_prime_p(modulus.get_mpz_t(), 30) != 0;
  d->domain = d->field = d->euclidean = prime;
  return RingFactory::intern(std::move(d));
}

Ring Ring::polynomial(const Ring& base, const std::string& variable) {
  if (!base.valid()) fail(Errc::DescriptorMismatch, "polynomial over nothing");
  auto d = std::make_unique<RingData>();
  d->kind = RingKind::Polynomial;
  d->base = base;
  d->var = variable;
  d->desc = "poly " + base.describe() + " " + variable;
  d->domain = base.is_domain();
  d->euclidean = base.is_field();
  return RingFactory::intern(std::move(d));
}

Ring Ring::localized(const Element& denominator) {
  const Ring& base = denominator.ring();
  if (!base.valid()) fail(Errc::DescriptorMismatch, "localization of nothing");
  if (denominator.is_zero())
    fail(Errc::InvalidArgument, "cannot localize at zero");
  auto d = std::make_unique<RingData>();
  d->kind = RingKind::Localized;
  d->base = base;
  d->gen = denominator;
  d->desc = "loc " + base.describe() + " " + to_string(denominator);
  d->domain = base.is_domain();
  d->field = base.is_field();
  d->euclidean = base.is_field();
  return RingFactory::intern(std::move(d));
}

Ring Ring::quotient(const Element& modulus) {
  const Ring& base = modulus.ring();
  if (base.valid() && base.kind() == RingKind::Integers) {
    mpz_class m = abs(modulus.integer());
    if (m < 2) fail(Errc::QuotientNotComputable, "Z/(m) needs |m| >= 2");
    return integers_mod(m);
  }
  if (!base.valid() || base.kind() != RingKind::Polynomial ||
      !base.base().is_field())
    fail(Errc::QuotientNotComputable,
         "quotients are supported over Z and F[X] only");
  if (degree(modulus) < 1)
    fail(Errc::QuotientNotComputable, "modulus must have positive degree");
  Element monic = modulus * normalizer(modulus);
  auto d = std::make_unique<RingData>();
  d->kind = RingKind::Quotient;
  d->base = base;
  d->gen = monic;
  d->desc = "quot " + base.describe() + " " + to_string(monic);
  // Irreducibility is not tested, so F[X]/(f) is never reported as a domain.
  return RingFactory::intern(std::move(d));
}

Ring Ring::excision(const Ideal& ideal) {
  if (!ideal.ring().valid())
    fail(Errc::DescriptorMismatch, "excision over nothing");
  auto d = std::make_unique<RingData>();
  d->kind = RingKind::Excision;
  d->base = ideal.ring();
  d->ideal = ideal;
  d->desc = "excision " + ideal.ring().describe() + " " + ideal.describe();
  return RingFactory::intern(std::move(d));
}

Ring Ring::double_ring(const Ideal& ideal) {
  if (!ideal.ring().valid())
    fail(Errc::DescriptorMismatch, "double ring over nothing");
  auto d = std::make_unique<RingData>();
  d->kind = RingKind::Double;
  d->base = ideal.ring();
  d->ideal = ideal;
  d->desc = "double " + ideal.ring().describe() + " " + ideal.describe();
  return RingFactory::intern(std::move(d));
}

Element Ring::zero() const { return from_int(0); }
Element Ring::one() const { return from_int(1); }
Element Ring::from_int(long value) const { return from_mpz(mpz_class(value)); }

Element Ring::from_mpz(const mpz_class& value) const {
  switch (kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
      return Element::integer(*this, value);
    case RingKind::Rationals:
      return Element::rational(*this, mpq_class(value));
    case RingKind::Polynomial:
      return Element::poly(*this, {base().from_mpz(value)});
    case RingKind::Localized:
      return Element::fraction(*this, base().from_mpz(value), 0);
    case RingKind::Quotient:
      return Element::residue(*this, base().from_mpz(value));
    case RingKind::Excision:
      return Element::pair_unchecked(*this, base().from_mpz(value),
                                     base().zero());
    case RingKind::Double: {
      Element v = base().from_mpz(value);
      return Element::pair_unchecked(*this, v, v);
    }
  }
  fail(Errc::InvalidArgument, "unknown ring kind");
}

// ---------------------------------------------------------------------------
// Element accessors and constructors

namespace {

template <class T>
const T& payload(const std::variant<std::monostate, mpz_class, mpq_class,
                                    Element::Compound>& v,
                 const char* what) {
  if (const T* p = std::get_if<T>(&v)) return *p;
  fail(Errc::DescriptorMismatch, std::string("element is not ") + what);
}

}  // namespace

const mpz_class& Element::integer() const {
  return payload<mpz_class>(v_, "an integer");
}
const mpq_class& Element::rational() const {
  return payload<mpq_class>(v_, "a rational");
}
const std::vector<Element>& Element::coeffs() const {
  if (!valid() || ring_.kind() != RingKind::Polynomial)
    fail(Errc::DescriptorMismatch, "element is not a polynomial");
  return payload<Compound>(v_, "a polynomial").parts;
}
const Element& Element::numerator() const {
  if (!valid() || ring_.kind() != RingKind::Localized)
    fail(Errc::DescriptorMismatch, "element is not a fraction");
  return payload<Compound>(v_, "a fraction").parts[0];
}
unsigned long Element::exponent() const {
  if (!valid() || ring_.kind() != RingKind::Localized)
    fail(Errc::DescriptorMismatch, "element is not a fraction");
  return payload<Compound>(v_, "a fraction").exp;
}
const Element& Element::residue() const {
  if (!valid() || ring_.kind() != RingKind::Quotient)
    fail(Errc::DescriptorMismatch, "element is not a residue");
  return payload<Compound>(v_, "a residue").parts[0];
}
const Element& Element::first() const {
  return payload<Compound>(v_, "a pair").parts.at(0);
}
const Element& Element::second() const {
  return payload<Compound>(v_, "a pair").parts.at(1);
}

bool Element::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
      return sgn(integer()) == 0;
    case RingKind::Rationals:
      return sgn(rational()) == 0;
    case RingKind::Polynomial:
      return coeffs().empty();
    case RingKind::Localized:
      return numerator().is_zero();
    case RingKind::Quotient:
      return residue().is_zero();
    case RingKind::Excision:
    case RingKind::Double:
      return first().is_zero() && second().is_zero();
  }
  return false;
}

bool Element::is_one() const { return *this == ring_.one(); }

Element Element::integer(const Ring& r, mpz_class v) {
  if (!r.valid() || (r.kind() != RingKind::Integers &&
                     r.kind() != RingKind::IntegersMod))
    fail(Errc::DescriptorMismatch, "integer payload in non-integer ring");
  if (r.kind() == RingKind::IntegersMod)
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), r.modulus().get_mpz_t());
  Element e;
  e.ring_ = r;
  e.v_ = std::move(v);
  return e;
}

Element Element::rational(const Ring& r, mpq_class v) {
  expect_kind(r, RingKind::Rationals, "rational payload");
  v.canonicalize();
  Element e;
  e.ring_ = r;
  e.v_ = std::move(v);
  return e;
}

Element Element::poly(const Ring& r, std::vector<Element> coeffs) {
  expect_kind(r, RingKind::Polynomial, "polynomial payload");
  for (const Element& c : coeffs)
    if (!(c.ring() == r.base()))
      fail(Errc::DescriptorMismatch, "coefficient outside the base ring");
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  Element e;
  e.ring_ = r;
  e.v_ = Compound{std::move(coeffs), 0};
  return e;
}

Element Element::fraction(const Ring& r, Element num, unsigned long exp) {
  expect_kind(r, RingKind::Localized, "fraction payload");
  if (!(num.ring() == r.base()))
    fail(Errc::DescriptorMismatch, "numerator outside the base ring");
  if (num.is_zero()) {
    exp = 0;
  } else if (r.base().is_domain()) {
    while (exp > 0) {
      auto q = try_divide(num, r.generator());
      if (!q) break;
      num = std::move(*q);
      --exp;
    }
  }
  Element e;
  e.ring_ = r;
  e.v_ = Compound{{std::move(num)}, exp};
  return e;
}

Element Element::residue(const Ring& r, Element lift) {
  expect_kind(r, RingKind::Quotient, "residue payload");
  if (!(lift.ring() == r.base()))
    fail(Errc::DescriptorMismatch, "residue lift outside the base ring");
  Element rem = divmod(lift, r.generator()).second;
  Element e;
  e.ring_ = r;
  e.v_ = Compound{{std::move(rem)}, 0};
  return e;
}

Element Element::pair(const Ring& r, Element a, Element b) {
  if (!r.valid() ||
      (r.kind() != RingKind::Excision && r.kind() != RingKind::Double))
    fail(Errc::DescriptorMismatch, "pair payload in non-pair ring");
  if (!(a.ring() == r.base()) || !(b.ring() == r.base()))
    fail(Errc::DescriptorMismatch, "pair component outside the base ring");
  const Ideal& I = r.ideal();
  if (I.mode() == Membership::GcdDecidable) {
    const Element probe = r.kind() == RingKind::Excision ? b : a - b;
    if (!I.contains(probe))
      fail(Errc::NotRelative, "pair component " + to_string(probe) +
                                  " is not in " + I.describe());
  }
  return pair_unchecked(r, std::move(a), std::move(b));
}

Element Element::pair_unchecked(const Ring& r, Element a, Element b) {
  Element e;
  e.ring_ = r;
  e.v_ = Compound{{std::move(a), std::move(b)}, 0};
  return e;
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

std::vector<Element> poly_add(const Ring& base, const std::vector<Element>& p,
                              const std::vector<Element>& q, bool subtract) {
  std::vector<Element> out(std::max(p.size(), q.size()), base.zero());
  for (size_t k = 0; k < p.size(); ++k) out[k] = p[k];
  for (size_t k = 0; k < q.size(); ++k)
    out[k] = subtract ? out[k] - q[k] : out[k] + q[k];
  return out;
}

std::vector<Element> poly_mul(const Ring& base, const std::vector<Element>& p,
                              const std::vector<Element>& q) {
  if (p.empty() || q.empty()) return {};
  std::vector<Element> out(p.size() + q.size() - 1, base.zero());
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return out;
}

// x = n/g^k rewritten over the common exponent K >= k.
Element raise_to(const Element& x, unsigned long K) {
  const Element& g = x.ring().generator();
  return x.numerator() * pow(g, K - x.exponent());
}

}  // namespace

Element operator+(const Element& x, const Element& y) {
  same_ring(x, y);
  const Ring& r = x.ring();
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
      return Element::integer(r, x.integer() + y.integer());
    case RingKind::Rationals:
      return Element::rational(r, x.rational() + y.rational());
    case RingKind::Polynomial:
      return Element::poly(r, poly_add(r.base(), x.coeffs(), y.coeffs(), false));
    case RingKind::Localized: {
      unsigned long K = std::max(x.exponent(), y.exponent());
      return Element::fraction(r, raise_to(x, K) + raise_to(y, K), K);
    }
    case RingKind::Quotient:
      return Element::residue(r, x.residue() + y.residue());
    case RingKind::Excision:
    case RingKind::Double:
      return Element::pair_unchecked(r, x.first() + y.first(),
                                     x.second() + y.second());
  }
  fail(Errc::InvalidArgument, "unknown ring kind");
}

Element operator-(const Element& x) {
  const Ring& r = x.ring();
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
      return Element::integer(r, -x.integer());
    case RingKind::Rationals:
      return Element::rational(r, -x.rational());
    case RingKind::Polynomial: {
      std::vector<Element> c;
      c.reserve(x.coeffs().size());
      for (const Element& a : x.coeffs()) c.push_back(-a);
      return Element::poly(r, std::move(c));
    }
    case RingKind::Localized:
      return Element::fraction(r, -x.numerator(), x.exponent());
    case RingKind::Quotient:
      return Element::residue(r, -x.residue());
    case RingKind::Excision:
    case RingKind::Double:
      return Element::pair_unchecked(r, -x.first(), -x.second());
  }
  fail(Errc::InvalidArgument, "unknown ring kind");
}

Element operator-(const Element& x, const Element& y) {
  same_ring(x, y);
  const Ring& r = x.ring();
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
      return Element::integer(r, x.integer() - y.integer());
    case RingKind::Rationals:
      return Element::rational(r, x.rational() - y.rational());
    case RingKind::Polynomial:
      return Element::poly(r, poly_add(r.base(), x.coeffs(), y.coeffs(), true));
    default:
      return x + (-y);
  }
}

Element operator*(const Element& x, const Element& y) {
  same_ring(x, y);
  const Ring& r = x.ring();
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
      return Element::integer(r, x.integer() * y.integer());
    case RingKind::Rationals:
      return Element::rational(r, x.rational() * y.rational());
    case RingKind::Polynomial:
      return Element::poly(r, poly_mul(r.base(), x.coeffs(), y.coeffs()));
    case RingKind::Localized:
      return Element::fraction(r, x.numerator() * y.numerator(),
                               x.exponent() + y.exponent());
    case RingKind::Quotient:
      return Element::residue(r, x.residue() * y.residue());
    case RingKind::Excision: {
      // (r,i)(s,j) = (rs, rj + si + ij)
      const Element& a = x.first();
      const Element& i = x.second();
      const Element& s = y.first();
      const Element& j = y.second();
      return Element::pair_unchecked(r, a * s, a * j + s * i + i * j);
    }
    case RingKind::Double:
      return Element::pair_unchecked(r, x.first() * y.first(),
                                     x.second() * y.second());
  }
  fail(Errc::InvalidArgument, "unknown ring kind");
}

bool operator==(const Element& x, const Element& y) {
  if (!(x.ring() == y.ring())) return false;
  if (!x.valid()) return true;
  switch (x.ring().kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
      return x.integer() == y.integer();
    case RingKind::Rationals:
      return x.rational() == y.rational();
    case RingKind::Polynomial:
      return x.coeffs() == y.coeffs();
    case RingKind::Localized: {
      if (x.exponent() == y.exponent()) return x.numerator() == y.numerator();
      unsigned long K = std::max(x.exponent(), y.exponent());
      return raise_to(x, K) == raise_to(y, K);
    }
    case RingKind::Quotient:
      return x.residue() == y.residue();
    case RingKind::Excision:
    case RingKind::Double:
      return x.first() == y.first() && x.second() == y.second();
  }
  return false;
}

Element pow(const Element& x, unsigned long e) {
  Element result = x.ring().one();
  Element base = x;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Units and division

namespace {

constexpr unsigned long kMaxLocalizationPower = 64;

std::optional<Element> poly_unit_inverse(const Element& x) {
  const Ring& r = x.ring();
  const auto& c = x.coeffs();
  if (c.empty()) return std::nullopt;
  auto c0inv = try_unit_inverse(c[0]);
  if (!c0inv) return std::nullopt;
  if (c.size() == 1) return Element::poly(r, {*c0inv});
  if (r.base().is_domain()) return std::nullopt;
  // x = c0 (1 + t); a unit iff t is nilpotent, inverted by a geometric series.
  Element t = Element::poly(r, {*c0inv}) * x - r.one();
  Element term = r.one();
  Element sum = r.one();
  for (int k = 0; k < 256; ++k) {
    term = -(term * t);
    if (term.is_zero()) return Element::poly(r, {*c0inv}) * sum;
    sum += term;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Element> try_unit_inverse(const Element& x) {
  const Ring& r = x.ring();
  switch (r.kind()) {
    case RingKind::Integers:
      if (x.integer() == 1 || x.integer() == -1) return x;
      return std::nullopt;
    case RingKind::IntegersMod: {
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), x.integer().get_mpz_t(),
                     r.modulus().get_mpz_t()) == 0)
        return std::nullopt;
      return Element::integer(r, inv);
    }
    case RingKind::Rationals:
      if (sgn(x.rational()) == 0) return std::nullopt;
      return Element::rational(r, 1 / x.rational());
    case RingKind::Polynomial:
      return poly_unit_inverse(x);
    case RingKind::Localized: {
      // n/g^k is a unit iff n divides some power of g.
      if (x.is_zero()) return std::nullopt;
      Element gp = r.base().one();
      for (unsigned long N = 0; N <= kMaxLocalizationPower; ++N) {
        if (auto q = try_divide(gp, x.numerator()))
          return Element::fraction(
              r, *q * pow(r.generator(), x.exponent()), N);
        gp *= r.generator();
      }
      return std::nullopt;
    }
    case RingKind::Quotient: {
      // ext_gcd returns a monic gcd, so coprimality means g == 1.
      auto [g, s, t] = ext_gcd(x.residue(), r.generator());
      if (!g.is_one()) return std::nullopt;
      return Element::residue(r, s);
    }
    case RingKind::Excision: {
      // (r,i) corresponds to (r, r+i) in the double ring.
      auto a = try_unit_inverse(x.first());
      auto b = try_unit_inverse(x.first() + x.second());
      if (!a || !b) return std::nullopt;
      return Element::pair_unchecked(r, *a, *b - *a);
    }
    case RingKind::Double: {
      auto a = try_unit_inverse(x.first());
      auto b = try_unit_inverse(x.second());
      if (!a || !b) return std::nullopt;
      return Element::pair_unchecked(r, *a, *b);
    }
  }
  return std::nullopt;
}

Element unit_inverse(const Element& x) {
  auto inv = try_unit_inverse(x);
  if (!inv) fail(Errc::NotAUnit, to_string(x) + " is not a unit in " +
                                     x.ring().describe());
  return *inv;
}

bool is_unit(const Element& x) { return try_unit_inverse(x).has_value(); }

namespace {

std::optional<Element> poly_try_divide(const Element& a, const Element& b) {
  const Ring& r = a.ring();
  const Ring& base = r.base();
  if (b.is_zero()) return std::nullopt;
  std::vector<Element> rem = a.coeffs();
  const auto& bc = b.coeffs();
  if (rem.size() < bc.size()) {
    if (rem.empty()) return r.zero();
    return std::nullopt;
  }
  std::vector<Element> q(rem.size() - bc.size() + 1, base.zero());
  for (size_t k = q.size(); k-- > 0;) {
    const Element& lead = rem[k + bc.size() - 1];
    if (lead.is_zero()) continue;
    auto c = try_divide(lead, bc.back());
    if (!c) return std::nullopt;
    q[k] = *c;
    for (size_t j = 0; j < bc.size(); ++j) rem[k + j] -= *c * bc[j];
  }
  for (const Element& e : rem)
    if (!e.is_zero()) return std::nullopt;
  return Element::poly(r, std::move(q));
}

}  // namespace

std::optional<Element> try_divide(const Element& a, const Element& b) {
  same_ring(a, b);
  const Ring& r = a.ring();
  if (a.is_zero()) return r.zero();
  if (auto inv = try_unit_inverse(b)) return a * *inv;
  switch (r.kind()) {
    case RingKind::Integers:
      if (sgn(b.integer()) == 0 ||
          !mpz_divisible_p(a.integer().get_mpz_t(), b.integer().get_mpz_t()))
        return std::nullopt;
      return Element::integer(r, a.integer() / b.integer());
    case RingKind::IntegersMod: {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), b.integer().get_mpz_t(), r.modulus().get_mpz_t());
      if (!mpz_divisible_p(a.integer().get_mpz_t(), g.get_mpz_t()))
        return std::nullopt;
      mpz_class m = r.modulus() / g;
      mpz_class bi;
      mpz_class bg = b.integer() / g;
      mpz_invert(bi.get_mpz_t(), bg.get_mpz_t(), m.get_mpz_t());
      return Element::integer(r, (a.integer() / g) * bi);
    }
    case RingKind::Rationals:
      return std::nullopt;
    case RingKind::Polynomial:
      if (!r.base().is_domain() && !is_unit(b.coeffs().back()))
        return std::nullopt;
      return poly_try_divide(a, b);
    case RingKind::Localized: {
      // Find q with b q = a g^N, then a/b = q / g^(N + k_a - k_b).
      Element gp = r.base().one();
      for (unsigned long N = 0; N <= kMaxLocalizationPower; ++N) {
        if (auto q = try_divide(a.numerator() * gp, b.numerator())) {
          long m = static_cast<long>(N + a.exponent()) -
                   static_cast<long>(b.exponent());
          Element num = *q;
          if (m < 0) {
            num *= pow(r.generator(), static_cast<unsigned long>(-m));
            m = 0;
          }
          return Element::fraction(r, num, static_cast<unsigned long>(m));
        }
        gp *= r.generator();
      }
      return std::nullopt;
    }
    case RingKind::Quotient: {
      const Element& f = r.generator();
      Element d = gcd(b.residue(), f);
      auto ad = try_divide(a.residue(), d);
      if (!ad) return std::nullopt;
      Element bd = exact_divide(b.residue(), d);
      Element fd = exact_divide(f, d);
      auto [g, s, t] = ext_gcd(bd, fd);
      return Element::residue(r, *ad * s);
    }
    case RingKind::Excision: {
      // Divide in the double ring, where (r,i) is (r, r+i).
      Element x1 = a.first(), x2 = a.first() + a.second();
      Element y1 = b.first(), y2 = b.first() + b.second();
      std::optional<Element> s = y1.is_zero()
                                     ? (x1.is_zero() ? std::optional<Element>(
                                                           r.base().zero())
                                                     : std::nullopt)
                                     : try_divide(x1, y1);
      std::optional<Element> t =
          y2.is_zero() ? (x2.is_zero() ? std::optional<Element>(*s)
                                       : std::nullopt)
                       : try_divide(x2, y2);
      if (!s || !t) return std::nullopt;
      const Ideal& I = r.ideal();
      if (I.mode() != Membership::GcdDecidable || !I.contains(*t - *s))
        return std::nullopt;
      Element c = Element::pair_unchecked(r, *s, *t - *s);
      if (!(b * c == a)) return std::nullopt;
      return c;
    }
    case RingKind::Double: {
      auto s = try_divide(a.first(), b.first());
      auto t = try_divide(a.second(), b.second());
      if (!s || !t) return std::nullopt;
      const Ideal& I = r.ideal();
      if (I.mode() != Membership::GcdDecidable || !I.contains(*s - *t))
        return std::nullopt;
      return Element::pair_unchecked(r, *s, *t);
    }
  }
  return std::nullopt;
}

Element exact_divide(const Element& a, const Element& b) {
  same_ring(a, b);
  if (!a.ring().is_domain())
    fail(Errc::NotADomain,
         a.ring().describe() + " is not an integral domain");
  auto q = try_divide(a, b);
  if (!q)
    fail(Errc::NotDivisible, to_string(b) + " does not divide " + to_string(a));
  return *q;
}

// ---------------------------------------------------------------------------
// Euclidean structure

namespace {

void require_euclidean(const Ring& r) {
  if (!r.is_euclidean())
    fail(Errc::NotEuclidean, r.describe() + " is not Euclidean");
}

}  // namespace

mpz_class euclid_size(const Element& x) {
  const Ring& r = x.ring();
  require_euclidean(r);
  if (x.is_zero()) return 0;
  if (r.kind() == RingKind::Integers) return abs(x.integer());
  if (r.kind() == RingKind::Polynomial) return mpz_class(degree(x) + 1);
  return 1;
}

std::pair<Element, Element> divmod(const Element& a, const Element& b) {
  same_ring(a, b);
  const Ring& r = a.ring();
  require_euclidean(r);
  if (b.is_zero()) fail(Errc::NotDivisible, "division by zero");
  switch (r.kind()) {
    case RingKind::Integers: {
      mpz_class q, m;
      mpz_fdiv_qr(q.get_mpz_t(), m.get_mpz_t(), a.integer().get_mpz_t(),
                  b.integer().get_mpz_t());
      return {Element::integer(r, q), Element::integer(r, m)};
    }
    case RingKind::Polynomial: {
      const Ring& base = r.base();
      std::vector<Element> rem = a.coeffs();
      const auto& bc = b.coeffs();
      if (rem.size() < bc.size()) return {r.zero(), a};
      Element linv = unit_inverse(bc.back());
      std::vector<Element> q(rem.size() - bc.size() + 1, base.zero());
      for (size_t k = q.size(); k-- > 0;) {
        Element c = rem[k + bc.size() - 1] * linv;
        if (c.is_zero()) continue;
        q[k] = c;
        for (size_t j = 0; j < bc.size(); ++j) rem[k + j] -= c * bc[j];
      }
      return {Element::poly(r, std::move(q)), Element::poly(r, std::move(rem))};
    }
    default:
      return {a * unit_inverse(b), r.zero()};
  }
}

Element gcd(const Element& a, const Element& b) {
  return std::get<0>(ext_gcd(a, b));
}

std::tuple<Element, Element, Element> ext_gcd(const Element& a,
                                              const Element& b) {
  same_ring(a, b);
  const Ring& r = a.ring();
  require_euclidean(r);
  if (r.kind() == RingKind::Integers) {
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
               a.integer().get_mpz_t(), b.integer().get_mpz_t());
    return {Element::integer(r, g), Element::integer(r, s),
            Element::integer(r, t)};
  }
  Element r0 = a, s0 = r.one(), t0 = r.zero();
  Element r1 = b, s1 = r.zero(), t1 = r.one();
  while (!r1.is_zero()) {
    Element q = divmod(r0, r1).first;
    Element r2 = r0 - q * r1;
    Element s2 = s0 - q * s1;
    Element t2 = t0 - q * t1;
    r0 = std::move(r1);
    s0 = std::move(s1);
    t0 = std::move(t1);
    r1 = std::move(r2);
    s1 = std::move(s2);
    t1 = std::move(t2);
  }
  Element u = normalizer(r0);
  return {r0 * u, s0 * u, t0 * u};
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Element& x) {
  if (!x.valid()) return "<invalid>";
  switch (x.ring().kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod:
      return x.integer().get_str();
    case RingKind::Rationals:
      return x.rational().get_str();
    case RingKind::Polynomial: {
      std::string s = "[";
      const auto& c = x.coeffs();
      for (size_t k = 0; k < c.size(); ++k) {
        if (k) s += ",";
        s += to_string(c[k]);
      }
      return s + "]";
    }
    case RingKind::Localized:
      if (x.exponent() == 0) return to_string(x.numerator());
      return to_string(x.numerator()) + "@" + std::to_string(x.exponent());
    case RingKind::Quotient:
      return to_string(x.residue());
    case RingKind::Excision:
      return "(" + to_string(x.first()) + "|" + to_string(x.second()) + ")";
    case RingKind::Double:
      return "(" + to_string(x.first()) + "," + to_string(x.second()) + ")";
  }
  return "<invalid>";
}

// ---------------------------------------------------------------------------
// Ideals

Ideal::Ideal(const Ring& ring, std::vector<Element> generators)
    : ring_(ring), gens_(std::move(generators)) {
  if (!ring_.valid()) fail(Errc::DescriptorMismatch, "ideal of nothing");
  if (gens_.empty())
    fail(Errc::InvalidArgument, "an ideal needs at least one generator");
  for (const Element& g : gens_)
    if (!(g.ring() == ring_))
      fail(Errc::DescriptorMismatch, "ideal generator outside the ring");
  mode_ = gcd_decidable(ring_) ? Membership::GcdDecidable
                               : Membership::CertificateOnly;
}

Ideal Ideal::split(const Ring& excision) {
  expect_kind(excision, RingKind::Excision, "split ideal");
  Ideal out;
  out.ring_ = excision;
  for (const Element& g : excision.ideal().generators())
    out.gens_.push_back(
        Element::pair_unchecked(excision, excision.base().zero(), g));
  out.mode_ = Membership::GcdDecidable;
  out.split_ = true;
  return out;
}

namespace {

// Generator of the ideal expressed in the ring used for divisibility tests:
// the ring itself (Euclidean), Z (for Z/m), the base F[X] (for F[X]/(f)) or
// the Euclidean base of a localization, with the g-part removed.
Element divisibility_generator(const Ideal& I) {
  const Ring& r = I.ring();
  switch (r.kind()) {
    case RingKind::IntegersMod: {
      mpz_class g = r.modulus();
      for (const Element& e : I.generators())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.integer().get_mpz_t());
      return Element::integer(Ring::integers(), g);
    }
    case RingKind::Quotient: {
      Element g = r.generator();
      for (const Element& e : I.generators()) g = gcd(g, e.residue());
      return g;
    }
    case RingKind::Localized: {
      Element d = r.base().zero();
      for (const Element& e : I.generators()) d = gcd(d, e.numerator());
      while (!d.is_zero()) {
        Element h = gcd(d, r.generator());
        if (is_unit(h)) break;
        d = exact_divide(d, h);
      }
      return d;
    }
    default: {
      Element d = r.zero();
      for (const Element& e : I.generators()) d = gcd(d, e);
      return d;
    }
  }
}

bool divides(const Element& d, const Element& x) {
  if (d.is_zero()) return x.is_zero();
  return divmod(x, d).second.is_zero();
}

}  // namespace

bool Ideal::contains(const Element& x) const {
  if (!(x.ring() == ring_))
    fail(Errc::DescriptorMismatch, "element outside the ideal's ring");
  if (split_) {
    if (!x.first().is_zero()) return false;
    const Ideal& base = ring_.ideal();
    return base.mode() == Membership::CertificateOnly ||
           base.contains(x.second());
  }
  if (mode_ == Membership::CertificateOnly)
    fail(Errc::CertificateRequired,
         "membership in " + describe() + " over " + ring_.describe() +
             " needs a certificate");
  Element d = divisibility_generator(*this);
  switch (ring_.kind()) {
    case RingKind::IntegersMod:
      return divides(d, Element::integer(Ring::integers(), x.integer()));
    case RingKind::Quotient:
      return divides(d, x.residue());
    case RingKind::Localized:
      return divides(d, x.numerator());
    default:
      return divides(d, x);
  }
}

bool Ideal::contains(const Element& x, std::span<const Element> cert) const {
  if (!(x.ring() == ring_))
    fail(Errc::DescriptorMismatch, "element outside the ideal's ring");
  if (cert.size() != gens_.size())
    fail(Errc::SizeMismatch, "certificate length differs from generator count");
  Element sum = ring_.zero();
  for (size_t k = 0; k < gens_.size(); ++k) sum += cert[k] * gens_[k];
  return sum == x;
}

bool Ideal::is_whole() const {
  if (split_) return false;
  return contains(ring_.one());
}

std::optional<Element> Ideal::principal_generator() const {
  if (split_ || mode_ != Membership::GcdDecidable) return std::nullopt;
  Element d = divisibility_generator(*this);
  switch (ring_.kind()) {
    case RingKind::IntegersMod:
      return Element::integer(ring_, d.integer());
    case RingKind::Quotient:
      return Element::residue(ring_, d);
    case RingKind::Localized:
      return Element::fraction(ring_, d, 0);
    default:
      return d;
  }
}

std::string Ideal::describe() const {
  std::string s = "<";
  for (size_t k = 0; k < gens_.size(); ++k) {
    if (k) s += ",";
    s += to_string(gens_[k]);
  }
  return s + ">";
}

Ring quotient_ring(const Ideal& ideal) {
  const Ring& r = ideal.ring();
  auto d = ideal.principal_generator();
  if (!d) fail(Errc::QuotientNotComputable,
               "no computable quotient of " + r.describe());
  switch (r.kind()) {
    case RingKind::Integers:
      if (d->is_zero()) return r;
      return Ring::quotient(*d);
    case RingKind::IntegersMod: {
      mpz_class g = divisibility_generator(ideal).integer();
      if (g == 1) fail(Errc::QuotientNotComputable, "quotient is the zero ring");
      return Ring::integers_mod(g);
    }
    case RingKind::Polynomial:
      if (d->is_zero()) return r;
      return Ring::quotient(*d);
    default:
      fail(Errc::QuotientNotComputable,
           "no computable quotient of " + r.describe());
  }
}

Ideal localize_ideal(const Ideal& ideal, const Ring& localized) {
  expect_kind(localized, RingKind::Localized, "localize_ideal");
  if (!(localized.base() == ideal.ring()))
    fail(Errc::DescriptorMismatch, "localization of a different ring");
  std::vector<Element> gens;
  for (const Element& g : ideal.generators())
    gens.push_back(Element::fraction(localized, g, 0));
  return Ideal(localized, std::move(gens));
}

std::vector<Element> unit_kernel(const Ring& ring, const Ideal& ideal) {
  if (!ring.valid() || ring.kind() != RingKind::IntegersMod ||
      ring.modulus() > 10000000)
    fail(Errc::NotEnumerable, "unit group of " + ring.describe() +
                                  " is not enumerable here");
  if (!(ideal.ring() == ring))
    fail(Errc::DescriptorMismatch, "ideal of a different ring");
  std::vector<Element> out;
  const unsigned long m = ring.modulus().get_ui();
  for (unsigned long u = 1; u < m; ++u) {
    Element e = ring.from_mpz(mpz_class(u));
    if (is_unit(e) && ideal.contains(e - ring.one())) out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

RingHom RingHom::eval_at(const Ring& poly, const Element& point) {
  expect_kind(poly, RingKind::Polynomial, "eval_at");
  if (!(point.ring() == poly.base()))
    fail(Errc::DescriptorMismatch, "evaluation point outside the base ring");
  RingHom h;
  h.kind_ = HomKind::EvalAt;
  h.source_ = poly;
  h.target_ = poly.base();
  h.param_ = {point};
  return h;
}

RingHom RingHom::residue_mod(const Ideal& ideal) {
  RingHom h;
  h.kind_ = HomKind::ResidueMod;
  h.source_ = ideal.ring();
  h.target_ = quotient_ring(ideal);
  return h;
}

RingHom RingHom::localization_inclusion(const Ring& localized) {
  expect_kind(localized, RingKind::Localized, "localization_inclusion");
  RingHom h;
  h.kind_ = HomKind::LocalizationInclusion;
  h.source_ = localized.base();
  h.target_ = localized;
  return h;
}

RingHom RingHom::project_pi(const Ring& excision) {
  expect_kind(excision, RingKind::Excision, "project_pi");
  RingHom h;
  h.kind_ = HomKind::ProjectPi;
  h.source_ = excision;
  h.target_ = excision.base();
  return h;
}

RingHom RingHom::bar_split(const Ring& excision) {
  expect_kind(excision, RingKind::Excision, "bar_split");
  RingHom h;
  h.kind_ = HomKind::BarSplit;
  h.source_ = excision;
  h.target_ = excision.base();
  return h;
}

RingHom RingHom::canonical_inclusion(const Ring& excision) {
  expect_kind(excision, RingKind::Excision, "canonical_inclusion");
  RingHom h;
  h.kind_ = HomKind::CanonicalInclusion;
  h.source_ = excision.base();
  h.target_ = excision;
  return h;
}

RingHom RingHom::double_u(const Ring& excision) {
  expect_kind(excision, RingKind::Excision, "double_u");
  RingHom h;
  h.kind_ = HomKind::DoubleU;
  h.source_ = excision;
  h.target_ = Ring::double_ring(excision.ideal());
  return h;
}

RingHom RingHom::double_v(const Ring& double_ring) {
  expect_kind(double_ring, RingKind::Double, "double_v");
  RingHom h;
  h.kind_ = HomKind::DoubleV;
  h.source_ = double_ring;
  h.target_ = Ring::excision(double_ring.ideal());
  return h;
}

RingHom RingHom::constant_inclusion(const Ring& poly) {
  expect_kind(poly, RingKind::Polynomial, "constant_inclusion");
  RingHom h;
  h.kind_ = HomKind::ConstantInclusion;
  h.source_ = poly.base();
  h.target_ = poly;
  return h;
}

RingHom RingHom::excision_localization(const Ring& localized_excision) {
  expect_kind(localized_excision, RingKind::Localized, "excision_localization");
  const Ring& ex = localized_excision.base();
  expect_kind(ex, RingKind::Excision, "excision_localization base");
  const Element& fg = localized_excision.generator();
  if (!fg.second().is_zero())
    fail(Errc::InvalidArgument, "denominator must have the form (f,0)");
  Ring rf = Ring::localized(fg.first());
  RingHom h;
  h.kind_ = HomKind::ExcisionLocalization;
  h.source_ = localized_excision;
  h.target_ = Ring::excision(localize_ideal(ex.ideal(), rf));
  return h;
}

Element RingHom::operator()(const Element& x) const {
  if (!(x.ring() == source_))
    fail(Errc::DescriptorMismatch, "homomorphism applied outside its source " +
                                       source_.describe());
  switch (kind_) {
    case HomKind::EvalAt: {
      Element acc = target_.zero();
      const auto& c = x.coeffs();
      for (size_t k = c.size(); k-- > 0;) acc = acc * param_[0] + c[k];
      return acc;
    }
    case HomKind::ResidueMod:
      switch (source_.kind()) {
        case RingKind::Polynomial:
          if (target_.kind() == RingKind::Quotient)
            return Element::residue(target_, x);
          return x;
        case RingKind::Integers:
        case RingKind::IntegersMod:
          if (target_.kind() == RingKind::IntegersMod)
            return Element::integer(target_, x.integer());
          return x;
        default:
          fail(Errc::QuotientNotComputable, "no residue map");
      }
    case HomKind::LocalizationInclusion:
      return Element::fraction(target_, x, 0);
    case HomKind::ProjectPi:
      return x.first() + x.second();
    case HomKind::BarSplit:
      return x.first();
    case HomKind::CanonicalInclusion:
      return Element::pair_unchecked(target_, x, source_.zero());
    case HomKind::DoubleU:
      return Element::pair_unchecked(target_, x.first(),
                                     x.first() + x.second());
    case HomKind::DoubleV:
      return Element::pair_unchecked(target_, x.first(),
                                     x.second() - x.first());
    case HomKind::ConstantInclusion:
      return Element::poly(target_, {x});
    case HomKind::ExcisionLocalization: {
      const Ring& rf = target_.base();
      const Element& n = x.numerator();
      return Element::pair_unchecked(
          target_, Element::fraction(rf, n.first(), x.exponent()),
          Element::fraction(rf, n.second(), x.exponent()));
    }
  }
  fail(Errc::InvalidArgument, "unknown homomorphism");
}

}  // namespace relsymp
