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

#include "relsymp/completion.hpp"

namespace relsymp {

Element patch_entry(const Element& a, unsigned long k, const Element& s,
                    const Element& b, unsigned long m, const Element& t) {
  const Element sk = pow(s, k);
  const Element tm = pow(t, m);
  if (!(a * tm == b * sk))
    fail(Errc::Incompatible, to_string(a) + "/" + to_string(s) + "^" +
                                 std::to_string(k) + " and " + to_string(b) +
                                 "/" + to_string(t) + "^" + std::to_string(m) +
                                 " differ in the common localization");
  const Element x = exact_divide(a, sk);
  // The t side must give the same element.
  if (!(exact_divide(b, tm) == x))
    fail(Errc::Incompatible, "the two reconstructions disagree");
  return x;
}

Matrix patch_symplectic(const Element& s, const Element& t, const Matrix& alpha1,
                        const Matrix& alpha2, const Ideal& ideal) {
  const Ring& r = s.ring();
  if (!r.is_euclidean() || !r.is_domain())
    fail(Errc::NotADomain, "patching needs a Euclidean domain");
  if (!is_unit(gcd(s, t)))
    fail(Errc::NotComaximal, to_string(s) + " and " + to_string(t) +
                                 " are not comaximal");
  const Ring rs = Ring::localized(s);
  const Ring rt = Ring::localized(t);
  if (!(alpha1.ring() == rs) || !(alpha2.ring() == rt))
    fail(Errc::DescriptorMismatch, "inputs must live over R_s and R_t");
  if (alpha1.rows() != alpha2.rows() || alpha1.cols() != alpha2.cols() ||
      !alpha1.is_square())
    fail(Errc::SizeMismatch, "inputs have different shapes");
  Matrix alpha(r, alpha1.rows(), alpha1.cols());
  for (size_t i = 0; i < alpha.rows(); ++i)
    for (size_t j = 0; j < alpha.cols(); ++j) {
      const Element& x = alpha1(i, j);
      const Element& y = alpha2(i, j);
      alpha(i, j) = patch_entry(x.numerator(), x.exponent(), s, y.numerator(),
                                y.exponent(), t);
    }
  if (!(apply_hom(RingHom::localization_inclusion(rs), alpha) == alpha1) ||
      !(apply_hom(RingHom::localization_inclusion(rt), alpha) == alpha2))
    fail(Errc::HypothesisFailed, "patched matrix does not localize back");
  if (alpha.rows() % 2 || !is_symplectic_wrt(alpha, chi(alpha.rows() / 2, r)))
    fail(Errc::HypothesisFailed, "patched matrix is not symplectic");
  if (!is_relative_to(alpha, ideal))
    fail(Errc::HypothesisFailed, "patched matrix is not relative to " +
                                     ideal.describe());
  return alpha;
}

namespace {

class RowTracker {
 public:
  explicit RowTracker(const std::vector<Element>& v)
      : cur_(v), word_(Family::Linear, v.size(), v[0].ring()) {}

  void apply(size_t i, size_t j, const Element& a) {
    if (a.is_zero()) return;
    word_.gen(i, j, a);
    cur_[j - 1] += cur_[i - 1] * a;
  }
  const Element& at(size_t i) const { return cur_[i - 1]; }
  const std::vector<Element>& row() const { return cur_; }
  const ElementaryWord& word() const { return word_; }

 private:
  std::vector<Element> cur_;
  ElementaryWord word_;
};

// v over R (+) <d> with v = ((1, x), (0, y_2), ..., (0, y_n)), n >= 3.
std::optional<ElementaryWord> excision_reduce(const std::vector<Element>& v) {
  const Ring& ex = v[0].ring();
  const Ring& base = ex.base();
  const size_t n = v.size();
  if (n < 3 || !base.is_euclidean()) return std::nullopt;
  auto d = ex.ideal().principal_generator();
  if (!d || d->is_zero()) return std::nullopt;
  if (!v[0].first().is_one()) return std::nullopt;
  for (size_t k = 1; k < n; ++k)
    if (!v[k].first().is_zero()) return std::nullopt;
  auto lift = [&](const Element& y) {
    return Element::pair_unchecked(ex, y, base.zero());
  };
  auto ideal_part = [&](const Element& y) {
    return Element::pair_unchecked(ex, base.zero(), y);
  };
  RowTracker row(v);
  // Euclid among columns 2..n on the ideal components.
  while (true) {
    size_t p = 0;
    for (size_t k = 2; k <= n; ++k)
      if (!row.at(k).second().is_zero() &&
          (p == 0 ||
           euclid_size(row.at(k).second()) < euclid_size(row.at(p).second())))
        p = k;
    if (p == 0) break;
    bool reduced = false;
    for (size_t q = 2; q <= n; ++q) {
      if (q == p || row.at(q).second().is_zero()) continue;
      const Element quot = divmod(row.at(q).second(), row.at(p).second()).first;
      row.apply(p, q, lift(-quot));
      reduced = true;
    }
    if (!reduced) {
      if (p != 2) {
        row.apply(p, 2, ex.one());
        row.apply(2, p, -ex.one());
      }
      break;
    }
  }
  const Element a = row.at(1).first() + row.at(1).second();
  const Element g = row.at(2).second();
  const Element k = exact_divide(base.one() - a, *d);
  const Element gp = exact_divide(g, *d);
  auto [h, p1, q1] = ext_gcd(gp, a);
  if (!h.is_one()) return std::nullopt;
  row.apply(1, 3, ideal_part(k * q1 * *d));
  row.apply(2, 1, lift(k * p1));
  row.apply(3, 1, ex.one());
  row.apply(1, 2, ideal_part(-g));
  row.apply(1, 3, ideal_part(-row.at(3).second()));
  if (!is_e1(row.row())) return std::nullopt;
  return row.word();
}

// Depth-first enumeration over words with arguments in {1, -1, 2, -2}.
std::optional<ElementaryWord> enumerate_completion(const std::vector<Element>& v,
                                                   size_t& budget) {
  const Ring& ring = v[0].ring();
  const size_t n = v.size();
  const std::vector<Element> args{ring.from_int(1), ring.from_int(-1),
                                  ring.from_int(2), ring.from_int(-2)};
  constexpr size_t kMaxDepth = 4;
  std::vector<GenAtom> path;
  auto dfs = [&](auto& self, const std::vector<Element>& cur,
                 size_t depth) -> bool {
    if (is_e1(cur)) return true;
    if (depth == 0) return false;
    for (size_t i = 1; i <= n; ++i)
      for (size_t j = 1; j <= n; ++j) {
        if (i == j || cur[i - 1].is_zero()) continue;
        for (const Element& a : args) {
          if (budget == 0) return false;
          --budget;
          std::vector<Element> next = cur;
          next[j - 1] += cur[i - 1] * a;
          path.push_back({i, j, a});
          if (self(self, next, depth - 1)) return true;
          path.pop_back();
        }
      }
    return false;
  };
  for (size_t depth = 1; depth <= kMaxDepth && budget > 0; ++depth) {
    path.clear();
    if (dfs(dfs, v, depth)) {
      ElementaryWord w(Family::Linear, n, ring);
      for (const GenAtom& g : path) w.gen(g.i, g.j, g.a);
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

ElementaryWord bounded_search_completer(const std::vector<Element>& v,
                                        size_t budget) {
  if (v.empty()) fail(Errc::SizeMismatch, "empty row");
  const Ring& ring = v[0].ring();
  if (is_e1(v)) return ElementaryWord(Family::Linear, v.size(), ring);
  if (budget == 0) fail(Errc::ExhaustedBudget, "completion budget exhausted");
  std::optional<ElementaryWord> w;
  --budget;
  if (ring.is_euclidean()) {
    w = row_reduce_euclidean(v);
  } else if (ring.kind() == RingKind::Excision) {
    w = excision_reduce(v);
  }
  if (!w) w = enumerate_completion(v, budget);
  if (!w || !is_e1(row_times(v, *w)))
    fail(Errc::ExhaustedBudget, "no completing word within budget");
  return *w;
}

ExcisionCompletion complete_row_via_excision(const UnimodularRow& v,
                                             size_t budget) {
  if (!v.ideal) fail(Errc::NotRelative, "row carries no ideal");
  ExcisionCompletion out;
  out.lifted = lift_row(v);
  const Ring& ex = out.lifted.ring;
  out.word = bounded_search_completer(out.lifted.entries, budget);
  const Matrix gamma_raw = word_eval(out.word);
  const Matrix vl = as_row_matrix(out.lifted);
  if (!is_e1((vl * gamma_raw).row(0)))
    fail(Errc::HypothesisFailed, "completer output does not complete v_L");
  out.normalized = normalize_relative(gamma_raw);
  if (!is_e1((vl * out.normalized).row(0)))
    fail(Errc::HypothesisFailed, "normalization broke v_L Gamma = e_1");
  if (!is_relative_to(out.normalized, Ideal::split(ex)))
    fail(Errc::HypothesisFailed, "normalized matrix is not relative to 0 (+) I");
  out.gamma = apply_hom(RingHom::project_pi(ex), out.normalized);
  if (!verify_completion(v, out.gamma))
    fail(Errc::HypothesisFailed, "projected matrix does not complete v");
  return out;
}

bool verify_completion(const UnimodularRow& v, const Matrix& gamma) {
  if (!gamma.is_square() || gamma.rows() != v.size())
    fail(Errc::SizeMismatch, "completion size differs from row length");
  if (!(gamma.ring() == v.ring))
    fail(Errc::DescriptorMismatch, "completion over a different ring");
  if (!is_e1(row_times(v.entries, gamma))) return false;
  if (v.ideal && !is_relative_to(gamma, *v.ideal)) return false;
  return true;
}

bool verify_completion(const UnimodularRow& v, const ElementaryWord& gamma) {
  if (gamma.size() != v.size())
    fail(Errc::SizeMismatch, "completion size differs from row length");
  return verify_completion(v, word_eval(gamma));
}

}  // namespace relsymp
