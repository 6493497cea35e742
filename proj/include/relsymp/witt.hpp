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
 * @file witt.hpp
 * @brief Representative-level calculus for elementary symplectic Witt groups.
 *
 * Classes are never canonicalized. Two representatives alpha (size 2m) and
 * beta (size 2n) are equivalent when some eps in E_{2(m+n+t)} satisfies
 *   alpha (+) chi_{n+t} = eps^T (beta (+) chi_{m+t}) eps,
 * and an EquivCertificate is exactly such a pair (t, eps).
 */

#pragma once

#include <optional>

#include "relsymp/elementary.hpp"

namespace relsymp {

/// Invertible alternating matrix, optionally relative (alpha = chi mod I).
struct AltRep {
  Matrix matrix;
  std::optional<Ideal> ideal;
  bool pfaffian_one = false;

  size_t half_size() const noexcept { return matrix.rows() / 2; }
};

/// Throws OddSize, NotAlternating, NotInvertible, NotRelative.
AltRep make_alt(Matrix matrix, std::optional<Ideal> ideal = std::nullopt);

struct EquivCertificate {
  size_t t = 0;
  ElementaryWord word;
};

/// Same atoms acting on a larger space.
ElementaryWord pad_word(const ElementaryWord& w, size_t size);
/// (t, eps) -> (t + 1, eps (+) I_2).
EquivCertificate pad_certificate(const EquivCertificate& cert);

AltRep witt_perp(const AltRep& a, const AltRep& b);
/// sigma_n A^-1 sigma_n.
AltRep witt_inverse_rep(const AltRep& a);
/// Pf(A), checked to be a unit congruent to 1 mod I. Throws PfaffianNotUnit.
Element witt_pf(const AltRep& a);
/// alpha_a = [[0, a], [-a, 0]] for a in C. Throws NotInKernelC.
AltRep pf_section(const Element& a, const Ideal& ideal);
/// alpha^T chi_n alpha. Throws OddSize, NotInvertible.
AltRep hyperbolic_H(const Matrix& alpha,
                    std::optional<Ideal> ideal = std::nullopt);

/// The certificate for alpha_{ab} (+) chi_1 ~ alpha_a (+) alpha_b built
/// from the Whitehead factorization of gamma_b = diag(b, 1).
EquivCertificate split_certificate(const Element& b);
/// gamma_b^-1 (+) gamma_b.
Matrix split_conjugator(const Element& b);

enum class RelativeLevel {
  /// Every inner argument of the word lies in I.
  Syntactic,
  /// The word is not syntactically relative, but evaluates to I mod I.
  ResidueOnly,
  None,
};

struct EquivCheck {
  bool identity_holds = false;
  RelativeLevel level = RelativeLevel::None;
  /// Identity holds and, for relative representatives, level != None.
  bool valid = false;
};

/// Throws SizeMismatch when the word size is not 2(m + n + t).
EquivCheck check_equiv_detail(const AltRep& a, const AltRep& b,
                              const EquivCertificate& cert);
bool check_equiv(const AltRep& a, const AltRep& b,
                 const EquivCertificate& cert);

/// Enumerates relative linear words by atom count, then coefficient height,
/// with t = 0. Candidates are verified in parallel; the first valid one in
/// enumeration order is returned. Throws ExhaustedBudget.
EquivCertificate search_equiv(const AltRep& a, const AltRep& b,
                              size_t budget);

/// With cert = (s, eps) satisfying eps^T(alpha^T chi_n alpha (+) chi_s) eps
/// = chi_{s+n}, returns alpha' = (alpha (+) I_2m)(eps (+) I_2n), m = n + s,
/// verified symplectic for phi = chi_m (+) gamma. Throws CertificateInvalid.
Matrix kernel_of_H_construct(const Matrix& alpha, const AltRep& gamma,
                             const EquivCertificate& cert);

/// For delta with first column e_1 and
/// delta^T (chi_1 (+) theta1) delta = chi_1 (+) theta2, returns the lower
/// right block beta; q = 1, v = 0 and beta^T theta1 beta = theta2 are checked.
/// Throws HypothesisFailed.
Matrix extract_block(const Matrix& delta, const AltRep& theta1,
                     const AltRep& theta2);

}  // namespace relsymp
