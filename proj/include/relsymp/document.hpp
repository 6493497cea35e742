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
 * @file document.hpp
 * @brief Text documents binding names to rings, ideals, matrices, rows and
 * words.
 *
 * Statements are semicolon-terminated; `#` starts a comment.
 *
 *   ring <desc>;
 *   ideal I = <g1, g2>;
 *   elem a [in <desc>] = <element>;
 *   matrix A [in <desc>] = [[...], [...]];
 *   row v = [...] [witness [...]] [mod I];
 *   word W gl|sp <size> = gen(i,j,a) conj(<atoms>; i,j,a) ... | id;
 *   steinberg S <n> = x(i,j,a) x(i,j,a)^-1 ... | id;
 *   cert C = <t> W;
 *
 * Ring descriptors: Z, Q, Zmod m, poly <desc> <var>, loc <desc> <elem>,
 * quot <desc> <elem>, excision <desc> <ideal>, double <desc> <ideal>.
 * Element literals: integers, p/q, [c0,c1,...] for polynomials, n@k for
 * n/g^k in a localization, (r|i) for excision pairs, (a,b) in a double ring.
 */

#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "relsymp/steinberg.hpp"
#include "relsymp/witt.hpp"

namespace relsymp {

/// Error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(Errc code, size_t line, size_t column, const std::string& message);
  size_t line() const noexcept { return line_; }
  size_t column() const noexcept { return column_; }

 private:
  size_t line_;
  size_t column_;
};

struct RowBinding {
  UnimodularRow row;
  std::string ideal_name;  // empty when absolute
};

struct CertBinding {
  EquivCertificate cert;
  std::string word_name;
};

using Value = std::variant<Element, Ideal, Matrix, RowBinding, ElementaryWord,
                           SteinbergWord, CertBinding>;

struct Binding {
  std::string name;
  Value value;
  size_t line = 0;
};

class Document {
 public:
  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Binding>& bindings() const noexcept { return bindings_; }
  bool has(const std::string& name) const { return index_.count(name) != 0; }

  /// Throw UnknownBinding or TypeError.
  const Element& element(const std::string& name) const;
  const Ideal& ideal(const std::string& name) const;
  const Matrix& matrix(const std::string& name) const;
  const UnimodularRow& row(const std::string& name) const;
  const ElementaryWord& word(const std::string& name) const;
  const SteinbergWord& steinberg(const std::string& name) const;
  const EquivCertificate& cert(const std::string& name) const;
  const Binding& get(const std::string& name) const;

 private:
  friend class DocumentParser;
  Ring ring_;
  std::vector<Binding> bindings_;
  std::map<std::string, size_t> index_;
};

/// Throws ParseError (SyntaxError or TypeError).
Document parse_document(const std::string& text);
/// Canonical text; parse_document(print_document(d)) prints identically.
std::string print_document(const Document& doc);

/// Ring descriptor and element parsing on their own, for CLI flags.
Ring parse_ring(const std::string& text);
Element parse_element(const std::string& text, const Ring& ring);

std::string kind_name(const Value& v);
/// Word syntax of the grammar ("id" for the empty word).
std::string format_word(const ElementaryWord& w);
std::string format_steinberg(const SteinbergWord& w);

}  // namespace relsymp
