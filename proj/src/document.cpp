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

#include "relsymp/document.hpp"

#include <cctype>

#include "relsymp/lifts.hpp"

namespace relsymp {

ParseError::ParseError(Errc code, size_t line, size_t column,
                       const std::string& message)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  size_t line = 1;
  size_t col = 1;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t line = 1, col = 1, i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const unsigned char c = s[i];
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (std::isalpha(c) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), line, col});
      advance(j - i);
    } else if (std::isdigit(c)) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), line, col});
      advance(j - i);
    } else if (std::string_view(";=[](),<>|/@^-").find(static_cast<char>(c)) !=
               std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, static_cast<char>(c)), line, col});
      advance(1);
    } else {
      throw ParseError(Errc::SyntaxError, line, col,
                       std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

std::string print_atoms(const ElementaryWord& w) {
  if (w.empty()) return "id";
  std::string s;
  for (const Atom& atom : w.atoms()) {
    if (!s.empty()) s += " ";
    if (const auto* g = std::get_if<GenAtom>(&atom)) {
      s += "gen(" + std::to_string(g->i) + "," + std::to_string(g->j) + "," +
           to_string(g->a) + ")";
    } else {
      const auto& c = std::get<ConjAtom>(atom);
      s += "conj(" + print_atoms(*c.outer) + "; " + std::to_string(c.i) + "," +
           std::to_string(c.j) + "," + to_string(c.a) + ")";
    }
  }
  return s;
}

std::string print_steinberg(const SteinbergWord& w) {
  if (w.atoms().empty()) return "id";
  std::string s;
  for (const SteinbergAtom& a : w.atoms()) {
    if (!s.empty()) s += " ";
    s += "x(" + std::to_string(a.i) + "," + std::to_string(a.j) + "," + to_string(a.a) +
         ")";
    if (a.exp < 0) s += "^-1";
  }
  return s;
}

std::string print_vec(const std::vector<Element>& v) {
  std::string s = "[";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += to_string(v[k]);
  }
  return s + "]";
}

}  // namespace

class DocumentParser {
 public:
  explicit DocumentParser(const std::string& text) : toks_(lex(text)) {}

  Document document() {
    Document doc;
    while (peek().kind != Tok::End) statement(doc);
    if (!doc.ring_.valid()) error(Errc::SyntaxError, peek(), "document has no ring");
    return doc;
  }

  Ring ring_only() {
    Ring r = ring_desc();
    expect_end();
    return r;
  }

  Element element_only(const Ring& r) {
    Element x = element(r);
    expect_end();
    return x;
  }

 private:
  [[noreturn]] void error(Errc code, const Token& at, const std::string& msg) {
    throw ParseError(code, at.line, at.col, msg);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  bool at_punct(char c) const {
    return peek().kind == Tok::Punct && peek().text[0] == c;
  }
  bool at_word(const char* w) const {
    return peek().kind == Tok::Ident && peek().text == w;
  }
  const Token& punct(char c) {
    if (!at_punct(c))
      error(Errc::SyntaxError, peek(),
            std::string("expected '") + c + "', found " + describe(peek()));
    return take();
  }
  const Token& ident() {
    if (peek().kind != Tok::Ident)
      error(Errc::SyntaxError, peek(), "expected a name, found " + describe(peek()));
    return take();
  }
  void keyword(const char* w) {
    if (!at_word(w))
      error(Errc::SyntaxError, peek(),
            std::string("expected '") + w + "', found " + describe(peek()));
    take();
  }
  mpz_class integer() {
    if (peek().kind != Tok::Int)
      error(Errc::SyntaxError, peek(), "expected an integer, found " + describe(peek()));
    return mpz_class(take().text);
  }
  size_t small(const char* what) {
    const Token& t = peek();
    const mpz_class v = integer();
    if (v > 1000000) error(Errc::SyntaxError, t, std::string(what) + " too large");
    return v.get_ui();
  }
  void expect_end() {
    if (peek().kind != Tok::End)
      error(Errc::SyntaxError, peek(), "trailing input " + describe(peek()));
  }
  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
  }

  // Runs f, turning library errors into TypeErrors at `at`.
  template <class F>
  auto typed(const Token& at, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      error(Errc::TypeError, at, std::string(errc_name(e.code())) + ": " + e.what());
    }
  }

  Ring ring_desc() {
    const Token& t = ident();
    const std::string& w = t.text;
    if (w == "Z") return Ring::integers();
    if (w == "Q") return Ring::rationals();
    if (w == "Zmod") {
      const Token& at = peek();
      const mpz_class m = integer();
      if (m < 2) error(Errc::TypeError, at, "modulus must be at least 2");
      return Ring::integers_mod(m);
    }
    if (w == "poly") {
      const Ring base = ring_desc();
      const std::string var = ident().text;
      return typed(t, [&] { return Ring::polynomial(base, var); });
    }
    if (w == "loc" || w == "quot") {
      const Ring base = ring_desc();
      const Token& at = peek();
      const Element g = element(base);
      if (w == "loc") return typed(at, [&] { return Ring::localized(g); });
      return typed(at, [&] { return Ring::quotient(g); });
    }
    if (w == "excision" || w == "double") {
      const Ring base = ring_desc();
      const Token& at = peek();
      const Ideal I = ideal_lit(base);
      if (w == "excision") return typed(at, [&] { return Ring::excision(I); });
      return typed(at, [&] { return Ring::double_ring(I); });
    }
    error(Errc::SyntaxError, t, "unknown ring descriptor '" + w + "'");
  }

  Ideal ideal_lit(const Ring& r) {
    const Token& at = punct('<');
    std::vector<Element> gens{element(r)};
    while (at_punct(',')) {
      take();
      gens.push_back(element(r));
    }
    punct('>');
    return typed(at, [&] { return Ideal(r, gens); });
  }

  Element element(const Ring& r) {
    const Token& at = peek();
    if (at_punct('-')) {
      take();
      return -element(r);
    }
    switch (r.kind()) {
      case RingKind::Integers:
      case RingKind::IntegersMod:
        return r.from_mpz(integer());
      case RingKind::Rationals: {
        mpz_class p = integer(), q = 1;
        if (at_punct('/')) {
          take();
          const Token& qt = peek();
          q = integer();
          if (q == 0) error(Errc::TypeError, qt, "zero denominator");
        }
        return Element::rational(r, mpq_class(p, q));
      }
      case RingKind::Polynomial: {
        if (!at_punct('[')) return Element::poly(r, {element(r.base())});
        take();
        std::vector<Element> c;
        if (!at_punct(']')) {
          c.push_back(element(r.base()));
          while (at_punct(',')) {
            take();
            c.push_back(element(r.base()));
          }
        }
        punct(']');
        return Element::poly(r, std::move(c));
      }
      case RingKind::Localized: {
        Element num = element(r.base());
        unsigned long k = 0;
        if (at_punct('@')) {
          take();
          k = small("exponent");
        }
        return typed(at, [&] { return Element::fraction(r, num, k); });
      }
      case RingKind::Quotient: {
        Element lift = element(r.base());
        return typed(at, [&] { return Element::residue(r, lift); });
      }
      case RingKind::Excision:
      case RingKind::Double: {
        const char sep = r.kind() == RingKind::Excision ? '|' : ',';
        punct('(');
        Element a = element(r.base());
        punct(sep);
        Element b = element(r.base());
        punct(')');
        return typed(at, [&] { return Element::pair(r, a, b); });
      }
    }
    error(Errc::TypeError, at, "unsupported ring");
  }

  std::vector<Element> vec(const Ring& r) {
    punct('[');
    std::vector<Element> v;
    if (!at_punct(']')) {
      v.push_back(element(r));
      while (at_punct(',')) {
        take();
        v.push_back(element(r));
      }
    }
    punct(']');
    return v;
  }

  Matrix matrix_lit(const Ring& r) {
    const Token& at = punct('[');
    std::vector<std::vector<Element>> rows;
    while (true) {
      const Token& row_at = peek();
      rows.push_back(vec(r));
      if (rows.back().empty()) error(Errc::SyntaxError, row_at, "empty matrix row");
      if (rows.size() > 1 && rows.back().size() != rows.front().size())
        error(Errc::SyntaxError, row_at,
              "ragged rows: expected " + std::to_string(rows.front().size()) +
                  " entries, found " + std::to_string(rows.back().size()));
      if (!at_punct(',')) break;
      take();
    }
    punct(']');
    return typed(at, [&] { return Matrix::from_rows(r, rows); });
  }

  void atoms(ElementaryWord& w) {
    if (at_word("id")) {
      take();
      return;
    }
    if (!at_word("gen") && !at_word("conj"))
      error(Errc::SyntaxError, peek(), "expected gen(...), conj(...) or id");
    while (at_word("gen") || at_word("conj")) {
      const Token& at = take();
      punct('(');
      if (at.text == "gen") {
        const size_t i = small("index");
        punct(',');
        const size_t j = small("index");
        punct(',');
        const Element a = element(w.ring());
        punct(')');
        typed(at, [&] { w.gen(i, j, a); });
      } else {
        ElementaryWord outer(w.family(), w.size(), w.ring());
        atoms(outer);
        punct(';');
        const size_t i = small("index");
        punct(',');
        const size_t j = small("index");
        punct(',');
        const Element a = element(w.ring());
        punct(')');
        typed(at, [&] { w.conj(outer, i, j, a); });
      }
    }
  }

  void bind(Document& doc, const Token& name, Value v) {
    if (doc.index_.count(name.text))
      error(Errc::TypeError, name, "'" + name.text + "' is already bound");
    doc.index_[name.text] = doc.bindings_.size();
    doc.bindings_.push_back({name.text, std::move(v), name.line});
  }

  Ring optional_in(const Document& doc) {
    if (!at_word("in")) return doc.ring_;
    take();
    return ring_desc();
  }

  void statement(Document& doc) {
    const Token& kw = ident();
    if (kw.text == "ring") {
      if (doc.ring_.valid()) error(Errc::SyntaxError, kw, "ring declared twice");
      doc.ring_ = ring_desc();
      punct(';');
      return;
    }
    if (!doc.ring_.valid())
      error(Errc::SyntaxError, kw, "the first statement must declare the ring");
    const Ring& r = doc.ring_;
    const Token& name = ident();
    if (kw.text == "ideal") {
      punct('=');
      Ideal I = ideal_lit(r);
      punct(';');
      bind(doc, name, std::move(I));
    } else if (kw.text == "elem") {
      const Ring er = optional_in(doc);
      punct('=');
      Element x = element(er);
      punct(';');
      bind(doc, name, std::move(x));
    } else if (kw.text == "matrix") {
      const Ring mr = optional_in(doc);
      punct('=');
      Matrix m = matrix_lit(mr);
      punct(';');
      bind(doc, name, std::move(m));
    } else if (kw.text == "row") {
      punct('=');
      const Token& at = peek();
      std::vector<Element> v = vec(r), w;
      bool has_witness = false;
      if (at_word("witness")) {
        take();
        has_witness = true;
        const Token& wt = peek();
        w = vec(r);
        if (w.size() != v.size())
          error(Errc::SyntaxError, wt, "witness length differs from row length");
      }
      std::optional<Ideal> I;
      std::string ideal_name;
      if (at_word("mod")) {
        take();
        const Token& it = ident();
        ideal_name = it.text;
        I = typed(it, [&] { return doc.ideal(it.text); });
      }
      punct(';');
      if (v.empty()) error(Errc::SyntaxError, at, "empty row");
      if (!has_witness) {
        if (!I) error(Errc::TypeError, at, "an absolute row needs a witness");
        UnimodularRow probe{r, v, {}, I};
        w = typed(at, [&] { return find_relative_witness(probe); });
      }
      UnimodularRow row = typed(at, [&] { return make_row(r, v, w, I); });
      bind(doc, name, RowBinding{std::move(row), ideal_name});
    } else if (kw.text == "word") {
      const Token& fam = ident();
      Family f = Family::Linear;
      if (fam.text == "gl") {
        f = Family::Linear;
      } else if (fam.text == "sp") {
        f = Family::Symplectic;
      } else {
        error(Errc::SyntaxError, fam, "expected gl or sp");
      }
      const Token& st = peek();
      const size_t size = small("size");
      ElementaryWord w = typed(st, [&] { return ElementaryWord(f, size, r); });
      punct('=');
      atoms(w);
      punct(';');
      bind(doc, name, std::move(w));
    } else if (kw.text == "steinberg") {
      const Token& nt = peek();
      const size_t n = small("rank");
      SteinbergWord w = typed(nt, [&] { return SteinbergWord(n, r); });
      punct('=');
      if (at_word("id")) {
        take();
      } else {
        if (!at_word("x")) error(Errc::SyntaxError, peek(), "expected x(...) or id");
        while (at_word("x")) {
          const Token& at = take();
          punct('(');
          const size_t i = small("index");
          punct(',');
          const size_t j = small("index");
          punct(',');
          const Element a = element(r);
          punct(')');
          int e = 1;
          if (at_punct('^')) {
            take();
            punct('-');
            const Token& one = peek();
            if (integer() != 1) error(Errc::SyntaxError, one, "only ^-1 is allowed");
            e = -1;
          }
          typed(at, [&] { w.x(i, j, a, e); });
        }
      }
      punct(';');
      bind(doc, name, std::move(w));
    } else if (kw.text == "cert") {
      punct('=');
      const size_t t = small("padding");
      const Token& wt = ident();
      const ElementaryWord& w = typed(wt, [&]() -> const ElementaryWord& {
        return doc.word(wt.text);
      });
      punct(';');
      bind(doc, name, CertBinding{EquivCertificate{t, w}, wt.text});
    } else {
      error(Errc::SyntaxError, kw, "unknown statement '" + kw.text + "'");
    }
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

const Binding& Document::get(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(Errc::UnknownBinding, "no binding named '" + name + "'");
  return bindings_[it->second];
}

namespace {

template <class T>
const T& typed_get(const Document& d, const std::string& name, const char* want) {
  const Binding& b = d.get(name);
  if (const T* v = std::get_if<T>(&b.value)) return *v;
  fail(Errc::TypeError, "'" + name + "' is a " + kind_name(b.value) + ", not a " + want);
}

}  // namespace

const Element& Document::element(const std::string& n) const {
  return typed_get<Element>(*this, n, "element");
}
const Ideal& Document::ideal(const std::string& n) const {
  return typed_get<Ideal>(*this, n, "ideal");
}
const Matrix& Document::matrix(const std::string& n) const {
  return typed_get<Matrix>(*this, n, "matrix");
}
const UnimodularRow& Document::row(const std::string& n) const {
  return typed_get<RowBinding>(*this, n, "row").row;
}
const ElementaryWord& Document::word(const std::string& n) const {
  return typed_get<ElementaryWord>(*this, n, "word");
}
const SteinbergWord& Document::steinberg(const std::string& n) const {
  return typed_get<SteinbergWord>(*this, n, "steinberg word");
}
const EquivCertificate& Document::cert(const std::string& n) const {
  return typed_get<CertBinding>(*this, n, "certificate").cert;
}

std::string kind_name(const Value& v) {
  static const char* names[] = {"element", "ideal", "matrix", "row",
                                "word", "steinberg word", "certificate"};
  return names[v.index()];
}

std::string format_word(const ElementaryWord& w) { return print_atoms(w); }
std::string format_steinberg(const SteinbergWord& w) { return print_steinberg(w); }

Document parse_document(const std::string& text) {
  return DocumentParser(text).document();
}

Ring parse_ring(const std::string& text) { return DocumentParser(text).ring_only(); }

Element parse_element(const std::string& text, const Ring& ring) {
  return DocumentParser(text).element_only(ring);
}

std::string print_document(const Document& doc) {
  std::string out = "ring " + doc.ring().describe() + ";\n";
  auto in = [&](const Ring& r) {
    return r == doc.ring() ? std::string() : " in " + r.describe();
  };
  for (const Binding& b : doc.bindings()) {
    const Value& v = b.value;
    if (const auto* x = std::get_if<Element>(&v)) {
      out += "elem " + b.name + in(x->ring()) + " = " + to_string(*x) + ";\n";
    } else if (const auto* I = std::get_if<Ideal>(&v)) {
      out += "ideal " + b.name + " = " + I->describe() + ";\n";
    } else if (const auto* m = std::get_if<Matrix>(&v)) {
      out += "matrix " + b.name + in(m->ring()) + " = " + to_string(*m) + ";\n";
    } else if (const auto* r = std::get_if<RowBinding>(&v)) {
      out += "row " + b.name + " = " + print_vec(r->row.entries) + " witness " +
             print_vec(r->row.witness);
      if (!r->ideal_name.empty()) out += " mod " + r->ideal_name;
      out += ";\n";
    } else if (const auto* w = std::get_if<ElementaryWord>(&v)) {
      out += "word " + b.name + (w->family() == Family::Linear ? " gl " : " sp ") +
             std::to_string(w->size()) + " = " + print_atoms(*w) + ";\n";
    } else if (const auto* s = std::get_if<SteinbergWord>(&v)) {
      out += "steinberg " + b.name + " " + std::to_string(s->half_rank()) + " = " +
             print_steinberg(*s) + ";\n";
    } else if (const auto* c = std::get_if<CertBinding>(&v)) {
      out += "cert " + b.name + " = " + std::to_string(c->cert.t) + " " + c->word_name +
             ";\n";
    }
  }
  return out;
}

}  // namespace relsymp
