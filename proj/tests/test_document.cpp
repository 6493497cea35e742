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


#include <filesystem>
#include <fstream>
#include <sstream>

#include "relsymp/document.hpp"
#include "test_helpers.hpp"

using namespace relsymp;
using testing::Z;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("basic documents") {
  const Document d = parse_document("ring Z; matrix A = [[0,1],[-1,0]];");
  CHECK(d.ring() == Ring::integers());
  CHECK(d.matrix("A") == chi(1, Ring::integers()));
  const Document m = parse_document("ring Zmod 8; ideal I = <4>;");
  CHECK(m.ring() == Ring::integers_mod(8));
  CHECK(m.ideal("I").contains(m.ring().from_int(12)));
  CHECK_FALSE(m.ideal("I").contains(m.ring().from_int(2)));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_document("ring Z;\nmatrix B = [[1,2],[3]];");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.code() == Errc::SyntaxError);
    CHECK(e.line() == 2);
  }
  CHECK_ERRC(parse_document("matrix A = [[1]];"), Errc::SyntaxError);
  CHECK_ERRC(parse_document("ring Z; ring Q;"), Errc::SyntaxError);
  CHECK_ERRC(parse_document("ring Z; elem a = 1/2;"), Errc::SyntaxError);
  CHECK_ERRC(parse_document("ring Z; ideal I = <2>; row v = [2, 3] mod I;"), Errc::TypeError);
  CHECK_ERRC(parse_document("ring Z; matrix A = [[1,2]]"), Errc::SyntaxError);
  CHECK_ERRC(parse_document("ring Z; row v = [2, 4] witness [1, 0];"), Errc::TypeError);
  const Document d = parse_document("ring Z; elem a = 3;");
  CHECK_ERRC(d.matrix("a"), Errc::TypeError);
  CHECK_ERRC(d.element("b"), Errc::UnknownBinding);
}

TEST_CASE("ring descriptors and literals") {
  CHECK(parse_ring("poly Zmod 5 T") == Ring::polynomial(Ring::integers_mod(5), "T"));
  CHECK(parse_ring("loc Z 6") == Ring::localized(Z(6)));
  const Ring ex = parse_ring("excision Z <2>");
  CHECK(ex == Ring::excision(Ideal(Ring::integers(), {Z(2)})));
  CHECK(parse_element("(3|2)", ex) ==
        Element::pair(ex, Z(3), Z(2)));
  CHECK(parse_element("-(3|2)", ex) == Element::pair(ex, Z(-3), Z(-2)));
  const Ring q = Ring::rationals();
  CHECK(parse_element("-3/6", q) == Element::rational(q, mpq_class(-1, 2)));
  const Ring loc = Ring::localized(Z(2));
  CHECK(parse_element("3@2", loc) == Element::fraction(loc, Z(3), 2));
  const Ring zx = parse_ring("poly Z X");
  CHECK(parse_element("[1,0,2]", zx) == Element::poly(zx, {Z(1), Z(0), Z(2)}));
  CHECK_ERRC(parse_element("(3|1)", ex), Errc::TypeError);
}

TEST_CASE("rows, words and certificates") {
  const Document d = parse_document(R"(
    ring Z;
    ideal I = <2>;
    row v = [3, 2] mod I;       # witness found automatically
    row u = [3, 5, 0] witness [2, -1, 0];
    word W sp 4 = gen(1,3,2) conj(gen(1,2,5); 2,4,-2);
    word E gl 4 = id;
    cert C = 0 E;
    steinberg S 3 = x(1,3,2) x(1,3,2)^-1;
  )");
  const UnimodularRow& v = d.row("v");
  REQUIRE(v.ideal.has_value());
  CHECK(v.witness.size() == 2);
  CHECK(d.row("u").ideal == std::nullopt);
  const ElementaryWord& w = d.word("W");
  CHECK(w.family() == Family::Symplectic);
  CHECK(w.atoms().size() == 2);
  CHECK(d.cert("C").t == 0);
  CHECK(d.steinberg("S").atoms().size() == 2);
  CHECK(format_word(d.word("E")) == "id");
  CHECK(format_steinberg(d.steinberg("S")) == "x(1,3,2) x(1,3,2)^-1");
}

TEST_CASE("print and parse round trip") {
  const std::string text = R"(
    ring excision Z <2>;
    elem a = (3|2);
    matrix A = [[(1|0), (0|2)], [(0|0), (1|0)]];
  )";
  const std::string once = print_document(parse_document(text));
  CHECK(print_document(parse_document(once)) == once);
}

TEST_CASE("corpus documents round trip") {
  size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(RELSYMP_CORPUS_DIR)) {
    if (entry.path().extension() != ".rsd") continue;
    ++count;
    const std::string text = slurp(entry.path());
    INFO(entry.path().filename().string());
    const Document d = parse_document(text);
    const std::string printed = print_document(d);
    CHECK(printed == text);
    CHECK(print_document(parse_document(printed)) == printed);
  }
  CHECK(count == 30);
}
