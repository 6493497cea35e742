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

// relsymp: batch front end. Reads a document (--doc FILE, default stdin),
// runs one command and prints one report object.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "relsymp/completion.hpp"
#include "relsymp/document.hpp"
#include "relsymp/suites.hpp"

using json = nlohmann::ordered_json;
using namespace relsymp;

namespace {

struct Options {
  uint64_t seed = 7;
  std::optional<size_t> trials;
  long budget = 0;  // 0: command default
  std::string format = "json";
  std::string doc_path;
  std::string ring;
  std::string ideal;
  std::string group = "gl";
  std::string var = "X";
  std::string reference;
  std::string s, t;
  size_t n = 3;
  size_t i = 0, j = 0;
  bool parallel = true;
  std::vector<std::string> args;
};

json elem_json(const Element& x) { return to_string(x); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json vec_json(const std::vector<Element>& v) {
  json a = json::array();
  for (const Element& x : v) a.push_back(to_string(x));
  return a;
}

class Context {
 public:
  explicit Context(Options& o) : opt(o) {}

  Options& opt;

  const Document& doc() {
    if (!doc_) {
      std::string text;
      if (opt.doc_path.empty() || opt.doc_path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
      } else {
        std::ifstream in(opt.doc_path);
        if (!in) fail(Errc::Usage, "cannot read " + opt.doc_path);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      if (!opt.ring.empty() && text.find("ring") == std::string::npos)
        text = "ring " + opt.ring + ";\n" + text;
      doc_ = parse_document(text);
    }
    return *doc_;
  }

  Ring ring() {
    if (!opt.ring.empty() && opt.doc_path.empty()) return parse_ring(opt.ring);
    return doc().ring();
  }

  const std::string& arg(size_t k) const {
    if (k >= opt.args.size())
      fail(Errc::Usage, "missing argument " + std::to_string(k + 1));
    return opt.args[k];
  }
  size_t nargs() const { return opt.args.size(); }

  std::optional<Ideal> ideal() {
    if (opt.ideal.empty()) return std::nullopt;
    return doc().ideal(opt.ideal);
  }
  const Ideal& need_ideal() {
    if (opt.ideal.empty()) fail(Errc::Usage, "this command needs --ideal NAME");
    return doc().ideal(opt.ideal);
  }

  // Binding name or literal element in the given ring.
  Element element(const std::string& text, const Ring& r) {
    if (!opt.doc_path.empty() || opt.ring.empty()) {
      const Document& d = doc();
      if (d.has(text)) return d.element(text);
    }
    return parse_element(text, r);
  }

  AltRep alt(const std::string& name) { return make_alt(doc().matrix(name), ideal()); }

 private:
  std::optional<Document> doc_;
};

using Handler = std::function<json(Context&, json&)>;

// Each handler fills `report` and returns the "passed" verdict as JSON bool.

json cmd_pfaffian(Context& c, json& r) {
  const Matrix& a = c.doc().matrix(c.arg(0));
  const Element pf = pfaffian(a);
  r["result"] = elem_json(pf);
  const bool ok = pf * pf == det(a);
  r["verified"] = {{"pf_squared_is_det", ok}};
  return ok;
}

json cmd_det(Context& c, json& r) {
  r["result"] = elem_json(det(c.doc().matrix(c.arg(0))));
  return true;
}

json cmd_predicate(Context& c, json& r) {
  const Matrix& a = c.doc().matrix(c.arg(0));
  const std::string& p = c.arg(1);
  bool holds = false;
  if (p == "alternating") {
    holds = is_alternating(a);
  } else if (p == "invertible") {
    holds = is_invertible(a);
  } else if (p == "symplectic") {
    const Matrix phi = c.opt.reference.empty() ? chi(a.rows() / 2, a.ring())
                                               : c.doc().matrix(c.opt.reference);
    holds = a.rows() % 2 == 0 && is_symplectic_wrt(a, phi);
  } else if (p == "relative") {
    holds = c.opt.reference.empty()
                ? is_relative_to(a, c.need_ideal())
                : is_relative_to(a, c.need_ideal(), c.doc().matrix(c.opt.reference));
  } else if (p == "special") {
    holds = a.is_square() && det(a).is_one();
  } else {
    fail(Errc::Usage, "unknown predicate '" + p +
                          "' (alternating, invertible, symplectic, relative, special)");
  }
  r["predicate"] = p;
  r["result"] = holds;
  return holds;
}

json cmd_eval(Context& c, json& r) {
  const Binding& b = c.doc().get(c.arg(0));
  if (const auto* w = std::get_if<ElementaryWord>(&b.value)) {
    r["result"] = matrix_json(word_eval(*w));
    if (!c.opt.ideal.empty()) {
      const bool rel = certifies_relative(*w, c.need_ideal());
      r["verified"] = {{"relative_word", rel}};
      return rel;
    }
    return true;
  }
  if (const auto* s = std::get_if<SteinbergWord>(&b.value)) {
    r["result"] = matrix_json(steinberg_phi(*s));
    return true;
  }
  fail(Errc::TypeError, "'" + c.arg(0) + "' is not a word");
}

json cmd_lift_row(Context& c, json& r) {
  const UnimodularRow& v = c.doc().row(c.arg(0));
  const long budget = c.opt.budget ? c.opt.budget : kDefaultWitnessBudget;
  const UnimodularRow l = lift_row(v, std::nullopt, budget);
  r["ring"] = l.ring.describe();
  r["result"] = vec_json(l.entries);
  r["witness"] = vec_json(l.witness);
  Element s = l.ring.zero();
  for (size_t k = 0; k < l.size(); ++k) s += l.entries[k] * l.witness[k];
  const bool pairing = s.is_one();
  const bool rel = congruent_to_e1(l.entries, *l.ideal);
  r["verified"] = {{"pairing_is_one", pairing}, {"relative_to_split", rel}};
  return pairing && rel;
}

json cmd_lift_matrix(Context& c, json& r) {
  const Matrix& a = c.doc().matrix(c.arg(0));
  const Ideal& I = c.need_ideal();
  GroupTag tag = GroupTag::GL;
  if (c.opt.group == "sl") tag = GroupTag::SL;
  else if (c.opt.group == "sp") tag = GroupTag::Sp;
  else if (c.opt.group != "gl") fail(Errc::Usage, "--group must be gl, sl or sp");
  const Matrix l = lift_matrix(a, I, tag);
  r["ring"] = l.ring().describe();
  r["result"] = matrix_json(l);
  const Ring& ex = l.ring();
  json v;
  v["relative_to_split"] = is_relative_to(l, Ideal::split(ex));
  v["projects_back"] = apply_hom(RingHom::project_pi(ex), l) == a;
  if (tag == GroupTag::SL) v["det_is_one"] = det(l).is_one();
  if (tag == GroupTag::Sp) v["symplectic"] = is_symplectic_wrt(l, chi(l.rows() / 2, ex));
  bool ok = true;
  for (auto& [k, x] : v.items()) ok = ok && x.get<bool>();
  r["verified"] = v;
  return ok;
}

json cmd_project(Context& c, json& r) {
  const Matrix& a = c.doc().matrix(c.arg(0));
  if (a.ring().kind() != RingKind::Excision)
    fail(Errc::DescriptorMismatch, "project needs a matrix over an excision ring");
  r["ring"] = a.ring().base().describe();
  r["result"] = matrix_json(apply_hom(RingHom::project_pi(a.ring()), a));
  return true;
}

json cmd_whitehead(Context& c, json& r) {
  const Matrix& g = c.doc().matrix(c.arg(0));
  const ElementaryWord w = whitehead_word(g);
  r["result"] = format_word(w);
  const bool ok = word_eval(w) == perp(g, inverse(g));
  r["verified"] = {{"evaluates_to_block", ok}};
  return ok;
}

json cmd_homotopy(Context& c, json& r) {
  const ElementaryWord& w = c.doc().word(c.arg(0));
  const ElementaryWord h = homotopy_word(w, c.opt.var);
  r["ring"] = h.ring().describe();
  r["result"] = format_word(h);
  const Matrix m = word_eval(h);
  const Ring& px = h.ring();
  const bool at0 = apply_hom(RingHom::eval_at(px, px.base().zero()), m) ==
                   Matrix::identity(w.ring(), w.size());
  const bool at1 = apply_hom(RingHom::eval_at(px, px.base().one()), m) == word_eval(w);
  r["verified"] = {{"at_zero_is_identity", at0}, {"at_one_is_word", at1}};
  return at0 && at1;
}

json cmd_reduce_principal(Context& c, json& r) {
  const UnimodularRow& v = c.doc().row(c.arg(0));
  const PrincipalReduction p = reduce_to_principal(v);
  r["word"] = format_word(p.word);
  r["result"] = vec_json(p.reduced.entries);
  r["witness"] = vec_json(p.reduced.witness);
  if (p.reduced.ideal) r["ideal"] = p.reduced.ideal->describe();
  const bool maps = row_times(v.entries, p.word) == p.reduced.entries;
  const bool wit = witness_holds(p.reduced);
  r["verified"] = {{"word_maps_row", maps}, {"witness_holds", wit}};
  return maps && wit;
}

json cmd_complete(Context& c, json& r) {
  const UnimodularRow& v = c.doc().row(c.arg(0));
  const size_t budget = c.opt.budget ? static_cast<size_t>(c.opt.budget) : (1u << 16);
  if (v.ideal) {
    const ExcisionCompletion out = complete_row_via_excision(v, budget);
    r["lifted"] = vec_json(out.lifted.entries);
    r["word"] = format_word(out.word);
    r["result"] = matrix_json(out.gamma);
    const bool ok = verify_completion(v, out.gamma);
    r["verified"] = {{"completes_row", ok}};
    return ok;
  }
  const ElementaryWord w = bounded_search_completer(v.entries, budget);
  r["word"] = format_word(w);
  r["result"] = matrix_json(word_eval(w));
  const bool ok = verify_completion(v, w);
  r["verified"] = {{"completes_row", ok}};
  return ok;
}

json cmd_patch(Context& c, json& r) {
  const Ring base = c.doc().ring();
  if (c.opt.s.empty() || c.opt.t.empty()) fail(Errc::Usage, "patch needs --s and --t");
  const Element s = c.element(c.opt.s, base), t = c.element(c.opt.t, base);
  const Ring rs = Ring::localized(s), rt = Ring::localized(t);
  auto localize = [&](const Matrix& m, const Ring& target) {
    if (m.ring() == target) return m;
    if (m.ring() == base) return apply_hom(RingHom::localization_inclusion(target), m);
    fail(Errc::DescriptorMismatch, "matrix over " + m.ring().describe() +
                                       ", expected " + target.describe());
  };
  const Matrix a1 = localize(c.doc().matrix(c.arg(0)), rs);
  const Matrix a2 = localize(c.doc().matrix(c.arg(1)), rt);
  const Ideal I = c.ideal().value_or(Ideal(base, {base.zero()}));
  const Matrix a = patch_symplectic(s, t, a1, a2, I);
  r["result"] = matrix_json(a);
  const bool unique = patch_symplectic(t, s, a2, a1, I) == a;
  r["verified"] = {{"localizes_back", true}, {"symplectic", true}, {"relative", true},
                   {"unique", unique}};
  return unique;
}

json alt_report(json& r, const AltRep& a) {
  r["result"] = matrix_json(a.matrix);
  r["pfaffian"] = to_string(pfaffian(a.matrix));
  return true;
}

json cmd_witt_perp(Context& c, json& r) {
  const AltRep a = c.alt(c.arg(0)), b = c.alt(c.arg(1));
  const AltRep p = witt_perp(a, b);
  alt_report(r, p);
  const bool ok = pfaffian(p.matrix) == pfaffian(a.matrix) * pfaffian(b.matrix);
  r["verified"] = {{"pf_multiplicative", ok}};
  return ok;
}

json cmd_witt_inv(Context& c, json& r) {
  const AltRep a = c.alt(c.arg(0));
  const AltRep inv = witt_inverse_rep(a);
  alt_report(r, inv);
  json v;
  if (a.pfaffian_one) v["pf_is_one"] = pfaffian(inv.matrix).is_one();
  if (a.ideal) v["relative"] = is_relative_to(inv.matrix, *a.ideal, chi(a.half_size(), a.matrix.ring()));
  bool ok = true;
  for (auto& [k, x] : v.items()) ok = ok && x.get<bool>();
  r["verified"] = v.empty() ? json::object() : v;
  return ok;
}

json cmd_witt_pf(Context& c, json& r) {
  const AltRep a = make_alt(c.doc().matrix(c.arg(0)), c.need_ideal());
  r["result"] = elem_json(witt_pf(a));
  r["verified"] = {{"in_kernel_C", true}};
  return true;
}

json cmd_hyperbolic(Context& c, json& r) {
  const Matrix& a = c.doc().matrix(c.arg(0));
  const AltRep h = hyperbolic_H(a, c.ideal());
  alt_report(r, h);
  const bool ok = pfaffian(h.matrix) == det(a);
  r["verified"] = {{"pf_is_det", ok}};
  return ok;
}

json cmd_check_equiv(Context& c, json& r) {
  const AltRep a = c.alt(c.arg(0)), b = c.alt(c.arg(1));
  const EquivCheck e = check_equiv_detail(a, b, c.doc().cert(c.arg(2)));
  static const char* levels[] = {"syntactic", "residue_only", "none"};
  r["result"] = e.valid;
  r["identity_holds"] = e.identity_holds;
  r["relative_level"] = levels[static_cast<int>(e.level)];
  return e.valid;
}

json cmd_search_equiv(Context& c, json& r) {
  const AltRep a = c.alt(c.arg(0)), b = c.alt(c.arg(1));
  const size_t budget = c.opt.budget ? static_cast<size_t>(c.opt.budget) : 100000;
  const EquivCertificate cert = search_equiv(a, b, budget);
  r["t"] = cert.t;
  r["result"] = format_word(cert.word);
  const bool ok = check_equiv(a, b, cert);
  r["verified"] = {{"certificate_valid", ok}};
  return ok;
}

json cmd_extract_block(Context& c, json& r) {
  const Matrix& d = c.doc().matrix(c.arg(0));
  const AltRep t1 = c.alt(c.arg(1)), t2 = c.alt(c.arg(2));
  const Matrix beta = extract_block(d, t1, t2);
  r["result"] = matrix_json(beta);
  json v{{"q_is_one", true}, {"v_is_zero", true}, {"conjugates_theta", true}};
  bool ok = true;
  if (auto I = c.ideal()) {
    v["relative"] = is_relative_to(beta, *I);
    ok = v["relative"].get<bool>();
  }
  r["verified"] = v;
  return ok;
}

json cmd_symbol(Context& c, json& r) {
  const std::string& kind = c.arg(0);
  SymbolKind k;
  if (kind == "sw") k = SymbolKind::Sw;
  else if (kind == "sh") k = SymbolKind::Sh;
  else if (kind == "curly") k = SymbolKind::Curly;
  else if (kind == "square") k = SymbolKind::Square;
  else fail(Errc::Usage, "symbol kind must be sw, sh, curly or square");
  const Ring ring = c.ring();
  const Element rr = c.element(c.arg(1), ring);
  std::optional<Element> s;
  if (c.nargs() > 2) s = c.element(c.arg(2), ring);
  std::optional<std::pair<size_t, size_t>> ij;
  if (c.opt.i && c.opt.j) ij = std::make_pair(c.opt.i, c.opt.j);
  const SteinbergWord w = symbol_build(k, rr, s, c.opt.n, ij);
  r["result"] = format_steinberg(w);
  r["kernel_check"] = kernel_check(w);
  return true;
}

json cmd_phi(Context& c, json& r) {
  r["result"] = matrix_json(steinberg_phi(c.doc().steinberg(c.arg(0))));
  return true;
}

json cmd_kernel_check(Context& c, json& r) {
  const bool k = kernel_check(c.doc().steinberg(c.arg(0)));
  r["result"] = k;
  return k;
}

json cmd_residue_check(Context& c, json& r) {
  const bool k = residue_trivial(c.doc().steinberg(c.arg(0)), c.need_ideal());
  r["result"] = k;
  return k;
}

json cmd_suite(Context& c, json& r) {
  SuiteOptions so;
  so.seed = c.opt.seed;
  so.trials = c.opt.trials;
  so.parallel = c.opt.parallel;
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport rep = run_suite(c.arg(0), so);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cerr << "suite " << rep.suite << ": " << secs << " s\n";
  r["suite"] = rep.suite;
  r["seed"] = rep.seed;
  json checks = json::array();
  for (const CheckResult& ch : rep.checks) {
    json j{{"name", ch.name}, {"trials", ch.trials}, {"failures", ch.failures},
           {"passed", ch.passed()}};
    if (!ch.first_failure.empty()) j["first_failure"] = ch.first_failure;
    checks.push_back(j);
  }
  r["checks"] = checks;
  r["result"] = rep.passed() ? "all-pass" : "failures";
  return rep.passed();
}

void print_plain(const json& j, const std::string& prefix, std::ostream& os) {
  for (auto& [k, v] : j.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object()) {
      print_plain(v, key, os);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      for (const auto& item : v) {
        os << key << ":";
        for (auto& [ik, iv] : item.items())
          os << " " << ik << "=" << (iv.is_string() ? iv.get<std::string>() : iv.dump());
        os << "\n";
      }
    } else {
      os << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

void emit(const json& j, const Options& o) {
  if (o.format == "plain") {
    print_plain(j, "", std::cout);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

int exit_code_for(Errc e) {
  switch (e) {
    case Errc::SyntaxError:
    case Errc::TypeError:
    case Errc::UnknownBinding:
    case Errc::Usage:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"relsymp: relative symplectic K1 calculus"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", opt.seed, "random seed for suites");
  app.add_option("--trials", opt.trials, "override suite trial counts");
  app.add_option("--budget", opt.budget, "search budget");
  app.add_option("--format", opt.format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));
  app.add_option("--doc,-f", opt.doc_path, "document file (default stdin)");
  app.add_option("--ring", opt.ring, "ring descriptor when no document is given");
  app.add_option("--ideal", opt.ideal, "ideal binding name");
  app.add_flag("!--serial", opt.parallel, "run suite trials on one thread");

  const std::vector<std::tuple<std::string, std::string, Handler>> commands{
      {"pfaffian", "Pfaffian of an alternating matrix", cmd_pfaffian},
      {"det", "determinant", cmd_det},
      {"predicate", "MATRIX alternating|invertible|symplectic|relative|special",
       cmd_predicate},
      {"eval", "evaluate an elementary or Steinberg word", cmd_eval},
      {"lift-row", "lift a relative row to R (+) I", cmd_lift_row},
      {"lift-matrix", "lift a relative matrix to R (+) I", cmd_lift_matrix},
      {"project", "apply (r,i) -> r+i to a matrix over R (+) I", cmd_project},
      {"whitehead", "word for gamma (+) gamma^-1", cmd_whitehead},
      {"homotopy", "homotopy word over R[X]", cmd_homotopy},
      {"reduce-principal", "reduce a relative row to a principal ideal",
       cmd_reduce_principal},
      {"complete", "complete a unimodular row", cmd_complete},
      {"patch", "glue two localized symplectic matrices", cmd_patch},
      {"witt-perp", "block sum of representatives", cmd_witt_perp},
      {"witt-inv", "inverse representative", cmd_witt_inv},
      {"witt-pf", "Pfaffian character", cmd_witt_pf},
      {"hyperbolic", "alpha^T chi alpha", cmd_hyperbolic},
      {"check-equiv", "A B CERT", cmd_check_equiv},
      {"search-equiv", "A B", cmd_search_equiv},
      {"extract-block", "DELTA THETA1 THETA2", cmd_extract_block},
      {"symbol", "sw|sh|curly|square R [S]", cmd_symbol},
      {"phi", "evaluate a Steinberg word", cmd_phi},
      {"kernel-check", "phi(word) == I", cmd_kernel_check},
      {"residue-check", "phi(word mod I) == I", cmd_residue_check},
      {"suite", "run a property suite", cmd_suite},
  };
  std::string chosen;
  Handler handler;
  for (const auto& [name, help, h] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("args", opt.args, "arguments");
    if (name == "patch") {
      sub->add_option("--s", opt.s, "first localization element");
      sub->add_option("--t", opt.t, "second localization element");
    }
    if (name == "lift-matrix") sub->add_option("--group", opt.group, "gl, sl or sp");
    if (name == "homotopy") sub->add_option("--var", opt.var, "polynomial variable");
    if (name == "predicate") sub->add_option("--ref", opt.reference, "reference matrix");
    if (name == "symbol") {
      sub->add_option("--n", opt.n, "half rank");
      sub->add_option("--i", opt.i, "row index");
      sub->add_option("--j", opt.j, "column index");
    }
    sub->callback([&chosen, &handler, name = name, h = h] {
      chosen = name;
      handler = h;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  json report;
  report["command"] = chosen;
  Context ctx(opt);
  int code = 0;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const bool passed = handler(ctx, report).get<bool>();
    report["passed"] = passed;
    code = passed ? 0 : 1;
  } catch (const ParseError& e) {
    report["passed"] = false;
    report["error"] = {{"code", errc_name(e.code())}, {"line", e.line()},
                       {"column", e.column()}, {"message", e.what()}};
    code = 2;
  } catch (const Error& e) {
    report["passed"] = false;
    report["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
    code = exit_code_for(e.code());
  }
  if (chosen != "suite") {
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
  }
  emit(report, opt);
  return code;
}
