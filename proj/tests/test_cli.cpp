#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lcva/cli.hpp"
#include "lcva/named.hpp"
#include "lcva/susy.hpp"

using namespace lcva;

namespace {

bool same_pres(const LcaPresentation& a, const LcaPresentation& b) {
  if (a.gens.size() != b.gens.size()) return false;
  for (size_t j = 0; j < a.gens.size(); ++j)
    if (a.gens[j].name != b.gens[j].name ||
        a.gens[j].parity != b.gens[j].parity ||
        a.gens[j].central != b.gens[j].central)
      return false;
  if (a.table != b.table) return false;
  if (a.central_values != b.central_values) return false;
  if (a.derivations.size() != b.derivations.size()) return false;
  for (auto& [n, d] : a.derivations) {
    auto it = b.derivations.find(n);
    if (it == b.derivations.end() || d.parity != it->second.parity ||
        d.action != it->second.action)
      return false;
  }
  return true;
}

std::string write_tmp(const std::string& name, const std::string& text) {
  std::ofstream out(name);
  out << text;
  return name;
}

int run(std::vector<std::string> args, std::string* text = nullptr) {
  std::ostringstream out;
  int rc = run_command(args, out);
  if (text) *text = out.str();
  return rc;
}

const std::string kCase2 =
    "even beta;\neven gamma;\ncentral C;\n"
    "bracket beta gamma = C;\nbracket gamma beta = (-1)*C;\n"
    "susy beta = bar;\nsusy gamma = bar;\n";

}  // namespace

TEST_CASE("render-parse-render is a fixed point on every builtin") {
  for (auto& name : named_algebras()) {
    CAPTURE(name);
    AlgebraFile f;
    f.pres = build_named(name);
    std::string s1 = render_algebra(f);
    AlgebraFile f2 = parse_algebra(s1);
    CHECK(same_pres(f.pres, f2.pres));
    CHECK(render_algebra(f2) == s1);
  }
}

TEST_CASE("the Virasoro file parses to the builtin presentation") {
  AlgebraFile f = parse_algebra(
      "param c;\n"
      "even L; central C;\n"
      "bracket L L = (d + 2*l)*L + (C/12)*l^3;\n");
  LcaPresentation vir = build_vir();
  vir.derivations.clear();
  CHECK(same_pres(f.pres, vir));
  CHECK(f.params == std::vector<int>{Params::id("c")});
}

TEST_CASE("expression coefficients cover the full scalar field") {
  AlgebraFile f = parse_algebra(
      "param k;\n"
      "even A; central C;\n"
      "bracket A A = (i/2 + sqrt2*k)*l*C + d*A - 3/2*A;\n");
  VertexAlgebra va(f.pres);
  int A = f.pres.require("A"), C = f.pres.require("C");
  const LPoly* p = f.pres.stored(A, A);
  REQUIRE(p != nullptr);
  Scalar want = Scalar::i() * Scalar(1, 2) +
                Scalar(GRat::sqrt_two()) * Scalar::param("k");
  CHECK(p->coeff(1) == VElement::letter({C, 0}, want));
  CHECK(p->coeff(0) == VElement::letter({A, 1}) +
                           VElement::letter({A, 0}, Scalar(-3, 2)));
}

TEST_CASE("parse errors carry the source location") {
  // missing second generator
  CHECK_THROWS_AS(parse_algebra("even L;\nbracket L = L;\n"), ParseError);
  try {
    parse_algebra("even L;\nbracket L = L;\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col > 0);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  // products of generators are rejected in table expressions
  CHECK_THROWS_AS(parse_algebra("even A;\nbracket A A = A*A;\n"), ParseError);
  // unknown identifier
  CHECK_THROWS_AS(parse_algebra("even A;\nbracket A A = q*A;\n"), ParseError);
  // parity mismatch: even bracket value with an odd word
  CHECK_THROWS_AS(
      parse_algebra("even A; odd G;\nbracket A A = G;\n"), ParseError);
  // stray character
  CHECK_THROWS_AS(parse_algebra("even A?;"), ParseError);
}

TEST_CASE("element expressions build normally ordered products") {
  VertexAlgebra va(build_bc_betagamma());
  int b = va.pres().require("b"), c = va.pres().require("c"),
      ga = va.pres().require("gamma");
  VElement vb = VElement::letter({b, 0}), vc = VElement::letter({c, 0});
  CHECK(parse_element("b*c", va) == va.nop(vb, vc));
  CHECK(parse_element("(d*gamma)*b", va) ==
        va.nop(VElement::letter({ga, 1}), vb));
  CHECK(parse_element("d^2*b", va) == va.partial_pow(vb, 2));
  CHECK(parse_element("(1/2)*b - i*c", va) ==
        vb.scaled(Scalar(1, 2)) - vc.scaled(Scalar::i()));
  // right-nested: b*c*gamma = :b(:c gamma:):
  CHECK(parse_element("b*c*gamma", va) ==
        va.nop(vb, va.nop(vc, VElement::letter({ga, 0}))));
  CHECK_THROWS_AS(parse_element("b + ", va), ParseError);
  CHECK_THROWS_AS(parse_element("l*b", va), ParseError);
}

TEST_CASE("exit codes follow the 0/1/2 contract") {
  std::string text;
  CHECK(run({"check-lca", "--algebra", "vir"}, &text) == 0);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(run({"no-such-command"}, &text) == 2);
  CHECK(run({"check-lca", "--algebra", "no_such_algebra"}, &text) == 2);
  CHECK(run({}, &text) == 2);
  std::string f = write_tmp("cli_case2.alg", kCase2);
  CHECK(run({"check-sef", "--algebra", f}, &text) == 1);
  CHECK(text.find("inconsistent") != std::string::npos);
}

TEST_CASE("extend output reparses to the library extension") {
  std::string text;
  REQUIRE(run({"extend", "--algebra", "betagamma", "--n", "1"}, &text) == 0);
  AlgebraFile f = parse_algebra(text);
  CHECK(same_pres(f.pres, extend_N1(build_betagamma()).pres));
  // and the pipeline closes: the written file passes check-susy
  std::string file = write_tmp("cli_bg_n1.alg", text);
  CHECK(run({"check-susy", "--algebra", file, "--rounds", "2"}) == 0);
}

TEST_CASE("json reports are byte-identical for identical argv and seed") {
  std::vector<std::string> argv = {"check-susy", "--algebra", "svir",
                                   "--json",     "--seed",    "5",
                                   "--rounds",   "2",         "--max-len", "1"};
  std::string a, b;
  CHECK(run(argv, &a) == 0);
  CHECK(run(argv, &b) == 0);
  CHECK(a == b);
  CHECK(a.find("\"schema\": \"lcva-report/1\"") != std::string::npos);
  CHECK(a.find("0.") == std::string::npos);  // no floats, ever
}

TEST_CASE("scalar values render exactly in reports") {
  std::string text;
  CHECK(run({"kac-todorov", "--lie", "sl2"}, &text) == 0);
  CHECK(text.find("charge = (9/2*k - 6)/k") != std::string::npos);
  CHECK(run({"lbracket", "--algebra", "svir", "G", "G"}, &text) == 0);
  CHECK(text.find("(2*L)*x1") != std::string::npos);
  CHECK(text.find("(1/3*c)*l^2*x1") != std::string::npos);
}
