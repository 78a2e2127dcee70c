#include "lcva/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lcva/lie.hpp"
#include "lcva/named.hpp"
#include "lcva/sconf.hpp"

namespace lcva {

namespace {

// ---------------------------------------------------------------------------
// tokenizer

struct Tok {
  enum Kind { Id, Num, Punct, End } kind = End;
  std::string text;
  mpq_class num;
  int line = 1, col = 1;
};

const std::set<std::string> kReserved = {
    "param", "even",    "odd", "central", "bracket", "derive", "set",
    "grading", "susy",  "bar", "image",   "d",       "l",      "i",
    "sqrt2"};

class Lexer {
 public:
  explicit Lexer(const std::string& text) {
    int line = 1, col = 1;
    size_t p = 0;
    auto step = [&](size_t n) {
      for (size_t j = 0; j < n; ++j, ++p) {
        if (text[p] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
    };
    while (p < text.size()) {
      char ch = text[p];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        step(1);
        continue;
      }
      if (ch == '#') {  // comment to end of line
        while (p < text.size() && text[p] != '\n') step(1);
        continue;
      }
      Tok t;
      t.line = line;
      t.col = col;
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        size_t q = p;
        while (q < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[q])) ||
                text[q] == '_'))
          ++q;
        t.kind = Tok::Id;
        t.text = text.substr(p, q - p);
        step(q - p);
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        size_t q = p;
        while (q < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[q])))
          ++q;
        t.kind = Tok::Num;
        t.text = text.substr(p, q - p);
        t.num = mpq_class(t.text);
        step(q - p);
      } else if (std::string("+-*/^()=;,").find(ch) != std::string::npos) {
        t.kind = Tok::Punct;
        t.text = std::string(1, ch);
        step(1);
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'",
                         line, col);
      }
      toks_.push_back(std::move(t));
    }
    Tok end;
    end.line = line;
    end.col = col;
    toks_.push_back(end);
  }

  const Tok& peek() const { return toks_[pos_]; }
  const Tok& peek2() const {
    return toks_[std::min(pos_ + 1, toks_.size() - 1)];
  }
  bool punct_next(const char* set) const {
    return peek().kind == Tok::Punct &&
           std::string(set).find(peek().text) != std::string::npos;
  }
  Tok next() { return toks_[pos_++]; }
  bool accept(const std::string& punct) {
    if (peek().kind == Tok::Punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const std::string& punct) {
    if (!accept(punct))
      throw ParseError("expected '" + punct + "'", peek().line, peek().col);
  }
  std::string expect_id() {
    if (peek().kind != Tok::Id)
      throw ParseError("expected an identifier", peek().line, peek().col);
    return next().text;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().col);
  }

 private:
  std::vector<Tok> toks_;
  size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// table expressions: polynomials in (l, d) with C-linear generator parts

struct Lin {
  Scalar c;
  std::map<int, Scalar> g;  // generator index -> coefficient
  bool is_scalar() const { return g.empty(); }
};

struct EVal {
  std::map<std::pair<int, int>, Lin> t;  // (l power, d power) -> part
};

void eval_add(EVal& a, const EVal& b, const Scalar& scale) {
  for (auto& [k, lin] : b.t) {
    Lin& dst = a.t[k];
    dst.c = dst.c + lin.c * scale;
    for (auto& [gi, co] : lin.g) {
      auto it = dst.g.find(gi);
      Scalar v = (it == dst.g.end() ? Scalar(0) : it->second) + co * scale;
      if (v.is_zero()) {
        if (it != dst.g.end()) dst.g.erase(it);
      } else {
        dst.g[gi] = v;
      }
    }
    if (dst.c.is_zero() && dst.g.empty()) a.t.erase(k);
  }
}

EVal eval_scalar(Scalar s) {
  EVal r;
  if (!s.is_zero()) r.t[{0, 0}].c = std::move(s);
  return r;
}

EVal eval_mul(const Lexer& lex, const EVal& a, const EVal& b) {
  EVal r;
  for (auto& [k1, l1] : a.t)
    for (auto& [k2, l2] : b.t) {
      if (!l1.is_scalar() && !l2.is_scalar())
        lex.fail("product of two generators is not allowed here");
      std::pair<int, int> key{k1.first + k2.first, k1.second + k2.second};
      const Lin& gen = l1.is_scalar() ? l2 : l1;
      const Scalar& sc = l1.is_scalar() ? l1.c : l2.c;
      EVal part;
      Lin lin;
      lin.c = l1.c * l2.c;
      for (auto& [gi, co] : gen.g) lin.g[gi] = co * sc;
      part.t[key] = std::move(lin);
      eval_add(r, part, Scalar(1));
    }
  return r;
}

class TableParser {
 public:
  TableParser(Lexer& lex, const LcaPresentation* pres,
              const std::set<int>* params, bool param_fallback)
      : lex_(lex), pres_(pres), params_(params), fallback_(param_fallback) {}

  EVal expr() {
    EVal v = term();
    for (;;) {
      if (lex_.accept("+"))
        eval_add(v, term(), Scalar(1));
      else if (lex_.accept("-"))
        eval_add(v, term(), Scalar(-1));
      else
        return v;
    }
  }

 private:
  EVal term() {
    EVal v = factor();
    for (;;) {
      if (lex_.accept("*")) {
        v = eval_mul(lex_, v, factor());
      } else if (lex_.accept("/")) {
        EVal d = factor();
        if (d.t.size() != 1 || !d.t.count({0, 0}) ||
            !d.t.at({0, 0}).is_scalar())
          lex_.fail("division by a non-scalar");
        v = eval_mul(lex_, v, eval_scalar(d.t.at({0, 0}).c.inv()));
      } else {
        return v;
      }
    }
  }

  EVal factor() {
    if (lex_.accept("-")) {
      EVal v = factor();
      return eval_mul(lex_, eval_scalar(Scalar(-1)), v);
    }
    EVal v = atom();
    if (lex_.accept("^")) {
      if (lex_.peek().kind != Tok::Num)
        lex_.fail("expected an integer exponent");
      long n = lex_.next().num.get_num().get_si();
      EVal r = eval_scalar(Scalar(1));
      for (long j = 0; j < n; ++j) r = eval_mul(lex_, r, v);
      return r;
    }
    return v;
  }

  EVal atom() {
    const Tok& t = lex_.peek();
    if (t.kind == Tok::Num) return eval_scalar(Scalar(GRat(lex_.next().num)));
    if (lex_.accept("(")) {
      EVal v = expr();
      lex_.expect(")");
      return v;
    }
    if (t.kind != Tok::Id) lex_.fail("expected an expression");
    std::string id = lex_.next().text;
    if (id == "i") return eval_scalar(Scalar::i());
    if (id == "sqrt2") return eval_scalar(Scalar(GRat::sqrt_two()));
    if (id == "d") {
      // a generator named d is allowed; the operator reading needs a * or ^
      if (!(pres_ && pres_->find("d") >= 0) || lex_.punct_next("*^")) {
        EVal r;
        r.t[{0, 1}].c = Scalar(1);
        return r;
      }
    }
    if (id == "l") {
      EVal r;
      r.t[{1, 0}].c = Scalar(1);
      return r;
    }
    if (pres_) {
      int gi = pres_->find(id);
      if (gi >= 0) {
        EVal r;
        r.t[{0, 0}].g[gi] = Scalar(1);
        return r;
      }
    }
    int pid = Params::lookup(id);
    if ((params_ && pid >= 0 && params_->count(pid)) || fallback_)
      return eval_scalar(Scalar::param(id));
    lex_.fail("unknown identifier '" + id + "'");
  }

  Lexer& lex_;
  const LcaPresentation* pres_;
  const std::set<int>* params_;
  bool fallback_;
};

LPoly to_lpoly(const Lexer& lex, const EVal& v) {
  LPoly p;
  for (auto& [k, lin] : v.t) {
    VElement coeff;
    if (!lin.c.is_zero()) {
      if (k.second > 0) lex.fail("d applied to a scalar");
      coeff.add_term(PbwWord{}, lin.c);
    }
    for (auto& [gi, co] : lin.g)
      coeff.add_term(PbwWord{{gi, k.second}}, co);
    p.add(k.first, coeff);
  }
  return p;
}

Scalar to_scalar(const Lexer& lex, const EVal& v) {
  if (v.t.empty()) return Scalar(0);
  if (v.t.size() != 1 || !v.t.count({0, 0}) || !v.t.at({0, 0}).is_scalar())
    lex.fail("expected a scalar expression");
  return v.t.at({0, 0}).c;
}

Scalar parse_scalar(const std::string& text) {
  Lexer lex(text);
  TableParser p(lex, nullptr, nullptr, /*param_fallback=*/true);
  EVal v = p.expr();
  if (lex.peek().kind != Tok::End) lex.fail("trailing input");
  return to_scalar(lex, v);
}

int word_parity_of(const LcaPresentation& pres, const PbwWord& w) {
  int p = 0;
  for (auto& dg : w) p += pres.parity(dg.gen);
  return p % 2;
}

void check_value_parity(const Lexer& lex, const LcaPresentation& pres,
                        const LPoly& value, int expected) {
  for (auto& [m, v] : value.terms())
    for (auto& [w, c] : v.terms())
      if (word_parity_of(pres, w) != expected % 2)
        lex.fail("parity mismatch in the right-hand side");
}

}  // namespace

// ---------------------------------------------------------------------------
// parse_algebra

AlgebraFile parse_algebra(const std::string& text) {
  AlgebraFile f;
  std::set<int> params;
  Lexer lex(text);
  auto declare = [&](const std::string& name, int parity, bool central) {
    // "d" is tolerated as a generator name (the operator reading then
    // requires a following * or ^); the other keywords stay reserved
    if (kReserved.count(name) && name != "d")
      lex.fail("reserved identifier '" + name + "'");
    if (f.pres.find(name) >= 0) lex.fail("duplicate generator '" + name + "'");
    f.pres.add_gen(name, parity, central);
  };
  while (lex.peek().kind != Tok::End) {
    std::string kw = lex.expect_id();
    if (kw == "param") {
      while (lex.peek().kind == Tok::Id) {
        int id = Params::id(lex.next().text);
        if (!params.count(id)) {
          params.insert(id);
          f.params.push_back(id);
        }
      }
      lex.expect(";");
    } else if (kw == "even" || kw == "odd" || kw == "central") {
      int parity = kw == "odd" ? 1 : 0;
      bool central = kw == "central";
      if (!central && lex.peek().kind == Tok::Id &&
          lex.peek().text == "central") {
        lex.next();
        central = true;
      }
      if (lex.peek().kind != Tok::Id) lex.fail("expected a generator name");
      while (lex.peek().kind == Tok::Id)
        declare(lex.next().text, parity, central);
      lex.expect(";");
    } else if (kw == "bracket") {
      int a = f.pres.find(lex.expect_id());
      if (a < 0 || lex.peek().kind != Tok::Id)
        lex.fail("bracket needs two declared generators");
      int b = f.pres.find(lex.next().text);
      if (b < 0) lex.fail("bracket needs two declared generators");
      lex.expect("=");
      TableParser p(lex, &f.pres, &params, false);
      LPoly value = to_lpoly(lex, p.expr());
      check_value_parity(lex, f.pres, value,
                         f.pres.parity(a) + f.pres.parity(b));
      lex.expect(";");
      f.pres.set_bracket(a, b, std::move(value));
    } else if (kw == "derive") {
      std::string dname = lex.expect_id();
      int a = f.pres.find(lex.expect_id());
      if (a < 0) lex.fail("derive needs a declared generator");
      lex.expect("=");
      TableParser p(lex, &f.pres, &params, false);
      LPoly value = to_lpoly(lex, p.expr());
      if (value.degree() > 0) lex.fail("l is not allowed in a derive value");
      check_value_parity(lex, f.pres, value, f.pres.parity(a) + 1);
      lex.expect(";");
      f.pres.derivations[dname].action[a] = value.coeff(0);
    } else if (kw == "set") {
      int a = f.pres.find(lex.expect_id());
      if (a < 0 || !f.pres.central(a))
        lex.fail("set needs a declared central generator");
      lex.expect("=");
      TableParser p(lex, &f.pres, &params, false);
      Scalar v = to_scalar(lex, p.expr());
      lex.expect(";");
      f.pres.specialize(a, std::move(v));
    } else if (kw == "grading") {
      int a = f.pres.find(lex.expect_id());
      if (a < 0) lex.fail("grading needs a declared generator");
      lex.expect("=");
      TableParser p(lex, &f.pres, &params, false);
      f.grading[a] = to_scalar(lex, p.expr());
      lex.expect(";");
    } else if (kw == "susy") {
      int a = f.pres.find(lex.expect_id());
      if (a < 0) lex.fail("susy needs a declared generator");
      lex.expect("=");
      std::string dir = lex.expect_id();
      if (dir != "bar" && dir != "image") lex.fail("expected bar or image");
      f.susy_dirs[a] =
          dir == "bar" ? BarDirection::BarNew : BarDirection::ImageNew;
      lex.expect(";");
    } else {
      lex.fail("unknown statement '" + kw + "'");
    }
  }
  // derivations must cover the central generators (default action 0)
  for (auto& [name, d] : f.pres.derivations)
    for (size_t j = 0; j < f.pres.gens.size(); ++j)
      if (f.pres.gens[j].central && !d.action.count(static_cast<int>(j)))
        d.action[static_cast<int>(j)] = VElement();
  return f;
}

// ---------------------------------------------------------------------------
// render_algebra

namespace {

std::string scalar_src(const Scalar& s) { return "(" + s.str() + ")"; }

std::string term_src(const PbwWord& w, const Scalar& c,
                     const LcaPresentation& pres, int lpow) {
  if (w.size() > 1)
    throw std::invalid_argument(
        "render_algebra: bracket values must be linear in the generators");
  std::string out;
  if (!c.is_one() || (w.empty() && lpow == 0)) out = scalar_src(c);
  if (lpow > 0) {
    if (!out.empty()) out += "*";
    out += lpow == 1 ? "l" : "l^" + std::to_string(lpow);
  }
  if (!w.empty()) {
    if (!out.empty()) out += "*";
    if (w[0].ord == 1)
      out += "d*";
    else if (w[0].ord > 1)
      out += "d^" + std::to_string(w[0].ord) + "*";
    out += pres.gens[static_cast<size_t>(w[0].gen)].name;
  }
  return out;
}

std::string lpoly_src(const LPoly& p, const LcaPresentation& pres) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto& [m, v] : p.terms())
    for (auto& [w, c] : v.terms()) {
      if (!out.empty()) out += " + ";
      out += term_src(w, c, pres, m);
    }
  return out;
}

}  // namespace

std::string render_algebra(const AlgebraFile& f) {
  const LcaPresentation& p = f.pres;
  std::ostringstream out;
  // parameters: declared ones first, then any others appearing in a Scalar
  std::vector<int> params = f.params;
  std::set<int> seen(params.begin(), params.end());
  std::vector<int> vars;
  auto collect = [&](const Scalar& s) {
    s.num().collect_vars(vars);
    s.den().collect_vars(vars);
  };
  auto collect_poly = [&](const LPoly& lp) {
    for (auto& [m, v] : lp.terms())
      for (auto& [w, c] : v.terms()) collect(c);
  };
  for (auto& [k, v] : p.table) collect_poly(v);
  for (auto& [g, v] : p.central_values) collect(v);
  for (auto& [n, d] : p.derivations)
    for (auto& [g, v] : d.action)
      for (auto& [w, c] : v.terms()) collect(c);
  for (auto& [g, v] : f.grading) collect(v);
  std::sort(vars.begin(), vars.end());
  for (int v : vars)
    if (seen.insert(v).second) params.push_back(v);
  if (!params.empty()) {
    out << "param";
    for (int v : params) out << " " << Params::name(v);
    out << ";\n";
  }
  for (auto& g : p.gens) {
    if (g.central)
      out << (g.parity ? "odd central " : "central ") << g.name << ";\n";
    else
      out << (g.parity ? "odd " : "even ") << g.name << ";\n";
  }
  for (auto& [g, v] : f.grading)
    out << "grading " << p.gens[static_cast<size_t>(g)].name << " = "
        << scalar_src(v) << ";\n";
  for (auto& [g, v] : p.central_values)
    out << "set " << p.gens[static_cast<size_t>(g)].name << " = "
        << scalar_src(v) << ";\n";
  for (auto& [k, v] : p.table)
    out << "bracket " << p.gens[static_cast<size_t>(k.first)].name << " "
        << p.gens[static_cast<size_t>(k.second)].name << " = "
        << lpoly_src(v, p) << ";\n";
  for (auto& [name, d] : p.derivations)
    for (auto& [g, v] : d.action)
      out << "derive " << name << " "
          << p.gens[static_cast<size_t>(g)].name << " = "
          << lpoly_src(LPoly::constant(v), p) << ";\n";
  for (auto& [g, dir] : f.susy_dirs)
    out << "susy " << p.gens[static_cast<size_t>(g)].name << " = "
        << (dir == BarDirection::BarNew ? "bar" : "image") << ";\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// element expressions (engine-backed, normally ordered products)

namespace {

class ElementParser {
 public:
  ElementParser(Lexer& lex, const VertexAlgebra& va) : lex_(lex), va_(va) {}

  VElement expr() {
    VElement v = term();
    for (;;) {
      if (lex_.accept("+"))
        v += term();
      else if (lex_.accept("-"))
        v += -term();
      else
        return v;
    }
  }

 private:
  static bool scalar_of(const VElement& v, Scalar& out) {
    if (v.is_zero()) {
      out = Scalar(0);
      return true;
    }
    out = v.coeff(PbwWord{});
    return v.terms().size() == 1 && !out.is_zero();
  }

  VElement term() {
    // collect factors; d^k applies to the factor it precedes; the remaining
    // element factors combine right-nested through the normally ordered
    // product, scalars multiply through
    std::vector<VElement> elems;
    Scalar scale(1);
    int pending_d = 0;
    bool first = true;
    for (;;) {
      if (!first) {
        if (lex_.accept("/")) {
          Scalar s;
          if (!scalar_of(factor(), s) || s.is_zero())
            lex_.fail("division by a non-scalar");
          scale = scale * s.inv();
          continue;
        }
        if (!lex_.accept("*")) break;
      }
      first = false;
      if (lex_.peek().kind == Tok::Id && lex_.peek().text == "d" &&
          (va_.pres().find("d") < 0 ||
           (lex_.peek2().kind == Tok::Punct &&
            (lex_.peek2().text == "*" || lex_.peek2().text == "^")))) {
        lex_.next();
        int k = 1;
        if (lex_.accept("^")) {
          if (lex_.peek().kind != Tok::Num) lex_.fail("expected an exponent");
          k = static_cast<int>(lex_.next().num.get_num().get_si());
        }
        pending_d += k;
        continue;
      }
      VElement v = factor();
      if (pending_d > 0) {
        v = va_.partial_pow(v, pending_d);
        pending_d = 0;
      }
      Scalar s;
      if (scalar_of(v, s))
        scale = scale * s;
      else
        elems.push_back(std::move(v));
    }
    if (pending_d > 0) lex_.fail("dangling d");
    VElement out = VElement::unit();
    for (auto it = elems.rbegin(); it != elems.rend(); ++it)
      out = it == elems.rbegin() ? *it : va_.nop(*it, out);
    return out.scaled(scale);
  }

  VElement factor() {
    if (lex_.accept("-")) return -factor();
    VElement v = atom();
    if (lex_.accept("^")) {
      Scalar s;
      if (lex_.peek().kind != Tok::Num || !scalar_of(v, s))
        lex_.fail("^ is only allowed on scalars");
      long n = lex_.next().num.get_num().get_si();
      Scalar r(1);
      for (long j = 0; j < n; ++j) r = r * s;
      return VElement::word(PbwWord{}, r);
    }
    return v;
  }

  VElement atom() {
    const Tok& t = lex_.peek();
    if (t.kind == Tok::Num)
      return VElement::word(PbwWord{}, Scalar(GRat(lex_.next().num)));
    if (lex_.accept("(")) {
      VElement v = expr();
      lex_.expect(")");
      return v;
    }
    if (t.kind != Tok::Id) lex_.fail("expected an expression");
    std::string id = lex_.next().text;
    if (id == "i") return VElement::word(PbwWord{}, Scalar::i());
    if (id == "sqrt2")
      return VElement::word(PbwWord{}, Scalar(GRat::sqrt_two()));
    if (id == "l" || (id == "d" && va_.pres().find("d") < 0))
      lex_.fail("'" + id + "' not allowed here");
    int gi = va_.pres().find(id);
    if (gi >= 0) return VElement::letter({gi, 0});
    return VElement::word(PbwWord{}, Scalar::param(id));
  }

  Lexer& lex_;
  const VertexAlgebra& va_;
};

}  // namespace

VElement parse_element(const std::string& text, const VertexAlgebra& va) {
  Lexer lex(text);
  ElementParser p(lex, va);
  VElement v = p.expr();
  if (lex.peek().kind != Tok::End) lex.fail("trailing input");
  return v;
}

// ---------------------------------------------------------------------------
// command runner

namespace {

using njson = nlohmann::ordered_json;

struct Doc {
  std::string command;
  std::vector<Report> reports;
  std::vector<std::pair<std::string, std::string>> values;
  std::string payload;
};

int finish(const Doc& doc, bool json, std::ostream& out) {
  bool pass = true;
  for (auto& r : doc.reports) pass = pass && r.pass();
  if (json) {
    njson j;
    j["schema"] = "lcva-report/1";
    j["command"] = doc.command;
    j["pass"] = pass;
    njson reps = njson::array();
    for (auto& r : doc.reports) {
      njson jr;
      jr["name"] = r.name;
      jr["pass"] = r.pass();
      njson items = njson::array();
      for (auto& it : r.items)
        items.push_back({{"what", it.what}, {"ok", it.ok},
                         {"detail", it.detail}});
      jr["items"] = std::move(items);
      reps.push_back(std::move(jr));
    }
    j["reports"] = std::move(reps);
    njson vals = njson::object();
    for (auto& [k, v] : doc.values) vals[k] = v;
    j["values"] = std::move(vals);
    if (!doc.payload.empty()) j["payload"] = doc.payload;
    out << j.dump(2) << "\n";
  } else if (!doc.payload.empty()) {
    // payload-producing commands (extend) stay pipeable in text mode
    out << doc.payload;
  } else {
    out << "command: " << doc.command << "\n";
    for (auto& [k, v] : doc.values) out << k << " = " << v << "\n";
    for (auto& r : doc.reports) out << r.text();
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

struct Flags {
  std::map<std::string, std::vector<std::string>> named;
  std::vector<std::string> pos;
  bool json = false;

  bool has(const std::string& k) const { return named.count(k) > 0; }
  std::string get(const std::string& k, const std::string& dflt = "") const {
    auto it = named.find(k);
    return it == named.end() ? dflt : it->second.back();
  }
  std::string require(const std::string& k) const {
    if (!has(k)) throw std::invalid_argument("missing required flag --" + k);
    return named.at(k).back();
  }
  int get_int(const std::string& k, int dflt) const {
    return has(k) ? std::stoi(named.at(k).back()) : dflt;
  }
};

const std::set<std::string> kBoolFlags = {"json", "axioms"};

Flags parse_flags(const std::vector<std::string>& args, size_t from) {
  Flags f;
  for (size_t j = from; j < args.size(); ++j) {
    const std::string& a = args[j];
    if (a.rfind("--", 0) == 0) {
      std::string key = a.substr(2);
      if (kBoolFlags.count(key)) {
        f.named[key].push_back("1");
        if (key == "json") f.json = true;
        continue;
      }
      if (j + 1 >= args.size())
        throw std::invalid_argument("flag --" + key + " needs a value");
      f.named[key].push_back(args[++j]);
    } else {
      f.pos.push_back(a);
    }
  }
  return f;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

AlgebraFile load_algebra(const Flags& f) {
  std::string spec = f.require("algebra");
  AlgebraFile file;
  std::ifstream in(spec);
  if (in) {
    std::stringstream buf;
    buf << in.rdbuf();
    file = parse_algebra(buf.str());
  } else {
    file.pres = build_named(spec);
  }
  // --set C=value central specializations
  if (f.has("set")) {
    for (auto& spec2 : f.named.at("set")) {
      auto eq = spec2.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--set expects name=value");
      file.pres.specialize(file.pres.require(spec2.substr(0, eq)),
                           parse_scalar(spec2.substr(eq + 1)));
    }
  }
  // --param name=value substitutions
  if (f.has("param")) {
    std::map<int, Scalar> vals;
    for (auto& spec2 : f.named.at("param")) {
      auto eq = spec2.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--param expects name=value");
      vals[Params::id(spec2.substr(0, eq))] =
          parse_scalar(spec2.substr(eq + 1));
    }
    auto sub = [&](VElement& v) {
      VElement r;
      for (auto& [w, c] : v.terms()) r.add_term(w, c.substitute(vals));
      v = std::move(r);
    };
    for (auto& [k, lp] : file.pres.table) {
      LPoly r;
      for (auto& [m, v] : lp.terms()) {
        VElement vv = v;
        sub(vv);
        r.add(m, vv);
      }
      lp = std::move(r);
    }
    for (auto& [g, v] : file.pres.central_values) v = v.substitute(vals);
    for (auto& [n, d] : file.pres.derivations)
      for (auto& [g, v] : d.action) sub(v);
  }
  return file;
}

std::vector<std::string> detect_derivations(const LcaPresentation& p,
                                            const Flags& f) {
  if (f.has("derivations")) return split(f.get("derivations"), ',');
  if (p.derivations.count("D")) return {"D"};
  std::vector<std::string> r;
  for (std::string nm : {"D1", "D2", "D3"})
    if (p.derivations.count(nm)) r.push_back(nm);
  if (r.empty())
    throw std::invalid_argument("the algebra declares no derivations");
  return r;
}

/// Generators whose D-image has no derivatives: the barred generators of the
/// SUSY pairing, used as the default check-sef sample.
std::vector<VElement> detect_barred(const LcaPresentation& p,
                                    const DerivationSpec& d) {
  std::vector<VElement> out;
  for (size_t j = 0; j < p.gens.size(); ++j) {
    if (p.gens[j].central) continue;
    auto it = d.action.find(static_cast<int>(j));
    if (it == d.action.end() || it->second.is_zero()) continue;
    bool flat = true;
    for (auto& [w, c] : it->second.terms())
      for (auto& dg : w)
        if (dg.ord > 0) flat = false;
    if (flat) out.push_back(VElement::letter({static_cast<int>(j), 0}));
  }
  return out;
}

std::vector<Scalar> scalar_list(const std::string& csv) {
  std::vector<Scalar> out;
  for (auto& s : split(csv, ',')) out.push_back(parse_scalar(s));
  return out;
}

void add_cert(Doc& doc, const VertexAlgebra& va, const SconfCertificate& c) {
  doc.values.emplace_back("charge", c.charge.str());
  doc.values.emplace_back("L", va.render(c.L));
  if (!c.J.is_zero()) doc.values.emplace_back("J", va.render(c.J));
  doc.reports.push_back(c.report);
}

int run(const std::vector<std::string>& args, std::ostream& out) {
  if (args.empty()) {
    out << "usage: <command> [flags]\n"
        << "commands: check-lca check-va bracket lbracket check-sef "
           "check-susy extend\n"
        << "          check-sconf shift-sconf kac-todorov tau-charged brst "
           "weights ortho-act\n";
    return 2;
  }
  const std::string& cmd = args[0];
  Flags f = parse_flags(args, 1);
  Doc doc;
  doc.command = cmd;
  for (size_t j = 1; j < args.size(); ++j) doc.command += " " + args[j];

  unsigned seed = static_cast<unsigned>(f.get_int("seed", 7));
  int rounds = f.get_int("rounds", 8);
  int max_len = f.get_int("max-len", 2);
  int max_der = f.get_int("max-der", 1);

  if (cmd == "check-lca") {
    VertexAlgebra va(load_algebra(f).pres);
    doc.reports.push_back(va.check_lca_axioms());
  } else if (cmd == "check-va") {
    VertexAlgebra va(load_algebra(f).pres);
    doc.reports.push_back(
        va.check_engine_identities(seed, f.get_int("rounds", 40), max_len,
                                   max_der));
  } else if (cmd == "bracket") {
    if (f.pos.size() != 2)
      throw std::invalid_argument("bracket needs two element expressions");
    VertexAlgebra va(load_algebra(f).pres);
    VElement x = parse_element(f.pos[0], va), y = parse_element(f.pos[1], va);
    doc.values.emplace_back("bracket", va.render(va.bracket(x, y)));
  } else if (cmd == "lbracket") {
    if (f.pos.size() != 2)
      throw std::invalid_argument("lbracket needs two element expressions");
    AlgebraFile file = load_algebra(f);
    auto va = std::make_shared<VertexAlgebra>(file.pres);
    SusyStructure s = make_susy(va, detect_derivations(file.pres, f));
    VElement x = parse_element(f.pos[0], *va), y = parse_element(f.pos[1], *va);
    doc.values.emplace_back("lbracket", render(*va, Lambda_bracket(s, x, y)));
  } else if (cmd == "check-sef") {
    AlgebraFile file = load_algebra(f);
    if (!file.pres.derivations.empty()) {
      VertexAlgebra va(file.pres);
      std::string dname = detect_derivations(file.pres, f).front();
      const DerivationSpec& d = file.pres.derivations.at(dname);
      doc.reports.push_back(check_sef(va, d, detect_barred(file.pres, d)));
    } else if (!file.susy_dirs.empty()) {
      std::vector<BarDirection> dirs(file.pres.gens.size(),
                                     BarDirection::BarNew);
      for (auto& [g, dir] : file.susy_dirs) dirs[static_cast<size_t>(g)] = dir;
      Report rep = sef1_solvable(file.pres, dirs);
      if (!rep.pass())
        rep.add("summary", false,
                "inconsistent: no bracket assignment satisfies SEF1 for the "
                "declared directions");
      doc.reports.push_back(std::move(rep));
    } else {
      throw std::invalid_argument(
          "check-sef needs a derivation or susy direction statements");
    }
  } else if (cmd == "check-susy") {
    AlgebraFile file = load_algebra(f);
    auto va = std::make_shared<VertexAlgebra>(file.pres);
    SusyStructure s = make_susy(va, detect_derivations(file.pres, f));
    doc.reports.push_back(
        check_susy_structure(s, seed, rounds, max_len, max_der));
    if (f.has("axioms"))
      doc.reports.push_back(check_susy_lca_axioms(s, seed, f.get_int("rounds", 2),
                                                  max_len, max_der));
  } else if (cmd == "extend") {
    AlgebraFile file = load_algebra(f);
    int n = f.get_int("n", 1);
    AlgebraFile outf;
    if (n == 1)
      outf.pres = extend_N1(file.pres).pres;
    else if (n == 2)
      outf.pres = extend_N2(file.pres).pres;
    else if (n == 3)
      outf.pres = extend_N3(file.pres).pres;
    else
      throw std::invalid_argument("extend supports --n 1, 2 or 3");
    doc.payload = render_algebra(outf);
  } else if (cmd == "render") {
    doc.payload = render_algebra(load_algebra(f));
  } else if (cmd == "check-sconf") {
    AlgebraFile file = load_algebra(f);
    auto va = std::make_shared<VertexAlgebra>(file.pres);
    std::string mode = f.get("mode", "n1");
    SconfCandidate cand;
    cand.va = va;
    if (mode == "n1") {
      cand.mode = SconfMode::N1;
      cand.G = parse_element(f.require("g"), *va);
    } else if (mode == "n2" || mode == "n3") {
      cand.mode = mode == "n2" ? SconfMode::N2 : SconfMode::N3;
      cand.Gp = parse_element(f.require("gp"), *va);
      cand.Gm = parse_element(f.require("gm"), *va);
      if (mode == "n3") {
        cand.G0 = parse_element(f.require("g0"), *va);
        cand.Phi = parse_element(f.require("phi"), *va);
      }
    } else {
      throw std::invalid_argument("--mode must be n1, n2 or n3");
    }
    add_cert(doc, *va, verify_superconformal(cand));
  } else if (cmd == "shift-sconf") {
    AlgebraFile file = load_algebra(f);
    auto va = std::make_shared<VertexAlgebra>(file.pres);
    ShiftResult r = shift_superconformal(va, parse_element(f.require("g"), *va),
                                         parse_element(f.require("v"), *va));
    doc.values.emplace_back("G", va->render(r.G));
    doc.values.emplace_back("c1", r.c1.str());
    doc.values.emplace_back("c2", r.c2.str());
    add_cert(doc, *va, r.cert);
  } else if (cmd == "kac-todorov") {
    Scalar k = parse_scalar(f.get("level", "k"));
    KacTodorov kt = kac_todorov(lie_builtin(f.require("lie")), k);
    doc.values.emplace_back("tau", kt.va->render(kt.tau));
    add_cert(doc, *kt.va, kt.cert);
  } else if (cmd == "tau-charged") {
    std::vector<int> parities;
    for (auto& s : split(f.require("parities"), ','))
      parities.push_back(std::stoi(s));
    std::vector<Scalar> m(parities.size());
    if (f.has("m")) m = scalar_list(f.get("m"));
    ChargedFermions fer = build_charged_fermions(parities);
    TauCharged t = tau_charged(fer, m);
    doc.values.emplace_back("tau", fer.va->render(t.tau));
    add_cert(doc, *fer.va, t.cert);
  } else if (cmd == "brst") {
    LieSuperalgebraData g = lie_builtin(f.require("lie"));
    std::vector<Scalar> grading =
        f.has("grading") ? scalar_list(f.get("grading")) : g.grading;
    std::vector<Scalar> h = scalar_list(f.require("h"));
    Scalar k = parse_scalar(f.get("level", "k"));
    size_t npos = 0;
    for (auto& w : grading) {
      if (!w.num().is_constant() || !w.den().is_constant())
        throw std::invalid_argument("grading entries must be rational");
      GRat q = w.num().constant_value() / w.den().constant_value();
      if (!q.is_rational())
        throw std::invalid_argument("grading entries must be rational");
      if (q.re() > 0) ++npos;
    }
    std::vector<Scalar> m(npos);
    if (f.has("m")) m = scalar_list(f.get("m"));
    BrstResult r = brst_tau(g, grading, k, h, m);
    doc.values.emplace_back("tau", r.va->render(r.tau));
    add_cert(doc, *r.va, r.cert);
    doc.reports.push_back(r.corollary);
  } else if (cmd == "weights") {
    AlgebraFile file = load_algebra(f);
    VertexAlgebra va(file.pres);
    VElement L = parse_element(f.require("l"), va);
    Report rep;
    rep.name = "weights";
    for (auto& pos : f.pos) {
      try {
        WeightInfo w = conformal_weight(va, L, parse_element(pos, va));
        rep.add(pos, true, "Delta = " + w.delta.str() +
                               (w.primary ? ", primary" : ""));
      } catch (const std::invalid_argument& e) {
        rep.add(pos, false, e.what());
      }
    }
    doc.reports.push_back(std::move(rep));
  } else if (cmd == "ortho-act") {
    AlgebraFile file = load_algebra(f);
    auto va = std::make_shared<VertexAlgebra>(file.pres);
    SusyStructure s = make_susy(va, detect_derivations(file.pres, f));
    std::vector<std::vector<Scalar>> a;
    for (auto& row : split(f.require("matrix"), ';')) a.push_back(scalar_list(row));
    SusyStructure r = orthogonal_act(a, s);
    for (size_t i = 0; i < r.d.size(); ++i)
      for (auto& [gj, v] : r.d[i].action)
        doc.values.emplace_back(
            "D" + std::to_string(i + 1) + "(" +
                file.pres.gens[static_cast<size_t>(gj)].name + ")",
            va->render(v));
    doc.reports.push_back(
        check_susy_structure(r, seed, rounds, max_len, max_der));
  } else {
    out << "error: unknown command '" << cmd << "'\n";
    return 2;
  }
  return finish(doc, f.json, out);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out) {
  try {
    return run(args, out);
  } catch (const ParseError& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lcva
