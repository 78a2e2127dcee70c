#include "lcva/scalar.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace lcva {

// ---------------------------------------------------------------------------
// GRat

namespace {

// Renders a + b*i in Q(i); unit = "i" or "i*sqrt2" for the sqrt2 part.
std::string qi_str(const mpq_class& re, const mpq_class& im,
                   const std::string& unit) {
  auto q = [](const mpq_class& x) { return x.get_str(); };
  if (im == 0) return q(re);
  std::string ims;
  if (im == 1)
    ims = unit;
  else if (im == -1)
    ims = "-" + unit;
  else
    ims = q(im) + "*" + unit;
  if (re == 0) return ims;
  if (im < 0) {
    std::string tail = (im == -1) ? unit : q(mpq_class(-im)) + "*" + unit;
    return q(re) + " - " + tail;
  }
  return q(re) + " + " + ims;
}

}  // namespace

std::string GRat::str() const {
  if (s2re() == 0 && s2im() == 0) return qi_str(re(), im(), "i");
  std::string head;
  if (re() != 0 || im() != 0) head = qi_str(re(), im(), "i");
  std::string tail;
  if (im() == 0 && s2im() == 0) {
    // rational sqrt2 multiples read better as c*sqrt2
    if (s2re() == 1)
      tail = "sqrt2";
    else if (s2re() == -1)
      tail = "-sqrt2";
    else
      tail = s2re().get_str() + "*sqrt2";
  } else if (s2re() == 0) {
    tail = qi_str(s2re(), s2im(), "i*sqrt2");
  } else {
    tail = "(" + qi_str(s2re(), s2im(), "i") + ")*sqrt2";
  }
  if (head.empty()) return tail;
  if (tail[0] == '-') return head + " - " + tail.substr(1);
  return head + " + " + tail;
}

// ---------------------------------------------------------------------------
// Params

namespace {
struct ParamTable {
  std::mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> ids;
};
ParamTable& table() {
  static ParamTable t;
  return t;
}
}  // namespace

int Params::id(const std::string& name) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.ids.find(name);
  if (it != t.ids.end()) return it->second;
  int id = static_cast<int>(t.names.size());
  t.names.push_back(name);
  t.ids.emplace(name, id);
  return id;
}

const std::string& Params::name(int id) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.names.at(static_cast<size_t>(id));
}

int Params::lookup(const std::string& name) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.ids.find(name);
  return it == t.ids.end() ? -1 : it->second;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  size_t a = 0, b = 0;
  while (a < e.size() || b < o.e.size()) {
    if (b == o.e.size() || (a < e.size() && e[a].first < o.e[b].first))
      r.e.push_back(e[a++]);
    else if (a == e.size() || o.e[b].first < e[a].first)
      r.e.push_back(o.e[b++]);
    else {
      r.e.emplace_back(e[a].first, e[a].second + o.e[b].second);
      ++a, ++b;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (auto& [v, p] : e)
    if (o.degree_in(v) < p) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  size_t b = 0;
  for (auto& [v, p] : e) {
    while (b < o.e.size() && o.e[b].first < v)
      throw std::domain_error("Monomial: not divisible");
    int q = p;
    if (b < o.e.size() && o.e[b].first == v) {
      q -= o.e[b].second;
      ++b;
    }
    if (q < 0) throw std::domain_error("Monomial: not divisible");
    if (q > 0) r.e.emplace_back(v, q);
  }
  if (b != o.e.size()) throw std::domain_error("Monomial: not divisible");
  return r;
}

bool Monomial::grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // lex with smaller variable id = more significant
  size_t i = 0, j = 0;
  while (i < a.e.size() && j < b.e.size()) {
    if (a.e[i].first != b.e[j].first)
      // the one owning the earlier variable is lex-larger
      return a.e[i].first > b.e[j].first;
    if (a.e[i].second != b.e[j].second) return a.e[i].second < b.e[j].second;
    ++i, ++j;
  }
  return i == a.e.size() && j != b.e.size();
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::var(int param_id, int exp) {
  Poly p;
  Monomial m;
  if (exp > 0) m.e.emplace_back(param_id, exp);
  p.set_term(std::move(m), GRat(1));
  return p;
}

int Poly::total_degree() const {
  return t_.empty() ? -1 : t_.begin()->first.total_degree();
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (auto& [m, c] : t_) d = std::max(d, m.degree_in(var));
  return d;
}

int Poly::min_var() const {
  int v = -1;
  for (auto& [m, c] : t_)
    for (auto& [var, p] : m.e)
      if (v < 0 || var < v) v = var;
  return v;
}

void Poly::collect_vars(std::vector<int>& vars) const {
  for (auto& [m, c] : t_)
    for (auto& [var, p] : m.e)
      if (std::find(vars.begin(), vars.end(), var) == vars.end())
        vars.push_back(var);
}

void Poly::add_term(const Monomial& m, const GRat& c) {
  if (c.is_zero()) return;
  auto it = t_.lower_bound(m);
  if (it == t_.end() || !(it->first == m)) {
    t_.emplace_hint(it, m, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) t_.erase(it);
}

Poly Poly::operator-() const {
  Poly r;
  for (auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (o.is_constant()) return mul_grat(o.constant_value());
  if (is_constant()) return o.mul_grat(constant_value());
  Poly r;
  for (auto& [m1, c1] : t_)
    for (auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::mul_grat(const GRat& c) const {
  if (c.is_one()) return *this;
  Poly r;
  if (c.is_zero()) return r;
  for (auto& [m, k] : t_) r.t_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(int n) const {
  Poly r(1);
  for (int j = 0; j < n; ++j) r = r * *this;
  return r;
}

Poly Poly::div_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("Poly: division by zero");
  Poly q, r = *this;
  while (!r.is_zero()) {
    const Monomial& lm = r.lead_monomial();
    if (!d.lead_monomial().divides(lm))
      throw std::domain_error("Poly: inexact division");
    Monomial qm = lm / d.lead_monomial();
    GRat qc = r.lead_coeff() / d.lead_coeff();
    Poly t;
    t.set_term(qm, qc);
    q = q + t;
    r = r - t * d;
  }
  return q;
}

Poly Poly::coeff_in(int var, int j) const {
  Poly r;
  for (auto& [m, c] : t_) {
    if (m.degree_in(var) != j) continue;
    Monomial s;
    for (auto& [v, p] : m.e)
      if (v != var) s.e.emplace_back(v, p);
    r.add_term(s, c);
  }
  return r;
}

namespace {

std::string term_str(const GRat& c, const Monomial& m) {
  std::string ms;
  for (auto& [v, p] : m.e) {
    if (!ms.empty()) ms += "*";
    ms += Params::name(v);
    if (p > 1) ms += "^" + std::to_string(p);
  }
  int parts =
      (c.re() != 0) + (c.im() != 0) + (c.s2re() != 0) + (c.s2im() != 0);
  bool composite = parts > 1;
  std::string cs = composite ? "(" + c.str() + ")" : c.str();
  if (ms.empty()) return cs;
  if (c.is_one()) return ms;
  if (!composite && c == GRat(-1)) return "-" + ms;
  return cs + "*" + ms;
}

}  // namespace

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto& [m, c] : t_) {
    std::string ts = term_str(c, m);
    if (out.empty())
      out = ts;
    else if (ts.size() && ts[0] == '-')
      out += " - " + ts.substr(1);
    else
      out += " + " + ts;
  }
  return out;
}

// ---------------------------------------------------------------------------
// gcd (content + primitive PRS, recursive in the least variable)

namespace {

using Dense = std::vector<Poly>;  // index = degree in the main variable

Dense to_dense(const Poly& p, int var) {
  Dense d(static_cast<size_t>(p.degree_in(var)) + 1);
  for (size_t j = 0; j < d.size(); ++j)
    d[j] = p.coeff_in(var, static_cast<int>(j));
  while (d.size() > 1 && d.back().is_zero()) d.pop_back();
  return d;
}

Poly from_dense(const Dense& d, int var) {
  Poly r;
  for (size_t j = 0; j < d.size(); ++j)
    r = r + d[j] * Poly::var(var, static_cast<int>(j));
  return r;
}

bool dense_zero(const Dense& d) {
  for (auto& c : d)
    if (!c.is_zero()) return false;
  return true;
}

void dense_trim(Dense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

Poly dense_content(const Dense& d) {
  Poly g;
  for (auto& c : d) {
    g = poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero()) return Poly(1);
  }
  return g.is_zero() ? Poly(1) : g;
}

Dense dense_divide(const Dense& d, const Poly& c) {
  Dense r(d.size());
  for (size_t j = 0; j < d.size(); ++j)
    r[j] = d[j].is_zero() ? Poly() : d[j].div_exact(c);
  return r;
}

/// Pseudo-remainder of a by b in the main variable.
Dense dense_prem(Dense a, const Dense& b) {
  dense_trim(a);
  const Poly& lcb = b.back();
  size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    Poly lca = a.back();
    size_t sh = a.size() - 1 - db;
    for (auto& c : a) c = c * lcb;
    for (size_t j = 0; j < b.size(); ++j)
      a[j + sh] = a[j + sh] - lca * b[j];
    dense_trim(a);
  }
  return a;
}

Poly make_monic(Poly p) {
  if (p.is_zero()) return p;
  GRat lc = p.lead_coeff();
  if (lc.is_one()) return p;
  return p.mul_grat(lc.inv());
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  int va = a.min_var(), vb = b.min_var();
  int x = std::min(va, vb);
  if (a.degree_in(x) == 0) return poly_gcd(a, dense_content(to_dense(b, x)));
  if (b.degree_in(x) == 0) return poly_gcd(dense_content(to_dense(a, x)), b);

  Dense A = to_dense(a, x), B = to_dense(b, x);
  Poly ca = dense_content(A), cb = dense_content(B);
  Poly cg = poly_gcd(ca, cb);
  A = dense_divide(A, ca);
  B = dense_divide(B, cb);
  if (A.size() < B.size()) std::swap(A, B);
  while (!dense_zero(B)) {
    Dense R = dense_prem(A, B);
    A = std::move(B);
    if (dense_zero(R)) {
      B.clear();
    } else {
      Poly cr = dense_content(R);
      B = dense_divide(R, cr);
    }
  }
  Poly g = from_dense(A, x);
  Poly cont = dense_content(to_dense(g, x));
  if (!cont.is_constant()) g = g.div_exact(cont);
  return make_monic(cg * g);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(long n, long d) : num_(n), den_(d) { normalize(); }

Scalar::Scalar(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.div_exact(g);
      den_ = den_.div_exact(g);
    }
  }
  GRat lc = den_.lead_coeff();
  if (!lc.is_one()) {
    GRat inv = lc.inv();
    num_ = num_.mul_grat(inv);
    den_ = den_.mul_grat(inv);
  }
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  // a canonical constant denominator is exactly 1
  if (den_.is_constant() && o.den_.is_constant()) {
    Scalar r;
    r.num_ = num_ + o.num_;
    return r;
  }
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (den_.is_constant() && o.den_.is_constant()) {
    Scalar r;
    r.num_ = num_ - o.num_;
    return r;
  }
  return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_one()) return o;
  if (o.is_one()) return *this;
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::inv() const {
  if (num_.is_zero()) throw std::domain_error("Scalar: division by zero");
  return Scalar(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

namespace {

int grat_cmp(const GRat& a, const GRat& b) {
  if (a == b) return 0;
  return a < b ? -1 : 1;
}

int poly_cmp(const Poly& a, const Poly& b) {
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  for (; i != a.terms().end() && j != b.terms().end(); ++i, ++j) {
    if (!(i->first == j->first))
      return Monomial::grlex_less(i->first, j->first) ? -1 : 1;
    if (int c = grat_cmp(i->second, j->second)) return c;
  }
  if (i != a.terms().end()) return 1;
  if (j != b.terms().end()) return -1;
  return 0;
}

}  // namespace

bool Scalar::operator<(const Scalar& o) const {
  if (int c = poly_cmp(num_, o.num_)) return c < 0;
  return poly_cmp(den_, o.den_) < 0;
}

Scalar Scalar::substitute(const std::map<int, Scalar>& vals) const {
  auto eval = [&](const Poly& p) {
    Scalar acc(0);
    for (auto& [m, c] : p.terms()) {
      Scalar t{GRat(c)};
      for (auto& [v, e] : m.e) {
        auto it = vals.find(v);
        Scalar base = (it == vals.end()) ? Scalar(Poly::var(v)) : it->second;
        for (int j = 0; j < e; ++j) t = t * base;
      }
      acc = acc + t;
    }
    return acc;
  };
  return eval(num_) / eval(den_);
}

std::string Scalar::str() const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
  auto paren = [](const Poly& p) {
    std::string s = p.str();
    if (p.terms().size() > 1 || s.find('*') != std::string::npos ||
        s.find('/') != std::string::npos)
      return "(" + s + ")";
    return s;
  };
  return paren(num_) + "/" + paren(den_);
}

}  // namespace lcva
