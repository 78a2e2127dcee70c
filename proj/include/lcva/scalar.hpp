#ifndef LCVA_SCALAR_HPP
#define LCVA_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lcva {

/// Element (re + im*i) + (s2re + s2im*i)*sqrt2 of Q(i, sqrt2) with exact
/// components; the coefficient field of every polynomial in the engine.
/// i and sqrt2 are kept here (not as polynomial variables) so the
/// coefficient ring stays a field.
///
/// Almost every coefficient in practice lies in Q, so the i/sqrt2
/// components live behind a pointer that is null exactly when they all
/// vanish; a rational copy then costs one mpq copy instead of four.
class GRat {
 public:
  GRat() = default;
  GRat(long n) : re_(n) {}
  GRat(mpq_class r) : re_(std::move(r)) {}
  GRat(mpq_class r, mpq_class i) : re_(std::move(r)) {
    set_ext(std::move(i), mpq_class(0), mpq_class(0));
  }
  GRat(mpq_class r, mpq_class i, mpq_class a, mpq_class b)
      : re_(std::move(r)) {
    set_ext(std::move(i), std::move(a), std::move(b));
  }
  GRat(const GRat& o)
      : re_(o.re_), ext_(o.ext_ ? new Ext(*o.ext_) : nullptr) {}
  GRat(GRat&&) = default;
  GRat& operator=(const GRat& o) {
    re_ = o.re_;
    ext_.reset(o.ext_ ? new Ext(*o.ext_) : nullptr);
    return *this;
  }
  GRat& operator=(GRat&&) = default;

  static GRat sqrt_minus_one() { return GRat(mpq_class(0), mpq_class(1)); }
  static GRat sqrt_two() {
    return GRat(mpq_class(0), mpq_class(0), mpq_class(1), mpq_class(0));
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return ext_ ? ext_->im : zero(); }
  const mpq_class& s2re() const { return ext_ ? ext_->s2re : zero(); }
  const mpq_class& s2im() const { return ext_ ? ext_->s2im : zero(); }

  bool is_rational() const { return !ext_; }
  bool is_zero() const { return !ext_ && re_ == 0; }
  bool is_one() const { return !ext_ && re_ == 1; }
  bool is_real() const { return !ext_ || (ext_->im == 0 && ext_->s2im == 0); }

  GRat operator-() const {
    if (!ext_) return GRat(-re_);
    return GRat(-re_, -ext_->im, -ext_->s2re, -ext_->s2im);
  }
  GRat operator+(const GRat& o) const {
    if (!ext_ && !o.ext_) return GRat(re_ + o.re_);
    return GRat(re_ + o.re_, im() + o.im(), s2re() + o.s2re(),
                s2im() + o.s2im());
  }
  GRat operator-(const GRat& o) const {
    if (!ext_ && !o.ext_) return GRat(re_ - o.re_);
    return GRat(re_ - o.re_, im() - o.im(), s2re() - o.s2re(),
                s2im() - o.s2im());
  }
  GRat operator*(const GRat& o) const {
    if (!o.ext_) {
      if (!ext_) return GRat(re_ * o.re_);
      return GRat(re_ * o.re_, ext_->im * o.re_, ext_->s2re * o.re_,
                  ext_->s2im * o.re_);
    }
    if (!ext_)
      return GRat(re_ * o.re_, re_ * o.im(), re_ * o.s2re(), re_ * o.s2im());
    // (u1 + v1 sqrt2)(u2 + v2 sqrt2) = (u1 u2 + 2 v1 v2) + (u1 v2 + v1 u2) sqrt2
    return GRat(
        re_ * o.re() - im() * o.im() + 2 * (s2re() * o.s2re() - s2im() * o.s2im()),
        re_ * o.im() + im() * o.re() + 2 * (s2re() * o.s2im() + s2im() * o.s2re()),
        re_ * o.s2re() - im() * o.s2im() + s2re() * o.re() - s2im() * o.im(),
        re_ * o.s2im() + im() * o.s2re() + s2re() * o.im() + s2im() * o.re());
  }
  GRat inv() const {
    if (!ext_) {
      if (re_ == 0) throw std::domain_error("GRat: division by zero");
      return GRat(1 / re_);
    }
    // (u + v sqrt2)(u - v sqrt2) = u^2 - 2 v^2 in Q(i), nonzero for nonzero
    // input since sqrt2 is not in Q(i)
    mpq_class wre =
        re_ * re_ - im() * im() - 2 * (s2re() * s2re() - s2im() * s2im());
    mpq_class wim = 2 * re_ * im() - 4 * s2re() * s2im();
    mpq_class n = wre * wre + wim * wim;
    if (n == 0) throw std::domain_error("GRat: division by zero");
    return GRat(re_, im(), -s2re(), -s2im()) * GRat(wre / n, -wim / n);
  }
  GRat operator/(const GRat& o) const { return *this * o.inv(); }
  bool operator==(const GRat& o) const {
    if (!ext_ && !o.ext_) return re_ == o.re_;
    return re_ == o.re_ && im() == o.im() && s2re() == o.s2re() &&
           s2im() == o.s2im();
  }
  bool operator!=(const GRat& o) const { return !(*this == o); }
  bool operator<(const GRat& o) const {
    if (re_ != o.re_) return re_ < o.re_;
    if (!ext_ && !o.ext_) return false;
    if (im() != o.im()) return im() < o.im();
    if (s2re() != o.s2re()) return s2re() < o.s2re();
    return s2im() < o.s2im();
  }

  std::string str() const;

 private:
  struct Ext {
    mpq_class im, s2re, s2im;
  };
  static const mpq_class& zero() {
    static const mpq_class z;
    return z;
  }
  void set_ext(mpq_class i, mpq_class a, mpq_class b) {
    if (i == 0 && a == 0 && b == 0) return;
    ext_.reset(new Ext{std::move(i), std::move(a), std::move(b)});
  }

  mpq_class re_{0};
  std::unique_ptr<Ext> ext_;
};

/// Process-global interning of parameter names (k, c, m1, Delta, ...).
class Params {
 public:
  static int id(const std::string& name);
  static const std::string& name(int id);
  /// Returns -1 when the name has never been interned.
  static int lookup(const std::string& name);
};

/// Sparse exponent vector, sorted by variable id; empty = the unit monomial.
struct Monomial {
  std::vector<std::pair<int, int>> e;  // (param id, exponent>0)

  int total_degree() const {
    int d = 0;
    for (auto& [v, p] : e) d += p;
    return d;
  }
  int degree_in(int var) const {
    for (auto& [v, p] : e)
      if (v == var) return p;
    return 0;
  }
  bool is_unit() const { return e.empty(); }
  Monomial operator*(const Monomial& o) const;
  /// Exact division; throws if not divisible.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return e == o.e; }

  /// Graded-lexicographic order, larger first when used as map key below.
  static bool grlex_less(const Monomial& a, const Monomial& b);
};

struct MonomialGrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::grlex_less(b, a);
  }
};

/// Multivariate polynomial over GRat; begin() is the graded-lex leading term.
class Poly {
 public:
  using Terms = std::map<Monomial, GRat, MonomialGrlexDesc>;

  Poly() = default;
  Poly(long n) { set_term(Monomial{}, GRat(n)); }
  Poly(GRat c) { set_term(Monomial{}, std::move(c)); }
  static Poly var(int param_id, int exp = 1);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_unit());
  }
  GRat constant_value() const {
    return t_.empty() ? GRat() : t_.begin()->second;
  }
  const Monomial& lead_monomial() const { return t_.begin()->first; }
  const GRat& lead_coeff() const { return t_.begin()->second; }
  int total_degree() const;
  int degree_in(int var) const;
  /// Smallest variable id appearing, or -1 for constants.
  int min_var() const;
  void collect_vars(std::vector<int>& vars) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly mul_grat(const GRat& c) const;
  Poly pow(int n) const;
  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Exact division; throws std::domain_error when not divisible.
  Poly div_exact(const Poly& d) const;

  /// Coefficient of x^j where x = var, as a polynomial in the other variables.
  Poly coeff_in(int var, int j) const;

  void set_term(Monomial m, GRat c) {
    if (c.is_zero()) return;
    t_.emplace(std::move(m), std::move(c));
  }
  void add_term(const Monomial& m, const GRat& c);

  std::string str() const;

 private:
  Terms t_;
};

/// gcd in Q(i)[params]; result is primitive with leading coefficient 1.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Exact rational function; canonical form: gcd removed, denominator with
/// graded-lex leading coefficient 1.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long n) : num_(n), den_(1) {}
  Scalar(long n, long d);
  Scalar(GRat c) : num_(std::move(c)), den_(1) {}
  Scalar(Poly p) : num_(std::move(p)), den_(1) {}
  Scalar(Poly n, Poly d);

  static Scalar param(const std::string& name) {
    return Scalar(Poly::var(Params::id(name)));
  }
  static Scalar i() { return Scalar(GRat::sqrt_minus_one()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const {
    return num_.is_constant() && den_.is_constant() &&
           num_.constant_value() == den_.constant_value() && !num_.is_zero();
  }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inv() const;
  bool operator==(const Scalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Arbitrary but total; lets Scalar key ordered containers.
  bool operator<(const Scalar& o) const;

  /// Substitute parameter values (used by --param); missing ids untouched.
  Scalar substitute(const std::map<int, Scalar>& vals) const;

  /// Canonical fraction string, e.g. "(3*k^2 - 4)/(2*k)".
  std::string str() const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace lcva

#endif  // LCVA_SCALAR_HPP
