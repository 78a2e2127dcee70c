#ifndef LCVA_LPOLY_HPP
#define LCVA_LPOLY_HPP

#include <functional>
#include <map>
#include <utility>

#include "lcva/velement.hpp"

namespace lcva {

/// Polynomial in lambda with VElement coefficients; [x_l y] = sum l^m c_m
/// (plain coefficients, i.e. c_m = x_(m)y / m!).
class LPoly {
 public:
  using Terms = std::map<int, VElement>;

  LPoly() = default;
  static LPoly constant(VElement v) {
    LPoly p;
    p.add(0, std::move(v));
    return p;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const { return t_.empty() ? -1 : t_.rbegin()->first; }
  VElement coeff(int m) const {
    auto it = t_.find(m);
    return it == t_.end() ? VElement() : it->second;
  }

  void add(int m, const VElement& v) {
    if (v.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) t_.erase(it);
  }

  LPoly& operator+=(const LPoly& o) {
    for (auto& [m, v] : o.t_) add(m, v);
    return *this;
  }
  LPoly operator+(const LPoly& o) const {
    LPoly r = *this;
    r += o;
    return r;
  }
  LPoly operator-(const LPoly& o) const {
    LPoly r = *this;
    for (auto& [m, v] : o.t_) r.add(m, -v);
    return r;
  }
  LPoly scaled(const Scalar& c) const {
    LPoly r;
    for (auto& [m, v] : t_) r.add(m, v.scaled(c));
    return r;
  }
  LPoly shifted(int k) const {  // multiply by lambda^k
    LPoly r;
    for (auto& [m, v] : t_) r.add(m + k, v);
    return r;
  }
  LPoly mapped(const std::function<VElement(const VElement&)>& f) const {
    LPoly r;
    for (auto& [m, v] : t_) r.add(m, f(v));
    return r;
  }
  bool operator==(const LPoly& o) const { return t_ == o.t_; }
  bool operator!=(const LPoly& o) const { return !(*this == o); }

  /// int_0^lambda: gamma^m -> lambda^{m+1}/(m+1).
  LPoly integrated_0_lambda() const {
    LPoly r;
    for (auto& [m, v] : t_) r.add(m + 1, v.scaled(Scalar(1, m + 1)));
    return r;
  }

 private:
  Terms t_;
};

/// Polynomial in (lambda, gamma) with VElement coefficients, for Jacobi.
class LPoly2 {
 public:
  using Key = std::pair<int, int>;  // (deg lambda, deg gamma)
  using Terms = std::map<Key, VElement>;

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(int m, int n, const VElement& v) {
    if (v.is_zero()) return;
    Key k{m, n};
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(k, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) t_.erase(it);
  }
  LPoly2& operator+=(const LPoly2& o) {
    for (auto& [k, v] : o.t_) add(k.first, k.second, v);
    return *this;
  }
  LPoly2 operator-(const LPoly2& o) const {
    LPoly2 r = *this;
    for (auto& [k, v] : o.t_) r.add(k.first, k.second, -v);
    return r;
  }
  bool operator==(const LPoly2& o) const { return t_ == o.t_; }

 private:
  Terms t_;
};

}  // namespace lcva

#endif  // LCVA_LPOLY_HPP
