#ifndef LCVA_SUPERPOLY_HPP
#define LCVA_SUPERPOLY_HPP

#include <compare>
#include <functional>
#include <map>

#include "lcva/lpoly.hpp"

namespace lcva {

/// Monomial key in C[Lambda, Gamma]: lambda^lam gamma^gam times an odd
/// monomial in chi^1..chi^3, eta^1..eta^3 (bit i of the mask = variable i+1).
/// Odd variables are always stored in the canonical order
/// chi^1 < chi^2 < chi^3 < eta^1 < eta^2 < eta^3 with the coefficient on the
/// right; the algebra operations below produce the reordering signs.
struct SKey {
  int lam = 0;
  int gam = 0;
  unsigned chi = 0;
  unsigned eta = 0;
  auto operator<=>(const SKey&) const = default;
};

/// Polynomial in (lambda, gamma, chi^i, eta^i) with VElement coefficients,
/// subject to chi^i chi^j = -chi^j chi^i (i != j), chi^i chi^i = -lambda,
/// eta^i eta^i = -gamma, and chi/eta anticommuting with each other.
class SusyPoly {
 public:
  using Terms = std::map<SKey, VElement>;

  SusyPoly() = default;
  static SusyPoly from_lpoly(const LPoly& p, bool as_gamma = false) {
    SusyPoly r;
    for (auto& [m, v] : p.terms()) {
      SKey k;
      (as_gamma ? k.gam : k.lam) = m;
      r.add(k, v);
    }
    return r;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const SusyPoly& o) const { return t_ == o.t_; }
  bool operator!=(const SusyPoly& o) const { return !(*this == o); }

  void add(const SKey& k, const VElement& v) {
    if (v.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(k, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) t_.erase(it);
  }
  SusyPoly& operator+=(const SusyPoly& o) {
    for (auto& [k, v] : o.t_) add(k, v);
    return *this;
  }
  SusyPoly operator+(const SusyPoly& o) const {
    SusyPoly r = *this;
    r += o;
    return r;
  }
  SusyPoly operator-(const SusyPoly& o) const {
    SusyPoly r = *this;
    for (auto& [k, v] : o.t_) r.add(k, -v);
    return r;
  }
  SusyPoly scaled(const Scalar& c) const {
    SusyPoly r;
    for (auto& [k, v] : t_) r.add(k, v.scaled(c));
    return r;
  }
  SusyPoly mapped(const std::function<VElement(const VElement&)>& f) const {
    SusyPoly r;
    for (auto& [k, v] : t_) r.add(k, f(v));
    return r;
  }
  SusyPoly shifted_lambda(int k) const {
    SusyPoly r;
    for (auto& [key, v] : t_) {
      SKey nk = key;
      nk.lam += k;
      r.add(nk, v);
    }
    return r;
  }
  SusyPoly shifted_gamma(int k) const {
    SusyPoly r;
    for (auto& [key, v] : t_) {
      SKey nk = key;
      nk.gam += k;
      r.add(nk, v);
    }
    return r;
  }

  /// Number of odd variables in the monomial.
  static int odd_count(const SKey& k) {
    return __builtin_popcount(k.chi) + __builtin_popcount(k.eta);
  }

  /// Left multiplication by chi^{i+1} (0 <= i < 3).
  SusyPoly chi_mul(int i) const { return odd_mul(i, /*eta=*/false); }
  /// Left multiplication by eta^{i+1} (0 <= i < 3).
  SusyPoly eta_mul(int i) const { return odd_mul(i, /*eta=*/true); }

  /// Left Grassmann derivative with respect to eta^{i+1}.
  SusyPoly deriv_eta(int i) const {
    SusyPoly r;
    for (auto& [k, v] : t_) {
      if (!(k.eta & (1u << i))) continue;
      // sign: variables preceding eta^{i+1} in the canonical order
      int passed = __builtin_popcount(k.chi) +
                   __builtin_popcount(k.eta & ((1u << i) - 1));
      SKey nk = k;
      nk.eta &= ~(1u << i);
      r.add(nk, passed % 2 == 0 ? v : -v);
    }
    return r;
  }

  /// int_0^lambda d gamma: gamma^m -> lambda^{m+1}/(m+1); eta-free input.
  SusyPoly integrated_gamma() const {
    SusyPoly r;
    for (auto& [k, v] : t_) {
      SKey nk = k;
      nk.lam += k.gam + 1;
      nk.gam = 0;
      r.add(nk, v.scaled(Scalar(1, k.gam + 1)));
    }
    return r;
  }

 private:
  SusyPoly odd_mul(int i, bool eta) const {
    SusyPoly r;
    for (auto& [k, v] : t_) {
      unsigned mask = eta ? k.eta : k.chi;
      // chi^{i} passes every chi^{j<i}; eta^{i} passes all chi plus eta^{j<i}
      int passed = __builtin_popcount(mask & ((1u << i) - 1)) +
                   (eta ? __builtin_popcount(k.chi) : 0);
      SKey nk = k;
      VElement coeff = passed % 2 == 0 ? v : -v;
      if (mask & (1u << i)) {
        // chi chi = -lambda / eta eta = -gamma; the duplicate bit clears
        (eta ? nk.eta : nk.chi) = mask & ~(1u << i);
        (eta ? nk.gam : nk.lam) += 1;
        r.add(nk, -coeff);
      } else {
        (eta ? nk.eta : nk.chi) = mask | (1u << i);
        r.add(nk, coeff);
      }
    }
    return r;
  }

  Terms t_;
};

}  // namespace lcva

#endif  // LCVA_SUPERPOLY_HPP
