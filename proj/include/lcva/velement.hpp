#ifndef LCVA_VELEMENT_HPP
#define LCVA_VELEMENT_HPP

#include <compare>
#include <map>
#include <vector>

#include "lcva/scalar.hpp"

namespace lcva {

/// d^ord applied to a declared generator (by index into the presentation).
struct DerivedGen {
  int gen = 0;
  int ord = 0;
  auto operator<=>(const DerivedGen&) const = default;
};

/// Right-nested normally ordered monomial a1(a2(...al)); empty = vacuum.
using PbwWord = std::vector<DerivedGen>;

/// Finite Scalar-linear combination of PbwWords: an element of V(R).
class VElement {
 public:
  using Terms = std::map<PbwWord, Scalar>;

  VElement() = default;
  static VElement unit() { return word(PbwWord{}); }
  static VElement word(PbwWord w, Scalar c = Scalar(1)) {
    VElement v;
    if (!c.is_zero()) v.t_.emplace(std::move(w), std::move(c));
    return v;
  }
  static VElement letter(DerivedGen g, Scalar c = Scalar(1)) {
    return word(PbwWord{g}, std::move(c));
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const VElement& o) const { return t_ == o.t_; }
  bool operator!=(const VElement& o) const { return !(*this == o); }

  void add_term(const PbwWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.lower_bound(w);
    if (it == t_.end() || it->first != w) {
      t_.emplace_hint(it, w, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
  void add_term(PbwWord&& w, Scalar&& c) {
    if (c.is_zero()) return;
    auto it = t_.lower_bound(w);
    if (it == t_.end() || it->first != w) {
      t_.emplace_hint(it, std::move(w), std::move(c));
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }

  VElement& operator+=(const VElement& o) {
    for (auto& [w, c] : o.t_) add_term(w, c);
    return *this;
  }
  VElement operator+(const VElement& o) const {
    VElement r = *this;
    r += o;
    return r;
  }
  VElement operator-(const VElement& o) const {
    VElement r = *this;
    for (auto& [w, c] : o.t_) r.add_term(w, -c);
    return r;
  }
  VElement operator-() const { return scaled(Scalar(-1)); }
  VElement scaled(const Scalar& c) const {
    VElement r;
    if (c.is_zero()) return r;
    for (auto& [w, k] : t_) r.t_.emplace(w, k * c);
    return r;
  }

  /// The coefficient of a word (zero if absent).
  Scalar coeff(const PbwWord& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Scalar(0) : it->second;
  }

 private:
  Terms t_;
};

}  // namespace lcva

#endif  // LCVA_VELEMENT_HPP
