#ifndef LCVA_ENGINE_HPP
#define LCVA_ENGINE_HPP

#include <memory>
#include <mutex>
#include <random>
#include <string>

#include "lcva/presentation.hpp"
#include "lcva/report.hpp"

namespace lcva {

/// The universal enveloping vertex algebra V(R) of a presentation (with
/// central specializations): PBW normal forms, normally ordered products,
/// the full lambda-bracket via the non-commutative Wick formula and
/// skew-symmetry, n-th products and derivations.
///
/// Results are pure functions of the presentation; an internal memo cache
/// (mutex-guarded) makes repeated brackets cheap.
class VertexAlgebra {
 public:
  explicit VertexAlgebra(LcaPresentation pres);

  const LcaPresentation& pres() const { return pres_; }

  // -- parity ---------------------------------------------------------------
  int word_parity(const PbwWord& w) const;
  /// 0/1 for homogeneous elements, -1 for mixed or zero.
  int parity(const VElement& x) const;

  // -- products and normal forms -------------------------------------------
  /// PBW normal form of the right-nested product of a raw letter sequence.
  VElement normalize_seq(const std::vector<DerivedGen>& letters) const;
  /// Normally ordered product :xy:.
  VElement nop(const VElement& x, const VElement& y) const;
  /// The translation operator d.
  VElement partial(const VElement& x) const;
  VElement partial_pow(const VElement& x, int k) const;

  // -- brackets -------------------------------------------------------------
  LPoly bracket(const VElement& x, const VElement& y) const;
  /// n >= 0: lambda^n-coefficient times n!; n = -m-1: (1/m!)(d^m x)y.
  VElement nth_product(const VElement& x, int n, const VElement& y) const;
  /// lambda -> -d-lambda with d acting on coefficients from the left.
  LPoly subst_minus_nabla(const LPoly& p) const;
  /// Multiply by (d + lambda): p -> d(p) + lambda p.
  LPoly del_plus_lambda(const LPoly& p) const;

  // -- derivations ----------------------------------------------------------
  VElement apply_derivation(const DerivationSpec& d, const VElement& x) const;

  // -- rendering ------------------------------------------------------------
  std::string render(const VElement& x) const;
  std::string render(const LPoly& p) const;
  std::string render_word(const PbwWord& w) const;

  // -- checks ---------------------------------------------------------------
  /// Def 2.1 skew-symmetry and Jacobi identity on all generator pairs and
  /// triples, plus table sanity (parity bookkeeping, central annihilation).
  Report check_lca_axioms() const;
  /// Skew/Jacobi/quasi-commutativity/quasi-associativity/Wick on random
  /// parity-homogeneous elements with the given caps.
  Report check_engine_identities(unsigned seed, int pairs, int max_len,
                                 int max_der) const;

  /// Random parity-homogeneous nonzero VElement within the caps.
  VElement random_element(std::mt19937_64& rng, int max_len, int max_der,
                          int want_parity = -1) const;

  /// Skew check for one pair of homogeneous elements.
  bool skew_holds(const VElement& x, const VElement& y) const;
  /// Jacobi check for one triple of homogeneous elements.
  bool jacobi_holds(const VElement& x, const VElement& y,
                    const VElement& z) const;

  /// [x_lambda [y_gamma z]] style two-variable composites (for Jacobi).
  LPoly2 nested_bracket_lg(const VElement& x, const VElement& y,
                           const VElement& z) const;
  LPoly2 bracket_shift_lg(const VElement& x, const VElement& y,
                          const VElement& z) const;

 private:
  VElement insert_letter_word(const DerivedGen& a, const PbwWord& w) const;
  VElement partial_word(const PbwWord& w) const;
  VElement insert_letter(const DerivedGen& a, const VElement& v) const;
  VElement nop_words(const PbwWord& x, const PbwWord& y) const;
  LPoly bracket_words(const PbwWord& x, const PbwWord& y) const;
  LPoly base_bracket(int g1, int g2) const;  // table + skew + specialization
  VElement specialize(const VElement& v) const;

  LcaPresentation pres_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<PbwWord, PbwWord>, LPoly> bracket_cache_;
  mutable std::map<std::pair<DerivedGen, PbwWord>, VElement> insert_cache_;
  mutable std::map<std::pair<PbwWord, PbwWord>, VElement> nop_cache_;
  mutable std::map<PbwWord, VElement> partial_cache_;
  mutable std::map<std::pair<int, int>, LPoly> base_cache_;
};

}  // namespace lcva

#endif  // LCVA_ENGINE_HPP
