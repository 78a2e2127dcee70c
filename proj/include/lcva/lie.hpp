#ifndef LCVA_LIE_HPP
#define LCVA_LIE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lcva/presentation.hpp"
#include "lcva/report.hpp"

namespace lcva {

/// A finite-dimensional Lie superalgebra with an even invariant supersymmetric
/// bilinear form, given by structure constants over Scalar.
struct LieSuperalgebraData {
  std::vector<std::string> names;
  std::vector<int> parities;
  /// bracket[{i,j}][k] = coefficient of u_k in [u_i, u_j]; absent = 0.
  std::map<std::pair<int, int>, std::map<int, Scalar>> bracket;
  /// form[i][j] = (u_i | u_j)
  std::vector<std::vector<Scalar>> form;
  /// optional grading omega: basis index -> weight
  std::vector<Scalar> grading;

  int dim() const { return static_cast<int>(names.size()); }
  std::map<int, Scalar> lie(int i, int j) const {
    auto it = bracket.find({i, j});
    return it == bracket.end() ? std::map<int, Scalar>{} : it->second;
  }
};

/// Super skew-symmetry, super Jacobi, invariance and evenness/supersymmetry
/// of the form, on all basis pairs/triples.
Report validate_lie_superalgebra(const LieSuperalgebraData& g);

/// Signed dimension (#even - #odd basis elements).
long superdimension(const LieSuperalgebraData& g);

/// Dual Coxeter number: half the Casimir eigenvalue on the adjoint
/// representation; requires the form to be non-degenerate.
Scalar dual_coxeter(const LieSuperalgebraData& g);

/// dual[i] = coefficients of b^i in the basis, with (u_j | b^i) = delta_ij.
std::vector<std::vector<Scalar>> dual_basis(const LieSuperalgebraData& g);

/// Inverse of a square Scalar matrix by Gaussian elimination; throws
/// std::domain_error if singular.
std::vector<std::vector<Scalar>> matrix_inverse(
    std::vector<std::vector<Scalar>> m);

/// Builtins: sl2 with (e|f) = 1, (h|h) = 2, and the 1-dimensional even
/// abelian algebra with (a|a) = 1.  sl2's grading is ad(h/2)-eigenvalues.
LieSuperalgebraData lie_sl2();
LieSuperalgebraData lie_abelian1();
LieSuperalgebraData lie_builtin(const std::string& name);

/// Cur g: generators = basis of g plus central K, [a_l b] = [a,b] + l K(a|b).
LcaPresentation build_cur(const LieSuperalgebraData& g);

/// The N = 1 SUSY current algebra on g + parity-reversed gbar + K, with the
/// odd derivation D: abar -> a, a -> d abar, K -> 0 (registered as "D").
/// When with_K is false the central K is omitted and [abar_l bbar] = 0
/// (the centerless Cur g_{N=1} used by the superconformal current algebra).
LcaPresentation build_susy_cur(const LieSuperalgebraData& g,
                               bool with_K = true);

}  // namespace lcva

#endif  // LCVA_LIE_HPP
