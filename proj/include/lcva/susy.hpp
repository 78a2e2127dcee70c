#ifndef LCVA_SUSY_HPP
#define LCVA_SUSY_HPP

#include <memory>
#include <string>
#include <vector>

#include "lcva/engine.hpp"
#include "lcva/superpoly.hpp"

namespace lcva {

/// An N = n SUSY structure: n odd derivations D^1..D^n on a fixed vertex
/// algebra with [D^i, D^j] = 2 delta_ij d, each a derivation of the normally
/// ordered product and of the lambda-bracket.
struct SusyStructure {
  int n = 1;
  std::shared_ptr<const VertexAlgebra> va;
  std::vector<DerivationSpec> d;

  const VertexAlgebra& algebra() const { return *va; }
};

/// Assembles a SusyStructure from derivations registered on the presentation.
SusyStructure make_susy(std::shared_ptr<const VertexAlgebra> va,
                        const std::vector<std::string>& derivation_names);

// -- Grassmann Lambda-calculus ----------------------------------------------

/// [a_Lambda b]: n=1 gives [Da_l b] + chi [a_l b]; n=2 gives
/// [D2D1a_l b] - chi1 [D2a_l b] + chi2 [D1a_l b] - chi1 chi2 [a_l b].
/// Throws std::invalid_argument for n = 3 (held as derivation triples only).
SusyPoly Lambda_bracket(const SusyStructure& s, const VElement& x,
                        const VElement& y);
/// Same bracket written in the Gamma alphabet (gamma, eta^i).
SusyPoly Lambda_bracket_gamma(const SusyStructure& s, const VElement& x,
                              const VElement& y);

/// D^i as a left operator on C[Lambda,Gamma] (x) V, using [D^i, chi^j] =
/// 2 delta_ij lambda and [D^i, eta^j] = 2 delta_ij gamma.
SusyPoly apply_D(const SusyStructure& s, int i, const SusyPoly& p);

/// Lambda -> -nabla - Lambda: lambda -> -d-lambda, chi^i -> -D^i-chi^i with
/// nabla acting on coefficients from the left (input must be Gamma-free).
SusyPoly subst_minus_nabla_Lambda(const SusyStructure& s, const SusyPoly& p);

/// Lambda -> Lambda + Gamma: lambda -> lambda+gamma, chi^i -> chi^i+eta^i
/// (input must be Gamma-free).
SusyPoly subst_lambda_plus_gamma(const SusyPoly& p);

/// int_0^Lambda dGamma = d_eta1 ... d_etan int_0^lambda dgamma.
SusyPoly integrate_Gamma(const SusyPoly& p, int n);

/// Plain-text rendering, e.g. "(2*L)*x1 + ((1/3)*G)*l^2".
std::string render(const VertexAlgebra& va, const SusyPoly& p);

// -- checkers ---------------------------------------------------------------

/// [D^i, D^j] = 2 delta_ij d on all generators, odd parity bookkeeping,
/// Leibniz for the normally ordered product, and the lambda-bracket
/// derivation identity (5.1), on generator pairs plus a random PBW suite.
Report check_susy_structure(const SusyStructure& s, unsigned seed = 7,
                            int rounds = 8, int max_len = 2, int max_der = 1);

/// SEF1/SEF2 for every ordered pair of the given barred elements; failing
/// pairs are reported with both sides rendered.
Report check_sef(const VertexAlgebra& va, const DerivationSpec& d,
                 const std::vector<VElement>& barred);

/// Def 3.1 sesquilinearity/skew-symmetry/Jacobi and the Def 3.2 Wick formula
/// for the Lambda-bracket of s (n = 1 or 2), on all generator pairs and
/// triples plus a random PBW sample.
Report check_susy_lca_axioms(const SusyStructure& s, unsigned seed = 7,
                             int rounds = 4, int max_len = 2, int max_der = 1);

// -- SEF solvability (Case-2 style analysis) --------------------------------

/// Per-generator direction for the bar copy of (D-1)/(D-2): BarNew adds
/// vbar_i with D(vbar_i) = u_i (the new generator is the bar); ImageNew adds
/// v_i = D(u_i) (u_i itself is the bar).
enum class BarDirection { BarNew, ImageNew };

/// Builds the bar copy of `base` in the given directions, leaves every
/// bracket involving a new generator as an unknown linear ansatz (lambda
/// degree <= max_lambda, d-order <= max_der), imposes SEF1 on all ordered
/// pairs of barred generators, and Gauss-solves the linear system.  Passes
/// iff a consistent bracket assignment exists.
Report sef1_solvable(const LcaPresentation& base,
                     const std::vector<BarDirection>& dirs, int max_lambda = 2,
                     int max_der = 2);

// -- extension builders -----------------------------------------------------

struct N1Extension {
  LcaPresentation pres;
  std::string deriv = "D";       // key into pres.derivations
  std::vector<int> bar_of;       // original generator index -> barred index
};

/// The canonical bar-copy extension (D-2'): barred copies with flipped
/// parity (central copies stay central with d Cbar = 0), brackets
/// [ubar_l v] = overline([u_l v]), [u_l vbar] = (-1)^{p(u)} overline([u_l v]),
/// [ubar_l vbar] = 0, and D(ubar) = u, D(u) = d ubar, D(Cbar) = C.
N1Extension extend_N1(const LcaPresentation& r, const std::string& suffix = "_bar",
                      const std::string& deriv_name = "D");

struct N2Extension {
  LcaPresentation pres;
  SusyStructure structure;       // n = 2, derivations "D1", "D2"
};

/// The circ-copy extension of an N=1 presentation (derivation `dname`):
/// applies the bar recipe with suffix "_circ", sets D2 = the circ-direction
/// derivation and extends D1 by D1(g_circ) = (-D(g))_circ.  Throws
/// std::invalid_argument when the SUSY generators {ubar_i} (detected as the
/// generators whose D-image has no d-derivatives) violate the linear
/// independence hypothesis on {D(ubar_i), ubar_i}.
N2Extension extend_N2(const LcaPresentation& r1, const std::string& dname = "D");

struct N3Extension {
  LcaPresentation pres;
  SusyStructure structure;       // n = 3, derivations "D1", "D2", "D3"
};

/// The dagger-copy extension of an N=2 presentation (derivations d1name,
/// d2name): bar recipe with suffix "_dag", D3(g_dag) = g, D3(g) = d g_dag,
/// and D^i(g_dag) = (-D^i(g))_dag for i = 1, 2.
N3Extension extend_N3(const LcaPresentation& r2,
                      const std::string& d1name = "D1",
                      const std::string& d2name = "D2");

/// O_n-action A.(D^1..D^n) = (sum_i A_1i D^i, ..., sum_i A_ni D^i).
/// Throws std::invalid_argument unless A A^T = identity exactly.
SusyStructure orthogonal_act(const std::vector<std::vector<Scalar>>& a,
                             const SusyStructure& s);

}  // namespace lcva

#endif  // LCVA_SUSY_HPP
