#ifndef LCVA_SCONF_HPP
#define LCVA_SCONF_HPP

#include <memory>
#include <string>
#include <vector>

#include "lcva/engine.hpp"
#include "lcva/lie.hpp"
#include "lcva/susy.hpp"

namespace lcva {

enum class SconfMode { N1, N2, N3 };

/// A candidate superconformal vector (N1), pair (N2) or quadruple (N3) in a
/// constructed vertex algebra; parities must match Example 2.7 of the
/// respective mode.
struct SconfCandidate {
  SconfMode mode = SconfMode::N1;
  std::shared_ptr<const VertexAlgebra> va;
  VElement G;        // N1
  VElement Gp, Gm;   // N2, N3
  VElement G0, Phi;  // N3

  const VertexAlgebra& algebra() const { return *va; }
};

/// Result of verify_superconformal: the derived conformal vector (and
/// currents), the central charge read off [L_l L], and the residual report.
/// The L_(1) semisimplicity check covers declared generators only (flagged
/// as such in the report), not the whole vertex algebra.
struct SconfCertificate {
  VElement L;
  VElement J;        // N2 current / N3 J0
  VElement Jp, Jm;   // N3 only
  Scalar charge;
  Report report;

  bool pass() const { return report.pass(); }
};

/// Derives L = (1/2)G_(0)G (N1), L = (1/2)(G+_(0)G- + G-_(0)G+) and
/// J = G+_(1)G- (N2), or L/J0/J+/J- from the displayed n-th products (N3),
/// then checks every super-Virasoro relation of the mode exactly and the
/// conformal weight of every declared generator.
SconfCertificate verify_superconformal(const SconfCandidate& c);

/// Conformal weight of a with respect to L: [L_l a] = (d + Delta l)a + O(l^2);
/// primary iff the O(l^2) part vanishes.  Throws std::invalid_argument when
/// the l^1 coefficient is not proportional to a or the l^0 coefficient is
/// not d a.
struct WeightInfo {
  Scalar delta;
  bool primary = false;
};
WeightInfo conformal_weight(const VertexAlgebra& va, const VElement& L,
                            const VElement& a);

/// Shift of a superconformal vector G by an odd v with [L_l v] = (d + l/2)v,
/// [G_l v] = G_(0)v + c1 l, [v_l v] = c2 (shapes checked; c1, c2 extracted).
/// Returns G + dv with conformal vector L + (1/2)d G_(0)v and central charge
/// c + 6 c1 - 3 c2; the certificate re-verifies the shifted vector and
/// asserts the derived L and charge match the closed forms.
struct ShiftResult {
  VElement G;  // G + dv
  VElement L;  // L + (1/2) d G_(0)v
  Scalar c1, c2, charge;
  SconfCertificate cert;
};
ShiftResult shift_superconformal(std::shared_ptr<const VertexAlgebra> va,
                                 const VElement& G, const VElement& v);

/// Kac-Todorov superconformal vector of V^k_{N=1}(g) (K specialized to k):
/// tau = (1/k)(sum_i (-1)^{p(a^i)}(D abar^i) bbar^i
///             + (1/(3k)) sum_{i,j,r} ([a^i,a^j]|a^r) bbar^i bbar^j bbar^r),
/// with closed-form charge (k - h^v) sdim g / k + sdim g / 2.  Throws on
/// k = 0 or a degenerate form.
struct KacTodorov {
  std::shared_ptr<const VertexAlgebra> va;
  VElement tau;
  Scalar charge;  // closed form; certificate asserts equality
  SconfCertificate cert;
};
KacTodorov kac_todorov(const LieSuperalgebraData& g, const Scalar& k);

/// SUSY charged free fermions F^ch: one pair (phi_a, phi^abar) per entry of
/// `parities` (the parity of the underlying basis vector u_a of n), presented
/// on generators phi_a, Dphi_a, phib_a, Dphib_a with the odd derivation "D".
struct ChargedFermions {
  std::shared_ptr<const VertexAlgebra> va;
  std::vector<int> phi, dphi, phib, dphib;  // generator indices per pair
  std::vector<int> parity;                  // p(u_a)
};
ChargedFermions build_charged_fermions(const std::vector<int>& parities);

/// tau^ch (per-parity sums of (d phi)phib + (D phi)(D phib)) shifted by
/// d(sum_a m_a phi_a phib_a); closed-form charge sum_a (6 m_a + 3).
struct TauCharged {
  VElement tau;   // shifted vector tau^ch_m
  VElement tau0;  // unshifted tau^ch
  Scalar charge;  // closed form; certificate asserts equality
  SconfCertificate cert;
};
TauCharged tau_charged(const ChargedFermions& f, const std::vector<Scalar>& m);

/// The SUSY BRST complex C(gbar, f, k) = V^k_{N=1}(g) (x) F^ch and its
/// superconformal vector tau^C_{h,m} = tau^g + d hbar + tau^ch_m.  The Dynkin
/// grading is explicit input (grading[j] = i for u_j in g(i)) together with
/// the Cartan element h (coefficients in the basis); h is validated against
/// [h, a] = 2 i a.  m has one entry per positive-grade basis element, in
/// basis order.  The certificate asserts the closed-form charge
/// (3k - 2 h^v) sdim g / (2k) - 3 k (h|h) + sum (6 m_a + 3), and the
/// corollary report checks the displayed Lambda-brackets of tau^C with every
/// generator.
struct BrstResult {
  std::shared_ptr<const VertexAlgebra> va;
  ChargedFermions fermions;  // indices valid inside va
  VElement tau;
  Scalar charge;  // closed form
  SconfCertificate cert;
  Report corollary;
};
BrstResult brst_tau(const LieSuperalgebraData& g,
                    const std::vector<Scalar>& grading, const Scalar& k,
                    const std::vector<Scalar>& h, const std::vector<Scalar>& m);

/// Superconformal current algebra SVir (+) Cur g_{N1|N2} for an
/// Omega-graded g (grading from g.grading; Delta_a = 1 - omega), central
/// charge specialized to c.  Throws std::invalid_argument when the grading
/// is not additive on brackets (Delta_{[a,b]} != Delta_a + Delta_b - 1).
/// The report carries the LCA axiom check and the SUSY structure check;
/// cert re-verifies the embedded superconformal vector(s).
struct CurrentSconf {
  std::shared_ptr<const VertexAlgebra> va;
  SconfCandidate candidate;
  SusyStructure structure;  // N1: D = G_(0); N2: D1, D2 per the proposition
  SconfCertificate cert;
  Report report;
};
CurrentSconf current_superconformal(const LieSuperalgebraData& g,
                                    SconfMode mode, const Scalar& c);

/// SUSY structure induced by a superconformal candidate: N2 gives
/// (D1, D2) = ((mu G+ + mu^-1 G-)_(0), i(mu G+ - mu^-1 G-)_(0)) after
/// checking (G+-_(0)G+-)_(0) = 0 on all generators; N3 adds D3 = sqrt2 G0_(0).
/// Throws std::invalid_argument on violated preconditions.
SusyStructure derivations_from_sconf(const SconfCandidate& c, const Scalar& mu);

/// N = 4 derivation formulas of the final remark for a user-supplied
/// quadruple (G+, G-, Gbar+, Gbar-):
/// D1 = (mu G+ + mu^-1 Gbar-)_(0),  D2 = i(mu G+ - mu^-1 Gbar-)_(0),
/// D3 = (nu G- + nu^-1 Gbar+)_(0),  D4 = i(nu G- - nu^-1 Gbar+)_(0).
/// The caller is responsible for running check_susy_structure on the result.
SusyStructure derivations_n4(std::shared_ptr<const VertexAlgebra> va,
                             const VElement& gp, const VElement& gm,
                             const VElement& gpbar, const VElement& gmbar,
                             const Scalar& mu, const Scalar& nu);

}  // namespace lcva

#endif  // LCVA_SCONF_HPP
