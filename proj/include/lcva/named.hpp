#ifndef LCVA_NAMED_HPP
#define LCVA_NAMED_HPP

#include <string>
#include <vector>

#include "lcva/presentation.hpp"

namespace lcva {

/// The Virasoro Lie conformal algebra: [L_l L] = (d+2l)L + (C/12)l^3.
LcaPresentation build_vir();

/// The betagamma system: [beta_l gamma] = -[gamma_l beta] = C.
LcaPresentation build_betagamma();

/// The bc-betagamma system (adds odd b, c with [b_l c] = [c_l b] = C) and
/// the odd derivation D: b -> beta, c -> d*gamma, beta -> d*b, gamma -> c.
LcaPresentation build_bc_betagamma();

/// N = 1 super-Virasoro with central charge specialized to the parameter c;
/// carries the derivation D = G_(0).
LcaPresentation build_svir();

/// N = 2 super-Virasoro (L, G+, G-, J), central charge c, derivations
/// D1 = (G+ + G-)_(0) and D2 = i(G+ - G-)_(0).
LcaPresentation build_svir_n2();

/// N = 3 super-Virasoro (L, G+, G-, G0, J+, J-, J0, Phi), central charge c.
LcaPresentation build_svir_n3();

/// The extended bc-betagamma system: even alpha, beta, gamma, delta and odd
/// a, b, c, d with the N = 2 structure derivations D1, D2.
LcaPresentation build_bcbg_ext();

/// Builders addressable by CLI name; throws std::invalid_argument on
/// unknown names.
LcaPresentation build_named(const std::string& name);
std::vector<std::string> named_algebras();

}  // namespace lcva

#endif  // LCVA_NAMED_HPP
