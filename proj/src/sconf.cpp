#include "lcva/sconf.hpp"

#include <utility>

namespace lcva {

namespace {

VElement vac(const Scalar& c) { return VElement::word(PbwWord{}, c); }

VElement letter(int gen, int ord = 0) {
  return VElement::letter({gen, ord});
}

/// True iff v is a scalar multiple of the vacuum; the multiple goes to out.
bool pure_vacuum(const VElement& v, Scalar& out) {
  out = v.coeff(PbwWord{});
  return (v - vac(out)).is_zero();
}

LPoly mk(std::initializer_list<std::pair<int, VElement>> xs) {
  LPoly p;
  for (auto& [m, v] : xs) p.add(m, v);
  return p;
}

void rel(Report& rep, const VertexAlgebra& va, const std::string& what,
         const LPoly& got, const LPoly& want) {
  bool ok = got == want;
  rep.add(what, ok,
          ok ? "" : "got " + va.render(got) + " ; want " + va.render(want));
}

/// (d + w lambda)x.
LPoly lin(const VertexAlgebra& va, const VElement& x, const Scalar& w) {
  return mk({{0, va.partial(x)}, {1, x.scaled(w)}});
}

/// Central charge off the lambda^power coefficient, times mult.
Scalar read_charge(Report& rep, const VertexAlgebra& va, const LPoly& p,
                   int power, long mult, const std::string& what) {
  Scalar c;
  bool ok = pure_vacuum(p.coeff(power), c);
  rep.add(what + " central term is scalar", ok,
          ok ? "" : "got " + va.render(p.coeff(power)));
  return c * Scalar(mult);
}

void check_parity(Report& rep, const VertexAlgebra& va, const VElement& x,
                  const std::string& name) {
  bool ok = va.parity(x) == 1;
  rep.add(name + " is odd", ok);
}

void check_weights(Report& rep, const VertexAlgebra& va, const VElement& L) {
  rep.add("L_(1) semisimplicity surrogate", true,
          "checked on declared generators only, not globally");
  auto& gens = va.pres().gens;
  for (size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].central) continue;
    std::string what = "conformal weight of " + gens[j].name;
    try {
      WeightInfo w = conformal_weight(va, L, letter(static_cast<int>(j)));
      rep.add(what, true,
              "Delta = " + w.delta.str() + (w.primary ? ", primary" : ""));
    } catch (const std::exception& e) {
      rep.add(what, false, e.what());
    }
  }
}

SconfCertificate verify_n1(const SconfCandidate& c) {
  const VertexAlgebra& va = c.algebra();
  SconfCertificate cert;
  Report& rep = cert.report;
  rep.name = "verify-superconformal-n1";
  check_parity(rep, va, c.G, "G");
  VElement L = va.nth_product(c.G, 0, c.G).scaled(Scalar(1, 2));
  LPoly LL = va.bracket(L, L);
  Scalar cc = read_charge(rep, va, LL, 3, 12, "[L_l L]");
  rel(rep, va, "[L_l L]", LL,
      mk({{0, va.partial(L)}, {1, L.scaled(2)}, {3, vac(cc * Scalar(1, 12))}}));
  rel(rep, va, "[L_l G]", va.bracket(L, c.G), lin(va, c.G, Scalar(3, 2)));
  rel(rep, va, "[G_l G]", va.bracket(c.G, c.G),
      mk({{0, L.scaled(2)}, {2, vac(cc * Scalar(1, 3))}}));
  check_weights(rep, va, L);
  cert.L = L;
  cert.charge = cc;
  return cert;
}

SconfCertificate verify_n2(const SconfCandidate& c) {
  const VertexAlgebra& va = c.algebra();
  SconfCertificate cert;
  Report& rep = cert.report;
  rep.name = "verify-superconformal-n2";
  check_parity(rep, va, c.Gp, "G+");
  check_parity(rep, va, c.Gm, "G-");
  VElement L = (va.nth_product(c.Gp, 0, c.Gm) + va.nth_product(c.Gm, 0, c.Gp))
                   .scaled(Scalar(1, 2));
  VElement J = va.nth_product(c.Gp, 1, c.Gm);
  LPoly LL = va.bracket(L, L);
  Scalar cc = read_charge(rep, va, LL, 3, 12, "[L_l L]");
  rel(rep, va, "[L_l L]", LL,
      mk({{0, va.partial(L)}, {1, L.scaled(2)}, {3, vac(cc * Scalar(1, 12))}}));
  rel(rep, va, "[L_l G+]", va.bracket(L, c.Gp), lin(va, c.Gp, Scalar(3, 2)));
  rel(rep, va, "[L_l G-]", va.bracket(L, c.Gm), lin(va, c.Gm, Scalar(3, 2)));
  rel(rep, va, "[L_l J]", va.bracket(L, J), lin(va, J, Scalar(1)));
  rel(rep, va, "[G+_l G+]", va.bracket(c.Gp, c.Gp), LPoly());
  rel(rep, va, "[G-_l G-]", va.bracket(c.Gm, c.Gm), LPoly());
  rel(rep, va, "[G+_l G-]", va.bracket(c.Gp, c.Gm),
      mk({{0, L + va.partial(J).scaled(Scalar(1, 2))},
          {1, J},
          {2, vac(cc * Scalar(1, 6))}}));
  rel(rep, va, "[G+_l J]", va.bracket(c.Gp, J), mk({{0, -c.Gp}}));
  rel(rep, va, "[G-_l J]", va.bracket(c.Gm, J), mk({{0, c.Gm}}));
  rel(rep, va, "[J_l J]", va.bracket(J, J),
      mk({{1, vac(cc * Scalar(1, 3))}}));
  check_weights(rep, va, L);
  cert.L = L;
  cert.J = J;
  cert.charge = cc;
  return cert;
}

SconfCertificate verify_n3(const SconfCandidate& c) {
  const VertexAlgebra& va = c.algebra();
  SconfCertificate cert;
  Report& rep = cert.report;
  rep.name = "verify-superconformal-n3";
  check_parity(rep, va, c.Gp, "G+");
  check_parity(rep, va, c.Gm, "G-");
  check_parity(rep, va, c.G0, "G0");
  check_parity(rep, va, c.Phi, "Phi");
  LPoly b00 = va.bracket(c.G0, c.G0);
  VElement L = b00.coeff(0);
  Scalar cc = read_charge(rep, va, b00, 2, 6, "[G0_l G0]");
  VElement J0 = va.nth_product(c.Gp, 1, c.Gm);
  VElement Jp = va.nth_product(c.Gp, 1, c.G0);
  VElement Jm = -va.nth_product(c.Gm, 1, c.G0);
  Scalar c12 = cc * Scalar(1, 12), c6 = cc * Scalar(1, 6),
         c3 = cc * Scalar(1, 3);
  rel(rep, va, "[L_l L]", va.bracket(L, L),
      mk({{0, va.partial(L)}, {1, L.scaled(2)}, {3, vac(c12)}}));
  const std::pair<const VElement*, const char*> currents[] = {
      {&Jp, "J+"}, {&Jm, "J-"}, {&J0, "J0"}};
  for (auto& [x, nm] : currents)
    rel(rep, va, std::string("[L_l ") + nm + "]", va.bracket(L, *x),
        lin(va, *x, Scalar(1)));
  const std::pair<const VElement*, const char*> supercurrents[] = {
      {&c.Gp, "G+"}, {&c.Gm, "G-"}, {&c.G0, "G0"}};
  for (auto& [x, nm] : supercurrents)
    rel(rep, va, std::string("[L_l ") + nm + "]", va.bracket(L, *x),
        lin(va, *x, Scalar(3, 2)));
  rel(rep, va, "[L_l Phi]", va.bracket(L, c.Phi),
      lin(va, c.Phi, Scalar(1, 2)));
  rel(rep, va, "[G+_l G-]", va.bracket(c.Gp, c.Gm),
      mk({{0, L + va.partial(J0).scaled(Scalar(1, 2))}, {1, J0}, {2, vac(c6)}}));
  rel(rep, va, "[G+_l G+]", va.bracket(c.Gp, c.Gp), LPoly());
  rel(rep, va, "[G-_l G-]", va.bracket(c.Gm, c.Gm), LPoly());
  rel(rep, va, "[G0_l G0]", b00, mk({{0, L}, {2, vac(c6)}}));
  rel(rep, va, "[G+_l G0]", va.bracket(c.Gp, c.G0),
      mk({{0, va.partial(Jp).scaled(Scalar(1, 2))}, {1, Jp}}));
  rel(rep, va, "[G-_l G0]", va.bracket(c.Gm, c.G0),
      mk({{0, va.partial(Jm).scaled(Scalar(-1, 2))}, {1, -Jm}}));
  rel(rep, va, "[J+_l J-]", va.bracket(Jp, Jm), mk({{0, J0}, {1, vac(c3)}}));
  rel(rep, va, "[J+_l J0]", va.bracket(Jp, J0), mk({{0, -Jp}}));
  rel(rep, va, "[J-_l J0]", va.bracket(Jm, J0), mk({{0, Jm}}));
  rel(rep, va, "[J0_l J0]", va.bracket(J0, J0), mk({{1, vac(c3)}}));
  rel(rep, va, "[J+_l J+]", va.bracket(Jp, Jp), LPoly());
  rel(rep, va, "[J-_l J-]", va.bracket(Jm, Jm), LPoly());
  rel(rep, va, "[G+_l J-]", va.bracket(c.Gp, Jm),
      mk({{0, -c.G0 + va.partial(c.Phi)}, {1, c.Phi}}));
  rel(rep, va, "[G-_l J+]", va.bracket(c.Gm, Jp),
      mk({{0, c.G0 + va.partial(c.Phi)}, {1, c.Phi}}));
  rel(rep, va, "[G+_l J0]", va.bracket(c.Gp, J0), mk({{0, -c.Gp}}));
  rel(rep, va, "[G-_l J0]", va.bracket(c.Gm, J0), mk({{0, c.Gm}}));
  rel(rep, va, "[G0_l J+]", va.bracket(c.G0, Jp), mk({{0, -c.Gp}}));
  rel(rep, va, "[G0_l J-]", va.bracket(c.G0, Jm), mk({{0, c.Gm}}));
  rel(rep, va, "[G0_l J0]", va.bracket(c.G0, J0),
      mk({{0, -va.partial(c.Phi)}, {1, -c.Phi}}));
  rel(rep, va, "[G+_l Phi]", va.bracket(c.Gp, c.Phi),
      mk({{0, Jp.scaled(Scalar(1, 2))}}));
  rel(rep, va, "[G-_l Phi]", va.bracket(c.Gm, c.Phi),
      mk({{0, Jm.scaled(Scalar(1, 2))}}));
  rel(rep, va, "[G0_l Phi]", va.bracket(c.G0, c.Phi),
      mk({{0, J0.scaled(Scalar(-1, 2))}}));
  rel(rep, va, "[Phi_l Phi]", va.bracket(c.Phi, c.Phi), mk({{0, vac(c6)}}));
  rel(rep, va, "[J+_l Phi]", va.bracket(Jp, c.Phi), LPoly());
  rel(rep, va, "[J-_l Phi]", va.bracket(Jm, c.Phi), LPoly());
  rel(rep, va, "[J0_l Phi]", va.bracket(J0, c.Phi), LPoly());
  check_weights(rep, va, L);
  cert.L = L;
  cert.J = J0;
  cert.Jp = Jp;
  cert.Jm = Jm;
  cert.charge = cc;
  return cert;
}

}  // namespace

SconfCertificate verify_superconformal(const SconfCandidate& c) {
  switch (c.mode) {
    case SconfMode::N1:
      return verify_n1(c);
    case SconfMode::N2:
      return verify_n2(c);
    case SconfMode::N3:
      return verify_n3(c);
  }
  throw std::invalid_argument("verify_superconformal: unknown mode");
}

WeightInfo conformal_weight(const VertexAlgebra& va, const VElement& L,
                            const VElement& a) {
  if (a.is_zero())
    throw std::invalid_argument("conformal_weight: zero element");
  LPoly p = va.bracket(L, a);
  VElement c1 = p.coeff(1);
  auto& [w0, k0] = *a.terms().begin();
  Scalar delta = c1.coeff(w0) / k0;
  if (c1 != a.scaled(delta))
    throw std::invalid_argument(
        "conformal_weight: not an L_(1) eigenvector: " + va.render(c1));
  if (p.coeff(0) != va.partial(a))
    throw std::invalid_argument(
        "conformal_weight: lambda^0 coefficient is not d a");
  return {delta, p.degree() <= 1};
}

ShiftResult shift_superconformal(std::shared_ptr<const VertexAlgebra> va,
                                 const VElement& G, const VElement& v) {
  const VertexAlgebra& A = *va;
  VElement L = A.nth_product(G, 0, G).scaled(Scalar(1, 2));
  Scalar c;
  if (!pure_vacuum(A.bracket(L, L).coeff(3), c))
    throw std::invalid_argument("shift_superconformal: G is not superconformal");
  c = c * 12;
  if (A.bracket(L, v) != lin(A, v, Scalar(1, 2)))
    throw std::invalid_argument(
        "shift_superconformal: [L_l v] != (d + l/2)v");
  LPoly gv = A.bracket(G, v);
  Scalar c1;
  if (gv.degree() > 1 || !pure_vacuum(gv.coeff(1), c1))
    throw std::invalid_argument(
        "shift_superconformal: [G_l v] != G_(0)v + c1 l");
  LPoly vv = A.bracket(v, v);
  Scalar c2;
  if (vv.degree() > 0 || !pure_vacuum(vv.coeff(0), c2))
    throw std::invalid_argument("shift_superconformal: [v_l v] != c2");
  ShiftResult r;
  r.G = G + A.partial(v);
  r.L = L + A.partial(A.nth_product(G, 0, v)).scaled(Scalar(1, 2));
  r.c1 = c1;
  r.c2 = c2;
  r.charge = c + c1 * 6 - c2 * 3;
  r.cert = verify_superconformal({SconfMode::N1, va, r.G});
  r.cert.report.add("shifted conformal vector is L + (1/2) d G_(0)v",
                    r.cert.L == r.L);
  r.cert.report.add("shifted charge is c + 6 c1 - 3 c2",
                    r.cert.charge == r.charge,
                    "engine " + r.cert.charge.str() + " ; closed form " +
                        r.charge.str());
  return r;
}

namespace {

/// The Kac-Todorov vector of a susy-current presentation whose generators
/// 0..n-1 are the currents a_i and n..2n-1 the bars.
VElement kt_vector(const VertexAlgebra& va, const LieSuperalgebraData& g,
                   const Scalar& k) {
  int n = g.dim();
  auto dual = dual_basis(g);
  std::vector<VElement> bbar(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      bbar[i] += VElement::letter({n + j, 0}, dual[i][j]);
  VElement tau;
  for (int i = 0; i < n; ++i) {
    Scalar sg(g.parities[i] == 0 ? 1 : -1);
    tau += va.nop(letter(i), bbar[i]).scaled(sg / k);
  }
  Scalar cube = Scalar(1, 3) / (k * k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto br = g.lie(i, j);
      if (br.empty()) continue;
      for (int r = 0; r < n; ++r) {
        Scalar cf;
        for (auto& [s, x] : br) cf = cf + x * g.form[s][r];
        if (cf.is_zero()) continue;
        tau += va.nop(bbar[i], va.nop(bbar[j], bbar[r])).scaled(cf * cube);
      }
    }
  return tau;
}

}  // namespace

KacTodorov kac_todorov(const LieSuperalgebraData& g, const Scalar& k) {
  if (k.is_zero())
    throw std::invalid_argument("kac_todorov: level k must be nonzero");
  LcaPresentation pres = build_susy_cur(g);
  pres.specialize(pres.require("K"), k);
  auto va = std::make_shared<VertexAlgebra>(std::move(pres));
  KacTodorov r;
  r.va = va;
  r.tau = kt_vector(*va, g, k);
  Scalar sd(superdimension(g));
  Scalar hv = dual_coxeter(g);
  r.charge = (k - hv) * sd / k + sd * Scalar(1, 2);
  r.cert = verify_superconformal({SconfMode::N1, va, r.tau});
  r.cert.report.add(
      "charge matches (k - h^v) sdim g / k + sdim g / 2",
      r.cert.charge == r.charge,
      "engine " + r.cert.charge.str() + " ; closed form " + r.charge.str());
  return r;
}

namespace {

struct FermionIdx {
  std::vector<int> phi, dphi, phib, dphib;
};

/// Adds one (phi_a, phi^abar) pair per parity entry, with the stored
/// lambda-table of the bc-betagamma-type pairing [phi _L phibar] = 1 and the
/// D-images as explicit generators; merges the D-action into `d`.
FermionIdx append_fermions(LcaPresentation& pres,
                           const std::vector<int>& parities,
                           DerivationSpec& d) {
  FermionIdx f;
  for (size_t a = 0; a < parities.size(); ++a) {
    int p = parities[a] % 2;
    std::string id = std::to_string(a + 1);
    int phi = pres.add_gen("phi" + id, p);
    int dphi = pres.add_gen("Dphi" + id, 1 - p);
    int phib = pres.add_gen("phib" + id, 1 - p);
    int dphib = pres.add_gen("Dphib" + id, p);
    f.phi.push_back(phi);
    f.dphi.push_back(dphi);
    f.phib.push_back(phib);
    f.dphib.push_back(dphib);
    pres.set_bracket(dphi, phib, LPoly::constant(vac(Scalar(1))));
    pres.set_bracket(dphib, phi, LPoly::constant(vac(Scalar(1))));
    pres.set_bracket(phi, dphib,
                     LPoly::constant(vac(Scalar(p == 0 ? -1 : 1))));
    pres.set_bracket(phib, dphi,
                     LPoly::constant(vac(Scalar(p == 0 ? 1 : -1))));
    d.action[phi] = letter(dphi);
    d.action[dphi] = letter(phi, 1);
    d.action[phib] = letter(dphib);
    d.action[dphib] = letter(phib, 1);
  }
  return f;
}

/// tau^ch of a fermion block, shifted by d(sum m_a phi_a phibar_a).
VElement tau_ch(const VertexAlgebra& va, const FermionIdx& f,
                const std::vector<int>& parities,
                const std::vector<Scalar>& m) {
  VElement tau;
  for (size_t a = 0; a < parities.size(); ++a) {
    if (parities[a] % 2 == 0)
      tau += va.nop(letter(f.phi[a], 1), letter(f.phib[a]));
    else
      tau += va.nop(letter(f.phi[a]), letter(f.phib[a], 1));
    tau += va.nop(letter(f.dphi[a]), letter(f.dphib[a]));
    tau += va.partial(va.nop(letter(f.phi[a]), letter(f.phib[a])))
               .scaled(m[a]);
  }
  return tau;
}

}  // namespace

ChargedFermions build_charged_fermions(const std::vector<int>& parities) {
  LcaPresentation pres;
  DerivationSpec d;
  FermionIdx f = append_fermions(pres, parities, d);
  pres.derivations["D"] = d;
  ChargedFermions r;
  r.va = std::make_shared<VertexAlgebra>(std::move(pres));
  r.phi = f.phi;
  r.dphi = f.dphi;
  r.phib = f.phib;
  r.dphib = f.dphib;
  r.parity = parities;
  return r;
}

TauCharged tau_charged(const ChargedFermions& f, const std::vector<Scalar>& m) {
  if (m.size() != f.parity.size())
    throw std::invalid_argument("tau_charged: one m per fermion pair");
  const VertexAlgebra& va = *f.va;
  FermionIdx idx{f.phi, f.dphi, f.phib, f.dphib};
  TauCharged r;
  r.tau0 = tau_ch(va, idx, f.parity, std::vector<Scalar>(m.size()));
  r.tau = tau_ch(va, idx, f.parity, m);
  for (auto& ma : m) r.charge = r.charge + ma * 6 + Scalar(3);
  r.cert = verify_superconformal({SconfMode::N1, f.va, r.tau});
  r.cert.report.add(
      "charge matches sum (6 m_a + 3)", r.cert.charge == r.charge,
      "engine " + r.cert.charge.str() + " ; closed form " + r.charge.str());
  return r;
}

namespace {

mpq_class rat_value(const Scalar& s) {
  if (!s.num().is_constant() || !s.den().is_constant())
    throw std::invalid_argument("expected a rational constant");
  GRat n = s.num().constant_value(), d = s.den().constant_value();
  if (!n.is_rational() || !d.is_rational() || d.re() == 0)
    throw std::invalid_argument("expected a rational constant");
  return n.re() / d.re();
}

}  // namespace

BrstResult brst_tau(const LieSuperalgebraData& g,
                    const std::vector<Scalar>& grading, const Scalar& k,
                    const std::vector<Scalar>& h,
                    const std::vector<Scalar>& m) {
  int n = g.dim();
  if (static_cast<int>(grading.size()) != n ||
      static_cast<int>(h.size()) != n)
    throw std::invalid_argument("brst_tau: grading and h must match dim g");
  if (k.is_zero())
    throw std::invalid_argument("brst_tau: level k must be nonzero");
  // h must reproduce the grading: [h, u_l] = 2 i_l u_l.
  for (int l = 0; l < n; ++l) {
    std::map<int, Scalar> acc;
    for (int j = 0; j < n; ++j)
      for (auto& [s, cf] : g.lie(j, l)) {
        Scalar x = (acc.count(s) ? acc[s] : Scalar(0)) + h[j] * cf;
        if (x.is_zero())
          acc.erase(s);
        else
          acc[s] = x;
      }
    std::map<int, Scalar> want;
    Scalar w = grading[l] * 2;
    if (!w.is_zero()) want[l] = w;
    if (acc != want)
      throw std::invalid_argument(
          "brst_tau: h does not induce the grading on " + g.names[l]);
  }
  std::vector<int> positive, fpar;
  for (int l = 0; l < n; ++l)
    if (rat_value(grading[l]) > 0) {
      positive.push_back(l);
      fpar.push_back(g.parities[l]);
    }
  if (m.size() != positive.size())
    throw std::invalid_argument("brst_tau: one m per basis element of n");

  LcaPresentation pres = build_susy_cur(g);
  pres.specialize(pres.require("K"), k);
  DerivationSpec d = pres.derivations.at("D");
  FermionIdx f = append_fermions(pres, fpar, d);
  pres.derivations["D"] = d;
  auto va = std::make_shared<VertexAlgebra>(std::move(pres));

  BrstResult r;
  r.va = va;
  r.fermions = {va, f.phi, f.dphi, f.phib, f.dphib, fpar};
  VElement hbar;
  for (int j = 0; j < n; ++j) hbar += VElement::letter({n + j, 0}, h[j]);
  r.tau = kt_vector(*va, g, k) + va->partial(hbar) + tau_ch(*va, f, fpar, m);

  Scalar sd(superdimension(g));
  Scalar hh;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hh = hh + h[i] * h[j] * g.form[i][j];
  r.charge = (k * 3 - dual_coxeter(g) * 2) * sd / (k * 2) - k * hh * 3;
  for (auto& ma : m) r.charge = r.charge + ma * 6 + Scalar(3);
  r.cert = verify_superconformal({SconfMode::N1, va, r.tau});
  r.cert.report.add(
      "charge matches (3k - 2 h^v) sdim g / (2k) - 3k(h|h) + sum (6 m_a + 3)",
      r.cert.charge == r.charge,
      "engine " + r.cert.charge.str() + " ; closed form " + r.charge.str());

  // Corollary: Lambda-brackets of tau^C with every generator.
  r.corollary.name = "brst-corollary";
  SusyStructure s = make_susy(va, {"D"});
  auto check = [&](const std::string& what, const VElement& x,
                   const SusyPoly& want) {
    SusyPoly got = Lambda_bracket(s, r.tau, x);
    r.corollary.add(what, got == want,
                    got == want ? "" : "got " + render(*va, got));
  };
  for (int l = 0; l < n; ++l) {
    Scalar ha;
    for (int j = 0; j < n; ++j) ha = ha + h[j] * g.form[j][l];
    SusyPoly want;
    want.add({0, 0, 0, 0}, letter(n + l, 1).scaled(Scalar(2)));
    want.add({1, 0, 0, 0}, letter(n + l).scaled(Scalar(1) - grading[l] * 2));
    want.add({0, 0, 1, 0}, letter(l));
    want.add({1, 0, 1, 0}, vac(-(k * ha)));
    check("[tau_L " + g.names[l] + "_bar]", letter(n + l), want);
  }
  for (size_t a = 0; a < positive.size(); ++a) {
    Scalar sg(fpar[a] % 2 == 0 ? -1 : 1);
    Scalar w = (sg * (m[a] * 2 + Scalar(1)) + Scalar(1)) * Scalar(1, 2);
    Scalar wb = (-sg * (m[a] * 2 + Scalar(1)) + Scalar(1)) * Scalar(1, 2);
    SusyPoly want;
    want.add({0, 0, 0, 0}, letter(f.phi[a], 1).scaled(Scalar(2)));
    want.add({1, 0, 0, 0}, letter(f.phi[a]).scaled(w));
    want.add({0, 0, 1, 0}, letter(f.dphi[a]));
    check("[tau_L phi" + std::to_string(a + 1) + "]", letter(f.phi[a]), want);
    SusyPoly wantb;
    wantb.add({0, 0, 0, 0}, letter(f.phib[a], 1).scaled(Scalar(2)));
    wantb.add({1, 0, 0, 0}, letter(f.phib[a]).scaled(wb));
    wantb.add({0, 0, 1, 0}, letter(f.dphib[a]));
    check("[tau_L phib" + std::to_string(a + 1) + "]", letter(f.phib[a]),
          wantb);
  }
  return r;
}

namespace {

void require_additive_grading(const LieSuperalgebraData& g) {
  int n = g.dim();
  if (static_cast<int>(g.grading.size()) != n)
    throw std::invalid_argument(
        "current_superconformal: grading required on every basis element");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& [s, cf] : g.lie(i, j))
        if (g.grading[s] != g.grading[i] + g.grading[j])
          throw std::invalid_argument(
              "current_superconformal: grading is not additive on [" +
              g.names[i] + ", " + g.names[j] + "]");
}

/// D-action of x_(0) on every generator, via a throwaway engine on pres.
DerivationSpec zeroth_product_derivation(const LcaPresentation& pres,
                                         const VElement& x) {
  VertexAlgebra tmp(pres);
  DerivationSpec d;
  for (size_t j = 0; j < pres.gens.size(); ++j)
    d.action[static_cast<int>(j)] =
        tmp.nth_product(x, 0, letter(static_cast<int>(j)));
  return d;
}

CurrentSconf current_n1(const LieSuperalgebraData& g, const Scalar& c) {
  int n = g.dim();
  LcaPresentation r;
  int L = r.add_gen("L", 0);
  int G = r.add_gen("G", 1);
  int C = r.add_gen("C", 0, /*central=*/true);
  for (int i = 0; i < n; ++i) r.add_gen(g.names[i], g.parities[i]);
  for (int i = 0; i < n; ++i)
    r.add_gen(g.names[i] + "_bar", 1 - g.parities[i]);
  auto cur = [&](int i) { return 3 + i; };
  auto bar = [&](int i) { return 3 + n + i; };
  r.set_bracket(L, L, mk({{0, letter(L, 1)}, {1, letter(L).scaled(2)},
                          {3, VElement::letter({C, 0}, Scalar(1, 12))}}));
  r.set_bracket(L, G,
                mk({{0, letter(G, 1)}, {1, letter(G).scaled(Scalar(3, 2))}}));
  r.set_bracket(G, G, mk({{0, letter(L).scaled(2)},
                          {2, VElement::letter({C, 0}, Scalar(1, 3))}}));
  for (int i = 0; i < n; ++i) {
    Scalar delta = Scalar(1) - g.grading[i];
    r.set_bracket(L, cur(i),
                  mk({{0, letter(cur(i), 1)}, {1, letter(cur(i)).scaled(delta)}}));
    r.set_bracket(L, bar(i),
                  mk({{0, letter(bar(i), 1)},
                      {1, letter(bar(i)).scaled(delta - Scalar(1, 2))}}));
    r.set_bracket(G, cur(i),
                  mk({{0, letter(bar(i), 1)},
                      {1, letter(bar(i)).scaled(delta * 2 - Scalar(1))}}));
    r.set_bracket(G, bar(i), mk({{0, letter(cur(i))}}));
    for (int j = 0; j < n; ++j) {
      VElement lin0, lin0bar;
      for (auto& [s, cf] : g.lie(i, j)) {
        lin0 += VElement::letter({cur(s), 0}, cf);
        lin0bar += VElement::letter({bar(s), 0}, cf);
      }
      Scalar sg(g.parities[i] == 0 ? 1 : -1);
      if (!lin0.is_zero()) {
        r.set_bracket(cur(i), cur(j), mk({{0, lin0}}));
        r.set_bracket(cur(i), bar(j), mk({{0, lin0bar.scaled(sg)}}));
      }
    }
  }
  r.specialize(C, c);
  r.derivations["D"] = zeroth_product_derivation(r, letter(G));

  CurrentSconf out;
  out.va = std::make_shared<VertexAlgebra>(std::move(r));
  out.candidate = {SconfMode::N1, out.va, letter(G)};
  out.structure = make_susy(out.va, {"D"});
  out.report = out.va->check_lca_axioms();
  out.report.merge(check_susy_structure(out.structure, 7, /*rounds=*/2));
  out.cert = verify_superconformal(out.candidate);
  out.cert.report.add("charge equals specialized c", out.cert.charge == c);
  return out;
}

CurrentSconf current_n2(const LieSuperalgebraData& g, const Scalar& c) {
  int n = g.dim();
  LcaPresentation r;
  int L = r.add_gen("L", 0);
  int Gp = r.add_gen("Gp", 1);
  int Gm = r.add_gen("Gm", 1);
  int J = r.add_gen("J", 0);
  int C = r.add_gen("C", 0, /*central=*/true);
  for (int i = 0; i < n; ++i) r.add_gen(g.names[i], g.parities[i]);
  for (int i = 0; i < n; ++i)
    r.add_gen(g.names[i] + "_bar", 1 - g.parities[i]);
  for (int i = 0; i < n; ++i)
    r.add_gen(g.names[i] + "_circ", 1 - g.parities[i]);
  for (int i = 0; i < n; ++i)
    r.add_gen(g.names[i] + "_barcirc", g.parities[i]);
  auto cur = [&](int i) { return 5 + i; };
  auto bar = [&](int i) { return 5 + n + i; };
  auto circ = [&](int i) { return 5 + 2 * n + i; };
  auto bcirc = [&](int i) { return 5 + 3 * n + i; };
  Scalar I = Scalar::i();
  // SVir_{N=2} block, eq. (2.4)
  r.set_bracket(L, L, mk({{0, letter(L, 1)}, {1, letter(L).scaled(2)},
                          {3, VElement::letter({C, 0}, Scalar(1, 12))}}));
  for (int X : {Gp, Gm})
    r.set_bracket(L, X,
                  mk({{0, letter(X, 1)}, {1, letter(X).scaled(Scalar(3, 2))}}));
  r.set_bracket(L, J, mk({{0, letter(J, 1)}, {1, letter(J)}}));
  r.set_bracket(Gp, Gm,
                mk({{0, letter(L) + letter(J, 1).scaled(Scalar(1, 2))},
                    {1, letter(J)},
                    {2, VElement::letter({C, 0}, Scalar(1, 6))}}));
  r.set_bracket(Gp, J, mk({{0, -letter(Gp)}}));
  r.set_bracket(Gm, J, mk({{0, letter(Gm)}}));
  r.set_bracket(J, J, mk({{1, VElement::letter({C, 0}, Scalar(1, 3))}}));
  // conformal weights of the current quadruples, eq. (constraints)
  for (int i = 0; i < n; ++i) {
    Scalar delta = Scalar(1) - g.grading[i];
    auto wt = [&](int x, Scalar w) {
      r.set_bracket(L, x, mk({{0, letter(x, 1)}, {1, letter(x).scaled(w)}}));
    };
    wt(cur(i), delta);
    wt(bar(i), delta - Scalar(1, 2));
    wt(circ(i), delta - Scalar(1, 2));
    wt(bcirc(i), delta - Scalar(1));
    // [G^{+-}_l .] = (1/2)([G+ + G-_l .] +- [G+ - G-_l .])
    Scalar w1 = delta * 2 - Scalar(1), w2 = delta * 2 - Scalar(2);
    for (int sg : {1, -1}) {
      int X = sg > 0 ? Gp : Gm;
      Scalar si = I * Scalar(sg) * Scalar(1, 2);
      r.set_bracket(X, cur(i),
                    mk({{0, letter(bar(i), 1).scaled(Scalar(1, 2)) +
                                letter(circ(i), 1).scaled(si)},
                        {1, letter(bar(i)).scaled(w1 * Scalar(1, 2)) +
                                letter(circ(i)).scaled(si * w1)}}));
      r.set_bracket(X, bar(i),
                    mk({{0, letter(cur(i)).scaled(Scalar(1, 2)) +
                                letter(bcirc(i), 1).scaled(si)},
                        {1, letter(bcirc(i)).scaled(si * w2)}}));
      r.set_bracket(X, circ(i),
                    mk({{0, letter(bcirc(i), 1).scaled(Scalar(-1, 2)) +
                                letter(cur(i)).scaled(si)},
                        {1, letter(bcirc(i)).scaled(w2 * Scalar(-1, 2))}}));
      r.set_bracket(X, bcirc(i),
                    mk({{0, letter(circ(i)).scaled(Scalar(-1, 2)) +
                                letter(bar(i)).scaled(si)}}));
    }
    r.set_bracket(J, cur(i), mk({{1, letter(bcirc(i)).scaled(I * w2)}}));
    r.set_bracket(J, bar(i), mk({{0, letter(circ(i)).scaled(I)}}));
    r.set_bracket(J, circ(i), mk({{0, letter(bar(i)).scaled(-I)}}));
    // current block, eq. (N=2 affine brackets) at level 0
    for (int j = 0; j < n; ++j) {
      VElement b0, b0bar, b0circ, b0bc;
      for (auto& [s, cf] : g.lie(i, j)) {
        b0 += VElement::letter({cur(s), 0}, cf);
        b0bar += VElement::letter({bar(s), 0}, cf);
        b0circ += VElement::letter({circ(s), 0}, cf);
        b0bc += VElement::letter({bcirc(s), 0}, cf);
      }
      if (b0.is_zero()) continue;
      Scalar sg(g.parities[i] == 0 ? 1 : -1);
      r.set_bracket(cur(i), cur(j), mk({{0, b0}}));
      r.set_bracket(cur(i), bar(j), mk({{0, b0bar.scaled(sg)}}));
      r.set_bracket(cur(i), circ(j), mk({{0, b0circ.scaled(sg)}}));
      r.set_bracket(cur(i), bcirc(j), mk({{0, b0bc}}));
      r.set_bracket(circ(i), bar(j), mk({{0, b0bc.scaled(sg)}}));
      r.set_bracket(bar(i), circ(j), mk({{0, b0bc.scaled(-sg)}}));
    }
  }
  r.specialize(C, c);
  r.derivations["D1"] =
      zeroth_product_derivation(r, letter(Gp) + letter(Gm));
  r.derivations["D2"] =
      zeroth_product_derivation(r, (letter(Gp) - letter(Gm)).scaled(-I));

  CurrentSconf out;
  out.va = std::make_shared<VertexAlgebra>(std::move(r));
  out.candidate = {SconfMode::N2, out.va, {}, letter(Gp), letter(Gm)};
  out.structure = make_susy(out.va, {"D1", "D2"});
  out.report = out.va->check_lca_axioms();
  out.report.merge(check_susy_structure(out.structure, 7, /*rounds=*/2));
  out.cert = verify_superconformal(out.candidate);
  out.cert.report.add("charge equals specialized c", out.cert.charge == c);
  return out;
}

}  // namespace

CurrentSconf current_superconformal(const LieSuperalgebraData& g,
                                    SconfMode mode, const Scalar& c) {
  require_additive_grading(g);
  switch (mode) {
    case SconfMode::N1:
      return current_n1(g, c);
    case SconfMode::N2:
      return current_n2(g, c);
    default:
      throw std::invalid_argument(
          "current_superconformal: mode must be N1 or N2");
  }
}

namespace {

DerivationSpec combination_derivation(const VertexAlgebra& va,
                                      const VElement& x) {
  DerivationSpec d;
  int ngen = static_cast<int>(va.pres().gens.size());
  for (int j = 0; j < ngen; ++j)
    d.action[j] = va.nth_product(x, 0, letter(j));
  return d;
}

void require_square_zero(const VertexAlgebra& va, const VElement& gpm,
                         const std::string& name) {
  VElement sq = va.nth_product(gpm, 0, gpm);
  int ngen = static_cast<int>(va.pres().gens.size());
  for (int j = 0; j < ngen; ++j)
    if (!va.nth_product(sq, 0, letter(j)).is_zero())
      throw std::invalid_argument("derivations_from_sconf: (" + name +
                                  "_(0)" + name + ")_(0) != 0");
}

}  // namespace

SusyStructure derivations_from_sconf(const SconfCandidate& c,
                                     const Scalar& mu) {
  if (mu.is_zero())
    throw std::invalid_argument("derivations_from_sconf: mu must be a unit");
  const VertexAlgebra& va = c.algebra();
  if (c.mode == SconfMode::N1)
    return {1, c.va, {combination_derivation(va, c.G)}};
  require_square_zero(va, c.Gp, "G+");
  require_square_zero(va, c.Gm, "G-");
  Scalar I = Scalar::i();
  VElement d1 = c.Gp.scaled(mu) + c.Gm.scaled(mu.inv());
  VElement d2 = (c.Gp.scaled(mu) - c.Gm.scaled(mu.inv())).scaled(I);
  SusyStructure s;
  s.va = c.va;
  s.d = {combination_derivation(va, d1), combination_derivation(va, d2)};
  s.n = 2;
  if (c.mode == SconfMode::N3) {
    s.d.push_back(combination_derivation(
        va, c.G0.scaled(Scalar(GRat::sqrt_two()))));
    s.n = 3;
  }
  return s;
}

SusyStructure derivations_n4(std::shared_ptr<const VertexAlgebra> va,
                             const VElement& gp, const VElement& gm,
                             const VElement& gpbar, const VElement& gmbar,
                             const Scalar& mu, const Scalar& nu) {
  if (mu.is_zero() || nu.is_zero())
    throw std::invalid_argument("derivations_n4: mu, nu must be units");
  Scalar I = Scalar::i();
  const VertexAlgebra& A = *va;
  VElement x1 = gp.scaled(mu) + gmbar.scaled(mu.inv());
  VElement x2 = (gp.scaled(mu) - gmbar.scaled(mu.inv())).scaled(I);
  VElement x3 = gm.scaled(nu) + gpbar.scaled(nu.inv());
  VElement x4 = (gm.scaled(nu) - gpbar.scaled(nu.inv())).scaled(I);
  SusyStructure s;
  s.n = 4;
  s.va = std::move(va);
  s.d = {combination_derivation(A, x1), combination_derivation(A, x2),
         combination_derivation(A, x3), combination_derivation(A, x4)};
  return s;
}

}  // namespace lcva
