#include "doctest.h"
#include "lcva/named.hpp"
#include "lcva/sconf.hpp"

using namespace lcva;

namespace {

VElement g(int idx, int ord = 0, Scalar c = Scalar(1)) {
  return VElement::letter({idx, ord}, std::move(c));
}

std::shared_ptr<const VertexAlgebra> make_named(const std::string& name,
                                                const Scalar& central) {
  LcaPresentation pres = build_named(name);
  int C = pres.require("C");
  if (!pres.central_values.count(C)) pres.specialize(C, central);
  return std::make_shared<VertexAlgebra>(std::move(pres));
}

bool same_action(const VertexAlgebra& va, const DerivationSpec& a,
                 const DerivationSpec& b) {
  for (size_t j = 0; j < va.pres().gens.size(); ++j) {
    VElement x = g(static_cast<int>(j));
    if (va.apply_derivation(a, x) != va.apply_derivation(b, x)) return false;
  }
  return true;
}

DerivationSpec scaled_action(const DerivationSpec& d, const Scalar& c) {
  DerivationSpec r = d;
  for (auto& [j, v] : r.action) v = v.scaled(c);
  return r;
}

}  // namespace

TEST_CASE("super-Virasoro vectors verify against their own algebras") {
  Scalar c = Scalar::param("c");
  auto va1 = make_named("svir", c);
  SconfCertificate n1 =
      verify_superconformal({SconfMode::N1, va1, g(va1->pres().require("G"))});
  INFO(n1.report.text());
  CHECK(n1.pass());
  CHECK(n1.L == g(va1->pres().require("L")));
  CHECK(n1.charge == c);

  auto va2 = make_named("svir_n2", c);
  SconfCandidate c2{SconfMode::N2, va2};
  c2.Gp = g(va2->pres().require("Gp"));
  c2.Gm = g(va2->pres().require("Gm"));
  SconfCertificate n2 = verify_superconformal(c2);
  INFO(n2.report.text());
  CHECK(n2.pass());
  CHECK(n2.L == g(va2->pres().require("L")));
  CHECK(n2.J == g(va2->pres().require("J")));
  CHECK(n2.charge == c);

  auto va3 = make_named("svir_n3", c);
  SconfCandidate c3{SconfMode::N3, va3};
  c3.Gp = g(va3->pres().require("Gp"));
  c3.Gm = g(va3->pres().require("Gm"));
  c3.G0 = g(va3->pres().require("G0"));
  c3.Phi = g(va3->pres().require("Phi"));
  SconfCertificate n3 = verify_superconformal(c3);
  INFO(n3.report.text());
  CHECK(n3.pass());
  CHECK(n3.L == g(va3->pres().require("L")));
  CHECK(n3.J == g(va3->pres().require("J0")));
  CHECK(n3.Jp == g(va3->pres().require("Jp")));
  CHECK(n3.Jm == g(va3->pres().require("Jm")));
  CHECK(n3.charge == c);
}

TEST_CASE("N=1 vector of the bc-betagamma system") {
  auto va = make_named("bc_betagamma", Scalar(1));
  int be = va->pres().require("beta"), ga = va->pres().require("gamma");
  int b = va->pres().require("b"), c = va->pres().require("c");
  VElement G = va->nop(g(ga, 1), g(b)) + va->nop(g(c), g(be));
  SconfCertificate cert = verify_superconformal({SconfMode::N1, va, G});
  INFO(cert.report.text());
  CHECK(cert.pass());
  CHECK(cert.charge == Scalar(3));
  VElement L = va->nop(g(c), g(b, 1)).scaled(Scalar(-1, 2)) +
               va->nop(g(c, 1), g(b)).scaled(Scalar(1, 2)) +
               va->nop(g(ga, 1), g(be));
  CHECK(cert.L == L);
  // G_(0) is the registered odd derivation D
  const DerivationSpec& d = va->pres().derivations.at("D");
  for (size_t j = 0; j < va->pres().gens.size(); ++j) {
    VElement x = g(static_cast<int>(j));
    CHECK(va->nth_product(G, 0, x) == va->apply_derivation(d, x));
  }
  // a generator that is not superconformal is rejected
  CHECK_FALSE(verify_superconformal({SconfMode::N1, va, g(b)}).pass());
}

TEST_CASE("conformal weight invariants") {
  Scalar c = Scalar::param("c");
  auto va = make_named("svir", c);
  VElement L = g(va->pres().require("L")), G = g(va->pres().require("G"));
  WeightInfo wg = conformal_weight(*va, L, G);
  CHECK(wg.delta == Scalar(3, 2));
  CHECK(wg.primary);
  WeightInfo wdg = conformal_weight(*va, L, va->partial(G));
  CHECK(wdg.delta == Scalar(5, 2));
  CHECK_FALSE(wdg.primary);
  WeightInfo wl = conformal_weight(*va, L, L);
  CHECK(wl.delta == Scalar(2));
  CHECK_FALSE(wl.primary);  // quasi-primary only: central l^3 term
  WeightInfo wvac = conformal_weight(*va, L, VElement::unit());
  CHECK(wvac.delta == Scalar(0));
  CHECK(wvac.primary);
  CHECK_THROWS_AS(conformal_weight(*va, L, L + G), std::invalid_argument);
  CHECK_THROWS_AS(conformal_weight(*va, L, VElement()), std::invalid_argument);
}

TEST_CASE("Kac-Todorov vector of sl2 at symbolic level") {
  Scalar k = Scalar::param("k");
  KacTodorov kt = kac_todorov(lie_sl2(), k);
  INFO(kt.cert.report.text());
  CHECK(kt.cert.pass());
  CHECK(kt.charge == (k - Scalar(2)) * Scalar(3) / k + Scalar(3, 2));
  CHECK(kt.cert.charge == kt.charge);
  // currents have weight 1, their superpartners 1/2, all primary
  const VertexAlgebra& va = *kt.va;
  int e = va.pres().require("e"), ebar = va.pres().require("e_bar");
  WeightInfo we = conformal_weight(va, kt.cert.L, g(e));
  CHECK(we.delta == Scalar(1));
  CHECK(we.primary);
  WeightInfo web = conformal_weight(va, kt.cert.L, g(ebar));
  CHECK(web.delta == Scalar(1, 2));
  CHECK(web.primary);
  // [tau_L tau] = (2 d + 3 lambda + chi D) tau + (c/3) lambda^2 chi
  SusyStructure s = make_susy(kt.va, {"D"});
  SusyPoly got = Lambda_bracket(s, kt.tau, kt.tau);
  SusyPoly want;
  want.add({0, 0, 0, 0}, va.partial(kt.tau).scaled(Scalar(2)));
  want.add({1, 0, 0, 0}, kt.tau.scaled(Scalar(3)));
  want.add({0, 0, 1, 0},
           va.apply_derivation(va.pres().derivations.at("D"), kt.tau));
  want.add({2, 0, 1, 0}, VElement::unit().scaled(kt.charge * Scalar(1, 3)));
  CHECK(got == want);
  CHECK_THROWS_AS(kac_todorov(lie_sl2(), Scalar(0)), std::invalid_argument);
}

TEST_CASE("Kac-Todorov vector of the abelian algebra") {
  Scalar k = Scalar::param("k");
  KacTodorov kt = kac_todorov(lie_abelian1(), k);
  INFO(kt.cert.report.text());
  CHECK(kt.cert.pass());
  CHECK(kt.charge == Scalar(3, 2));
}

TEST_CASE("shift of the Kac-Todorov vector by a Cartan element") {
  Scalar k = Scalar::param("k");
  Scalar m = Scalar::param("m");
  KacTodorov kt = kac_todorov(lie_sl2(), k);
  const VertexAlgebra& va = *kt.va;
  VElement v = g(va.pres().require("h_bar"), 0, m);
  ShiftResult r = shift_superconformal(kt.va, kt.tau, v);
  INFO(r.cert.report.text());
  CHECK(r.cert.pass());
  CHECK(r.c1 == Scalar(0));
  CHECK(r.c2 == k * m * m * 2);  // [v_l v] = m^2 k (h|h)
  CHECK(r.charge == kt.charge - k * m * m * 6);
  CHECK(r.G == kt.tau + va.partial(v));
  // shifting back by -v round-trips
  ShiftResult back = shift_superconformal(kt.va, r.G, -v);
  CHECK(back.G == kt.tau);
  CHECK(back.L == kt.cert.L);
  CHECK(back.charge == kt.charge);
  // hypothesis violations are rejected
  CHECK_THROWS_AS(shift_superconformal(kt.va, kt.tau,
                                       g(va.pres().require("e"))),
                  std::invalid_argument);
}

TEST_CASE("charged free fermions") {
  Scalar m = Scalar::param("m");
  ChargedFermions f = build_charged_fermions({0});
  TauCharged t0 = tau_charged(f, {Scalar(0)});
  INFO(t0.cert.report.text());
  CHECK(t0.cert.pass());
  CHECK(t0.charge == Scalar(3));
  CHECK(t0.tau == t0.tau0);
  TauCharged tm = tau_charged(f, {m});
  INFO(tm.cert.report.text());
  CHECK(tm.cert.pass());
  CHECK(tm.charge == m * 6 + Scalar(3));
  CHECK(tm.tau ==
        t0.tau0 + f.va->partial(f.va->nop(g(f.phi[0]), g(f.phib[0]))).scaled(m));
  // odd pair, two pairs
  ChargedFermions f2 = build_charged_fermions({1, 0});
  TauCharged t2 = tau_charged(f2, {Scalar(1), Scalar(-1)});
  INFO(t2.cert.report.text());
  CHECK(t2.cert.pass());
  CHECK(t2.charge == Scalar(6));
  CHECK_THROWS_AS(tau_charged(f2, {m}), std::invalid_argument);
}

TEST_CASE("BRST vector for sl2 with the principal grading") {
  Scalar k = Scalar::param("k");
  std::vector<Scalar> grading = {Scalar(1, 2), Scalar(0), Scalar(-1, 2)};
  std::vector<Scalar> h = {Scalar(0), Scalar(1, 2), Scalar(0)};
  BrstResult r = brst_tau(lie_sl2(), grading, k, h, {Scalar(0)});
  INFO(r.cert.report.text());
  CHECK(r.cert.pass());
  INFO(r.corollary.text());
  CHECK(r.corollary.pass());
  Scalar want = (k * 3 - Scalar(4)) * Scalar(3) / (k * 2) - k * Scalar(3, 2) +
                Scalar(3);
  CHECK(r.charge == want);
  const VertexAlgebra& va = *r.va;
  // phi is primary of weight -m/2 = 0, phibar of weight m/2 + 1/2 = 1/2
  WeightInfo wp = conformal_weight(va, r.cert.L, g(r.fermions.phi[0]));
  CHECK(wp.delta == Scalar(0));
  CHECK(wp.primary);
  WeightInfo wpb = conformal_weight(va, r.cert.L, g(r.fermions.phib[0]));
  CHECK(wpb.delta == Scalar(1, 2));
  CHECK(wpb.primary);
  // e_bar primary of weight 1/2 - i = 0; e of weight 1 - i = 1/2
  WeightInfo web = conformal_weight(va, r.cert.L, g(va.pres().require("e_bar")));
  CHECK(web.delta == Scalar(0));
  CHECK(web.primary);
  WeightInfo we = conformal_weight(va, r.cert.L, g(va.pres().require("e")));
  CHECK(we.delta == Scalar(1, 2));
  // charge shifts by 6 per unit of m
  BrstResult r1 = brst_tau(lie_sl2(), grading, k, h, {Scalar(1)});
  CHECK(r1.charge == r.charge + Scalar(6));
  CHECK(r1.cert.pass());
  // h must induce the grading
  CHECK_THROWS_AS(brst_tau(lie_sl2(), grading, k,
                           {Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0)}),
                  std::invalid_argument);
}

TEST_CASE("superconformal current algebra, N=1") {
  Scalar c = Scalar::param("c");
  CurrentSconf cur = current_superconformal(lie_sl2(), SconfMode::N1, c);
  INFO(cur.report.text());
  CHECK(cur.report.pass());
  INFO(cur.cert.report.text());
  CHECK(cur.cert.pass());
  CHECK(cur.cert.charge == c);
  const VertexAlgebra& va = *cur.va;
  int e = va.pres().require("e"), ebar = va.pres().require("e_bar");
  int f = va.pres().require("f"), G = va.pres().require("G");
  // Delta_e = 1 - omega(e) = 0: [G_l e] = (d + (2*0-1) l) e_bar
  LPoly ge = va.bracket(g(G), g(e));
  CHECK(ge.coeff(0) == g(ebar, 1));
  CHECK(ge.coeff(1) == -g(ebar));
  CHECK(va.bracket(g(G), g(ebar)) == LPoly::constant(g(e)));
  CHECK(conformal_weight(va, g(va.pres().require("L")), g(f)).delta ==
        Scalar(2));
  // abelian case
  CurrentSconf ab = current_superconformal(lie_abelian1(), SconfMode::N1, c);
  CHECK(ab.report.pass());
  CHECK(ab.cert.pass());
}

TEST_CASE("superconformal current algebra, N=2") {
  Scalar c = Scalar::param("c");
  CurrentSconf cur = current_superconformal(lie_abelian1(), SconfMode::N2, c);
  INFO(cur.report.text());
  CHECK(cur.report.pass());
  INFO(cur.cert.report.text());
  CHECK(cur.cert.pass());
  CHECK(cur.cert.charge == c);
  // a non-additive grading is rejected
  LieSuperalgebraData bad = lie_sl2();
  bad.grading = {Scalar(1), Scalar(1), Scalar(1)};
  CHECK_THROWS_AS(current_superconformal(bad, SconfMode::N2, c),
                  std::invalid_argument);
}

TEST_CASE("derivation pairs from the extended bc-betagamma vectors") {
  auto va = make_named("bcbg_ext", Scalar(1));
  auto& p = va->pres();
  Scalar I = Scalar::i();
  int al = p.require("alpha"), be = p.require("beta"), ga = p.require("gamma"),
      de = p.require("delta");
  int a = p.require("a"), b = p.require("b"), c = p.require("c"),
      d = p.require("d");
  VElement Gph = (va->nop(g(c), g(be)) - va->nop(g(a), g(de))).scaled(I);
  VElement Gmh = (-va->nop(g(ga, 1), g(b)) + va->nop(g(al, 1), g(d))).scaled(I);
  SconfCandidate hcand{SconfMode::N2, va, {}, Gph, Gmh};
  SconfCertificate hcert = verify_superconformal(hcand);
  INFO(hcert.report.text());
  CHECK(hcert.pass());
  CHECK(hcert.charge == Scalar(6));
  CHECK(hcert.J == va->nop(g(c), g(b)) - va->nop(g(a), g(d)));

  VElement Gpv = va->nop(g(d), g(be)) - va->nop(g(b), g(de));
  VElement Gmv = -va->nop(g(ga, 1), g(a)) + va->nop(g(al, 1), g(c));
  SconfCandidate vcand{SconfMode::N2, va, {}, Gpv, Gmv};
  CHECK(verify_superconformal(vcand).pass());

  // the combination of both pairs reproduces the registered D1, D2
  VElement Gp = (Gph - Gmh + Gpv + Gmv).scaled(I * Scalar(-1, 2));
  VElement Gm = (Gph - Gmh - Gpv - Gmv).scaled(I * Scalar(-1, 2));
  SconfCandidate comb{SconfMode::N2, va, {}, Gp, Gm};
  SconfCertificate ccert = verify_superconformal(comb);
  INFO(ccert.report.text());
  CHECK(ccert.pass());
  CHECK(ccert.charge == Scalar(6));
  CHECK(ccert.J == (va->nop(g(a), g(c)) + va->nop(g(b), g(d))).scaled(I));
  SusyStructure scomb = derivations_from_sconf(comb, Scalar(1));
  CHECK(same_action(*va, scomb.d[0], p.derivations.at("D1")));
  CHECK(same_action(*va, scomb.d[1], p.derivations.at("D2")));

  // D1 = -D2_h and D2 = D1_v
  SusyStructure sh = derivations_from_sconf(hcand, Scalar(1));
  SusyStructure sv = derivations_from_sconf(vcand, Scalar(1));
  CHECK(same_action(*va, scomb.d[0], scaled_action(sh.d[1], Scalar(-1))));
  CHECK(same_action(*va, scomb.d[1], sv.d[0]));
  CHECK(check_susy_structure(sh, 7, /*rounds=*/2).pass());
}

TEST_CASE("mu-twisted derivations and the O2 action") {
  Scalar c = Scalar::param("c");
  auto va = make_named("svir_n2", c);
  SconfCandidate cand{SconfMode::N2, va};
  cand.Gp = g(va->pres().require("Gp"));
  cand.Gm = g(va->pres().require("Gm"));
  SusyStructure s1 = derivations_from_sconf(cand, Scalar(1));
  CHECK(same_action(*va, s1.d[0], va->pres().derivations.at("D1")));
  CHECK(same_action(*va, s1.d[1], va->pres().derivations.at("D2")));
  for (Scalar mu : {Scalar(2), Scalar(3, 5) + Scalar::i() * Scalar(4, 5)}) {
    SusyStructure smu = derivations_from_sconf(cand, mu);
    Report rep = check_susy_structure(smu, 7, /*rounds=*/2);
    INFO(rep.text());
    CHECK(rep.pass());
    // structure(mu) = A(mu) . structure(1) for an explicit A in O2
    Scalar ch = (mu + mu.inv()) * Scalar(1, 2);
    Scalar sh = Scalar::i() * (mu.inv() - mu) * Scalar(1, 2);
    SusyStructure rot = orthogonal_act({{ch, sh}, {-sh, ch}}, s1);
    CHECK(same_action(*va, smu.d[0], rot.d[0]));
    CHECK(same_action(*va, smu.d[1], rot.d[1]));
  }
  CHECK_THROWS_AS(derivations_from_sconf(cand, Scalar(0)),
                  std::invalid_argument);
}

TEST_CASE("derivation triple of the N=3 algebra") {
  Scalar c = Scalar::param("c");
  auto va = make_named("svir_n3", c);
  SconfCandidate cand{SconfMode::N3, va};
  cand.Gp = g(va->pres().require("Gp"));
  cand.Gm = g(va->pres().require("Gm"));
  cand.G0 = g(va->pres().require("G0"));
  cand.Phi = g(va->pres().require("Phi"));
  SusyStructure s = derivations_from_sconf(cand, Scalar(1));
  CHECK(s.n == 3);
  // D3 = sqrt2 G0_(0): D3(G0) = sqrt2 L, D3 D3 = 2 G0_(0) G0_(0) = d
  CHECK(s.d[2].action.at(va->pres().require("G0")) ==
        g(va->pres().require("L"), 0, Scalar(GRat::sqrt_two())));
  Report rep = check_susy_structure(s, 7, /*rounds=*/2);
  INFO(rep.text());
  CHECK(rep.pass());
}

TEST_CASE("N=4 derivation formulas") {
  Scalar c = Scalar::param("c");
  auto va = make_named("svir_n2", c);
  VElement Gp = g(va->pres().require("Gp")), Gm = g(va->pres().require("Gm"));
  // with Gbar+- := G-+ the first pair reduces to the N=2 derivations ...
  SusyStructure s = derivations_n4(va, Gp, Gm, Gp, Gm, Scalar(1), Scalar(1));
  CHECK(s.n == 4);
  CHECK(same_action(*va, s.d[0], va->pres().derivations.at("D1")));
  CHECK(same_action(*va, s.d[1], va->pres().derivations.at("D2")));
  // ... so D3 = D1 and the quadruple fails [D^i, D^j] = 2 delta_ij d
  CHECK(same_action(*va, s.d[2], s.d[0]));
  CHECK_FALSE(check_susy_structure(s, 7, /*rounds=*/1).pass());
}
