#include "lcva/susy.hpp"

#include <cassert>
#include <stdexcept>

namespace lcva {

namespace {

Scalar sign_of(int s) { return Scalar(s % 2 == 0 ? 1 : -1); }

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
  return r;
}

std::vector<int> set_bits(unsigned mask) {
  std::vector<int> bits;
  for (int b = 0; b < 3; ++b)
    if (mask & (1u << b)) bits.push_back(b);
  return bits;
}

/// Maps a linear element of R (length-1 words) into the bar copy.
VElement overline(const VElement& v, const std::vector<int>& bar_of) {
  VElement r;
  for (auto& [w, c] : v.terms()) {
    if (w.size() != 1)
      throw std::invalid_argument(
          "overline: presentation bracket value is not linear");
    r.add_term({{bar_of[w[0].gen], w[0].ord}}, c);
  }
  return r;
}

/// Non-central generator letters of the presentation.
std::vector<int> usable_gens(const LcaPresentation& p) {
  std::vector<int> r;
  for (size_t j = 0; j < p.gens.size(); ++j)
    if (!p.gens[j].central) r.push_back(static_cast<int>(j));
  return r;
}

}  // namespace

SusyStructure make_susy(std::shared_ptr<const VertexAlgebra> va,
                        const std::vector<std::string>& derivation_names) {
  SusyStructure s;
  s.n = static_cast<int>(derivation_names.size());
  s.va = std::move(va);
  for (auto& name : derivation_names)
    s.d.push_back(s.va->pres().derivations.at(name));
  return s;
}

namespace {

SusyPoly lambda_bracket_impl(const SusyStructure& s, const VElement& x,
                             const VElement& y, bool as_gamma) {
  const VertexAlgebra& va = *s.va;
  auto lift = [&](const VElement& u) {
    return SusyPoly::from_lpoly(va.bracket(u, y), as_gamma);
  };
  auto odd = [&](SusyPoly p, int i) {
    return as_gamma ? p.eta_mul(i) : p.chi_mul(i);
  };
  SusyPoly r;
  if (s.n == 1) {
    r += lift(va.apply_derivation(s.d[0], x));
    r += odd(lift(x), 0);
  } else if (s.n == 2) {
    VElement d1x = va.apply_derivation(s.d[0], x);
    VElement d2x = va.apply_derivation(s.d[1], x);
    r += lift(va.apply_derivation(s.d[1], d1x));
    r = r - odd(lift(d2x), 0);
    r += odd(lift(d1x), 1);
    r = r - odd(odd(lift(x), 1), 0);
  } else {
    throw std::invalid_argument(
        "Lambda_bracket: N=3 structures carry no direct Lambda values");
  }
  return r;
}

}  // namespace

SusyPoly Lambda_bracket(const SusyStructure& s, const VElement& x,
                        const VElement& y) {
  return lambda_bracket_impl(s, x, y, /*as_gamma=*/false);
}

SusyPoly Lambda_bracket_gamma(const SusyStructure& s, const VElement& x,
                              const VElement& y) {
  return lambda_bracket_impl(s, x, y, /*as_gamma=*/true);
}

SusyPoly apply_D(const SusyStructure& s, int i, const SusyPoly& p) {
  const VertexAlgebra& va = *s.va;
  SusyPoly r;
  for (auto& [k, v] : p.terms()) {
    int sign = 1;
    for (int b : set_bits(k.chi)) {
      if (b == i) {  // [D^i, chi^i] = 2 lambda
        SKey nk = k;
        nk.chi &= ~(1u << b);
        nk.lam += 1;
        r.add(nk, v.scaled(Scalar(2 * sign)));
      }
      sign = -sign;
    }
    for (int b : set_bits(k.eta)) {
      if (b == i) {  // [D^i, eta^i] = 2 gamma
        SKey nk = k;
        nk.eta &= ~(1u << b);
        nk.gam += 1;
        r.add(nk, v.scaled(Scalar(2 * sign)));
      }
      sign = -sign;
    }
    VElement dv = va.apply_derivation(s.d[i], v);
    r.add(k, sign > 0 ? dv : -dv);
  }
  return r;
}

SusyPoly subst_minus_nabla_Lambda(const SusyStructure& s, const SusyPoly& p) {
  const VertexAlgebra& va = *s.va;
  SusyPoly r;
  for (auto& [k, v] : p.terms()) {
    assert(k.gam == 0 && k.eta == 0);
    LPoly single;
    single.add(k.lam, v);
    SusyPoly base = SusyPoly::from_lpoly(va.subst_minus_nabla(single));
    // chi^i -> -D^i - chi^i, rightmost factor applied first
    std::vector<int> bits = set_bits(k.chi);
    for (auto it = bits.rbegin(); it != bits.rend(); ++it)
      base = (apply_D(s, *it, base) + base.chi_mul(*it)).scaled(Scalar(-1));
    r += base;
  }
  return r;
}

SusyPoly subst_lambda_plus_gamma(const SusyPoly& p) {
  SusyPoly r;
  for (auto& [k, v] : p.terms()) {
    assert(k.gam == 0 && k.eta == 0);
    SusyPoly base;
    for (int t = 0; t <= k.lam; ++t) {
      SKey nk;
      nk.lam = t;
      nk.gam = k.lam - t;
      base.add(nk, v.scaled(Scalar(binom(k.lam, t))));
    }
    std::vector<int> bits = set_bits(k.chi);
    for (auto it = bits.rbegin(); it != bits.rend(); ++it)
      base = base.chi_mul(*it) + base.eta_mul(*it);
    r += base;
  }
  return r;
}

SusyPoly integrate_Gamma(const SusyPoly& p, int n) {
  SusyPoly q = p;
  for (int i = n; i >= 1; --i) q = q.deriv_eta(i - 1);
  return q.integrated_gamma();
}

std::string render(const VertexAlgebra& va, const SusyPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto& [k, v] : p.terms()) {
    std::string vars;
    auto app = [&](const std::string& t) {
      vars += (vars.empty() ? "" : "*") + t;
    };
    if (k.lam == 1) app("l");
    if (k.lam > 1) app("l^" + std::to_string(k.lam));
    if (k.gam == 1) app("g");
    if (k.gam > 1) app("g^" + std::to_string(k.gam));
    for (int b : set_bits(k.chi)) app("x" + std::to_string(b + 1));
    for (int b : set_bits(k.eta)) app("e" + std::to_string(b + 1));
    std::string t = vars.empty() ? va.render(v)
                                 : "(" + va.render(v) + ")*" + vars;
    if (vars.empty() && v.terms().size() > 1) t = "(" + t + ")";
    out += out.empty() ? t : " + " + t;
  }
  return out;
}

// ---------------------------------------------------------------------------
// checkers

Report check_susy_structure(const SusyStructure& s, unsigned seed, int rounds,
                            int max_len, int max_der) {
  const VertexAlgebra& va = *s.va;
  const LcaPresentation& pres = va.pres();
  Report rep;
  rep.name = "check-susy-structure";

  bool parity_ok = true;
  for (auto& d : s.d) {
    if (d.parity != 1) parity_ok = false;
    for (auto& [g, v] : d.action) {
      int want = (pres.parity(g) + 1) % 2;
      int got = va.parity(v);
      if (got >= 0 && !v.is_zero() && got != want) parity_ok = false;
    }
  }
  rep.add("each D^i is odd on every generator", parity_ok);

  bool anti_ok = true;
  std::string anti_detail;
  for (int i = 0; i < s.n && anti_ok; ++i)
    for (int j = i; j < s.n && anti_ok; ++j)
      for (size_t g = 0; g < pres.gens.size() && anti_ok; ++g) {
        VElement x = VElement::letter({static_cast<int>(g), 0});
        VElement lhs = va.apply_derivation(s.d[i], va.apply_derivation(s.d[j], x)) +
                       va.apply_derivation(s.d[j], va.apply_derivation(s.d[i], x));
        VElement rhs = (i == j) ? va.partial(x).scaled(Scalar(2)) : VElement();
        if (lhs != rhs) {
          anti_ok = false;
          anti_detail = "[D^" + std::to_string(i + 1) + ", D^" +
                        std::to_string(j + 1) + "] on " + pres.gens[g].name +
                        ": " + va.render(lhs) + " vs " + va.render(rhs);
        }
      }
  rep.add("[D^i, D^j] = 2 delta_ij d on all generators", anti_ok, anti_detail);

  std::mt19937_64 rng(seed);
  auto gens = usable_gens(pres);

  bool leib_ok = true;
  for (int r = 0; r < rounds && leib_ok; ++r) {
    VElement x = va.random_element(rng, max_len, max_der);
    VElement y = va.random_element(rng, max_len, max_der);
    int px = va.parity(x);
    if (px < 0) continue;
    for (int i = 0; i < s.n && leib_ok; ++i) {
      VElement lhs = va.apply_derivation(s.d[i], va.nop(x, y));
      VElement rhs = va.nop(va.apply_derivation(s.d[i], x), y) +
                     va.nop(x, va.apply_derivation(s.d[i], y)).scaled(sign_of(px));
      if (lhs != rhs) leib_ok = false;
    }
  }
  rep.add("Leibniz rule for the normally ordered product (random suite)",
          leib_ok);

  // lambda-bracket derivation identity (5.1):
  // D[a_l b] = [Da_l b] + (-1)^{p(a)} [a_l Db]
  bool eq51_ok = true;
  std::string eq51_detail;
  auto check51 = [&](const VElement& x, const VElement& y) {
    int px = va.parity(x);
    if (px < 0) return;
    for (int i = 0; i < s.n && eq51_ok; ++i) {
      LPoly lhs = va.bracket(x, y).mapped(
          [&](const VElement& v) { return va.apply_derivation(s.d[i], v); });
      LPoly rhs = va.bracket(va.apply_derivation(s.d[i], x), y) +
                  va.bracket(x, va.apply_derivation(s.d[i], y))
                      .scaled(sign_of(px));
      if (lhs != rhs) {
        eq51_ok = false;
        eq51_detail = "D^" + std::to_string(i + 1) + ": D[a_l b] = " +
                      va.render(lhs) + " vs " + va.render(rhs);
      }
    }
  };
  for (int a : gens)
    for (int b : gens) {
      if (!eq51_ok) break;
      check51(VElement::letter({a, 0}), VElement::letter({b, 0}));
    }
  for (int r = 0; r < rounds && eq51_ok; ++r)
    check51(va.random_element(rng, max_len, max_der),
            va.random_element(rng, max_len, max_der));
  rep.add("derivation of the lambda-bracket (5.1), generator and random pairs",
          eq51_ok, eq51_detail);
  return rep;
}

Report check_sef(const VertexAlgebra& va, const DerivationSpec& d,
                 const std::vector<VElement>& barred) {
  Report rep;
  rep.name = "check-sef";
  bool sef1_ok = true, sef2_ok = true;
  for (auto& a : barred)
    for (auto& b : barred) {
      int pa = va.parity(a);
      if (pa < 0) {
        rep.add("SEF input homogeneous", false, "mixed-parity element");
        return rep;
      }
      VElement da = va.apply_derivation(d, a);
      VElement db = va.apply_derivation(d, b);
      Scalar sg = sign_of(pa + 1);
      LPoly d_of_dab = va.bracket(da, b).mapped(
          [&](const VElement& v) { return va.apply_derivation(d, v); });
      LPoly lhs1 = va.bracket(da, db);
      LPoly rhs1 = (d_of_dab + va.bracket(a, b).shifted(1)).scaled(sg);
      if (lhs1 != rhs1) {
        sef1_ok = false;
        rep.add("SEF1 (" + va.render(a) + ", " + va.render(b) + ")", false,
                va.render(lhs1) + " vs " + va.render(rhs1));
      }
      LPoly d_of_ab = va.bracket(a, b).mapped(
          [&](const VElement& v) { return va.apply_derivation(d, v); });
      LPoly lhs2 = va.bracket(a, db);
      LPoly rhs2 = (va.bracket(da, b) - d_of_ab).scaled(sg);
      if (lhs2 != rhs2) {
        sef2_ok = false;
        rep.add("SEF2 (" + va.render(a) + ", " + va.render(b) + ")", false,
                va.render(lhs2) + " vs " + va.render(rhs2));
      }
    }
  if (sef1_ok) rep.add("SEF1 on all ordered pairs", true);
  if (sef2_ok) rep.add("SEF2 on all ordered pairs", true);
  return rep;
}

namespace {

/// [x_{Lambda or Gamma} P] for P with Grassmann coefficients: odd monomials
/// pass the bracket and x with sign (-1)^{(p(x)+n) #odd}.
SusyPoly bracket_into(const SusyStructure& s, const VElement& x,
                      const SusyPoly& p, bool as_gamma) {
  int px = s.va->parity(x);
  SusyPoly r;
  for (auto& [k, u] : p.terms()) {
    SusyPoly inner = as_gamma ? Lambda_bracket_gamma(s, x, u)
                              : Lambda_bracket(s, x, u);
    if ((px + s.n) % 2 != 0 && SusyPoly::odd_count(k) % 2 != 0)
      inner = inner.scaled(Scalar(-1));
    std::vector<int> eb = set_bits(k.eta), cb = set_bits(k.chi);
    for (auto it = eb.rbegin(); it != eb.rend(); ++it)
      inner = inner.eta_mul(*it);
    for (auto it = cb.rbegin(); it != cb.rend(); ++it)
      inner = inner.chi_mul(*it);
    r += inner.shifted_lambda(k.lam).shifted_gamma(k.gam);
  }
  return r;
}

/// [[a_Lambda b]_{Lambda+Gamma} c] given P = [a_Lambda b]: odd monomials
/// leave the first slot with sign (-1)^{n #odd}.
SusyPoly first_slot_shift(const SusyStructure& s, const SusyPoly& p,
                          const VElement& c) {
  SusyPoly r;
  for (auto& [k, u] : p.terms()) {
    assert(k.gam == 0 && k.eta == 0);
    SusyPoly inner = subst_lambda_plus_gamma(Lambda_bracket(s, u, c));
    if ((s.n * SusyPoly::odd_count(k)) % 2 != 0)
      inner = inner.scaled(Scalar(-1));
    std::vector<int> cb = set_bits(k.chi);
    for (auto it = cb.rbegin(); it != cb.rend(); ++it)
      inner = inner.chi_mul(*it);
    r += inner.shifted_lambda(k.lam);
  }
  return r;
}

}  // namespace

Report check_susy_lca_axioms(const SusyStructure& s, unsigned seed, int rounds,
                             int max_len, int max_der) {
  const VertexAlgebra& va = *s.va;
  const LcaPresentation& pres = va.pres();
  Report rep;
  rep.name = "check-susy-lca";
  if (s.n != 1 && s.n != 2) {
    rep.add("n in {1, 2}", false, "direct Lambda values exist for n <= 2 only");
    return rep;
  }
  auto gens = usable_gens(pres);
  int n = s.n;

  // sesquilinearity: [D^i a_L b] = (-1)^{n+1} chi^i [a_L b] and
  // [a_L D^i b] = (-1)^{p(a)+n} (D^i + chi^i) [a_L b]
  bool sesq_ok = true;
  std::string sesq_detail;
  auto check_sesq = [&](const VElement& a, const VElement& b) {
    int pa = va.parity(a);
    if (pa < 0) return;
    SusyPoly lab = Lambda_bracket(s, a, b);
    for (int i = 0; i < n && sesq_ok; ++i) {
      SusyPoly l1 = Lambda_bracket(s, va.apply_derivation(s.d[i], a), b);
      SusyPoly r1 = lab.chi_mul(i).scaled(sign_of(n + 1));
      if (l1 != r1) {
        sesq_ok = false;
        sesq_detail = "first slot, D^" + std::to_string(i + 1) + ": " +
                      render(va, l1) + " vs " + render(va, r1);
        return;
      }
      SusyPoly l2 = Lambda_bracket(s, a, va.apply_derivation(s.d[i], b));
      SusyPoly r2 =
          (apply_D(s, i, lab) + lab.chi_mul(i)).scaled(sign_of(pa + n));
      if (l2 != r2) {
        sesq_ok = false;
        sesq_detail = "second slot, D^" + std::to_string(i + 1) + ": " +
                      render(va, l2) + " vs " + render(va, r2);
      }
    }
  };
  for (int a : gens)
    for (int b : gens) {
      if (!sesq_ok) break;
      check_sesq(VElement::letter({a, 0}), VElement::letter({b, 0}));
    }
  rep.add("Lambda-sesquilinearity on all generator pairs", sesq_ok,
          sesq_detail);

  // skew-symmetry: [b_L a] = (-1)^{p(a)p(b)+n+1} [a_{-nabla-L} b]
  bool skew_ok = true;
  std::string skew_detail;
  auto check_skew = [&](const VElement& a, const VElement& b) {
    int pa = va.parity(a), pb = va.parity(b);
    if (pa < 0 || pb < 0) return;
    SusyPoly lhs = Lambda_bracket(s, b, a);
    SusyPoly rhs = subst_minus_nabla_Lambda(s, Lambda_bracket(s, a, b))
                       .scaled(sign_of(pa * pb + n + 1));
    if (lhs != rhs) {
      skew_ok = false;
      skew_detail = render(va, lhs) + " vs " + render(va, rhs);
    }
  };
  for (int a : gens)
    for (int b : gens) {
      if (!skew_ok) break;
      check_skew(VElement::letter({a, 0}), VElement::letter({b, 0}));
    }
  rep.add("Lambda-skew-symmetry on all generator pairs", skew_ok, skew_detail);

  // Jacobi: [a_L [b_G c]] = (-1)^{(p(a)+1)n} [[a_L b]_{L+G} c]
  //                       + (-1)^{(p(a)+n)(p(b)+n)} [b_G [a_L c]]
  bool jac_ok = true;
  std::string jac_detail;
  auto check_jacobi = [&](const VElement& a, const VElement& b,
                          const VElement& c, const std::string& names) {
    int pa = va.parity(a), pb = va.parity(b);
    if (pa < 0 || pb < 0) return;
    SusyPoly lhs = bracket_into(s, a, Lambda_bracket_gamma(s, b, c),
                                /*as_gamma=*/false);
    SusyPoly t1 = first_slot_shift(s, Lambda_bracket(s, a, b), c)
                      .scaled(sign_of((pa + 1) * n));
    SusyPoly t2 = bracket_into(s, b, Lambda_bracket(s, a, c), /*as_gamma=*/true)
                      .scaled(sign_of((pa + n) * (pb + n)));
    if (lhs != t1 + t2) {
      jac_ok = false;
      jac_detail = names + ": " + render(va, lhs) + " vs " +
                   render(va, t1 + t2);
    }
  };
  for (int a : gens)
    for (int b : gens)
      for (int c : gens) {
        if (!jac_ok) break;
        check_jacobi(VElement::letter({a, 0}), VElement::letter({b, 0}),
                     VElement::letter({c, 0}),
                     "(" + pres.gens[a].name + ", " + pres.gens[b].name + ", " +
                         pres.gens[c].name + ")");
      }
  rep.add("Lambda-Jacobi identity on all generator triples", jac_ok,
          jac_detail);

  // non-commutative Wick formula
  bool wick_ok = true;
  std::string wick_detail;
  auto check_wick = [&](const VElement& a, const VElement& b,
                        const VElement& c) {
    int pa = va.parity(a), pb = va.parity(b);
    if (pa < 0 || pb < 0) return;
    SusyPoly lhs = Lambda_bracket(s, a, va.nop(b, c));
    SusyPoly rhs = Lambda_bracket(s, a, b).mapped(
        [&](const VElement& u) { return va.nop(u, c); });
    // :b [a_L c]: with the odd monomial moved out past b
    SusyPoly lac = Lambda_bracket(s, a, c);
    for (auto& [k, u] : lac.terms()) {
      VElement t = va.nop(b, u).scaled(sign_of((pa + n) * pb));
      if ((pb * SusyPoly::odd_count(k)) % 2 != 0) t = -t;
      SusyPoly one;
      one.add(k, t);
      rhs += one;
    }
    SusyPoly integral;
    SusyPoly lab2 = Lambda_bracket(s, a, b);
    for (auto& [k, u] : lab2.terms()) {
      SusyPoly inner = Lambda_bracket_gamma(s, u, c);
      if ((n * SusyPoly::odd_count(k)) % 2 != 0)
        inner = inner.scaled(Scalar(-1));
      std::vector<int> cb = set_bits(k.chi);
      for (auto it = cb.rbegin(); it != cb.rend(); ++it)
        inner = inner.chi_mul(*it);
      integral += inner.shifted_lambda(k.lam);
    }
    rhs += integrate_Gamma(integral, n);
    if (lhs != rhs) {
      wick_ok = false;
      wick_detail = render(va, lhs) + " vs " + render(va, rhs);
    }
  };
  for (int a : gens)
    for (int b : gens)
      for (int c : gens) {
        if (!wick_ok) break;
        check_wick(VElement::letter({a, 0}), VElement::letter({b, 0}),
                   VElement::letter({c, 0}));
      }
  rep.add("non-commutative Wick formula on all generator triples", wick_ok,
          wick_detail);

  // random PBW sample
  std::mt19937_64 rng(seed);
  bool rand_ok = true;
  for (int r = 0; r < rounds && rand_ok; ++r) {
    VElement a = va.random_element(rng, max_len, max_der);
    VElement b = va.random_element(rng, max_len, max_der);
    VElement c = va.random_element(rng, max_len, max_der);
    check_skew(a, b);
    check_jacobi(a, b, c, "(random)");
    check_wick(a, b, c);
    rand_ok = skew_ok && jac_ok && wick_ok;
  }
  rep.add("random PBW sample (skew, Jacobi, Wick)", rand_ok);
  return rep;
}

// ---------------------------------------------------------------------------
// SEF1 solvability

Report sef1_solvable(const LcaPresentation& base,
                     const std::vector<BarDirection>& dirs, int max_lambda,
                     int max_der) {
  Report rep;
  rep.name = "sef1-solvable";
  LcaPresentation p = base;
  int n0 = static_cast<int>(base.gens.size());
  if (static_cast<int>(dirs.size()) != n0)
    throw std::invalid_argument("sef1_solvable: one direction per generator");

  DerivationSpec d;
  std::vector<VElement> barred;
  std::vector<int> fresh;
  for (int i = 0; i < n0; ++i) {
    if (base.gens[i].central) {
      d.action[i] = VElement();
      continue;
    }
    int v = p.add_gen(base.gens[i].name + "_bar", 1 - base.gens[i].parity);
    fresh.push_back(v);
    if (dirs[i] == BarDirection::BarNew) {
      d.action[v] = VElement::letter({i, 0});
      d.action[i] = VElement::letter({v, 1});
      barred.push_back(VElement::letter({v, 0}));
    } else {
      d.action[i] = VElement::letter({v, 0});
      d.action[v] = VElement::letter({i, 1});
      barred.push_back(VElement::letter({i, 0}));
    }
  }

  // unknown ansatz for every bracket touching a new generator
  std::vector<int> qids;
  int counter = 0;
  auto fresh_param = [&]() {
    int id = Params::id("q" + std::to_string(counter++));
    qids.push_back(id);
    return Scalar(Poly::var(id));
  };
  auto is_new = [&](int g) {
    for (int v : fresh)
      if (v == g) return true;
    return false;
  };
  std::vector<std::pair<int, int>> self_pairs;
  for (int g1 = 0; g1 < static_cast<int>(p.gens.size()); ++g1)
    for (int g2 = g1; g2 < static_cast<int>(p.gens.size()); ++g2) {
      if (p.central(g1) || p.central(g2)) continue;
      if (!is_new(g1) && !is_new(g2)) continue;
      int want = (p.parity(g1) + p.parity(g2)) % 2;
      LPoly ansatz;
      for (int m = 0; m <= max_lambda; ++m) {
        VElement coeff;
        for (int t = 0; t < static_cast<int>(p.gens.size()); ++t) {
          int kmax = p.central(t) ? 0 : max_der;
          if (p.parity(t) % 2 != want) continue;
          for (int k = 0; k <= kmax; ++k)
            coeff += VElement::letter({t, k}, fresh_param());
        }
        ansatz += LPoly::constant(coeff).shifted(m);
      }
      p.set_bracket(g1, g2, ansatz);
      if (g1 == g2) self_pairs.push_back({g1, g2});
    }

  VertexAlgebra va(p);

  // linear system: rows over GRat, one per (lambda power, PBW word)
  std::vector<std::map<int, GRat>> rows;
  std::vector<GRat> rhs;
  auto add_equations = [&](const LPoly& e) {
    for (auto& [m, v] : e.terms()) {
      (void)m;
      for (auto& [w, c] : v.terms()) {
        (void)w;
        if (!c.den().is_constant())
          throw std::logic_error("sef1_solvable: non-affine equation");
        GRat den = c.den().constant_value();
        std::map<int, GRat> row;
        GRat c0;
        for (auto& [mono, coef] : c.num().terms()) {
          if (mono.is_unit()) {
            c0 = c0 + coef / den;
          } else {
            if (mono.total_degree() != 1)
              throw std::logic_error("sef1_solvable: non-affine equation");
            row[mono.e[0].first] = row[mono.e[0].first] + coef / den;
          }
        }
        if (row.empty() && c0.is_zero()) continue;
        rows.push_back(std::move(row));
        rhs.push_back(-c0);
      }
    }
  };

  for (auto& a : barred)
    for (auto& b : barred) {
      int pa = va.parity(a);
      VElement da = va.apply_derivation(d, a);
      VElement db = va.apply_derivation(d, b);
      LPoly d_of = va.bracket(da, b).mapped(
          [&](const VElement& v) { return va.apply_derivation(d, v); });
      LPoly eq = va.bracket(da, db) -
                 (d_of + va.bracket(a, b).shifted(1)).scaled(sign_of(pa + 1));
      add_equations(eq);
    }
  // the stored self-pair ansatz must itself satisfy skew-symmetry
  for (auto& [g, g2] : self_pairs) {
    (void)g2;
    VElement x = VElement::letter({g, 0});
    LPoly eq = va.bracket(x, x) -
               va.subst_minus_nabla(va.bracket(x, x))
                   .scaled(sign_of(p.parity(g) * p.parity(g) + 1));
    add_equations(eq);
  }

  // Gaussian elimination; inconsistent iff 0 = nonzero appears
  size_t nrows = rows.size();
  std::vector<bool> used(nrows, false);
  for (int id : qids) {
    size_t piv = nrows;
    for (size_t r = 0; r < nrows; ++r)
      if (!used[r] && rows[r].count(id) && !rows[r][id].is_zero()) {
        piv = r;
        break;
      }
    if (piv == nrows) continue;
    used[piv] = true;
    GRat pc = rows[piv][id];
    for (size_t r = 0; r < nrows; ++r) {
      if (r == piv) continue;
      auto it = rows[r].find(id);
      if (it == rows[r].end() || it->second.is_zero()) continue;
      GRat f = it->second / pc;
      for (auto& [v, cv] : rows[piv]) {
        rows[r][v] = rows[r][v] - f * cv;
        if (rows[r][v].is_zero()) rows[r].erase(v);
      }
      rhs[r] = rhs[r] - f * rhs[piv];
    }
  }
  bool consistent = true;
  for (size_t r = 0; r < nrows; ++r) {
    bool all_zero = true;
    for (auto& [v, cv] : rows[r])
      if (!cv.is_zero()) all_zero = false;
    if (all_zero && !rhs[r].is_zero()) consistent = false;
  }
  rep.add("SEF1 linear system for the unknown brackets is consistent",
          consistent,
          consistent ? "" : "no bracket assignment satisfies SEF1");
  return rep;
}

// ---------------------------------------------------------------------------
// extension builders

N1Extension extend_N1(const LcaPresentation& r, const std::string& suffix,
                      const std::string& deriv_name) {
  N1Extension out;
  out.pres = r;
  out.deriv = deriv_name;
  int n0 = static_cast<int>(r.gens.size());
  out.bar_of.assign(n0, -1);
  for (int i = 0; i < n0; ++i)
    out.bar_of[i] = out.pres.add_gen(r.gens[i].name + suffix,
                                     1 - r.gens[i].parity, r.gens[i].central);
  for (auto& [key, value] : r.table) {
    auto [i, j] = key;
    if (r.central(i) || r.central(j)) continue;
    LPoly barred = value.mapped(
        [&](const VElement& v) { return overline(v, out.bar_of); });
    out.pres.set_bracket(out.bar_of[i], j, barred);
    out.pres.set_bracket(i, out.bar_of[j],
                         barred.scaled(sign_of(r.gens[i].parity)));
  }
  DerivationSpec d;
  for (int i = 0; i < n0; ++i) {
    d.action[out.bar_of[i]] = VElement::letter({i, 0});
    d.action[i] = r.gens[i].central ? VElement()
                                    : VElement::letter({out.bar_of[i], 1});
  }
  out.pres.derivations[deriv_name] = d;
  return out;
}

namespace {

/// Linear independence of the flattened (generator, order) coordinate
/// vectors, by Gaussian elimination over Scalar.
bool independent(std::vector<std::map<DerivedGen, Scalar>> vecs) {
  for (size_t r = 0; r < vecs.size(); ++r) {
    auto piv = vecs[r].begin();
    while (piv != vecs[r].end() && piv->second.is_zero()) ++piv;
    if (piv == vecs[r].end()) return false;
    DerivedGen key = piv->first;
    Scalar pc = piv->second;
    for (size_t q = 0; q < vecs.size(); ++q) {
      if (q == r) continue;
      auto it = vecs[q].find(key);
      if (it == vecs[q].end() || it->second.is_zero()) continue;
      Scalar f = it->second / pc;
      for (auto& [k, v] : vecs[r]) vecs[q][k] = vecs[q][k] - f * v;
    }
  }
  return true;
}

std::map<DerivedGen, Scalar> flatten(const VElement& v) {
  std::map<DerivedGen, Scalar> r;
  for (auto& [w, c] : v.terms()) {
    if (w.size() != 1)
      throw std::invalid_argument("SUSY generator image is not linear");
    r[w[0]] = c;
  }
  return r;
}

}  // namespace

N2Extension extend_N2(const LcaPresentation& r1, const std::string& dname) {
  const DerivationSpec& d = r1.derivations.at(dname);
  // SUSY generators ubar: D-image free of d-derivatives
  std::vector<std::map<DerivedGen, Scalar>> vecs;
  for (size_t g = 0; g < r1.gens.size(); ++g) {
    if (r1.gens[g].central) continue;
    auto it = d.action.find(static_cast<int>(g));
    if (it == d.action.end())
      throw std::invalid_argument("extend_N2: derivation undefined on " +
                                  r1.gens[g].name);
    bool ord0 = !it->second.is_zero();
    for (auto& [w, c] : it->second.terms())
      for (auto& l : w)
        if (l.ord > 0) ord0 = false;
    if (!ord0) continue;
    vecs.push_back(flatten(VElement::letter({static_cast<int>(g), 0})));
    vecs.push_back(flatten(it->second));
  }
  if (!independent(std::move(vecs)))
    throw std::invalid_argument(
        "extend_N2: {D(ubar_i), ubar_i} is linearly dependent");

  N1Extension circ = extend_N1(r1, "_circ", "D2");
  DerivationSpec d1;
  d1.parity = 1;
  for (size_t g = 0; g < r1.gens.size(); ++g) {
    VElement a = d.action.count(static_cast<int>(g))
                     ? d.action.at(static_cast<int>(g))
                     : VElement();
    d1.action[static_cast<int>(g)] = a;
    d1.action[circ.bar_of[g]] = overline(-a, circ.bar_of);
  }
  if (dname != "D1" && dname != "D2") circ.pres.derivations.erase(dname);
  circ.pres.derivations["D1"] = d1;

  N2Extension out;
  out.pres = circ.pres;
  out.structure =
      make_susy(std::make_shared<VertexAlgebra>(out.pres), {"D1", "D2"});
  out.structure.n = 2;
  return out;
}

N3Extension extend_N3(const LcaPresentation& r2, const std::string& d1name,
                      const std::string& d2name) {
  if (!r2.derivations.count(d1name) || !r2.derivations.count(d2name))
    throw std::invalid_argument("extend_N3: input lacks the N=2 derivations");
  N1Extension dag = extend_N1(r2, "_dag", "D3");
  for (auto& [src, dst] : {std::pair<std::string, std::string>{d1name, "D1"},
                           {d2name, "D2"}}) {
    const DerivationSpec& di = r2.derivations.at(src);
    DerivationSpec ext;
    ext.parity = 1;
    for (size_t g = 0; g < r2.gens.size(); ++g) {
      VElement a = di.action.count(static_cast<int>(g))
                       ? di.action.at(static_cast<int>(g))
                       : VElement();
      ext.action[static_cast<int>(g)] = a;
      ext.action[dag.bar_of[g]] = overline(-a, dag.bar_of);
    }
    dag.pres.derivations[dst] = ext;
  }
  for (auto& old : {d1name, d2name})
    if (old != "D1" && old != "D2" && old != "D3")
      dag.pres.derivations.erase(old);
  N3Extension out;
  out.pres = dag.pres;
  out.structure =
      make_susy(std::make_shared<VertexAlgebra>(out.pres), {"D1", "D2", "D3"});
  out.structure.n = 3;
  return out;
}

SusyStructure orthogonal_act(const std::vector<std::vector<Scalar>>& a,
                             const SusyStructure& s) {
  int n = s.n;
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("orthogonal_act: matrix size mismatch");
  for (auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("orthogonal_act: matrix size mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar dot;
      for (int k = 0; k < n; ++k) dot = dot + a[i][k] * a[j][k];
      if (dot != (i == j ? Scalar(1) : Scalar(0)))
        throw std::invalid_argument("orthogonal_act: A A^T is not the identity");
    }
  SusyStructure out;
  out.n = n;
  out.va = s.va;
  for (int j = 0; j < n; ++j) {
    DerivationSpec spec;
    spec.parity = 1;
    for (int i = 0; i < n; ++i)
      for (auto& [g, v] : s.d[i].action) {
        auto it = spec.action.find(g);
        VElement add = v.scaled(a[j][i]);
        if (it == spec.action.end())
          spec.action[g] = add;
        else
          it->second += add;
      }
    // keep keys present in every component so Leibniz lookups stay defined
    for (auto& [g, v] : s.d[0].action)
      if (!spec.action.count(g)) spec.action[g] = VElement();
    out.d.push_back(std::move(spec));
  }
  return out;
}

}  // namespace lcva
