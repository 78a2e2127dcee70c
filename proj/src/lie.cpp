#include "lcva/lie.hpp"

namespace lcva {

namespace {

int sgn(int parity_product) { return parity_product % 2 == 0 ? 1 : -1; }

std::map<int, Scalar> scale(const std::map<int, Scalar>& v, const Scalar& c) {
  std::map<int, Scalar> r;
  for (auto& [k, x] : v) {
    Scalar s = x * c;
    if (!s.is_zero()) r[k] = s;
  }
  return r;
}

void accumulate(std::map<int, Scalar>& into, const std::map<int, Scalar>& v,
                const Scalar& c) {
  for (auto& [k, x] : v) {
    Scalar s = into.count(k) ? into[k] + x * c : x * c;
    if (s.is_zero())
      into.erase(k);
    else
      into[k] = s;
  }
}

/// [x, u_j] for a vector x given by coefficients.
std::map<int, Scalar> ad_vec(const LieSuperalgebraData& g,
                             const std::map<int, Scalar>& x, int j) {
  std::map<int, Scalar> r;
  for (auto& [i, c] : x) accumulate(r, g.lie(i, j), c);
  return r;
}

}  // namespace

Report validate_lie_superalgebra(const LieSuperalgebraData& g) {
  Report rep;
  rep.name = "validate-lie";
  int n = g.dim();
  bool skew_ok = true, jac_ok = true, form_ok = true, inv_ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // super skew-symmetry [a,b] = -(-1)^{p(a)p(b)}[b,a]
      auto lhs = g.lie(i, j);
      auto rhs = scale(g.lie(j, i),
                       Scalar(-sgn(g.parities[i] * g.parities[j])));
      if (lhs != rhs) skew_ok = false;
      // form: even and supersymmetric
      if (g.parities[i] != g.parities[j] && !g.form[i][j].is_zero())
        form_ok = false;
      Scalar sym = g.form[j][i] * Scalar(sgn(g.parities[i] * g.parities[j]));
      if (g.form[i][j] != sym) form_ok = false;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // [a,[b,c]] = [[a,b],c] + (-1)^{p(a)p(b)}[b,[a,c]]
        std::map<int, Scalar> lhs, rhs;
        for (auto& [m, c] : g.lie(j, k)) accumulate(lhs, g.lie(i, m), c);
        for (auto& [m, c] : g.lie(i, j)) accumulate(rhs, g.lie(m, k), c);
        std::map<int, Scalar> t;
        for (auto& [m, c] : g.lie(i, k)) accumulate(t, g.lie(j, m), c);
        accumulate(rhs, t, Scalar(sgn(g.parities[i] * g.parities[j])));
        if (lhs != rhs) jac_ok = false;
        // invariance ([a,b]|c) = (a|[b,c])
        Scalar l, r;
        for (auto& [m, c] : g.lie(i, j)) l = l + c * g.form[m][k];
        for (auto& [m, c] : g.lie(j, k)) r = r + g.form[i][m] * c;
        if (l != r) inv_ok = false;
      }
  rep.add("super skew-symmetry of the bracket", skew_ok);
  rep.add("super Jacobi identity", jac_ok);
  rep.add("bilinear form even and supersymmetric", form_ok);
  rep.add("invariance ([a,b]|c) = (a|[b,c])", inv_ok);
  return rep;
}

long superdimension(const LieSuperalgebraData& g) {
  long s = 0;
  for (int p : g.parities) s += (p == 0) ? 1 : -1;
  return s;
}

std::vector<std::vector<Scalar>> matrix_inverse(
    std::vector<std::vector<Scalar>> m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i) inv[i][i] = Scalar(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("matrix_inverse: singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Scalar d = m[col][col].inv();
    for (int c = 0; c < n; ++c) {
      m[col][c] = m[col][c] * d;
      inv[col][c] = inv[col][c] * d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (int c = 0; c < n; ++c) {
        m[r][c] = m[r][c] - f * m[col][c];
        inv[r][c] = inv[r][c] - f * inv[col][c];
      }
    }
  }
  return inv;
}

std::vector<std::vector<Scalar>> dual_basis(const LieSuperalgebraData& g) {
  // (u_j | b^i) = delta_ij with b^i = sum_k c[i][k] u_k  =>  c = (B^T)^{-1}
  int n = g.dim();
  std::vector<std::vector<Scalar>> bt(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bt[i][j] = g.form[j][i];
  return matrix_inverse(std::move(bt));
}

Scalar dual_coxeter(const LieSuperalgebraData& g) {
  // Casimir sum_i u_i b^i acts on the adjoint by 2 h^vee.
  int n = g.dim();
  auto duals = dual_basis(g);
  std::optional<Scalar> eigen;
  for (int x = 0; x < n; ++x) {
    std::map<int, Scalar> omega_x;
    for (int i = 0; i < n; ++i) {
      std::map<int, Scalar> bi;
      for (int k = 0; k < n; ++k)
        if (!duals[i][k].is_zero()) bi[k] = duals[i][k];
      // u_i . (b^i . x)
      std::map<int, Scalar> inner = ad_vec(g, bi, x);
      for (auto& [m, c] : inner) accumulate(omega_x, g.lie(i, m), c);
    }
    if (omega_x.empty()) continue;
    if (omega_x.size() != 1 || !omega_x.count(x))
      throw std::domain_error("dual_coxeter: adjoint is not a Casimir eigenspace");
    Scalar ev = omega_x[x];
    if (eigen && *eigen != ev)
      throw std::domain_error("dual_coxeter: non-constant Casimir eigenvalue");
    eigen = ev;
  }
  if (!eigen) return Scalar(0);
  return *eigen * Scalar(1, 2);
}

LieSuperalgebraData lie_sl2() {
  LieSuperalgebraData g;
  g.names = {"e", "h", "f"};
  g.parities = {0, 0, 0};
  auto set = [&](int i, int j, std::map<int, Scalar> v) {
    g.bracket[{i, j}] = v;
    std::map<int, Scalar> neg;
    for (auto& [k, c] : v) neg[k] = -c;
    g.bracket[{j, i}] = neg;
  };
  // e=0, h=1, f=2: [h,e]=2e, [h,f]=-2f, [e,f]=h
  set(1, 0, {{0, Scalar(2)}});
  set(1, 2, {{2, Scalar(-2)}});
  set(0, 2, {{1, Scalar(1)}});
  g.form = {{Scalar(0), Scalar(0), Scalar(1)},
            {Scalar(0), Scalar(2), Scalar(0)},
            {Scalar(1), Scalar(0), Scalar(0)}};
  // ad(h/2)-eigenvalues: the principal grading
  g.grading = {Scalar(1), Scalar(0), Scalar(-1)};
  return g;
}

LieSuperalgebraData lie_abelian1() {
  LieSuperalgebraData g;
  g.names = {"a"};
  g.parities = {0};
  g.form = {{Scalar(1)}};
  g.grading = {Scalar(0)};
  return g;
}

LieSuperalgebraData lie_builtin(const std::string& name) {
  if (name == "sl2") return lie_sl2();
  if (name == "abelian1") return lie_abelian1();
  throw std::invalid_argument("unknown builtin Lie superalgebra: " + name);
}

LcaPresentation build_cur(const LieSuperalgebraData& g) {
  LcaPresentation r;
  int n = g.dim();
  for (int i = 0; i < n; ++i) r.add_gen(g.names[i], g.parities[i]);
  int K = r.add_gen("K", 0, /*central=*/true);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LPoly p;
      VElement lin;
      for (auto& [k, c] : g.lie(i, j)) lin += VElement::letter({k, 0}, c);
      p.add(0, lin);
      p.add(1, VElement::letter({K, 0}, g.form[i][j]));
      if (!p.is_zero()) r.set_bracket(i, j, p);
    }
  return r;
}

LcaPresentation build_susy_cur(const LieSuperalgebraData& g, bool with_K) {
  LcaPresentation r;
  int n = g.dim();
  for (int i = 0; i < n; ++i) r.add_gen(g.names[i], g.parities[i]);
  for (int i = 0; i < n; ++i)
    r.add_gen(g.names[i] + "_bar", 1 - g.parities[i]);
  int K = with_K ? r.add_gen("K", 0, /*central=*/true) : -1;
  auto bar = [&](int i) { return n + i; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar sg(g.parities[i] % 2 == 0 ? 1 : -1);
      VElement lin, linbar;
      for (auto& [k, c] : g.lie(i, j)) {
        lin += VElement::letter({k, 0}, c);
        linbar += VElement::letter({bar(k), 0}, c);
      }
      {  // [a_l b] = [a,b] + l K (a|b)
        LPoly p;
        p.add(0, lin);
        if (with_K) p.add(1, VElement::letter({K, 0}, g.form[i][j]));
        if (!p.is_zero()) r.set_bracket(i, j, p);
      }
      {  // [a_l bbar] = (-1)^{p(a)} [a,b]-bar
        LPoly p;
        p.add(0, linbar.scaled(sg));
        if (!p.is_zero()) r.set_bracket(i, bar(j), p);
      }
      if (with_K) {  // [abar_l bbar] = (-1)^{p(a)} K (a|b)
        LPoly p;
        p.add(0, VElement::letter({K, 0}, g.form[i][j] * sg));
        if (!p.is_zero()) r.set_bracket(bar(i), bar(j), p);
      }
    }
  DerivationSpec d;
  for (int i = 0; i < n; ++i) {
    d.action[bar(i)] = VElement::letter({i, 0});
    d.action[i] = VElement::letter({bar(i), 1});
  }
  if (with_K) d.action[K] = VElement();
  r.derivations["D"] = d;
  return r;
}

}  // namespace lcva
