#include "confcoh/calculus.hpp"

#include "confcoh/complexes.hpp"

namespace confcoh {

namespace {

Rat factorial(int n) {
  Rat r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

bool is_vir(const ConformalAlgebra& A) {
  if (A.size() != 1) return false;
  return A.entry(0, 0, 0) == RatPoly::del() + RatPoly(2) * RatPoly::lam(1);
}

void require_vir_scalar(const ConformalAlgebra& A, const Cochain& g) {
  if (!is_vir(A)) throw WrongContext("the homotopy is defined for the Virasoro algebra only");
  if (g.dim != 1 || !g.is_skew()) throw WrongContext("the homotopy needs a C-valued Lie cochain");
  for (const auto& [t, v] : g.values)
    if (v[0].contains(VarId::del())) throw WrongContext("the homotopy needs d-free values");
}

}  // namespace

VarId mu_var() { return VarId::param("mu"); }
RatPoly mu() { return RatPoly::var(mu_var()); }

Cochain wedge(const Cochain& u, const Cochain& g, int gens) {
  if (u.dim != 1) throw std::invalid_argument("wedge: the left factor must be C-valued");
  const int m = u.q;
  const int n = g.q;
  Cochain out(g.variant, m + n, g.dim);
  const Rat weight = Rat(1) / (factorial(m) * factorial(n));
  const std::vector<RatPoly> lams = standard_params(m + n);
  for (const Tuple& t : canonical_tuples(m + n, gens)) {
    ModValue acc(static_cast<std::size_t>(g.dim));
    for (const auto& [pi, sign] : permutations(m + n)) {
      Tuple tu;
      Tuple tg;
      std::vector<RatPoly> pu;
      std::vector<RatPoly> pg;
      for (int k = 0; k < m; ++k) {
        tu.push_back(t[pi[k]]);
        pu.push_back(lams[pi[k]]);
      }
      for (int k = m; k < m + n; ++k) {
        tg.push_back(t[pi[k]]);
        pg.push_back(lams[pi[k]]);
      }
      const ModValue uv = evaluate(u, tu, pu);
      if (uv[0].is_zero()) continue;
      const ModValue gv = evaluate(g, tg, pg);
      for (std::size_t c = 0; c < gv.size(); ++c)
        if (!gv[c].is_zero()) acc[c] += uv[0] * gv[c] * (weight * sign);
    }
    if (!is_zero(acc)) out.values[t] = std::move(acc);
  }
  return out;
}

Cochain contract_lambda(const ConformalAlgebra& A, const AlgValue& a, const Cochain& g) {
  if (g.q == 0) throw DegreeZero("contraction of a 0-cochain");
  const int n = g.q - 1;
  Cochain out(g.variant, n, g.dim);
  std::vector<RatPoly> params{mu()};
  for (const RatPoly& l : standard_params(n)) params.push_back(l);
  for (const Tuple& t : canonical_tuples(n, A.size())) {
    std::vector<AlgValue> args{a};
    for (int x : t) args.push_back(alg_gen(A, x));
    ModValue v = cochain_eval(g, args, params);
    if (!is_zero(v)) out.values[t] = std::move(v);
  }
  return out;
}

Cochain lie_theta(const ConformalAlgebra& A, const ConformalModule& M, const AlgValue& a, const Cochain& g) {
  const int n = g.q;
  Cochain out(g.variant, n, g.dim);
  const std::vector<RatPoly> lams = standard_params(n);
  for (const Tuple& t : canonical_tuples(n, A.size())) {
    ModValue acc = action_eval(M, a, mu(), value_at(g, t));
    for (int i = 0; i < n; ++i) {
      std::vector<AlgValue> args;
      std::vector<RatPoly> params = lams;
      for (int k = 0; k < n; ++k) args.push_back(alg_gen(A, t[k]));
      args[i] = bracket_eval(A, a, mu(), args[i]);
      if (is_zero(args[i])) continue;
      params[i] = mu() + lams[i];
      const ModValue v = cochain_eval(g, args, params);
      for (std::size_t c = 0; c < v.size(); ++c) acc[c] -= v[c];
    }
    if (!is_zero(acc)) out.values[t] = std::move(acc);
  }
  return out;
}

Cochain homotopy_k(const ConformalAlgebra& A, const Cochain& g) {
  require_vir_scalar(A, g);
  if (g.q == 0) throw DegreeZero("k of a 0-cochain");
  const int q = g.q;
  Cochain out(g.variant, q - 1, 1);
  const VarId last = VarId::lam(q);
  const Rat sign = (q + 1) % 2 == 0 ? Rat(1) : Rat(-1);
  for (const auto& [t, v] : g.values) {
    RatPoly p = v[0].derivative(last).substitute(last, RatPoly(0)) * sign;
    if (p.is_zero()) continue;
    out.values[Tuple(static_cast<std::size_t>(q - 1), 0)] = {p};
  }
  return out;
}

Cochain homotopy_k1(const ConformalAlgebra& A, const Cochain& g) {
  require_vir_scalar(A, g);
  if (g.q == 0) throw DegreeZero("k1 of a 0-cochain");
  const int q = g.q;
  Cochain p(g.variant, q, 1);
  const RatPoly sigma = RatPoly::lam_sum(1, q);
  for (const auto& [t, v] : g.values) {
    try {
      p.values[t] = {v[0].divide_exact_linear(sigma, VarId::lam(q))};
    } catch (const std::domain_error&) {
      throw WrongContext("k1 needs a multiple of lam1 + ... + lam_q");
    }
  }
  Cochain out = homotopy_k(A, p);
  out *= RatPoly::lam_sum(1, q - 1);
  return out;
}

int homogeneous_degree(const Cochain& g) {
  int deg = -1;
  for (const auto& [t, v] : g.values)
    for (const auto& p : v)
      for (const auto& [m, c] : p.terms()) {
        const int d = m.degree();
        if (deg < 0) deg = d;
        else if (deg != d) return -1;
      }
  return deg < 0 ? 0 : deg;
}

}  // namespace confcoh
