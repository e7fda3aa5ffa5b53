#include "confcoh/extensions.hpp"

#include <map>
#include <tuple>

#include "confcoh/complexes.hpp"
#include "confcoh/linalg.hpp"

namespace confcoh {

namespace {

VarId nu_var() { return VarId::param("nu"); }

std::vector<RatPoly> sub(std::vector<RatPoly> a, const std::vector<RatPoly>& b, const Rat& s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] -= b[i] * s;
  return a;
}

std::vector<RatPoly> times(std::vector<RatPoly> a, const RatPoly& p) {
  for (auto& x : a)
    if (!x.is_zero()) x *= p;
  return a;
}

// Restriction of a 2-cochain value at lam2 = -lam - d.
std::vector<RatPoly> restrict_diagonal(const Cochain& c, const AlgValue& a, const RatPoly& lambda, const AlgValue& b) {
  return cochain_eval(c, {a, b}, {lambda, -lambda - RatPoly::del()});
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

ExtendedAlgebra::ExtendedAlgebra(ConformalAlgebra A, ConformalModule C, Cochain c)
    : A_(std::move(A)), C_(std::move(C)), c_(std::move(c)) {
  if (c_.q != 2 || !c_.is_skew()) throw std::invalid_argument("extend_algebra needs a skew 2-cochain");
  if (c_.dim != C_.dim()) throw std::invalid_argument("cochain and module dimensions differ");
  if (C_.is_free() && C_.action_count() != A_.size()) throw std::invalid_argument("module does not match the algebra");
}

ExtElement ExtendedAlgebra::zero() const { return {mod_zero(C_), alg_zero(A_)}; }

ExtElement ExtendedAlgebra::generator(int k) const {
  ExtElement e = zero();
  if (k < A_.size())
    e.a[static_cast<std::size_t>(k)] = RatPoly(1);
  else
    e.c[static_cast<std::size_t>(k - A_.size())] = RatPoly(1);
  return e;
}

std::vector<std::string> ExtendedAlgebra::gens() const {
  std::vector<std::string> out = A_.gens();
  for (const auto& b : C_.basis()) out.push_back(b);
  return out;
}

ExtElement ExtendedAlgebra::normalize(ExtElement x) const {
  if (!C_.is_free())
    for (auto& p : x.c) p = p.substitute(VarId::del(), RatPoly(C_.del_scalar()));
  return x;
}

ExtElement ExtendedAlgebra::scale(const ExtElement& x, const RatPoly& p) const {
  return normalize({times(x.c, p), times(x.a, p)});
}

ExtElement ExtendedAlgebra::add(const ExtElement& x, const ExtElement& y, const Rat& s) const {
  return {sub(x.c, y.c, -s), sub(x.a, y.a, -s)};
}

ModValue ExtendedAlgebra::c_lambda(int i, int j) const {
  return normalize({restrict_diagonal(c_, alg_gen(A_, i), RatPoly::lam(1), alg_gen(A_, j)), alg_zero(A_)}).c;
}

ExtElement ExtendedAlgebra::bracket(const ExtElement& x, const RatPoly& lambda, const ExtElement& y) const {
  ExtElement out;
  out.a = bracket_eval(A_, x.a, lambda, y.a);
  out.c = action_eval(C_, x.a, lambda, y.c);
  // [x_l b] = -[b_{-l-d} x]
  const ModValue back = action_eval(C_, y.a, RatPoly::var(nu_var()), x.c);
  out.c = sub(out.c, substitute_all(back, nu_var(), -lambda - RatPoly::del()));
  out.c = sub(out.c, restrict_diagonal(c_, x.a, lambda, y.a), -1);
  return normalize(std::move(out));
}

CheckResult ExtendedAlgebra::check_skew_symmetry() const {
  const RatPoly l = RatPoly::lam(1);
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      const ExtElement x = generator(i);
      const ExtElement y = generator(j);
      ExtElement back = bracket(y, RatPoly::var(nu_var()), x);
      back.a = substitute_all(back.a, nu_var(), -l - RatPoly::del());
      back.c = substitute_all(back.c, nu_var(), -l - RatPoly::del());
      const ExtElement res = add(bracket(x, l, y), normalize(back));
      if (!is_zero(res.a) || !is_zero(res.c))
        return {false, {i, j}, format_value(res.c, C_.basis()) + " | " + format_value(res.a, A_.gens())};
    }
  return {};
}

CheckResult ExtendedAlgebra::check_jacobi() const {
  const RatPoly l = RatPoly::lam(1);
  const RatPoly m = RatPoly::lam(2);
  const int na = A_.size();
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      for (int k = 0; k < size(); ++k) {
        // C is abelian and an ideal: two C-arguments give zero on both sides.
        if ((i >= na) + (j >= na) + (k >= na) >= 2) continue;
        const ExtElement x = generator(i);
        const ExtElement y = generator(j);
        const ExtElement z = generator(k);
        ExtElement res = add(bracket(x, l, bracket(y, m, z)), bracket(y, m, bracket(x, l, z)), -1);
        res = add(res, bracket(bracket(x, l, y), l + m, z), -1);
        if (!is_zero(res.a) || !is_zero(res.c))
          return {false, {i, j, k}, format_value(res.c, C_.basis()) + " | " + format_value(res.a, A_.gens())};
      }
  return {};
}

ExtendedAlgebra extend_algebra(const ConformalAlgebra& A, const ConformalModule& C, const Cochain& c) {
  ExtendedAlgebra E(A, C, c);
  if (CheckResult r = E.check_skew_symmetry(); !r)
    throw NotACocycle("extension is not skew-symmetric at (" + join(r.where) + "): " + r.residual);
  if (CheckResult r = E.check_jacobi(); !r)
    throw NotACocycle("Jacobi identity fails at (" + join(r.where) + "): " + r.residual);
  return E;
}

CheckResult check_extension_map(const ExtendedAlgebra& from, const ExtendedAlgebra& to, const Cochain& f,
                                int sign) {
  const ConformalAlgebra& A = from.base();
  // f_{-d}(e_i) for every generator.
  std::vector<ModValue> shift;
  for (int i = 0; i < A.size(); ++i) {
    ModValue v = cochain_eval(f, {alg_gen(A, i)}, {-RatPoly::del()});
    shift.push_back(to.scale({v, alg_zero(A)}, RatPoly(sign)).c);
  }
  auto map = [&](const ExtElement& x) {
    ExtElement out{x.c, x.a};
    for (int i = 0; i < A.size(); ++i)
      if (!x.a[static_cast<std::size_t>(i)].is_zero())
        out.c = sub(out.c, times(shift[static_cast<std::size_t>(i)], x.a[static_cast<std::size_t>(i)]), -1);
    return to.scale(out, RatPoly(1));
  };
  const RatPoly l = RatPoly::lam(1);
  for (int i = 0; i < from.size(); ++i)
    for (int j = 0; j < from.size(); ++j) {
      const ExtElement lhs = map(from.bracket(from.generator(i), l, from.generator(j)));
      const ExtElement rhs = to.bracket(map(from.generator(i)), l, map(from.generator(j)));
      const ExtElement res = to.add(lhs, rhs, -1);
      if (!is_zero(res.a) || !is_zero(res.c)) return {false, {i, j}, format_value(res.c, to.coefficients().basis())};
    }
  return {};
}

Cochain as_reduced(const ConformalModule& M, const Cochain& c) {
  if (M.is_free()) {
    Cochain b = c;
    b.variant = Variant::LieBasic;
    return reduce(M, b);
  }
  Cochain out = c;
  out.variant = Variant::LieReduced;
  return out;
}

TrivialExtension::Element TrivialExtension::del(const Element& x) const {
  Element out{module_del(M, x.m), RatPoly()};
  for (std::size_t r = 0; r < f.size(); ++r)
    if (!f[r].is_zero()) out.m[r] += f[r] * x.n;
  return out;
}

TrivialExtension::Element TrivialExtension::apply(const RatPoly& p, const Element& x) const {
  Element out{ModValue(x.m.size()), RatPoly()};
  Element power = x;
  const std::vector<RatPoly> coeffs = p.coefficients_in(VarId::del());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) {
      for (std::size_t r = 0; r < out.m.size(); ++r) out.m[r] += power.m[r] * coeffs[k];
      out.n += power.n * coeffs[k];
    }
    power = del(power);
  }
  return out;
}

TrivialExtension::Element TrivialExtension::act(const ConformalAlgebra& A, int gen, const RatPoly& lambda,
                                                const Element& x) const {
  Element out{action_eval(M, alg_gen(A, gen), lambda, x.m), RatPoly()};
  if (!x.n.is_zero()) {
    const ModValue g = substitute_all(gamma[static_cast<std::size_t>(gen)], VarId::lam(1), lambda);
    for (std::size_t r = 0; r < g.size(); ++r) out.m[r] += g[r] * x.n;
  }
  if (!M.is_free())
    for (auto& p : out.m) p = p.substitute(VarId::del(), RatPoly(M.del_scalar()));
  return out;
}

CheckResult TrivialExtension::check_module(const ConformalAlgebra& A) const {
  if (CheckResult r = confcoh::check_module(A, M); !r) return r;
  const RatPoly l = RatPoly::lam(1);
  const RatPoly m = RatPoly::lam(2);
  const Element one{mod_zero(M), RatPoly(1)};
  auto differ = [&](const Element& x, const Element& y) { return x.m != y.m || x.n != y.n; };
  for (int i = 0; i < A.size(); ++i) {
    // a_l(d v) = (l + d) a_l v
    const Element lhs = act(A, i, l, del(one));
    const Element rhs = apply(l + RatPoly::del(), act(A, i, l, one));
    if (differ(lhs, rhs)) return {false, {i}, "d-compatibility: " + format_value(sub(lhs.m, rhs.m), M.basis())};
    for (int j = 0; j < A.size(); ++j) {
      Element left = act(A, i, l, act(A, j, m, one));
      const Element other = act(A, j, m, act(A, i, l, one));
      left.m = sub(left.m, other.m);
      // [a_l b]_{l+m} v with [a_l b] = sum p_k(l, d) e_k and (p(d) e)_nu = p(-nu) e_nu
      Element right{mod_zero(M), RatPoly()};
      const AlgValue br = bracket_eval(A, alg_gen(A, i), l, alg_gen(A, j));
      for (int k = 0; k < A.size(); ++k) {
        if (br[static_cast<std::size_t>(k)].is_zero()) continue;
        const RatPoly coeff = br[static_cast<std::size_t>(k)].substitute(VarId::del(), -(l + m));
        const Element v = act(A, k, l + m, one);
        for (std::size_t r = 0; r < v.m.size(); ++r) right.m[r] += v.m[r] * coeff;
      }
      if (left.m != right.m) return {false, {i, j}, format_value(sub(left.m, right.m), M.basis())};
    }
  }
  return {};
}

TrivialExtension extend_module_by_trivial(const ConformalAlgebra& A, const ConformalModule& M, const ModValue& f) {
  TrivialExtension E{M, f, {}};
  const RatPoly divisor = RatPoly::del() + RatPoly::lam(1);
  for (int i = 0; i < A.size(); ++i) {
    const ModValue df = action_eval(M, alg_gen(A, i), f);
    ModValue g(df.size());
    if (M.is_free()) {
      for (std::size_t r = 0; r < df.size(); ++r) {
        try {
          g[r] = df[r].divide_exact_linear(divisor, VarId::lam(1));
        } catch (const std::exception&) {
          throw NotReducedCocycle("a_lambda f is not divisible by d + lambda for generator " + A.gens()[i]);
        }
      }
    }
    // Scalar modules: A acts by zero, so gamma = 0 solves (a + lam) gamma = 0.
    E.gamma.push_back(std::move(g));
  }
  return E;
}

CheckResult check_trivial_extension_map(const ConformalAlgebra& A, const TrivialExtension& from,
                                        const TrivialExtension& to, const ModValue& g) {
  auto map = [&](const TrivialExtension::Element& x) {
    TrivialExtension::Element out = x;
    for (std::size_t r = 0; r < g.size(); ++r)
      if (!g[r].is_zero()) out.m[r] -= g[r] * x.n;
    return out;
  };
  std::vector<TrivialExtension::Element> gens;
  for (int r = 0; r < from.M.dim(); ++r) {
    TrivialExtension::Element e{mod_zero(from.M), RatPoly()};
    e.m[static_cast<std::size_t>(r)] = RatPoly(1);
    gens.push_back(e);
  }
  gens.push_back({mod_zero(from.M), RatPoly(1)});
  const RatPoly l = RatPoly::lam(1);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!(map(from.del(gens[k])) == to.del(map(gens[k]))))
      return {false, {static_cast<int>(k)}, "map does not commute with d"};
    for (int i = 0; i < A.size(); ++i)
      if (!(map(from.act(A, i, l, gens[k])) == to.act(A, i, l, map(gens[k]))))
        return {false, {i, static_cast<int>(k)}, "map does not commute with the action"};
  }
  return {};
}

ConformalModule twisted_sum(const ConformalAlgebra& A, const ConformalModule& M, const ConformalModule& N,
                            const std::vector<PolyMatrix>& gamma) {
  if (!M.is_free() || !N.is_free()) throw WrongModuleKind("module extensions need free modules");
  const int dm = M.dim();
  const int dn = N.dim();
  std::vector<std::string> basis = M.basis();
  for (const auto& b : N.basis()) basis.push_back(b);
  std::vector<PolyMatrix> action;
  for (int i = 0; i < A.size(); ++i) {
    PolyMatrix pm(static_cast<std::size_t>(dm + dn), std::vector<RatPoly>(static_cast<std::size_t>(dm + dn)));
    for (int r = 0; r < dm; ++r)
      for (int c = 0; c < dm; ++c) pm[r][c] = M.action(i)[r][c];
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < dn; ++c) pm[dm + r][dm + c] = N.action(i)[r][c];
    for (int r = 0; r < dm; ++r)
      for (int s = 0; s < dn; ++s) pm[r][dm + s] = gamma.at(static_cast<std::size_t>(i))[r][s];
    action.push_back(std::move(pm));
  }
  return ConformalModule::free(M.name() + "+" + N.name(), basis, std::move(action));
}

ConformalModule extend_module(const ConformalAlgebra& A, const ConformalModule& M, const ConformalModule& N,
                              const std::vector<PolyMatrix>& gamma) {
  ConformalModule E = twisted_sum(A, M, N, gamma);
  if (CheckResult r = check_module(A, E); !r)
    throw NotACocycle("module axiom fails at (" + join(r.where) + "): " + r.residual);
  return E;
}

std::vector<PolyMatrix> module_coboundary(const ConformalAlgebra& A, const ConformalModule& M,
                                          const ConformalModule& N, const PolyMatrix& beta) {
  std::vector<PolyMatrix> out;
  const RatPoly l = RatPoly::lam(1);
  for (int i = 0; i < A.size(); ++i) {
    PolyMatrix pm(static_cast<std::size_t>(M.dim()), std::vector<RatPoly>(static_cast<std::size_t>(N.dim())));
    for (int s = 0; s < N.dim(); ++s) {
      ModValue col(static_cast<std::size_t>(M.dim()));
      for (int r = 0; r < M.dim(); ++r) col[r] = beta[r][s];
      ModValue v = action_eval(M, alg_gen(A, i), l, col);
      ModValue ns = mod_zero(N);
      ns[static_cast<std::size_t>(s)] = RatPoly(1);
      const ModValue an = action_eval(N, alg_gen(A, i), l, ns);
      for (int t = 0; t < N.dim(); ++t) {
        if (an[t].is_zero()) continue;
        for (int r = 0; r < M.dim(); ++r) v[r] -= an[t] * beta[r][t];
      }
      for (int r = 0; r < M.dim(); ++r) pm[r][s] = v[r];
    }
    out.push_back(std::move(pm));
  }
  return out;
}

CheckResult check_module_map(const ConformalAlgebra& A, const ConformalModule& from, const ConformalModule& to,
                             const PolyMatrix& phi) {
  auto apply = [&](const ModValue& v) {
    ModValue out = mod_zero(to);
    for (int c = 0; c < from.dim(); ++c) {
      if (v[c].is_zero()) continue;
      for (int r = 0; r < to.dim(); ++r)
        if (!phi[r][c].is_zero()) out[r] += phi[r][c] * v[c];
    }
    return out;
  };
  const RatPoly l = RatPoly::lam(1);
  for (int c = 0; c < from.dim(); ++c) {
    ModValue v = mod_zero(from);
    v[static_cast<std::size_t>(c)] = RatPoly(1);
    for (int i = 0; i < A.size(); ++i) {
      const ModValue lhs = apply(action_eval(from, alg_gen(A, i), l, v));
      const ModValue rhs = action_eval(to, alg_gen(A, i), l, apply(v));
      if (lhs != rhs) return {false, {i, c}, format_value(sub(lhs, rhs), to.basis())};
    }
  }
  return {};
}

VarId eps_var() { return VarId::param("eps"); }

DeformedAlgebra deform(const ConformalAlgebra& A, const Cochain& gamma) {
  if (gamma.q != 2 || gamma.dim != A.size()) throw std::invalid_argument("deform needs an A-valued 2-cochain");
  auto table = A.table();
  const RatPoly eps = RatPoly::var(eps_var());
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j < A.size(); ++j) {
      const ModValue v = restrict_diagonal(gamma, alg_gen(A, i), RatPoly::lam(1), alg_gen(A, j));
      for (int k = 0; k < A.size(); ++k)
        if (!v[k].is_zero()) table[i][j][k] += eps * v[k];
    }
  return {ConformalAlgebra(A.name() + "+eps", A.gens(), std::move(table), A.kind())};
}

CheckResult DeformedAlgebra::check_first_order() const {
  const int n = algebra.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        AlgValue res = jacobi_residual(algebra, i, j, k);
        for (auto& p : res) {
          const std::vector<RatPoly> parts = p.coefficients_in(eps_var());
          p = parts.empty() ? RatPoly() : parts[0];
          if (parts.size() > 1) p += parts[1] * RatPoly::var(eps_var());
        }
        if (!is_zero(res)) return {false, {i, j, k}, format_value(res, algebra.gens())};
      }
  return {};
}

namespace {

// Basis of the invariants of d-degree <= bound.
std::vector<ModValue> invariants_at(const ConformalAlgebra& A, const ConformalModule& M, int bound) {
  std::vector<ModValue> elems;
  std::vector<SparseVec> cols;
  // (generator, component, monomial) -> coordinate
  std::map<std::tuple<int, int, std::string>, int> index;
  auto coord = [&](int gen, int comp, const Monomial& m) {
    auto [it, fresh] = index.try_emplace({gen, comp, m.to_string()}, static_cast<int>(index.size()));
    return it->second;
  };
  for (int r = 0; r < M.dim(); ++r)
    for (int p = 0; p <= bound; ++p) {
      ModValue v = mod_zero(M);
      v[static_cast<std::size_t>(r)] = RatPoly::del().pow(static_cast<unsigned>(p));
      std::map<int, Rat> col;
      for (int i = 0; i < A.size(); ++i) {
        const ModValue img = action_eval(M, alg_gen(A, i), v);
        for (int c = 0; c < M.dim(); ++c)
          for (const auto& [m, x] : img[c].terms()) col[coord(i, c, m)] += x;
      }
      SparseVec sv;
      for (const auto& [k, x] : col)
        if (x != 0) sv.emplace_back(k, x);
      elems.push_back(v);
      cols.push_back(std::move(sv));
    }
  std::vector<ModValue> out;
  for (const SparseVec& k : kernel(cols)) {
    ModValue v = mod_zero(M);
    for (const auto& [idx, x] : k)
      for (int c = 0; c < M.dim(); ++c) v[c] += elems[static_cast<std::size_t>(idx)][c] * x;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

InvariantsResult invariants_H0(const ConformalAlgebra& A, const ConformalModule& M, int bound) {
  InvariantsResult res;
  res.bound = bound;
  if (!M.is_free()) {
    for (int r = 0; r < M.dim(); ++r) {
      ModValue v = mod_zero(M);
      v[static_cast<std::size_t>(r)] = RatPoly(1);
      res.basis.push_back(v);
    }
    return res;
  }
  res.basis = invariants_at(A, M, bound);
  const std::size_t d1 = invariants_at(A, M, bound + 1).size();
  const std::size_t d2 = invariants_at(A, M, bound + 2).size();
  res.stabilized = d1 == res.basis.size() && d2 == res.basis.size();
  return res;
}

}  // namespace confcoh
