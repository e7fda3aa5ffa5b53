#include "confcoh/annihilation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "confcoh/complexes.hpp"

namespace confcoh {

namespace {

Rat fact(int n) { return Rat(factorial(static_cast<unsigned>(n))); }

void add_to(AnnElement& out, const AnnBasisVector& x, const Rat& c) {
  if (c == 0) return;
  Rat& slot = out[x];
  slot += c;
  if (slot == 0) out.erase(x);
}

void add_to(VMinusElement& out, std::pair<int, int> key, const Rat& c) {
  if (c == 0) return;
  Rat& slot = out[key];
  slot += c;
  if (slot == 0) out.erase(key);
}

// Splits p into its lam exponent vector (length n) and the remaining factor.
std::vector<std::pair<std::vector<int>, RatPoly>> split_lams(const RatPoly& p, int n) {
  std::vector<std::pair<std::vector<int>, RatPoly>> out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> exps(static_cast<std::size_t>(n));
    std::vector<Monomial::Factor> rest;
    for (const auto& [v, e] : m.factors()) {
      if (v.is_lam() && v.index() <= n)
        exps[static_cast<std::size_t>(v.index() - 1)] = e;
      else
        rest.emplace_back(v, e);
    }
    out.emplace_back(std::move(exps), RatPoly::monomial(Monomial::from_factors(std::move(rest)), c));
  }
  return out;
}

AlgValue unit(int size, int gen) {
  AlgValue a(static_cast<std::size_t>(size));
  a[static_cast<std::size_t>(gen)] = RatPoly(1);
  return a;
}

}  // namespace

AnnElement ann_element(const AlgValue& a, int level) {
  AnnElement out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& [m, c] : a[i].terms()) {
      const int r = m.exponent(VarId::del());
      if (r > level) continue;
      Rat coef = c * Rat(falling_factorial(level, static_cast<unsigned>(r)));
      if (r % 2 == 1) coef = -coef;
      add_to(out, AnnBasisVector{static_cast<int>(i), level - r}, coef);
    }
  }
  return out;
}

AlgValue j_product(const ConformalAlgebra& A, int i, int j, int k) {
  AlgValue out(static_cast<std::size_t>(A.size()));
  for (int c = 0; c < A.size(); ++c) {
    const std::vector<RatPoly> parts = A.entry(i, j, c).coefficients_in(VarId::lam(1));
    if (k < static_cast<int>(parts.size())) out[static_cast<std::size_t>(c)] = parts[k] * fact(k);
  }
  return out;
}

AnnElement ann_bracket(const ConformalAlgebra& A, const AnnBasisVector& x, const AnnBasisVector& y) {
  AnnElement out;
  for (int j = 0; j <= x.level; ++j) {
    const AlgValue p = j_product(A, x.gen, y.gen, j);
    if (is_zero(p)) continue;
    const Rat b(binomial(x.level, j));
    for (const auto& [v, c] : ann_element(p, x.level + y.level - j)) add_to(out, v, b * c);
  }
  return out;
}

AnnElement ann_bracket(const ConformalAlgebra& A, const AnnElement& x, const AnnElement& y) {
  AnnElement out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y)
      for (const auto& [w, cw] : ann_bracket(A, u, v)) add_to(out, w, cu * cv * cw);
  return out;
}

AnnElement derivation_T(const AnnBasisVector& x) {
  AnnElement out;
  if (x.level > 0) out[{x.gen, x.level - 1}] = Rat(-x.level);
  return out;
}

AnnElement derivation_T(const AnnElement& x) {
  AnnElement out;
  for (const auto& [u, c] : x)
    for (const auto& [w, cw] : derivation_T(u)) add_to(out, w, c * cw);
  return out;
}

VMinusElement v_minus_element(const ModValue& u, int level) {
  VMinusElement out;
  for (std::size_t r = 0; r < u.size(); ++r) {
    for (const auto& [m, c] : u[r].terms()) {
      const int p = m.exponent(VarId::del());
      if (p > level) continue;
      Rat coef = c * Rat(falling_factorial(level, static_cast<unsigned>(p)));
      if (p % 2 == 1) coef = -coef;
      add_to(out, {static_cast<int>(r), level - p}, coef);
    }
  }
  return out;
}

ModValue ann_module_action(const ConformalModule& M, const AnnBasisVector& x, const ModValue& v) {
  ModValue out(static_cast<std::size_t>(M.dim()));
  if (!M.is_free()) return out;
  const ModValue full = action_eval(M, unit(M.action_count(), x.gen), v);
  const Rat f = fact(x.level);
  for (std::size_t r = 0; r < full.size(); ++r) {
    const std::vector<RatPoly> parts = full[r].coefficients_in(VarId::lam(1));
    if (x.level < static_cast<int>(parts.size())) out[r] = parts[static_cast<std::size_t>(x.level)] * f;
  }
  return out;
}

VMinusElement v_minus_action(const ConformalAlgebra& A, const ConformalModule& M, const AnnBasisVector& x,
                             const ModValue& u, int level) {
  if (!M.is_free()) throw WrongModuleKind("V(M)_- needs a free module");
  if (M.action_count() != A.size()) throw std::invalid_argument("module and algebra sizes differ");
  VMinusElement out;
  const ModValue full = action_eval(M, alg_gen(A, x.gen), u);
  for (std::size_t r = 0; r < full.size(); ++r) {
    const std::vector<RatPoly> parts = full[r].coefficients_in(VarId::lam(1));
    for (int j = 0; j <= x.level && j < static_cast<int>(parts.size()); ++j) {
      if (parts[static_cast<std::size_t>(j)].is_zero()) continue;
      ModValue prod(full.size());
      prod[r] = parts[static_cast<std::size_t>(j)] * fact(j);
      const Rat b(binomial(x.level, j));
      for (const auto& [key, c] : v_minus_element(prod, x.level + level - j)) add_to(out, key, b * c);
    }
  }
  return out;
}

VMinusElement v_minus_action(const ConformalAlgebra& A, const ConformalModule& M, const AnnBasisVector& x,
                             const VMinusElement& v) {
  VMinusElement out;
  for (const auto& [key, c] : v) {
    ModValue u = mod_zero(M);
    u[static_cast<std::size_t>(key.first)] = RatPoly(1);
    for (const auto& [k2, c2] : v_minus_action(A, M, x, u, key.second)) add_to(out, k2, c * c2);
  }
  return out;
}

AnnFunctional::AnnFunctional(const Cochain& g) : arity_(g.arity()), dim_(g.dim), skew_(g.is_skew()) {
  for (const auto& [t, v] : g.values) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      for (auto& [exps, rest] : split_lams(v[c], arity_)) {
        Rat f = 1;
        for (int e : exps) f *= fact(e);
        auto [it, fresh] = coeffs_.try_emplace({t, exps}, ModValue(static_cast<std::size_t>(dim_)));
        it->second[c] += rest * f;
      }
    }
  }
}

ModValue AnnFunctional::operator()(const std::vector<AnnBasisVector>& args) const {
  if (static_cast<int>(args.size()) != arity_) throw std::invalid_argument("functional arity mismatch");
  Tuple t(args.size());
  std::vector<int> levels(args.size());
  int sign = 1;
  if (skew_) {
    Tuple gens(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) gens[i] = args[i].gen;
    const std::vector<int> p = sort_desc_permutation(gens, &sign);
    for (std::size_t i = 0; i < args.size(); ++i) {
      t[i] = args[static_cast<std::size_t>(p[i])].gen;
      levels[i] = args[static_cast<std::size_t>(p[i])].level;
    }
  } else {
    for (std::size_t i = 0; i < args.size(); ++i) {
      t[i] = args[i].gen;
      levels[i] = args[i].level;
    }
  }
  auto it = coeffs_.find({t, levels});
  if (it == coeffs_.end()) return ModValue(static_cast<std::size_t>(dim_));
  if (sign == 1) return it->second;
  ModValue out = it->second;
  for (auto& p : out) p = -p;
  return out;
}

ModValue AnnFunctional::eval_first(const AnnElement& first, const std::vector<AnnBasisVector>& rest) const {
  ModValue out(static_cast<std::size_t>(dim_));
  std::vector<AnnBasisVector> args;
  args.reserve(rest.size() + 1);
  args.push_back({});
  args.insert(args.end(), rest.begin(), rest.end());
  for (const auto& [x, c] : first) {
    args[0] = x;
    const ModValue v = (*this)(args);
    for (std::size_t r = 0; r < v.size(); ++r)
      if (!v[r].is_zero()) out[r] += v[r] * c;
  }
  return out;
}

AnnFunctional phi(const Cochain& g) { return AnnFunctional(g); }

ModValue ce_differential_eval(const ConformalAlgebra& A, const ConformalModule& M, const AnnFunctional& beta,
                              const std::vector<AnnBasisVector>& args) {
  const int n = static_cast<int>(args.size());
  if (n != beta.arity() + 1) throw std::invalid_argument("ce_differential_eval: wrong number of arguments");
  ModValue out(static_cast<std::size_t>(beta.dim()));
  auto accumulate = [&](const ModValue& v, int sign) {
    for (std::size_t r = 0; r < v.size(); ++r)
      if (!v[r].is_zero()) out[r] += sign > 0 ? v[r] : -v[r];
  };
  for (int i = 0; i < n; ++i) {
    std::vector<AnnBasisVector> rest;
    for (int k = 0; k < n; ++k)
      if (k != i) rest.push_back(args[static_cast<std::size_t>(k)]);
    const ModValue inner = beta(rest);
    if (is_zero(inner)) continue;
    accumulate(ann_module_action(M, args[static_cast<std::size_t>(i)], inner), i % 2 == 0 ? 1 : -1);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const AnnElement br = ann_bracket(A, args[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(j)]);
      if (br.empty()) continue;
      std::vector<AnnBasisVector> rest;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) rest.push_back(args[static_cast<std::size_t>(k)]);
      accumulate(beta.eval_first(br, rest), (i + j) % 2 == 0 ? 1 : -1);
    }
  }
  return out;
}

ModValue ce_del_eval(const ConformalModule& M, const AnnFunctional& beta, const std::vector<AnnBasisVector>& args) {
  ModValue out = module_del(M, beta(args));
  std::vector<AnnBasisVector> shifted = args;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const AnnElement t = derivation_T(args[i]);
    for (const auto& [x, c] : t) {
      shifted[i] = x;
      const ModValue v = beta(shifted);
      for (std::size_t r = 0; r < v.size(); ++r)
        if (!v[r].is_zero()) out[r] -= v[r] * c;
    }
    shifted[i] = args[i];
  }
  return out;
}

std::vector<std::vector<AnnBasisVector>> ann_tuples(int n, int gens, int max_level) {
  std::vector<AnnBasisVector> all;
  for (int g = 0; g < gens; ++g)
    for (int m = 0; m <= max_level; ++m) all.push_back({g, m});
  std::sort(all.rbegin(), all.rend());
  std::vector<std::vector<AnnBasisVector>> out;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(idx.size()) == n) {
      std::vector<AnnBasisVector> t;
      for (std::size_t k : idx) t.push_back(all[k]);
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t k = from; k < all.size(); ++k) {
      idx.push_back(k);
      rec(k);
      idx.pop_back();
    }
  };
  rec(0);
  return out;
}

BridgeReport check_bridge(const ConformalAlgebra& A, const ConformalModule& M, const Cochain& g, int max_level) {
  BridgeReport rep;
  if (g.variant != Variant::LieBasic) throw std::invalid_argument("check_bridge needs a basic cochain");
  const AnnFunctional beta = phi(g);
  const AnnFunctional dbeta = phi(d_basic(A, M, g));
  const AnnFunctional del_beta = phi(del_action(M, g));
  auto fail = [&](const char* what, const std::vector<AnnBasisVector>& t) {
    if (rep.failures++ > 0) return;
    std::ostringstream os;
    os << what << " at";
    for (const auto& x : t) os << " " << A.gens()[static_cast<std::size_t>(x.gen)] << "_" << x.level;
    rep.first_failure = os.str();
  };
  for (const auto& t : ann_tuples(g.q + 1, A.size(), max_level)) {
    ++rep.checked;
    const ModValue lhs = dbeta(t);
    if (!is_zero(lhs)) ++rep.nonzero;
    if (lhs != ce_differential_eval(A, M, beta, t)) fail("d", t);
  }
  if (g.q > 0) {
    for (const auto& t : ann_tuples(g.q, A.size(), max_level)) {
      ++rep.checked;
      if (del_beta(t) != ce_del_eval(M, beta, t)) fail("del", t);
    }
  }
  return rep;
}

}  // namespace confcoh
