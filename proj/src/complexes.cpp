#include "confcoh/complexes.hpp"

#include <algorithm>
#include <set>

#include <mutex>

namespace confcoh {

namespace {

void tuples_rec(int n, int gens, int max_gen, bool canonical, Tuple& cur, std::vector<Tuple>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  const int top = canonical ? max_gen : gens - 1;
  for (int i = top; i >= 0; --i) {
    cur.push_back(i);
    tuples_rec(n, gens, i, canonical, cur, out);
    cur.pop_back();
  }
}

const std::vector<Tuple>& tuples_cached(int n, int gens, bool canonical) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool>, std::vector<Tuple>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, gens, canonical);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Tuple> out;
  Tuple cur;
  tuples_rec(n, gens, gens - 1, canonical, cur, out);
  return cache.emplace(key, std::move(out)).first->second;
}

// sum_c m_c(d + lambda) act[r][c](lambda, d)
ModValue matrix_action(const PolyMatrix& act, const RatPoly& lambda, const ModValue& m) {
  ModValue out(m.size());
  const RatPoly shift = RatPoly::del() + lambda;
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (m[c].is_zero()) continue;
    const RatPoly mc = m[c].contains(VarId::del()) ? m[c].substitute(VarId::del(), shift) : m[c];
    for (std::size_t r = 0; r < act.size(); ++r) {
      if (act[r][c].is_zero()) continue;
      out[r] += mc * table_at(act[r][c], lambda);
    }
  }
  return out;
}

void accumulate(ModValue& acc, const ModValue& v, int sign) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (sign > 0)
      acc[i] += v[i];
    else
      acc[i] -= v[i];
  }
}

AlgValue gen_bracket(const ConformalAlgebra& A, int i, int j, const RatPoly& lambda) {
  AlgValue out = A.entry(i, j);
  for (auto& p : out)
    if (!p.is_zero()) p = table_at(p, lambda);
  return out;
}

RatPoly lam_total(int n) { return RatPoly::lam_sum(1, n); }

// Lie differential on skew or full tuples; the output keeps only nonzero values.
Cochain lie_differential(const ConformalAlgebra& A, const ConformalModule& M, const Cochain& g,
                         Variant out_variant, bool leibniz) {
  const int n = g.q;
  const int gens = A.size();
  Cochain out(out_variant, n + 1, g.dim);
  const auto& tuples = leibniz ? ordered_tuples(n + 1, gens) : canonical_tuples(n + 1, gens);
  const std::vector<RatPoly> lams = standard_params(n + 1);
  std::vector<AlgValue> args;
  std::vector<RatPoly> params;
  // Support filter: sorted argument multisets on which g can be nonzero, and
  // the same with one argument dropped (the slot taking a bracket).
  std::set<Tuple> support;
  std::set<Tuple> support_minus_one;
  for (const auto& [t, v] : g.values) {
    if (is_zero(v)) continue;
    Tuple s = t;
    std::sort(s.begin(), s.end());
    for (std::size_t k = 0; k < s.size(); ++k) {
      Tuple r = s;
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(k));
      support_minus_one.insert(std::move(r));
    }
    support.insert(std::move(s));
  }
  // Output tuples that can be nonzero: a support multiset plus one generator
  // (module term) or with one entry replaced by two (bracket term).
  std::set<Tuple> reach;
  if (M.is_free() && !leibniz)
    for (const Tuple& s : support)
      for (int x = 0; x < gens; ++x) {
        Tuple r = s;
        r.insert(std::upper_bound(r.begin(), r.end(), x), x);
        reach.insert(std::move(r));
      }
  for (const Tuple& s : support_minus_one)
    for (int x = 0; x < gens && !leibniz; ++x)
      for (int y = x; y < gens; ++y) {
        Tuple r = s;
        r.insert(std::upper_bound(r.begin(), r.end(), x), x);
        r.insert(std::upper_bound(r.begin(), r.end(), y), y);
        reach.insert(std::move(r));
      }
  std::vector<Tuple> targets;
  if (leibniz) {
    // Ordered candidates: a generator inserted anywhere (module term), or the
    // entry at slot j-1 produced by a bracket [x y] with x inserted before it.
    std::set<Tuple> exact;
    for (const auto& [sup, v] : g.values) {
      if (is_zero(v)) continue;
      const int len = static_cast<int>(sup.size());
      for (int i = 0; i <= len; ++i)
        for (int x = 0; x < gens; ++x) {
          if (M.is_free()) {
            Tuple r = sup;
            r.insert(r.begin() + i, x);
            exact.insert(std::move(r));
          }
          for (int j = i; j < len; ++j)
            for (int y = 0; y < gens; ++y) {
              if (A.entry(x, y, sup[static_cast<std::size_t>(j)]).is_zero()) continue;
              Tuple r = sup;
              r[static_cast<std::size_t>(j)] = y;
              r.insert(r.begin() + i, x);
              exact.insert(std::move(r));
            }
        }
    }
    targets.assign(exact.begin(), exact.end());
  } else {
    for (const Tuple& r : reach) targets.emplace_back(r.rbegin(), r.rend());
  }
  if (targets.size() > tuples.size()) targets = tuples;
  Tuple key;
  for (const Tuple& t : targets) {
    ModValue acc(static_cast<std::size_t>(g.dim));
    if (M.is_free()) {
      for (int i = 0; i <= n; ++i) {
        Tuple rest;
        params.clear();
        for (int k = 0; k <= n; ++k)
          if (k != i) {
            rest.push_back(t[k]);
            params.push_back(lams[k]);
          }
        key = rest;
        std::sort(key.begin(), key.end());
        if (!support.count(key)) continue;
        ModValue v = evaluate(g, rest, params);
        if (is_zero(v)) continue;
        accumulate(acc, matrix_action(M.action(t[i]), lams[i], v), i % 2 == 0 ? 1 : -1);
      }
    }
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        key.clear();
        for (int k = 0; k <= n; ++k)
          if (k != i && k != j) key.push_back(t[k]);
        std::sort(key.begin(), key.end());
        if (!support_minus_one.count(key)) continue;
        AlgValue br = gen_bracket(A, t[i], t[j], lams[i]);
        if (is_zero(br)) continue;
        args.clear();
        params.clear();
        if (leibniz) {
          for (int k = 0; k <= n; ++k) {
            if (k == i) continue;
            if (k == j) {
              args.push_back(br);
              params.push_back(lams[i] + lams[j]);
            } else {
              args.push_back(alg_gen(A, t[k]));
              params.push_back(lams[k]);
            }
          }
        } else {
          args.push_back(br);
          params.push_back(lams[i] + lams[j]);
          for (int k = 0; k <= n; ++k)
            if (k != i && k != j) {
              args.push_back(alg_gen(A, t[k]));
              params.push_back(lams[k]);
            }
        }
        const int sign = leibniz ? ((i + 1) % 2 == 0 ? 1 : -1) : ((i + j) % 2 == 0 ? 1 : -1);
        accumulate(acc, cochain_eval(g, args, params), sign);
      }
    if (!is_zero(acc)) out.values[t] = std::move(acc);
  }
  return out;
}

Variant reduced_variant(Variant v) {
  if (v == Variant::LieBasic) return Variant::LieReduced;
  if (v == Variant::Hochschild) return Variant::HochschildReduced;
  return v;
}

Variant basic_variant(Variant v) {
  if (v == Variant::LieReduced) return Variant::LieBasic;
  if (v == Variant::HochschildReduced) return Variant::Hochschild;
  return v;
}

Cochain substitute_del(const Cochain& g, const RatPoly& repl) {
  Cochain out = g;
  for (auto& [t, v] : out.values) v = substitute_all(v, VarId::del(), repl);
  out.prune();
  return out;
}

}  // namespace

const std::vector<Tuple>& canonical_tuples(int n, int gens) { return tuples_cached(n, gens, true); }
const std::vector<Tuple>& ordered_tuples(int n, int gens) { return tuples_cached(n, gens, false); }

Cochain d_basic(const ConformalAlgebra& A, const ConformalModule& M, const Cochain& g) {
  return lie_differential(A, M, g, Variant::LieBasic, false);
}

Cochain del_action(const ConformalModule& M, const Cochain& g) {
  RatPoly factor = lam_total(g.arity());
  factor += M.is_free() ? RatPoly::del() : RatPoly(M.del_scalar());
  Cochain out = g;
  out *= factor;
  return out;
}

Cochain reduce(const ConformalModule& M, const Cochain& g) {
  if (!M.is_free()) throw WrongModuleKind("reduce needs a free module; scalar modules are quotiented by the engine");
  Cochain out = substitute_del(g, -lam_total(g.arity()));
  out.variant = reduced_variant(g.variant);
  return out;
}

Cochain d_reduced(const ConformalAlgebra& A, const ConformalModule& M, const Cochain& g) {
  Cochain lifted = g;
  lifted.variant = Variant::LieBasic;
  Cochain d = d_basic(A, M, lifted);
  if (M.is_free()) return reduce(M, d);
  d.variant = Variant::LieReduced;
  return d;
}

bool reduced_is_zero(const ConformalModule& M, const Cochain& g) {
  if (M.is_free()) {
    return g.values.empty() || reduce(M, g).is_zero();
  }
  const int n = g.arity();
  if (n == 0) return M.del_scalar() != 0 || g.is_zero();
  const RatPoly divisor = lam_total(n) + RatPoly(M.del_scalar());
  for (const auto& [t, v] : g.values)
    for (const auto& p : v) {
      if (p.is_zero()) continue;
      try {
        (void)p.divide_exact_linear(divisor, VarId::lam(1));
      } catch (const std::domain_error&) {
        return false;
      }
    }
  return true;
}

Cochain d_leibniz(const ConformalAlgebra& A, const ConformalModule& M, const Cochain& g) {
  return lie_differential(A, M, g, Variant::Leibniz, true);
}

Bimodule regular_bimodule(const ConformalAlgebra& A) {
  const int n = A.size();
  Bimodule b{"regular", A.gens(), {}, {}};
  for (int i = 0; i < n; ++i) {
    PolyMatrix l(n, std::vector<RatPoly>(n));
    PolyMatrix r(n, std::vector<RatPoly>(n));
    for (int c = 0; c < n; ++c)
      for (int k = 0; k < n; ++k) {
        l[k][c] = A.entry(i, c, k);
        r[k][c] = A.entry(c, i, k);
      }
    b.left.push_back(l);
    b.right.push_back(r);
  }
  return b;
}

Bimodule symmetric_bimodule(const ConformalAlgebra& A, const std::vector<RatMatrix>& rho) {
  if (static_cast<int>(rho.size()) != A.size()) throw std::invalid_argument("one matrix per generator expected");
  Bimodule b{"symmetric", {}, {}, {}};
  const std::size_t d = rho.empty() ? 0 : rho.front().size();
  for (std::size_t i = 0; i < d; ++i) b.basis.push_back("u" + std::to_string(i + 1));
  for (const auto& m : rho) {
    PolyMatrix pm(d, std::vector<RatPoly>(d));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) pm[r][c] = RatPoly(m[r][c]);
    b.left.push_back(pm);
    b.right.push_back(pm);
  }
  return b;
}

namespace {

ModValue left_act(const Bimodule& B, const AlgValue& a, const RatPoly& lambda, const ModValue& m) {
  ModValue out(m.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    RatPoly ai = a[i].substitute(VarId::del(), -lambda);
    ModValue v = matrix_action(B.left[i], lambda, m);
    for (std::size_t r = 0; r < v.size(); ++r)
      if (!v[r].is_zero()) out[r] += ai * v[r];
  }
  return out;
}

// m_lambda a = sum_{i,c} m_c(-lambda) a_i(d + lambda) right_i[r][c](lambda, d)
ModValue right_act(const Bimodule& B, const ModValue& m, const RatPoly& lambda, const AlgValue& a) {
  ModValue out(m.size());
  const RatPoly shift = RatPoly::del() + lambda;
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (m[c].is_zero()) continue;
    const RatPoly mc = m[c].substitute(VarId::del(), -lambda);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      const RatPoly coeff = mc * a[i].substitute(VarId::del(), shift);
      for (std::size_t r = 0; r < m.size(); ++r)
        if (!B.right[i][r][c].is_zero()) out[r] += coeff * table_at(B.right[i][r][c], lambda);
    }
  }
  return out;
}

}  // namespace

CheckResult check_bimodule(const ConformalAlgebra& A, const Bimodule& B) {
  const RatPoly l = RatPoly::lam(1);
  const RatPoly m = RatPoly::lam(2);
  auto diff = [](ModValue a, const ModValue& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j < A.size(); ++j)
      for (int c = 0; c < B.dim(); ++c) {
        const AlgValue ei = alg_gen(A, i);
        const AlgValue ej = alg_gen(A, j);
        ModValue u(static_cast<std::size_t>(B.dim()));
        u[c] = RatPoly(1);
        // a_l(b_m u) = (a_l b)_{l+m} u
        ModValue r1 = diff(left_act(B, ei, l, left_act(B, ej, m, u)),
                           left_act(B, bracket_eval(A, ei, l, ej), l + m, u));
        // (u_l a)_{l+m} b = u_l(a_m b)
        ModValue r2 = diff(right_act(B, right_act(B, u, l, ei), l + m, ej),
                           right_act(B, u, l, bracket_eval(A, ei, m, ej)));
        // (a_l u)_{l+m} b = a_l(u_m b)
        ModValue r3 = diff(right_act(B, left_act(B, ei, l, u), l + m, ej),
                           left_act(B, ei, l, right_act(B, u, m, ej)));
        for (const ModValue* r : {&r1, &r2, &r3})
          if (!is_zero(*r)) return {false, {i, j, c}, format_value(*r, B.basis)};
      }
  return {};
}

Cochain d_hochschild(const ConformalAlgebra& A, const Bimodule& B, const Cochain& g) {
  if (A.kind() != AlgebraKind::Associative || !check_associativity(A))
    throw NotAssociative(A.name() + " is not an associative conformal algebra");
  const int n = g.q;
  Cochain out(Variant::Hochschild, n + 1, g.dim);
  const std::vector<RatPoly> lams = standard_params(n + 1);
  for (const Tuple& t : ordered_tuples(n + 1, A.size())) {
    ModValue acc(static_cast<std::size_t>(g.dim));
    {
      Tuple rest(t.begin() + 1, t.end());
      ModValue v = evaluate(g, rest, std::vector<RatPoly>(lams.begin() + 1, lams.end()));
      if (!is_zero(v)) accumulate(acc, matrix_action(B.left[t[0]], lams[0], v), 1);
    }
    for (int s = 0; s < n; ++s) {
      AlgValue prod = gen_bracket(A, t[s], t[s + 1], lams[s]);
      if (is_zero(prod)) continue;
      std::vector<AlgValue> args;
      std::vector<RatPoly> params;
      for (int k = 0; k <= n; ++k) {
        if (k == s + 1) continue;
        if (k == s) {
          args.push_back(prod);
          params.push_back(lams[s] + lams[s + 1]);
        } else {
          args.push_back(alg_gen(A, t[k]));
          params.push_back(lams[k]);
        }
      }
      accumulate(acc, cochain_eval(g, args, params), s % 2 == 0 ? -1 : 1);
    }
    {
      Tuple head(t.begin(), t.end() - 1);
      ModValue v = evaluate(g, head, std::vector<RatPoly>(lams.begin(), lams.end() - 1));
      if (!is_zero(v)) {
        const RatPoly& last = lams[n];
        const RatPoly mu = -RatPoly::del() - last;
        const PolyMatrix& R = B.right[t[n]];
        ModValue w(v.size());
        for (std::size_t c = 0; c < v.size(); ++c) {
          if (v[c].is_zero()) continue;
          RatPoly vc = v[c].substitute(VarId::del(), RatPoly::del() + last);
          for (std::size_t r = 0; r < v.size(); ++r)
            if (!R[r][c].is_zero()) w[r] += vc * table_at(R[r][c], mu);
        }
        accumulate(acc, w, (n + 1) % 2 == 0 ? 1 : -1);
      }
    }
    if (!is_zero(acc)) out.values[t] = std::move(acc);
  }
  return out;
}

Cochain del_action(const Bimodule&, const Cochain& g) {
  Cochain out = g;
  out *= RatPoly::del() + lam_total(g.arity());
  return out;
}

Cochain d_hochschild_reduced(const ConformalAlgebra& A, const Bimodule& B, const Cochain& g) {
  Cochain lifted = g;
  lifted.variant = basic_variant(g.variant);
  Cochain d = d_hochschild(A, B, lifted);
  Cochain out = substitute_del(d, -lam_total(d.arity()));
  out.variant = Variant::HochschildReduced;
  return out;
}

Cochain d_cyclic(const ConformalAlgebra& A, const Cochain& g) {
  if (A.kind() != AlgebraKind::Associative || !check_associativity(A))
    throw NotAssociative(A.name() + " is not an associative conformal algebra");
  const int n = g.q;
  const int args_out = n + 2;  // a0 .. a_{n+1}
  Cochain out(Variant::Cyclic, n + 1, 1);
  const std::vector<RatPoly> lams = standard_params(args_out);
  for (const Tuple& t : ordered_tuples(args_out, A.size())) {
    ModValue acc(1);
    for (int i = 0; i <= n; ++i) {
      AlgValue prod = gen_bracket(A, t[i], t[i + 1], lams[i]);
      if (is_zero(prod)) continue;
      std::vector<AlgValue> args;
      std::vector<RatPoly> params;
      for (int k = 0; k < args_out; ++k) {
        if (k == i + 1) continue;
        if (k == i) {
          args.push_back(prod);
          params.push_back(lams[i] + lams[i + 1]);
        } else {
          args.push_back(alg_gen(A, t[k]));
          params.push_back(lams[k]);
        }
      }
      accumulate(acc, cochain_eval(g, args, params), i % 2 == 0 ? 1 : -1);
    }
    AlgValue wrap = gen_bracket(A, t[n + 1], t[0], lams[n + 1]);
    if (!is_zero(wrap)) {
      std::vector<AlgValue> args{wrap};
      std::vector<RatPoly> params{lams[n + 1] + lams[0]};
      for (int k = 1; k <= n; ++k) {
        args.push_back(alg_gen(A, t[k]));
        params.push_back(lams[k]);
      }
      accumulate(acc, cochain_eval(g, args, params), (n + 1) % 2 == 0 ? 1 : -1);
    }
    if (!is_zero(acc)) out.values[t] = std::move(acc);
  }
  return out;
}

Cochain cyclic_shift(const Cochain& g, int gens) {
  const int n = g.arity();
  Cochain out(g.variant, g.q, g.dim);
  std::vector<RatPoly> params;
  for (int k = 1; k < n; ++k) params.push_back(RatPoly::lam(k + 1));
  params.push_back(RatPoly::lam(1));
  for (const Tuple& t : ordered_tuples(n, gens)) {
    Tuple rotated(t.begin() + 1, t.end());
    rotated.push_back(t[0]);
    ModValue v = evaluate(g, rotated, params);
    if (!is_zero(v)) out.values[t] = v;
  }
  return out;
}

}  // namespace confcoh
