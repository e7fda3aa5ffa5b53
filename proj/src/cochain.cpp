#include "confcoh/cochain.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace confcoh {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::LieBasic: return "basic";
    case Variant::LieReduced: return "reduced";
    case Variant::Hochschild: return "hochschild";
    case Variant::HochschildReduced: return "hochschild-reduced";
    case Variant::Cyclic: return "cyclic";
    case Variant::Leibniz: return "leibniz";
  }
  return "?";
}

Variant parse_variant(const std::string& name) {
  for (Variant v : {Variant::LieBasic, Variant::LieReduced, Variant::Hochschild,
                    Variant::HochschildReduced, Variant::Cyclic, Variant::Leibniz})
    if (variant_name(v) == name) return v;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

namespace {

bool is_identity(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

void add_into(ModValue& acc, const ModValue& v) {
  if (acc.size() < v.size()) acc.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) acc[i] += v[i];
}

}  // namespace

void Cochain::add(const Tuple& t, const ModValue& v) {
  if (static_cast<int>(t.size()) != arity()) throw std::invalid_argument("tuple length differs from cochain arity");
  if (!is_skew()) {
    add_into(values[t], v);
    return;
  }
  int sign = 1;
  std::vector<int> p = sort_desc_permutation(t, &sign);
  if (is_identity(p)) {
    add_into(values[t], v);
    return;
  }
  Tuple c(t.size());
  std::map<VarId, VarId> ren;
  for (std::size_t k = 0; k < t.size(); ++k) {
    c[k] = t[p[k]];
    ren[VarId::lam(p[k] + 1)] = VarId::lam(static_cast<int>(k) + 1);
  }
  ModValue moved(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) moved[i] = v[i].rename(ren) * Rat(sign);
  add_into(values[c], moved);
}

void Cochain::prune() {
  for (auto it = values.begin(); it != values.end();) {
    if (confcoh::is_zero(it->second))
      it = values.erase(it);
    else
      ++it;
  }
}

bool Cochain::is_zero() const {
  for (const auto& [t, v] : values)
    if (!confcoh::is_zero(v)) return false;
  return true;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  for (const auto& [t, v] : o.values) add_into(values[t], v);
  prune();
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  for (const auto& [t, v] : o.values) {
    ModValue neg = v;
    for (auto& p : neg) p *= Rat(-1);
    add_into(values[t], neg);
  }
  prune();
  return *this;
}

Cochain& Cochain::operator*=(const Rat& c) {
  if (c == 0) {
    values.clear();
    return *this;
  }
  for (auto& [t, v] : values)
    for (auto& p : v) p *= c;
  return *this;
}

Cochain& Cochain::operator*=(const RatPoly& f) {
  for (auto& [t, v] : values)
    for (auto& p : v) p *= f;
  prune();
  return *this;
}

bool operator==(const Cochain& a, const Cochain& b) {
  if (a.variant != b.variant || a.q != b.q) return false;
  Cochain diff = a;
  diff -= b;
  return diff.is_zero();
}

std::vector<RatPoly> standard_params(int n) {
  std::vector<RatPoly> out;
  for (int i = 1; i <= n; ++i) out.push_back(RatPoly::lam(i));
  return out;
}

ModValue evaluate(const Cochain& g, const Tuple& t, const std::vector<RatPoly>& params) {
  const ModValue zero(static_cast<std::size_t>(g.dim));
  std::vector<int> p;
  int sign = 1;
  const ModValue* stored = nullptr;
  if (g.is_skew()) {
    p = sort_desc_permutation(t, &sign);
    Tuple c(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) c[k] = t[p[k]];
    auto it = g.values.find(c);
    if (it == g.values.end()) return zero;
    stored = &it->second;
  } else {
    auto it = g.values.find(t);
    if (it == g.values.end()) return zero;
    stored = &it->second;
    p.resize(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) p[k] = static_cast<int>(k);
  }
  std::map<VarId, RatPoly> repl;
  std::map<VarId, VarId> ren;  // used when every target is a single lam
  bool renaming = true;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const RatPoly& target = params[p[k]];
    const VarId from = VarId::lam(static_cast<int>(k) + 1);
    if (target == RatPoly::var(from)) continue;
    repl.emplace(from, target);
    if (renaming) {
      const auto& terms = target.terms();
      if (terms.size() == 1 && terms.begin()->second == 1 && terms.begin()->first.factors().size() == 1 &&
          terms.begin()->first.factors().front().second == 1)
        ren.emplace(from, terms.begin()->first.factors().front().first);
      else
        renaming = false;
    }
  }
  ModValue out(stored->size());
  for (std::size_t i = 0; i < stored->size(); ++i) {
    const RatPoly& v = (*stored)[i];
    if (v.is_zero()) continue;
    out[i] = repl.empty() ? v : renaming ? v.rename(ren) : v.substitute(repl);
    if (sign < 0) out[i] *= Rat(-1);
  }
  return out;
}

ModValue value_at(const Cochain& g, const Tuple& t) {
  return evaluate(g, t, standard_params(static_cast<int>(t.size())));
}

ModValue cochain_eval(const Cochain& g, const std::vector<AlgValue>& args,
                      const std::vector<RatPoly>& params) {
  const int n = g.arity();
  if (static_cast<int>(args.size()) != n || static_cast<int>(params.size()) != n)
    throw std::invalid_argument("cochain_eval: wrong number of arguments");
  // per slot: (generator, antilinear coefficient)
  std::vector<std::vector<std::pair<int, RatPoly>>> slots(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    const RatPoly minus = -params[s];
    for (std::size_t k = 0; k < args[s].size(); ++k) {
      const RatPoly& c = args[s][k];
      if (c.is_zero()) continue;
      slots[s].emplace_back(static_cast<int>(k), c.contains(VarId::del()) ? c.substitute(VarId::del(), minus) : c);
    }
    if (slots[s].empty()) return ModValue(static_cast<std::size_t>(g.dim));
  }
  ModValue out(static_cast<std::size_t>(g.dim));
  Tuple t(static_cast<std::size_t>(n));
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  Tuple key(static_cast<std::size_t>(n));
  while (true) {
    for (int s = 0; s < n; ++s) t[s] = slots[s][idx[s]].first;
    key = t;
    if (g.is_skew()) std::sort(key.begin(), key.end(), std::greater<>());
    if (g.values.count(key)) {
      ModValue v = evaluate(g, t, params);
      if (!is_zero(v)) {
        RatPoly coeff(1);
        for (int s = 0; s < n; ++s) coeff *= slots[s][idx[s]].second;
        for (std::size_t i = 0; i < v.size(); ++i)
          if (!v[i].is_zero()) out[i] += coeff * v[i];
      }
    }
    int s = n - 1;
    while (s >= 0 && ++idx[s] == slots[s].size()) {
      idx[s] = 0;
      --s;
    }
    if (s < 0) break;
  }
  return out;
}

ModValue cochain_eval(const Cochain& g, const std::vector<AlgValue>& args) {
  return cochain_eval(g, args, standard_params(g.arity()));
}

namespace {

void all_tuples(int n, int gens, Tuple& cur, std::vector<Tuple>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < gens; ++i) {
    cur.push_back(i);
    all_tuples(n, gens, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Cochain to_full(const Cochain& g, int gens) {
  Cochain out(Variant::Leibniz, g.q, g.dim);
  std::vector<Tuple> tuples;
  Tuple cur;
  all_tuples(g.arity(), gens, cur, tuples);
  for (const auto& t : tuples) {
    ModValue v = value_at(g, t);
    if (!is_zero(v)) out.values[t] = v;
  }
  return out;
}

Cochain cochain_from_family(Variant v, int q, int dim, const TupleFamily& f, int component) {
  Cochain out(v, q, dim);
  for (const auto& [t, p] : f) {
    if (p.is_zero()) continue;
    if (out.is_skew()) {
      int sign = 1;
      auto perm = sort_desc_permutation(t, &sign);
      if (!is_identity(perm)) continue;  // determined by the canonical entry
    }
    ModValue val(static_cast<std::size_t>(dim));
    val[component] = p;
    out.values[t] = val;
  }
  return out;
}

Cochain substitute_values(const Cochain& g, const std::map<VarId, RatPoly>& repl) {
  Cochain out = g;
  for (auto& [t, v] : out.values) v = substitute_all(v, repl);
  out.prune();
  return out;
}

std::string format_cochain(const Cochain& g, const std::vector<std::string>& gens,
                           const std::vector<std::string>& basis) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, v] : g.values) {
    if (is_zero(v)) continue;
    if (!first) os << "; ";
    first = false;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << gens[t[i]];
    os << ") -> " << format_value(v, g.dim == 1 && basis.size() <= 1 ? std::vector<std::string>{} : basis);
  }
  return first ? "0" : os.str();
}

}  // namespace confcoh
