#include "confcoh/skew.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace confcoh {

namespace {

void extend(int remaining_q, int remaining_deg, GenExp upper, bool bounded, PairSeq& cur,
            std::vector<PairSeq>& out, int gens) {
  if (remaining_q == 0) {
    if (remaining_deg == 0) out.push_back(cur);
    return;
  }
  // next pair must be strictly below `upper`; enumerate in decreasing order
  for (int g = gens - 1; g >= 0; --g) {
    for (int e = remaining_deg; e >= 0; --e) {
      GenExp p{g, e};
      if (bounded && !(p < upper)) continue;
      cur.push_back(p);
      extend(remaining_q - 1, remaining_deg - e, p, true, cur, out, gens);
      cur.pop_back();
    }
  }
}

int sign_of(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

SkewBasis skew_basis(int q, int degree, int gens) {
  if (q < 0 || degree < 0 || gens < 1) throw std::invalid_argument("skew_basis: bad arguments");
  SkewBasis b{q, degree, gens, {}};
  PairSeq cur;
  extend(q, degree, GenExp{}, false, cur, b.elements, gens);
  std::sort(b.elements.begin(), b.elements.end());
  return b;
}

const std::vector<std::pair<std::vector<int>, int>>& permutations(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::pair<std::vector<int>, int>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<std::vector<int>, int>> all;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    all.emplace_back(p, sign_of(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(n, std::move(all)).first->second;
}

std::vector<int> sort_desc_permutation(const Tuple& t, int* sign) {
  std::vector<int> p(t.size());
  std::iota(p.begin(), p.end(), 0);
  std::stable_sort(p.begin(), p.end(), [&](int a, int b) { return t[a] > t[b]; });
  if (sign) *sign = sign_of(p);
  return p;
}

TupleFamily skew_symmetrize(const TupleFamily& raw, int q) {
  TupleFamily out;
  const auto& perms = permutations(q);
  for (const auto& [t, poly] : raw) {
    if (poly.is_zero()) continue;
    if (static_cast<int>(t.size()) != q) throw std::invalid_argument("skew_symmetrize: arity");
    // raw(t) at lams (lam1..lamq) contributes to out(s) where s = t o pi^{-1}
    for (const auto& [pi, sgn] : perms) {
      // out(s)_{lam} += sgn * raw(s o pi)_{lam o pi}; with s o pi = t, s[pi[k]] = t[k]
      Tuple s(t.size());
      std::map<VarId, VarId> ren;
      for (int k = 0; k < q; ++k) {
        s[pi[k]] = t[k];
        ren.emplace(VarId::lam(k + 1), VarId::lam(pi[k] + 1));
      }
      RatPoly term = poly.rename(ren);
      if (sgn < 0) term = -term;
      auto& slot = out[s];
      slot += term;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

TupleFamily skew_element(const PairSeq& pairs) {
  TupleFamily raw;
  Tuple t;
  std::vector<Monomial::Factor> f;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    t.push_back(pairs[k].gen);
    f.emplace_back(VarId::lam(static_cast<int>(k) + 1), pairs[k].exp);
  }
  raw[t] = RatPoly::monomial(Monomial::from_factors(f), 1);
  return skew_symmetrize(raw, static_cast<int>(pairs.size()));
}

bool is_skew(const TupleFamily& f, int q) {
  auto value = [&](const Tuple& t) {
    auto it = f.find(t);
    return it == f.end() ? RatPoly() : it->second;
  };
  for (int k = 0; k + 1 < q; ++k) {
    std::map<VarId, VarId> ren{{VarId::lam(k + 1), VarId::lam(k + 2)},
                               {VarId::lam(k + 2), VarId::lam(k + 1)}};
    std::vector<Tuple> keys;
    for (const auto& e : f) keys.push_back(e.first);
    for (const auto& t : keys) {
      Tuple s = t;
      std::swap(s[k], s[k + 1]);
      if (value(s) != -value(t).rename(ren)) return false;
    }
  }
  return true;
}

}  // namespace confcoh
