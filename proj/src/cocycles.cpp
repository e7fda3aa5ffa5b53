#include "confcoh/cocycles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace confcoh {

namespace {

bool is_empty(const RatMatrix& m) { return m.empty() || m.front().empty(); }

RatPoly pi_poly(const std::vector<int>& slots) {
  RatPoly p(1);
  for (std::size_t r = 0; r < slots.size(); ++r) {
    p *= RatPoly::lam(slots[r]);
    for (std::size_t s = r + 1; s < slots.size(); ++s) p *= RatPoly::lam(slots[r]) - RatPoly::lam(slots[s]);
  }
  return p;
}

void require_shape(const RatMatrix& phi, int rows, int cols, const std::string& what) {
  if (static_cast<int>(phi.size()) != rows)
    throw std::invalid_argument(what + ": expected " + std::to_string(rows) + " rows");
  for (const auto& r : phi)
    if (static_cast<int>(r.size()) != cols)
      throw std::invalid_argument(what + ": expected " + std::to_string(cols) + " columns");
}

void require_equivariant(const std::vector<RatMatrix>& from, const LieRep& U, const RatMatrix& phi,
                         const std::string& what) {
  for (std::size_t i = 0; i < from.size(); ++i)
    if (mat_mul(U.rho.at(i), phi) != mat_mul(phi, from[i]))
      throw NotEquivariant(what + " does not commute with generator " + std::to_string(i));
}

// Checks that phi : Sym^k sl2 -> U is a g-map killing (h^2 + 4ef) Sym^{k-2}, the
// invariant quadric for [e,f] = h, [h,e] = 2e.
void check_sym_map(int k, const RatMatrix& phi, const LieRep& U, std::vector<std::vector<int>>& monos) {
  const LieRep sym = sym_power(adjoint_rep(LiePresentation::sl2()), k, &monos);
  const std::string what = "phi_" + std::to_string(k);
  require_shape(phi, U.dim(), sym.dim(), what);
  require_equivariant(sym.rho, U, phi, what);
  if (k < 2) return;
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> lower;
  sym_power(adjoint_rep(LiePresentation::sl2()), k - 2, &lower);
  // e = 0, f = 1, h = 2
  const std::vector<std::pair<std::vector<int>, Rat>> casimir{{{2, 2}, Rat(1)}, {{0, 1}, Rat(4)}};
  for (const auto& m : lower) {
    std::vector<Rat> v(monos.size());
    for (const auto& [extra, c] : casimir) {
      std::vector<int> mono = m;
      mono.insert(mono.end(), extra.begin(), extra.end());
      std::sort(mono.begin(), mono.end());
      v[static_cast<std::size_t>(index.at(mono))] += c;
    }
    for (const Rat& x : mat_apply(phi, v))
      if (x != 0) throw NotEquivariant(what + " does not vanish on (h^2 + 4ef) Sym^" + std::to_string(k - 2));
  }
}

std::vector<Rat> column(const RatMatrix& m, int c) {
  std::vector<Rat> out;
  for (const auto& row : m) out.push_back(row.at(static_cast<std::size_t>(c)));
  return out;
}

int perm_sign3(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  int inv = (a > b) + (a > c) + (b > c);
  return inv % 2 == 0 ? 1 : -1;
}

void add_scaled(ModValue& acc, const RatPoly& p, const std::vector<Rat>& u) {
  for (std::size_t r = 0; r < u.size(); ++r)
    if (u[r] != 0) acc[r] += p * u[r];
}

}  // namespace

Cochain sl2_example_cocycle(int n, const RatMatrix& phi_n, const RatMatrix& phi_n3, const LieRep& U) {
  if (n < 0) throw std::invalid_argument("negative cochain degree");
  const bool use_top = !is_empty(phi_n);
  const bool use_low = !is_empty(phi_n3) && n >= 3;
  std::vector<std::vector<int>> top_monos;
  std::vector<std::vector<int>> low_monos;
  if (use_top) check_sym_map(n, phi_n, U, top_monos);
  if (use_low) check_sym_map(n - 3, phi_n3, U, low_monos);
  std::map<std::vector<int>, int> top_index;
  std::map<std::vector<int>, int> low_index;
  for (std::size_t i = 0; i < top_monos.size(); ++i) top_index[top_monos[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < low_monos.size(); ++i) low_index[low_monos[i]] = static_cast<int>(i);

  Cochain out(Variant::LieReduced, n, U.dim());
  std::vector<int> all_slots;
  for (int s = 1; s <= n; ++s) all_slots.push_back(s);
  const RatPoly pi_all = pi_poly(all_slots);
  std::vector<int> t(static_cast<std::size_t>(n), 2);
  // Canonical (non-increasing) tuples over e, f, h.
  std::vector<Tuple> tuples;
  std::function<void(int, int)> rec = [&](int pos, int maxv) {
    if (pos == n) {
      tuples.push_back(t);
      return;
    }
    for (int v = maxv; v >= 0; --v) {
      t[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 2);
  for (const Tuple& tup : tuples) {
    ModValue val(static_cast<std::size_t>(U.dim()));
    if (use_top) {
      std::vector<int> sorted = tup;
      std::sort(sorted.begin(), sorted.end());
      add_scaled(val, pi_all, column(phi_n, top_index.at(sorted)));
    }
    if (use_low) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k) {
            const int sg = perm_sign3(tup[i], tup[j], tup[k]);
            if (sg == 0) continue;
            std::vector<int> rest_slots;
            std::vector<int> rest;
            for (int s = 0; s < n; ++s)
              if (s != i && s != j && s != k) {
                rest_slots.push_back(s + 1);
                rest.push_back(tup[static_cast<std::size_t>(s)]);
              }
            std::sort(rest.begin(), rest.end());
            add_scaled(val, pi_poly(rest_slots) * Rat(sg), column(phi_n3, low_index.at(rest)));
          }
    }
    if (!is_zero(val)) out.add(tup, val);
  }
  out.prune();
  return out;
}

RatMatrix sl2_top_projection(int n) {
  const LiePresentation g = LiePresentation::sl2();
  std::vector<std::vector<int>> monos;
  const LieRep sym = sym_power(adjoint_rep(g), n, &monos);
  const auto maps = equivariant_maps(g, sym, sl2_irrep(2 * n));
  if (maps.size() != 1) throw std::logic_error("Sym^n sl2 should contain V(2n) exactly once");
  RatMatrix phi = maps.front();
  // e^n is the first multi-index (all zeros); send it to v_0.
  const Rat lead = phi[0][0];
  for (auto& row : phi)
    for (auto& x : row) x /= lead;
  return phi;
}

Cochain current_h1_cocycle(const LiePresentation& g, const RatMatrix& phi, const LieRep& U) {
  require_shape(phi, U.dim(), g.dim(), "phi");
  require_equivariant(adjoint_rep(g).rho, U, phi, "phi");
  Cochain out(Variant::LieReduced, 1, U.dim());
  for (int a = 0; a < g.dim(); ++a) {
    ModValue val(static_cast<std::size_t>(U.dim()));
    add_scaled(val, RatPoly::lam(1), column(phi, a));
    if (!is_zero(val)) out.add({a}, val);
  }
  return out;
}

Cochain current_h2_cocycle(const LiePresentation& g, const RatMatrix& phi, const LieRep& U) {
  std::vector<std::pair<int, int>> pairs;
  const LieRep w = exterior_square(adjoint_rep(g), &pairs);
  require_shape(phi, U.dim(), w.dim(), "phi");
  require_equivariant(w.rho, U, phi, "phi");
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = static_cast<int>(i);
  Cochain out(Variant::LieReduced, 2, U.dim());
  const RatPoly l12 = RatPoly::lam(1) * RatPoly::lam(2);
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < a; ++b) {
      // a ^ b = -(b ^ a) with b < a
      ModValue val(static_cast<std::size_t>(U.dim()));
      add_scaled(val, -l12, column(phi, index.at({b, a})));
      if (!is_zero(val)) out.add({a, b}, val);
    }
  return out;
}

}  // namespace confcoh
