#include "confcoh/engine.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace confcoh {

namespace {

using Key = std::pair<int, int>;

void widen(std::pair<int, int>& acc, std::pair<int, int> r, bool& first) {
  if (first) {
    acc = r;
    first = false;
  } else {
    acc.first = std::min(acc.first, r.first);
    acc.second = std::max(acc.second, r.second);
  }
}

std::pair<int, int> matrices_range(const std::vector<PolyMatrix>& ms) {
  int lo = 1 << 30;
  int hi = -1;
  for (const auto& m : ms)
    for (const auto& row : m)
      for (const auto& p : row)
        for (const auto& [mono, c] : p.terms()) {
          lo = std::min(lo, mono.degree());
          hi = std::max(hi, mono.degree());
        }
  if (hi < 0) return {0, 0};
  return {lo, hi};
}

bool has_entries(const std::vector<PolyMatrix>& ms) {
  for (const auto& m : ms)
    for (const auto& row : m)
      for (const auto& p : row)
        if (!p.is_zero()) return true;
  return false;
}

bool table_nonzero(const ConformalAlgebra& A) {
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j < A.size(); ++j)
      if (!is_zero(A.entry(i, j))) return true;
  return false;
}

// Weak compositions of total into n parts.
void compositions(int total, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    if (total == 0) out.push_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur.push_back(k);
    compositions(total - k, n, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int total, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (n == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  compositions(total, n, cur, out);
  return out;
}

RatPoly lam_monomial(const std::vector<int>& exps, int del) {
  std::vector<Monomial::Factor> f;
  for (std::size_t k = 0; k < exps.size(); ++k)
    if (exps[k] > 0) f.emplace_back(VarId::lam(static_cast<int>(k) + 1), exps[k]);
  if (del > 0) f.emplace_back(VarId::del(), del);
  return RatPoly::monomial(Monomial::from_factors(f), 1);
}

bool strictly_decreasing(const Tuple& t, const std::vector<int>& e) {
  for (std::size_t k = 1; k < t.size(); ++k)
    if (!(std::make_pair(t[k - 1], e[k - 1]) > std::make_pair(t[k], e[k]))) return false;
  return true;
}

SparseVec combine(const std::vector<SparseVec>& vs, const SparseVec& coeffs) {
  std::map<int, Rat> acc;
  for (const auto& [i, c] : coeffs)
    for (const auto& [j, x] : vs.at(static_cast<std::size_t>(i))) acc[j] += c * x;
  SparseVec out;
  for (auto& [j, x] : acc)
    if (x != 0) out.emplace_back(j, x);
  return out;
}

void append(std::vector<SparseVec>& to, const std::vector<SparseVec>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

SparseVec tail(const SparseVec& v, const CochainSpace& s, int q, int D) {
  SparseVec out;
  for (const auto& e : v)
    if (s.coordinate_degree(q, e.first) > D) out.push_back(e);
  return out;
}

std::size_t rank_of(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b = {}) {
  Echelon e;
  for (const auto& v : a) e.insert(v);
  for (const auto& v : b) e.insert(v);
  return e.rank();
}

void normalize(SparseVec& x) {
  if (x.empty()) return;
  Rat lead = x.front().second;
  for (auto& [i, c] : x) c /= lead;
}

std::string key_label(const CoordKey& k, const ComplexSpec& spec, int dim_names_from_module) {
  std::ostringstream os;
  const auto& gens = spec.algebra.gens();
  for (std::size_t s = 0; s < k.gens.size(); ++s) {
    if (s) os << ' ';
    os << gens.at(static_cast<std::size_t>(k.gens[s]));
    if (k.exps[s] > 0) os << "*lam" << s + 1 << (k.exps[s] > 1 ? "^" + std::to_string(k.exps[s]) : "");
  }
  if (k.del > 0) os << " d" << (k.del > 1 ? "^" + std::to_string(k.del) : "");
  if (dim_names_from_module > 1) os << " ->" << k.comp;
  return os.str();
}

}  // namespace

std::string ComplexSpec::describe() const {
  if (variant == Variant::Cyclic) return algebra.name() + " cyclic";
  if (variant == Variant::Hochschild || variant == Variant::HochschildReduced)
    return algebra.name() + " / " + (bimodule ? bimodule->name : std::string("?")) + " " + variant_name(variant);
  return algebra.name() + " / " + module.name() + " " + variant_name(variant);
}

int CoordKey::degree() const {
  int d = del;
  for (int e : exps) d += e;
  return d;
}

Grading grading_of(const ComplexSpec& spec) {
  Grading g;
  std::pair<int, int> r{0, 0};
  bool first = true;
  if (table_nonzero(spec.algebra)) widen(r, spec.algebra.degree_range(), first);
  switch (spec.variant) {
    case Variant::LieBasic:
    case Variant::LieReduced:
    case Variant::Leibniz:
      if (spec.module.is_free()) {
        std::vector<PolyMatrix> acts;
        for (int i = 0; i < spec.module.action_count(); ++i) acts.push_back(spec.module.action(i));
        if (has_entries(acts)) widen(r, spec.module.degree_range(), first);
      }
      break;
    case Variant::Hochschild:
    case Variant::HochschildReduced:
      if (spec.bimodule) {
        if (has_entries(spec.bimodule->left)) widen(r, matrices_range(spec.bimodule->left), first);
        if (has_entries(spec.bimodule->right)) widen(r, matrices_range(spec.bimodule->right), first);
      }
      break;
    case Variant::Cyclic:
      break;
  }
  g.rmin = r.first;
  g.rmax = r.second;
  g.quotient = spec.variant == Variant::LieReduced && !spec.module.is_free();
  if (g.quotient) g.a = spec.module.del_scalar();
  return g;
}

CochainSpace::CochainSpace(ComplexSpec spec) : spec_(std::move(spec)), grading_(grading_of(spec_)) {
  const bool hoch = spec_.variant == Variant::Hochschild || spec_.variant == Variant::HochschildReduced;
  if (hoch && !spec_.bimodule) throw std::invalid_argument("Hochschild complexes need a bimodule");
}

int CochainSpace::module_dim() const {
  switch (spec_.variant) {
    case Variant::Cyclic: return 1;
    case Variant::Hochschild:
    case Variant::HochschildReduced: return spec_.bimodule->dim();
    default: return spec_.module.dim();
  }
}

Cochain CochainSpace::zero(int q) const { return Cochain(spec_.variant, q, module_dim()); }

Cochain CochainSpace::differential(const Cochain& g) const {
  const auto& A = spec_.algebra;
  switch (spec_.variant) {
    case Variant::LieBasic: return d_basic(A, spec_.module, g);
    case Variant::LieReduced: return d_reduced(A, spec_.module, g);
    case Variant::Leibniz: return d_leibniz(A, spec_.module, g);
    case Variant::Hochschild: return d_hochschild(A, *spec_.bimodule, g);
    case Variant::HochschildReduced: return d_hochschild_reduced(A, *spec_.bimodule, g);
    case Variant::Cyclic: return d_cyclic(A, g);
  }
  throw std::logic_error("unknown variant");
}

Cochain CochainSpace::del_times(const Cochain& g) const { return del_action(spec_.module, g); }

bool CochainSpace::is_trivial(const Cochain& g) const {
  return grading_.quotient ? reduced_is_zero(spec_.module, g) : g.is_zero();
}

void CochainSpace::ensure_q(int q) {
  if (q < 0) throw std::invalid_argument("negative cochain degree");
  const auto need = static_cast<std::size_t>(q) + 1;
  if (index_.size() < need) {
    index_.resize(need);
    degree_of_.resize(need);
    keys_.resize(need);
  }
}

const CoordKey& CochainSpace::coordinate_key(int q, int index) const {
  return keys_.at(static_cast<std::size_t>(q)).at(static_cast<std::size_t>(index));
}

SparseVec CochainSpace::coordinates(const Cochain& g) {
  ensure_q(g.q);
  auto& index = index_[static_cast<std::size_t>(g.q)];
  auto& degs = degree_of_[static_cast<std::size_t>(g.q)];
  auto& keys = keys_[static_cast<std::size_t>(g.q)];
  const int n = g.arity();
  std::map<int, Rat> acc;
  for (const auto& [t, val] : g.values) {
    for (std::size_t comp = 0; comp < val.size(); ++comp) {
      for (const auto& [mono, c] : val[comp].terms()) {
        CoordKey k{t, std::vector<int>(static_cast<std::size_t>(n), 0), static_cast<int>(comp), 0};
        for (const auto& [v, e] : mono.factors()) {
          if (v == VarId::del()) {
            k.del = e;
          } else if (v.is_lam() && v.index() >= 1 && v.index() <= n) {
            k.exps[static_cast<std::size_t>(v.index() - 1)] = e;
          } else {
            throw std::logic_error("cochain value has a free variable " + v.to_string());
          }
        }
        if (g.is_skew() && !strictly_decreasing(k.gens, k.exps)) continue;
        auto it = index.find(k);
        int id;
        if (it == index.end()) {
          id = static_cast<int>(keys.size());
          index.emplace(k, id);
          degs.push_back(k.degree());
          keys.push_back(std::move(k));
        } else {
          id = it->second;
        }
        acc[id] += c;
      }
    }
  }
  SparseVec out;
  for (auto& [i, c] : acc)
    if (c != 0) out.emplace_back(i, c);
  return out;
}

std::vector<Cochain> CochainSpace::make_basis(int q, int d) {
  std::vector<Cochain> out;
  if (d < 0) return out;
  const int dim = module_dim();
  const int G = gens();
  const Variant v = spec_.variant;
  const bool free_del = spec_.module.is_free() && (v == Variant::LieBasic || v == Variant::Leibniz);
  if (is_skew_variant(v)) {
    for (int lamdeg = 0; lamdeg <= d; ++lamdeg) {
      const int j = d - lamdeg;
      if (j > 0 && !free_del) continue;
      const RatPoly delpow = RatPoly::del().pow(static_cast<unsigned>(j));
      for (const PairSeq& pairs : skew_basis(q, lamdeg, G).elements) {
        Tuple t;
        for (const auto& p : pairs) t.push_back(p.gen);
        const RatPoly val = skew_element(pairs).at(t) * delpow;
        for (int comp = 0; comp < dim; ++comp) {
          Cochain c = zero(q);
          ModValue mv(static_cast<std::size_t>(dim));
          mv[static_cast<std::size_t>(comp)] = val;
          c.values.emplace(t, std::move(mv));
          out.push_back(std::move(c));
        }
      }
    }
    return out;
  }
  const bool hoch_del = v == Variant::Hochschild || (free_del && v == Variant::Leibniz);
  const int n = v == Variant::Cyclic ? q + 1 : q;
  std::vector<Cochain> candidates;
  for (int lamdeg = 0; lamdeg <= d; ++lamdeg) {
    const int j = d - lamdeg;
    if (j > 0 && !hoch_del) continue;
    for (const auto& exps : compositions(lamdeg, n)) {
      const RatPoly val = lam_monomial(exps, j);
      for (const Tuple& t : ordered_tuples(n, G))
        for (int comp = 0; comp < dim; ++comp) {
          Cochain c = zero(q);
          ModValue mv(static_cast<std::size_t>(dim));
          mv[static_cast<std::size_t>(comp)] = val;
          c.values.emplace(t, std::move(mv));
          candidates.push_back(std::move(c));
        }
    }
  }
  if (v != Variant::Cyclic) return candidates;
  // Invariant cochains: images of sum_k eps^k S^k, eps = (-1)^q.
  const Rat eps = q % 2 == 0 ? Rat(1) : Rat(-1);
  Echelon ech;
  for (const Cochain& c : candidates) {
    Cochain p = c;
    Cochain s = c;
    Rat sign = 1;
    for (int k = 1; k <= q; ++k) {
      s = cyclic_shift(s, G);
      sign *= eps;
      p += s * sign;
    }
    p.prune();
    if (p.is_zero()) continue;
    if (ech.insert(coordinates(p))) out.push_back(std::move(p));
  }
  return out;
}

const std::vector<Cochain>& CochainSpace::basis(int q, int d) {
  auto it = basis_.find({q, d});
  if (it != basis_.end()) return it->second;
  return basis_.emplace(Key{q, d}, make_basis(q, d)).first->second;
}

const std::vector<SparseVec>& CochainSpace::basis_coordinates(int q, int d) {
  auto it = basis_coords_.find({q, d});
  if (it != basis_coords_.end()) return it->second;
  std::vector<SparseVec> out;
  for (const Cochain& c : basis(q, d)) out.push_back(coordinates(c));
  return basis_coords_.emplace(Key{q, d}, std::move(out)).first->second;
}

const std::vector<SparseVec>& CochainSpace::images(int q, int d) {
  auto it = images_.find({q, d});
  if (it != images_.end()) return it->second;
  std::vector<SparseVec> out;
  if (q >= 0)
    for (const Cochain& c : basis(q, d)) out.push_back(coordinates(differential(c)));
  return images_.emplace(Key{q, d}, std::move(out)).first->second;
}

const std::vector<SparseVec>& CochainSpace::quotient_vectors(int q, int d) {
  auto it = quotient_.find({q, d});
  if (it != quotient_.end()) return it->second;
  std::vector<SparseVec> out;
  if (q >= 0)
    for (const Cochain& c : basis(q, d)) out.push_back(coordinates(del_times(c)));
  return quotient_.emplace(Key{q, d}, std::move(out)).first->second;
}

Cochain CochainSpace::combination(int q, int d, const SparseVec& coeffs) {
  const auto& b = basis(q, d);
  Cochain out = zero(q);
  for (const auto& [i, c] : coeffs) out += b.at(static_cast<std::size_t>(i)) * c;
  out.prune();
  return out;
}

namespace {

// del_times images of F^q_D that lie in F^q_D' for the filtered quotient:
// for q >= 1 multiplication by a + sum lam raises the top degree by one.
std::vector<SparseVec> quotient_window(CochainSpace& s, int q, int D) {
  std::vector<SparseVec> out;
  if (q < 0) return out;
  const int top = q == 0 ? D : D - 1;
  for (int d = 0; d <= top; ++d) append(out, s.quotient_vectors(q, d));
  return out;
}

std::vector<SparseVec> images_upto(CochainSpace& s, int q, int D) {
  std::vector<SparseVec> out;
  if (q < 0) return out;
  for (int d = 0; d <= D; ++d) append(out, s.images(q, d));
  return out;
}

long graded_degree(CochainSpace& s, int q, int d, std::vector<Cochain>* reps) {
  const Grading& g = s.grading();
  const int r = g.rmin;
  const auto& basis = s.basis(q, d);
  const long n = static_cast<long>(basis.size());
  if (n == 0) return 0;
  const auto& M = s.images(q, d);
  std::vector<SparseVec> Nprime;
  std::vector<SparseVec> Nq;
  if (g.quotient) {
    if (d + r - 1 >= 0) Nprime = s.quotient_vectors(q + 1, d + r - 1);
    if (q >= 1 && d >= 1) Nq = s.quotient_vectors(q, d - 1);
  }
  std::vector<SparseVec> prev;
  if (q >= 1 && d - r >= 0) prev = s.images(q - 1, d - r);
  const long rN = static_cast<long>(rank_of(Nq));
  const long z = n - static_cast<long>(rank_of(M, Nprime)) + static_cast<long>(rank_of(Nprime)) - rN;
  const long b = static_cast<long>(rank_of(prev, Nq)) - rN;
  const long h = z - b;
  if (reps && h > 0) {
    std::vector<SparseVec> cols = M;
    append(cols, Nprime);
    std::vector<SparseVec> kern = kernel(cols);
    Echelon ech;
    for (const auto& v : prev) ech.insert(v);
    for (const auto& v : Nq) ech.insert(v);
    const auto& coords = s.basis_coordinates(q, d);
    long found = 0;
    for (auto& x : kern) {
      SparseVec head;
      for (const auto& e : x)
        if (e.first < n) head.push_back(e);
      if (head.empty()) continue;
      normalize(head);
      if (ech.insert(combine(coords, head))) {
        reps->push_back(s.combination(q, d, head));
        ++found;
      }
    }
    if (found != h) throw std::logic_error("representative count disagrees with the rank count");
  }
  return h;
}

long filtered(CochainSpace& s, int q, int D) {
  const Grading& g = s.grading();
  long n = 0;
  for (int d = 0; d <= D; ++d) n += static_cast<long>(s.basis(q, d).size());
  const auto M = images_upto(s, q, D);
  const auto prev = images_upto(s, q - 1, D);
  if (!g.quotient) {
    std::vector<SparseVec> t;
    for (const auto& v : prev) t.push_back(tail(v, s, q, D));
    const long z = n - static_cast<long>(rank_of(M));
    const long b = static_cast<long>(rank_of(prev)) - static_cast<long>(rank_of(t));
    return z - b;
  }
  if (q == 0 && g.a != 0) return 0;  // every 0-cochain is a times itself
  const auto Nprime = quotient_window(s, q + 1, D + g.rmax);
  const auto NqD = quotient_window(s, q, D);
  const long rN = static_cast<long>(rank_of(NqD));
  const long z = n - static_cast<long>(rank_of(M, Nprime)) + static_cast<long>(rank_of(Nprime)) - rN;
  std::vector<SparseVec> phi = prev;
  append(phi, quotient_window(s, q, D + g.rmax));
  std::vector<SparseVec> t;
  for (const auto& v : phi) t.push_back(tail(v, s, q, D));
  const long b = static_cast<long>(rank_of(phi)) - static_cast<long>(rank_of(t)) - rN;
  return z - b;
}

}  // namespace

long betti_at(CochainSpace& space, int q, int D, std::map<int, long>* by_degree,
              std::vector<Cochain>* representatives) {
  if (space.grading().graded()) {
    long total = 0;
    for (int d = 0; d <= D; ++d) {
      const long h = graded_degree(space, q, d, representatives);
      if (by_degree && h != 0) (*by_degree)[d] = h;
      total += h;
    }
    return total;
  }
  return filtered(space, q, D);
}

long betti_filtered(CochainSpace& space, int q, int D) { return filtered(space, q, D); }

std::vector<long> BettiTable::dims() const {
  std::vector<long> out;
  for (const auto& r : rows) out.push_back(r.dim);
  return out;
}

bool BettiTable::stabilized() const {
  return std::all_of(rows.begin(), rows.end(), [](const BettiRow& r) { return r.stabilized; });
}

BettiTable truncation_sweep(CochainSpace& space, int qmin, int qmax, int D, bool representatives) {
  BettiTable t;
  t.description = space.spec().describe();
  t.variant = space.spec().variant;
  t.graded = space.grading().graded();
  for (int q = qmin; q <= qmax; ++q) {
    BettiRow row;
    row.q = q;
    row.D = D;
    for (int k = 0; k < 3; ++k) {
      const bool first = k == 0;
      const bool reps = first && representatives && t.graded;
      row.sweep.push_back(betti_at(space, q, D + k, first && t.graded ? &row.by_degree : nullptr,
                                   reps ? &row.representatives : nullptr));
    }
    row.dim = row.sweep[0];
    row.stabilized = row.sweep[0] == row.sweep[1] && row.sweep[1] == row.sweep[2];
    t.rows.push_back(std::move(row));
  }
  return t;
}

BettiTable truncation_sweep(const ComplexSpec& spec, int qmin, int qmax, int D, bool representatives) {
  CochainSpace s(spec);
  return truncation_sweep(s, qmin, qmax, D, representatives);
}

BettiTable betti(const ComplexSpec& spec, int qmin, int qmax, int D, bool representatives) {
  BettiTable t = truncation_sweep(spec, qmin, qmax, D, representatives);
  for (const auto& r : t.rows)
    if (!r.stabilized) {
      std::ostringstream os;
      os << spec.describe() << ": H^" << r.q << " changes over bounds " << D << ".." << D + 2 << " (";
      for (std::size_t i = 0; i < r.sweep.size(); ++i) os << (i ? ", " : "") << r.sweep[i];
      os << ")";
      throw UnstableTruncation(os.str());
    }
  return t;
}

namespace {

// Basis vectors among `candidates` independent modulo `sub`; returns their positions.
std::vector<int> complement(const std::vector<SparseVec>& sub, const std::vector<SparseVec>& candidates) {
  Echelon e;
  for (const auto& v : sub) e.insert(v);
  std::vector<int> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (e.insert(candidates[i])) out.push_back(static_cast<int>(i));
  return out;
}

std::string basis_label(CochainSpace& s, int q, const SparseVec& coords) {
  if (coords.empty()) return "0";
  return key_label(s.coordinate_key(q, coords.front().first), s.spec(), s.module_dim());
}

}  // namespace

SliceMatrix assemble(CochainSpace& s, int q, int degree) {
  const Grading& g = s.grading();
  SliceMatrix out;
  out.q = q;
  out.degree = degree;
  const auto& dom = s.basis_coordinates(q, degree);
  const auto& img = s.images(q, degree);
  std::vector<SparseVec> cod;
  std::vector<SparseVec> sub_dom;
  std::vector<SparseVec> sub_cod;
  if (g.graded()) {
    cod = s.basis_coordinates(q + 1, degree + g.rmin);
    if (g.quotient) {
      out.quotient_applied = true;
      if (degree + g.rmin - 1 >= 0) sub_cod = s.quotient_vectors(q + 1, degree + g.rmin - 1);
      if (q >= 1 && degree >= 1) sub_dom = s.quotient_vectors(q, degree - 1);
    }
  } else {
    for (int e = degree + g.rmin; e <= degree + g.rmax; ++e) append(cod, s.basis_coordinates(q + 1, e));
  }
  const std::vector<int> dom_keep = complement(sub_dom, dom);
  const std::vector<int> cod_keep = complement(sub_cod, cod);
  Echelon ech(true);
  for (const auto& v : sub_cod) ech.insert(v);
  std::vector<std::size_t> id_of_row;  // echelon id of each kept codomain vector
  for (int i : cod_keep) {
    id_of_row.push_back(ech.inserted());
    ech.insert(cod[static_cast<std::size_t>(i)]);
  }
  for (int i : dom_keep) out.domain.push_back(basis_label(s, q, dom[static_cast<std::size_t>(i)]));
  for (int i : cod_keep) out.codomain.push_back(basis_label(s, q + 1, cod[static_cast<std::size_t>(i)]));
  out.matrix.assign(cod_keep.size(), std::vector<Rat>(dom_keep.size()));
  for (std::size_t c = 0; c < dom_keep.size(); ++c) {
    auto x = ech.express(img[static_cast<std::size_t>(dom_keep[c])]);
    if (!x) throw std::logic_error("image of a basis cochain leaves the target slice");
    std::map<std::size_t, Rat> coeff(x->begin(), x->end());
    for (std::size_t r = 0; r < cod_keep.size(); ++r) {
      auto it = coeff.find(id_of_row[r]);
      if (it != coeff.end()) out.matrix[r][c] = it->second;
    }
  }
  return out;
}

SliceMatrix assemble(const ComplexSpec& spec, int q, int degree) {
  CochainSpace s(spec);
  return assemble(s, q, degree);
}

DSquaredReport check_d_squared(CochainSpace& s, int q, int dmax) {
  DSquaredReport rep;
  auto fail = [&](int d, std::size_t i, const std::string& why) {
    if (rep.failures++ == 0)
      rep.first_failure = "q=" + std::to_string(q) + " degree " + std::to_string(d) + " basis " + std::to_string(i) + ": " + why;
  };
  for (int d = 0; d <= dmax; ++d) {
    const auto& basis = s.basis(q, d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      ++rep.checked;
      const Cochain db = s.differential(basis[i]);
      if (s.spec().variant == Variant::Cyclic) {
        if (!s.differential(db).is_zero()) fail(d, i, "d^2 != 0");
        continue;
      }
      // Expand db over the unit basis of degree q+1, slice by slice.
      const SparseVec c = s.coordinates(db);
      std::map<int, Rat> dd;
      Cochain rebuilt = s.zero(q + 1);
      std::map<int, std::map<CoordKey, int>> slot;  // degree -> key -> basis index
      for (const auto& [k, x] : c) {
        const int e = s.coordinate_degree(q + 1, k);
        if (!slot.count(e)) {
          auto& m = slot[e];
          const auto& bc = s.basis_coordinates(q + 1, e);
          for (std::size_t j = 0; j < bc.size(); ++j)
            if (bc[j].size() == 1 && bc[j][0].second == 1) m[s.coordinate_key(q + 1, bc[j][0].first)] = static_cast<int>(j);
        }
        auto it = slot[e].find(s.coordinate_key(q + 1, k));
        if (it == slot[e].end()) {
          fail(d, i, "image has a coordinate outside the unit basis");
          break;
        }
        rebuilt += s.basis(q + 1, e).at(static_cast<std::size_t>(it->second)) * x;
        for (const auto& [m, y] : s.images(q + 1, e).at(static_cast<std::size_t>(it->second))) dd[m] += x * y;
      }
      rebuilt.prune();
      if (!(rebuilt == db)) {
        fail(d, i, "basis expansion does not reproduce d b");
        continue;
      }
      const bool zero = std::all_of(dd.begin(), dd.end(), [](const auto& e) { return e.second == 0; });
      if (!zero) fail(d, i, "d^2 != 0");
    }
  }
  return rep;
}

CocycleCheck verify_cocycle(CochainSpace& s, const Cochain& g) {
  CocycleCheck out;
  if (g.variant != s.spec().variant) throw std::invalid_argument("cochain variant does not match the complex");
  out.cocycle = s.is_trivial(s.differential(g));
  if (!out.cocycle) return out;
  const int q = g.q;
  if (s.is_trivial(g)) {
    out.coboundary = true;
    if (q >= 1) out.witness = s.zero(q - 1);
    return out;
  }
  if (q == 0) return out;
  const SparseVec target = s.coordinates(g);
  int lo = 1 << 30;
  int hi = -1;
  for (const auto& [i, c] : target) {
    lo = std::min(lo, s.coordinate_degree(q, i));
    hi = std::max(hi, s.coordinate_degree(q, i));
  }
  const Grading& gr = s.grading();
  out.window_lo = std::max(0, lo - gr.rmax);
  out.window_hi = hi - gr.rmin;
  std::vector<SparseVec> cols;
  std::vector<std::pair<int, int>> origin;  // (degree, index) for preimage columns
  for (int d = out.window_lo; d <= out.window_hi; ++d) {
    const auto& im = s.images(q - 1, d);
    for (std::size_t i = 0; i < im.size(); ++i) {
      cols.push_back(im[i]);
      origin.emplace_back(d, static_cast<int>(i));
    }
  }
  if (gr.quotient) append(cols, quotient_window(s, q, hi));
  auto x = solve(cols, target);
  if (!x) return out;
  out.coboundary = true;
  Cochain w = s.zero(q - 1);
  for (const auto& [i, c] : *x)
    if (static_cast<std::size_t>(i) < origin.size()) {
      const auto [d, k] = origin[static_cast<std::size_t>(i)];
      w += s.basis(q - 1, d).at(static_cast<std::size_t>(k)) * c;
    }
  w.prune();
  out.witness = std::move(w);
  return out;
}

CocycleCheck verify_cocycle(const ComplexSpec& spec, const Cochain& g) {
  CochainSpace s(spec);
  return verify_cocycle(s, g);
}

std::string format_table(const BettiTable& t) {
  std::ostringstream os;
  os << t.description << (t.graded ? " (graded)" : " (filtered)") << "\n";
  os << "  q  dim  D  sweep        stable\n";
  for (const auto& r : t.rows) {
    std::ostringstream sw;
    for (std::size_t i = 0; i < r.sweep.size(); ++i) sw << (i ? "," : "") << r.sweep[i];
    os << "  " << r.q << "  " << r.dim << "    " << r.D << "  " << sw.str();
    for (std::size_t pad = sw.str().size(); pad < 12; ++pad) os << ' ';
    os << " " << (r.stabilized ? "yes" : "no");
    if (!r.by_degree.empty()) {
      os << "  degrees:";
      for (const auto& [d, h] : r.by_degree) os << " " << d << ":" << h;
    }
    os << "\n";
  }
  return os.str();
}

std::string format_csv(const BettiTable& t) {
  std::ostringstream os;
  os << "complex,variant,q,dim,D,stabilized\n";
  for (const auto& r : t.rows)
    os << '"' << t.description << "\"," << variant_name(t.variant) << ',' << r.q << ',' << r.dim << ','
       << r.D << ',' << (r.stabilized ? "true" : "false") << "\n";
  return os.str();
}

std::string format_json(const BettiTable& t, const std::vector<std::string>& gens,
                        const std::vector<std::string>& basis) {
  nlohmann::json j;
  j["complex"] = t.description;
  j["variant"] = variant_name(t.variant);
  j["graded"] = t.graded;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json row{{"q", r.q}, {"dim", r.dim}, {"D", r.D}, {"stabilized", r.stabilized}, {"sweep", r.sweep}};
    if (!r.by_degree.empty()) {
      nlohmann::json deg = nlohmann::json::object();
      for (const auto& [d, h] : r.by_degree) deg[std::to_string(d)] = h;
      row["by_degree"] = deg;
    }
    if (!r.representatives.empty()) {
      row["representatives"] = nlohmann::json::array();
      for (const auto& c : r.representatives) row["representatives"].push_back(format_cochain(c, gens, basis));
    }
    j["rows"].push_back(row);
  }
  return j.dump(2);
}

Cochain random_cochain(CochainSpace& space, int q, int max_degree, std::mt19937_64& rng, int terms) {
  Cochain out = space.zero(q);
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int k = 0; k < terms; ++k) {
    const std::vector<Cochain>& b = space.basis(q, degree(rng));
    if (b.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    Cochain term = b[pick(rng)];
    term *= Rat(coeff(rng));
    out += term;
  }
  out.prune();
  return out;
}

}  // namespace confcoh
