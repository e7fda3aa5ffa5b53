#include "confcoh/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace confcoh {

namespace {

void term_degrees(const RatPoly& p, int& lo, int& hi) {
  for (const auto& [m, c] : p.terms()) {
    lo = std::min(lo, m.degree());
    hi = std::max(hi, m.degree());
  }
}

}  // namespace

ConformalAlgebra::ConformalAlgebra(std::string name, std::vector<std::string> gens,
                                   std::vector<std::vector<AlgValue>> table, AlgebraKind kind)
    : name_(std::move(name)), gens_(std::move(gens)), table_(std::move(table)), kind_(kind) {
  const std::size_t n = gens_.size();
  if (table_.size() != n) throw std::invalid_argument("bracket table has wrong size");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("bracket table has wrong size");
    for (const auto& v : row)
      if (v.size() != n) throw std::invalid_argument("bracket entry has wrong length");
  }
}

int ConformalAlgebra::index_of(const std::string& gen) const {
  auto it = std::find(gens_.begin(), gens_.end(), gen);
  return it == gens_.end() ? -1 : static_cast<int>(it - gens_.begin());
}

std::pair<int, int> ConformalAlgebra::degree_range() const {
  int lo = 1 << 30;
  int hi = -1;
  for (const auto& row : table_)
    for (const auto& v : row)
      for (const auto& p : v) term_degrees(p, lo, hi);
  if (hi < 0) return {0, 0};
  return {lo, hi};
}

ConformalModule ConformalModule::free(std::string name, std::vector<std::string> basis,
                                      std::vector<PolyMatrix> action) {
  ConformalModule m;
  m.name_ = std::move(name);
  m.kind_ = Kind::Free;
  m.basis_ = std::move(basis);
  for (const auto& a : action) {
    if (a.size() != m.basis_.size()) throw std::invalid_argument("action matrix has wrong size");
    for (const auto& row : a)
      if (row.size() != m.basis_.size()) throw std::invalid_argument("action matrix has wrong size");
  }
  m.action_ = std::move(action);
  return m;
}

ConformalModule ConformalModule::scalar(std::string name, int dim, Rat a) {
  ConformalModule m;
  m.name_ = std::move(name);
  m.kind_ = Kind::Scalar;
  for (int i = 0; i < dim; ++i) m.basis_.push_back("u" + std::to_string(i + 1));
  m.a_ = std::move(a);
  return m;
}

std::pair<int, int> ConformalModule::degree_range() const {
  int lo = 1 << 30;
  int hi = -1;
  for (const auto& a : action_)
    for (const auto& row : a)
      for (const auto& p : row) term_degrees(p, lo, hi);
  if (hi < 0) return {0, 0};
  return {lo, hi};
}

ConformalAlgebra build_vir() {
  AlgValue v{RatPoly::del() + RatPoly(2) * RatPoly::lam(1)};
  return ConformalAlgebra("Vir", {"L"}, {{v}});
}

ConformalAlgebra build_current(const LiePresentation& g) {
  const int n = g.dim();
  std::vector<std::vector<AlgValue>> table(n, std::vector<AlgValue>(n, AlgValue(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) table[i][j][k] = RatPoly(g.c(i, j, k));
  return ConformalAlgebra("Cur " + g.name(), g.basis(), table);
}

ConformalAlgebra build_current_associative(std::string name, std::vector<std::string> basis,
                                           const std::vector<std::vector<std::vector<Rat>>>& mult) {
  const std::size_t n = basis.size();
  std::vector<std::vector<AlgValue>> table(n, std::vector<AlgValue>(n, AlgValue(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) table[i][j][k] = RatPoly(mult[i][j][k]);
  return ConformalAlgebra(std::move(name), std::move(basis), table, AlgebraKind::Associative);
}

ConformalAlgebra build_dual_numbers_current() {
  std::vector<std::vector<std::vector<Rat>>> m(2, std::vector<std::vector<Rat>>(2, std::vector<Rat>(2)));
  m[0][0][0] = 1;  // 1*1 = 1
  m[0][1][1] = 1;  // 1*x = x
  m[1][0][1] = 1;  // x*1 = x
  return build_current_associative("Cur C[x]/(x^2)", {"one", "x"}, m);
}

ConformalAlgebra build_leibniz_fixture() {
  std::vector<std::vector<AlgValue>> table(2, std::vector<AlgValue>(2, AlgValue(2)));
  table[1][1][0] = RatPoly(1);  // [y lam y] = x
  return ConformalAlgebra("Cur Leib2", {"x", "y"}, table, AlgebraKind::Leibniz);
}

ConformalModule build_m_delta_alpha(const Rat& delta, const Rat& alpha) {
  RatPoly act = RatPoly::del() + RatPoly(alpha) + RatPoly(delta) * RatPoly::lam(1);
  return ConformalModule::free("M(" + to_string(delta) + "," + to_string(alpha) + ")", {"v"},
                               {PolyMatrix{{act}}});
}

ConformalModule build_m_u(const LiePresentation& g, const LieRep& rep) {
  if (auto err = check_representation(g, rep.rho)) throw RepNotValid(*err);
  std::vector<PolyMatrix> action;
  for (const auto& m : rep.rho) {
    PolyMatrix pm(m.size(), std::vector<RatPoly>(m.size()));
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m.size(); ++c) pm[r][c] = RatPoly(m[r][c]);
    action.push_back(std::move(pm));
  }
  std::vector<std::string> basis;
  for (int i = 0; i < rep.dim(); ++i) basis.push_back("u" + std::to_string(i + 1));
  return ConformalModule::free("M_" + rep.name, basis, action);
}

ConformalModule build_adjoint(const ConformalAlgebra& A) {
  const int n = A.size();
  std::vector<PolyMatrix> action(static_cast<std::size_t>(n), PolyMatrix(static_cast<std::size_t>(n), std::vector<RatPoly>(static_cast<std::size_t>(n))));
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) action[i][r][c] = A.entry(i, c, r);
  return ConformalModule::free(A.name() + "/adjoint", A.gens(), std::move(action));
}

ConformalModule build_trivial(int dim, const Rat& a) {
  return ConformalModule::scalar(a == 0 ? "C" : "C_" + to_string(a), dim, a);
}

AlgValue alg_zero(const ConformalAlgebra& A) { return AlgValue(static_cast<std::size_t>(A.size())); }

AlgValue alg_gen(const ConformalAlgebra& A, int i, const RatPoly& coeff) {
  AlgValue v = alg_zero(A);
  v[i] = coeff;
  return v;
}

ModValue mod_zero(const ConformalModule& M) { return ModValue(static_cast<std::size_t>(M.dim())); }

bool is_zero(const std::vector<RatPoly>& v) {
  return std::all_of(v.begin(), v.end(), [](const RatPoly& p) { return p.is_zero(); });
}

std::vector<RatPoly> substitute_all(const std::vector<RatPoly>& v, VarId x, const RatPoly& repl) {
  std::vector<RatPoly> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.is_zero() ? p : p.substitute(x, repl));
  return out;
}

std::vector<RatPoly> substitute_all(const std::vector<RatPoly>& v,
                                    const std::map<VarId, RatPoly>& repl) {
  std::vector<RatPoly> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.is_zero() ? p : p.substitute(repl));
  return out;
}

RatPoly table_at(const RatPoly& c, const RatPoly& lambda) {
  if (c.is_constant()) return c;
  return c.substitute(VarId::lam(1), lambda);
}

AlgValue bracket_eval(const ConformalAlgebra& A, const AlgValue& a, const RatPoly& lambda,
                      const AlgValue& b) {
  const int n = A.size();
  AlgValue out(static_cast<std::size_t>(n));
  const RatPoly minus = -lambda;
  const RatPoly shift = RatPoly::del() + lambda;
  std::vector<RatPoly> bs(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    if (!b[j].is_zero()) bs[j] = b[j].substitute(VarId::del(), shift);
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    const RatPoly ai = a[i].substitute(VarId::del(), minus);
    for (int j = 0; j < n; ++j) {
      if (bs[j].is_zero()) continue;
      const RatPoly coeff = ai * bs[j];
      for (int k = 0; k < n; ++k) {
        const RatPoly& c = A.entry(i, j, k);
        if (c.is_zero()) continue;
        out[k] += coeff * table_at(c, lambda);
      }
    }
  }
  return out;
}

ModValue action_eval(const ConformalModule& M, const AlgValue& a, const RatPoly& lambda,
                     const ModValue& m) {
  const int u = M.dim();
  ModValue out(static_cast<std::size_t>(u));
  if (!M.is_free()) return out;
  const RatPoly minus = -lambda;
  const RatPoly shift = RatPoly::del() + lambda;
  std::vector<RatPoly> ms(static_cast<std::size_t>(u));
  for (int c = 0; c < u; ++c)
    if (!m[c].is_zero()) ms[c] = m[c].substitute(VarId::del(), shift);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    const RatPoly ai = a[i].substitute(VarId::del(), minus);
    const PolyMatrix& act = M.action(static_cast<int>(i));
    for (int c = 0; c < u; ++c) {
      if (ms[c].is_zero()) continue;
      const RatPoly coeff = ai * ms[c];
      for (int r = 0; r < u; ++r) {
        if (act[r][c].is_zero()) continue;
        out[r] += coeff * table_at(act[r][c], lambda);
      }
    }
  }
  return out;
}

ModValue module_del(const ConformalModule& M, const ModValue& m) {
  ModValue out = m;
  if (M.is_free()) {
    for (auto& p : out) p *= RatPoly::del();
  } else {
    for (auto& p : out) p *= M.del_scalar();
  }
  return out;
}

std::string format_value(const std::vector<RatPoly>& v, const std::vector<std::string>& basis) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << v[i].to_string() << ")";
    if (i < basis.size()) os << "*" << basis[i];
  }
  return first ? "0" : os.str();
}

namespace {

std::vector<RatPoly> diff(const std::vector<RatPoly>& a, const std::vector<RatPoly>& b) {
  std::vector<RatPoly> out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

}  // namespace

CheckResult check_skew_symmetry(const ConformalAlgebra& A) {
  const int n = A.size();
  const RatPoly flipped = -RatPoly::lam(1) - RatPoly::del();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      AlgValue res(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k)
        res[k] = A.entry(i, j, k) + table_at(A.entry(j, i, k), flipped);
      if (!is_zero(res)) return {false, {i, j}, format_value(res, A.gens())};
    }
  return {};
}

AlgValue jacobi_residual(const ConformalAlgebra& A, int i, int j, int k) {
  const RatPoly l = RatPoly::lam(1);
  const RatPoly m = RatPoly::lam(2);
  const AlgValue ei = alg_gen(A, i);
  const AlgValue ej = alg_gen(A, j);
  const AlgValue ek = alg_gen(A, k);
  AlgValue lhs = diff(bracket_eval(A, ei, l, bracket_eval(A, ej, m, ek)),
                      bracket_eval(A, ej, m, bracket_eval(A, ei, l, ek)));
  return diff(lhs, bracket_eval(A, bracket_eval(A, ei, l, ej), l + m, ek));
}

CheckResult check_jacobi(const ConformalAlgebra& A) {
  const int n = A.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const AlgValue res = jacobi_residual(A, i, j, k);
        if (!is_zero(res)) return {false, {i, j, k}, format_value(res, A.gens())};
      }
  return {};
}

CheckResult check_associativity(const ConformalAlgebra& A) {
  const int n = A.size();
  const RatPoly l = RatPoly::lam(1);
  const RatPoly m = RatPoly::lam(2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const AlgValue ei = alg_gen(A, i);
      const AlgValue ej = alg_gen(A, j);
      const AlgValue inner = bracket_eval(A, ei, l, ej);
      for (int k = 0; k < n; ++k) {
        const AlgValue ek = alg_gen(A, k);
        AlgValue res = diff(bracket_eval(A, ei, l, bracket_eval(A, ej, m, ek)),
                            bracket_eval(A, inner, l + m, ek));
        if (!is_zero(res)) return {false, {i, j, k}, format_value(res, A.gens())};
      }
    }
  return {};
}

CheckResult check_module(const ConformalAlgebra& A, const ConformalModule& M) {
  if (!M.is_free()) return {};
  if (M.action_count() != A.size())
    return {false, {}, "module has " + std::to_string(M.action_count()) + " action matrices for " +
                           std::to_string(A.size()) + " generators"};
  const int n = A.size();
  const RatPoly l = RatPoly::lam(1);
  const RatPoly m = RatPoly::lam(2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const AlgValue ei = alg_gen(A, i);
      const AlgValue ej = alg_gen(A, j);
      const AlgValue inner = bracket_eval(A, ei, l, ej);
      for (int c = 0; c < M.dim(); ++c) {
        ModValue v = mod_zero(M);
        v[c] = RatPoly(1);
        ModValue lhs = diff(action_eval(M, ei, l, action_eval(M, ej, m, v)),
                            action_eval(M, ej, m, action_eval(M, ei, l, v)));
        ModValue res = diff(lhs, action_eval(M, inner, l + m, v));
        if (!is_zero(res)) return {false, {i, j, c}, format_value(res, M.basis())};
      }
    }
  return {};
}

}  // namespace confcoh
