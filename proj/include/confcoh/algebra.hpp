#ifndef CONFCOH_ALGEBRA_HPP
#define CONFCOH_ALGEBRA_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "confcoh/lie.hpp"
#include "confcoh/poly.hpp"

namespace confcoh {

/// Coefficient per generator (resp. per U-basis vector). Coefficients are
/// polynomials in d and may carry lam variables as parameters.
using AlgValue = std::vector<RatPoly>;
using ModValue = std::vector<RatPoly>;
using PolyMatrix = std::vector<std::vector<RatPoly>>;  // [row][col]

class WrongModuleKind : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class AlgebraKind { Lie, Associative, Leibniz };

/// Finite rank conformal algebra given by structure polynomials:
/// [e_i lam e_j] = sum_k table[i][j][k](lam1, d) e_k.
class ConformalAlgebra {
 public:
  ConformalAlgebra(std::string name, std::vector<std::string> gens,
                   std::vector<std::vector<AlgValue>> table, AlgebraKind kind = AlgebraKind::Lie);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const std::vector<std::string>& gens() const { return gens_; }
  AlgebraKind kind() const { return kind_; }
  const AlgValue& entry(int i, int j) const { return table_[i][j]; }
  const RatPoly& entry(int i, int j, int k) const { return table_[i][j][k]; }
  const std::vector<std::vector<AlgValue>>& table() const { return table_; }
  int index_of(const std::string& gen) const;  // -1 if absent

  /// Largest and smallest total degree in (lam1, d) over nonzero entries.
  std::pair<int, int> degree_range() const;

 private:
  std::string name_;
  std::vector<std::string> gens_;
  std::vector<std::vector<AlgValue>> table_;
  AlgebraKind kind_;
};

class ConformalModule {
 public:
  enum class Kind { Free, Scalar };

  /// action[i][r][c]: coefficient of u_r in (e_i)_lam u_c, a polynomial in lam1, d.
  static ConformalModule free(std::string name, std::vector<std::string> basis,
                              std::vector<PolyMatrix> action);
  /// d acts by the scalar a; the algebra acts by zero.
  static ConformalModule scalar(std::string name, int dim, Rat a);

  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }
  bool is_free() const { return kind_ == Kind::Free; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }
  const Rat& del_scalar() const { return a_; }
  const PolyMatrix& action(int gen) const { return action_.at(static_cast<std::size_t>(gen)); }
  int action_count() const { return static_cast<int>(action_.size()); }

  /// Range of total (lam1, d) degrees of nonzero action entries; (0, 0) if none.
  std::pair<int, int> degree_range() const;

 private:
  ConformalModule() = default;
  std::string name_;
  Kind kind_ = Kind::Free;
  std::vector<std::string> basis_;
  std::vector<PolyMatrix> action_;
  Rat a_;
};

ConformalAlgebra build_vir();
ConformalAlgebra build_current(const LiePresentation& g);
/// Current algebra over a finite-dimensional associative algebra with
/// structure constants mult[i][j][k] (x_i x_j = sum_k mult x_k).
ConformalAlgebra build_current_associative(std::string name, std::vector<std::string> basis,
                                           const std::vector<std::vector<std::vector<Rat>>>& mult);
/// Cur(C[x]/(x^2)) on the basis {1, x}.
ConformalAlgebra build_dual_numbers_current();
/// Current algebra of a Leibniz algebra that is not Lie: [y,y] = x.
ConformalAlgebra build_leibniz_fixture();

ConformalModule build_m_delta_alpha(const Rat& delta, const Rat& alpha);
/// Throws RepNotValid if rho is not a representation of g.
ConformalModule build_m_u(const LiePresentation& g, const LieRep& rep);
ConformalModule build_trivial(int dim, const Rat& a);
/// A as a module over itself.
ConformalModule build_adjoint(const ConformalAlgebra& A);

AlgValue alg_zero(const ConformalAlgebra& A);
AlgValue alg_gen(const ConformalAlgebra& A, int i, const RatPoly& coeff = RatPoly(1));
ModValue mod_zero(const ConformalModule& M);
bool is_zero(const std::vector<RatPoly>& v);

/// Substitutes a variable in every component.
std::vector<RatPoly> substitute_all(const std::vector<RatPoly>& v, VarId x, const RatPoly& repl);
std::vector<RatPoly> substitute_all(const std::vector<RatPoly>& v,
                                    const std::map<VarId, RatPoly>& repl);

/// Structure polynomial with lam1 replaced by `lambda` (d is kept).
RatPoly table_at(const RatPoly& c, const RatPoly& lambda);

/// [a_lambda b] for elements with d-polynomial coefficients.
AlgValue bracket_eval(const ConformalAlgebra& A, const AlgValue& a, const RatPoly& lambda,
                      const AlgValue& b);
inline AlgValue bracket_eval(const ConformalAlgebra& A, const AlgValue& a, const AlgValue& b) {
  return bracket_eval(A, a, RatPoly::lam(1), b);
}

/// a_lambda m. For Scalar modules the result is zero.
ModValue action_eval(const ConformalModule& M, const AlgValue& a, const RatPoly& lambda,
                     const ModValue& m);
inline ModValue action_eval(const ConformalModule& M, const AlgValue& a, const ModValue& m) {
  return action_eval(M, a, RatPoly::lam(1), m);
}

/// d applied to a module element: symbolic for Free modules, the scalar for Scalar ones.
ModValue module_del(const ConformalModule& M, const ModValue& m);

struct CheckResult {
  bool ok = true;
  std::vector<int> where;  // failing generator pair/triple
  std::string residual;    // printed residual polynomial(s)
  explicit operator bool() const { return ok; }
};

CheckResult check_skew_symmetry(const ConformalAlgebra& A);
/// Lie and Leibniz kinds: [a_l[b_m c]] - [b_m[a_l c]] = [[a_l b]_{l+m} c].
CheckResult check_jacobi(const ConformalAlgebra& A);
/// Left side minus right side of the Jacobi identity on generators i, j, k (l = lam1, m = lam2).
AlgValue jacobi_residual(const ConformalAlgebra& A, int i, int j, int k);
/// a_l(b_m c) = (a_l b)_{l+m} c.
CheckResult check_associativity(const ConformalAlgebra& A);
/// a_l(b_m v) - b_m(a_l v) = [a_l b]_{l+m} v.
CheckResult check_module(const ConformalAlgebra& A, const ConformalModule& M);

std::string format_value(const std::vector<RatPoly>& v, const std::vector<std::string>& basis);

}  // namespace confcoh

#endif
