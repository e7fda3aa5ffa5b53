#ifndef CONFCOH_ANNIHILATION_HPP
#define CONFCOH_ANNIHILATION_HPP

#include <compare>
#include <map>
#include <unordered_map>
#include <vector>

#include "confcoh/cochain.hpp"

namespace confcoh {

/// The image a_m of e_gen t^m in the annihilation algebra.
struct AnnBasisVector {
  int gen = 0;
  int level = 0;
  auto operator<=>(const AnnBasisVector&) const = default;
};

using AnnElement = std::map<AnnBasisVector, Rat>;

/// Image of a t^level for a with d-polynomial coefficients, using
/// (d a)_m = -m a_{m-1}.
AnnElement ann_element(const AlgValue& a, int level);

/// j-th product a_(j) b = j! [lam^j] [a_lam b] of two generators.
AlgValue j_product(const ConformalAlgebra& A, int i, int j, int k);

/// [a_m, b_n] = sum_j C(m,j) (a_(j) b)_{m+n-j}.
AnnElement ann_bracket(const ConformalAlgebra& A, const AnnBasisVector& x, const AnnBasisVector& y);
AnnElement ann_bracket(const ConformalAlgebra& A, const AnnElement& x, const AnnElement& y);

/// T(a_n) = -n a_{n-1}.
AnnElement derivation_T(const AnnBasisVector& x);
AnnElement derivation_T(const AnnElement& x);

/// Elements of V(M)_-: (component, level) -> coefficient.
using VMinusElement = std::map<std::pair<int, int>, Rat>;

/// Image of u t^level in V(M)_- for u with d-polynomial coefficients.
VMinusElement v_minus_element(const ModValue& u, int level);

/// a_m (u t^n) = sum_j C(m,j) (a_(j) u)_{m+n-j}. Throws WrongModuleKind for Scalar modules.
VMinusElement v_minus_action(const ConformalAlgebra& A, const ConformalModule& M, const AnnBasisVector& x,
                             const ModValue& u, int level);
VMinusElement v_minus_action(const ConformalAlgebra& A, const ConformalModule& M, const AnnBasisVector& x,
                             const VMinusElement& v);

/// Action of a_m on M itself: a_(m) v.
ModValue ann_module_action(const ConformalModule& M, const AnnBasisVector& x, const ModValue& v);

/// Continuous cochain on the annihilation algebra given lazily by a basic
/// cochain: phi(g)(a1_{m1}, ..) = prod m_i! [lam^m] g(a1, ..), a module element.
class AnnFunctional {
 public:
  explicit AnnFunctional(const Cochain& g);

  int arity() const { return arity_; }
  int dim() const { return dim_; }
  ModValue operator()(const std::vector<AnnBasisVector>& args) const;
  /// Linear extension in the first argument.
  ModValue eval_first(const AnnElement& first, const std::vector<AnnBasisVector>& rest) const;

 private:
  int arity_;
  int dim_;
  bool skew_;
  // (gen tuple, lam exponents) -> module element
  std::map<std::pair<Tuple, std::vector<int>>, ModValue> coeffs_;
};

AnnFunctional phi(const Cochain& g);

/// Chevalley-Eilenberg differential of the annihilation algebra with
/// coefficients in M, evaluated at one tuple.
ModValue ce_differential_eval(const ConformalAlgebra& A, const ConformalModule& M, const AnnFunctional& beta,
                              const std::vector<AnnBasisVector>& args);

/// (d beta)(x..) = d(beta(x..)) - sum_i beta(.., T x_i, ..).
ModValue ce_del_eval(const ConformalModule& M, const AnnFunctional& beta, const std::vector<AnnBasisVector>& args);

/// Non-increasing (gen, level) multisets of length n with levels <= max_level.
std::vector<std::vector<AnnBasisVector>> ann_tuples(int n, int gens, int max_level);

struct BridgeReport {
  long checked = 0;
  long failures = 0;
  long nonzero = 0;  // tuples where phi(d g) is nonzero
  std::string first_failure;
};

/// Compares phi(d g) with d_CE phi(g), and phi(d . g) with d . phi(g), on
/// every multiset of arguments with levels <= max_level.
BridgeReport check_bridge(const ConformalAlgebra& A, const ConformalModule& M, const Cochain& g, int max_level);

}  // namespace confcoh

#endif
