#ifndef CONFCOH_EXTENSIONS_HPP
#define CONFCOH_EXTENSIONS_HPP

#include <stdexcept>

#include "confcoh/cochain.hpp"

namespace confcoh {

class NotACocycle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotReducedCocycle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element (x, a) of C + A; C-parts of Scalar modules are kept with d = a.
struct ExtElement {
  ModValue c;
  AlgValue a;
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

/// The split abelian extension C + A with
/// [(x,a)_l (y,b)] = (a_l y - b_{-l-d} x + c_l(a,b), [a_l b]),
/// where c_l(a,b) = c_{l, -l-d}(a,b) for a 2-cochain c.
class ExtendedAlgebra {
 public:
  ExtendedAlgebra(ConformalAlgebra A, ConformalModule C, Cochain c);

  const ConformalAlgebra& base() const { return A_; }
  const ConformalModule& coefficients() const { return C_; }
  const Cochain& cocycle() const { return c_; }

  /// A-generators first, then C-generators.
  int size() const { return A_.size() + C_.dim(); }
  ExtElement generator(int k) const;
  ExtElement zero() const;
  std::vector<std::string> gens() const;

  ExtElement bracket(const ExtElement& x, const RatPoly& lambda, const ExtElement& y) const;
  /// c_lambda(e_i, e_j) with lambda = lam1.
  ModValue c_lambda(int i, int j) const;
  /// Multiplies by a polynomial in d.
  ExtElement scale(const ExtElement& x, const RatPoly& p) const;
  ExtElement add(const ExtElement& x, const ExtElement& y, const Rat& s = 1) const;

  CheckResult check_skew_symmetry() const;
  CheckResult check_jacobi() const;

 private:
  ExtElement normalize(ExtElement x) const;
  ConformalAlgebra A_;
  ConformalModule C_;
  Cochain c_;
};

/// Throws NotACocycle with the failing Jacobi triple.
ExtendedAlgebra extend_algebra(const ConformalAlgebra& A, const ConformalModule& C, const Cochain& c);

/// Checks that (x, a) -> (x + sign * f_{-d}(a), a) maps `from` isomorphically
/// onto `to`, for a 1-cochain f.
CheckResult check_extension_map(const ExtendedAlgebra& from, const ExtendedAlgebra& to, const Cochain& f,
                                int sign);

/// The reduced cochain of the complex in which c is a cocycle.
Cochain as_reduced(const ConformalModule& M, const Cochain& c);

/// Extension of the trivial module C by M: d(m,1) = (dm + f, 0) and
/// a_l(m,1) = (a_l m + gamma_l(a), 0).
struct TrivialExtension {
  ConformalModule M;
  ModValue f;
  std::vector<ModValue> gamma;  // gamma_lam1(e_i)

  /// Elements (m, n) with n a scalar.
  struct Element {
    ModValue m;
    RatPoly n;
    friend bool operator==(const Element&, const Element&) = default;
  };
  Element del(const Element& x) const;
  /// p(d) applied to x.
  Element apply(const RatPoly& p, const Element& x) const;
  Element act(const ConformalAlgebra& A, int gen, const RatPoly& lambda, const Element& x) const;
  CheckResult check_module(const ConformalAlgebra& A) const;
};

/// Solves (df)_l = (d + l) gamma_l exactly. Throws NotReducedCocycle if no gamma exists.
TrivialExtension extend_module_by_trivial(const ConformalAlgebra& A, const ConformalModule& M, const ModValue& f);

/// Checks that (m, n) -> (m - n g, n) is a C[d]- and A-module map from
/// E(f) to E(f + d g).
CheckResult check_trivial_extension_map(const ConformalAlgebra& A, const TrivialExtension& from,
                                        const TrivialExtension& to, const ModValue& g);

/// M + N with a_l(m, n) = (a_l m + gamma_l(a)_l n, a_l n). gamma[i][r][s] is
/// the coefficient of u_r in gamma_lam1(e_i) applied to n_s. Throws NotACocycle
/// unless the result is a module.
ConformalModule extend_module(const ConformalAlgebra& A, const ConformalModule& M, const ConformalModule& N,
                              const std::vector<PolyMatrix>& gamma);
/// The same construction without the check.
ConformalModule twisted_sum(const ConformalAlgebra& A, const ConformalModule& M, const ConformalModule& N,
                            const std::vector<PolyMatrix>& gamma);

/// (d beta)_l(a) = a_l beta - beta a_l for a C[d]-linear beta : N -> M
/// (beta[r][s] a polynomial in d).
std::vector<PolyMatrix> module_coboundary(const ConformalAlgebra& A, const ConformalModule& M,
                                          const ConformalModule& N, const PolyMatrix& beta);

/// Checks that the C[d]-linear map phi (columns = images of the generators
/// of `from`) intertwines the actions.
CheckResult check_module_map(const ConformalAlgebra& A, const ConformalModule& from, const ConformalModule& to,
                             const PolyMatrix& phi);

/// A + eps A with bracket [a_l b] + eps gamma_l(a, b), eps = Param "eps".
struct DeformedAlgebra {
  ConformalAlgebra algebra;
  /// Jacobi identity modulo eps^2.
  CheckResult check_first_order() const;
};

VarId eps_var();
DeformedAlgebra deform(const ConformalAlgebra& A, const Cochain& gamma);

struct InvariantsResult {
  std::vector<ModValue> basis;
  int bound = 0;
  bool stabilized = true;
};

/// Basis of {m in M : a_l m = 0} among elements of d-degree <= bound;
/// stabilized compares the dimensions at bound, bound+1 and bound+2.
InvariantsResult invariants_H0(const ConformalAlgebra& A, const ConformalModule& M, int bound);

}  // namespace confcoh

#endif
