#ifndef CONFCOH_COMPLEXES_HPP
#define CONFCOH_COMPLEXES_HPP

#include <stdexcept>

#include "confcoh/cochain.hpp"

namespace confcoh {

class NotAssociative : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Conformal bimodule, free over C[d]: left[i][r][c] is the coefficient of u_r
/// in (e_i)_lam u_c and right[i][r][c] that of u_r in (u_c)_lam e_i.
struct Bimodule {
  std::string name;
  std::vector<std::string> basis;
  std::vector<PolyMatrix> left;
  std::vector<PolyMatrix> right;
  int dim() const { return static_cast<int>(basis.size()); }
};

Bimodule regular_bimodule(const ConformalAlgebra& A);
/// For a commutative current algebra: a_lam u = u_lam a = rho(a) u.
Bimodule symmetric_bimodule(const ConformalAlgebra& A, const std::vector<RatMatrix>& rho);

/// Checks left, right and middle associativity of a bimodule.
CheckResult check_bimodule(const ConformalAlgebra& A, const Bimodule& B);

Cochain d_basic(const ConformalAlgebra& A, const ConformalModule& M, const Cochain& g);
/// Multiplication by (d_M + lam1 + ... + lam_q).
Cochain del_action(const ConformalModule& M, const Cochain& g);
/// d -> -(lam1 + ... + lam_q); Free modules only.
Cochain reduce(const ConformalModule& M, const Cochain& g);
/// For Free modules reduce(d_basic(g)); for Scalar modules d_basic on the
/// representative (the quotient is taken by the engine).
Cochain d_reduced(const ConformalAlgebra& A, const ConformalModule& M, const Cochain& g);
/// True if g vanishes in the reduced complex (Scalar modules: g is divisible by a + sum lam).
bool reduced_is_zero(const ConformalModule& M, const Cochain& g);

Cochain d_hochschild(const ConformalAlgebra& A, const Bimodule& B, const Cochain& g);
Cochain d_hochschild_reduced(const ConformalAlgebra& A, const Bimodule& B, const Cochain& g);
Cochain del_action(const Bimodule& B, const Cochain& g);
Cochain d_cyclic(const ConformalAlgebra& A, const Cochain& g);
/// (S g)(a0..an) = g_{lam2..lam_{n+1},lam1}(a1..an,a0).
Cochain cyclic_shift(const Cochain& g, int gens);
Cochain d_leibniz(const ConformalAlgebra& A, const ConformalModule& M, const Cochain& g);

/// Non-increasing tuples of length n over gens generators.
const std::vector<Tuple>& canonical_tuples(int n, int gens);
/// All tuples of length n over gens generators.
const std::vector<Tuple>& ordered_tuples(int n, int gens);

}  // namespace confcoh

#endif
