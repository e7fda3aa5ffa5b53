#ifndef CONFCOH_CALCULUS_HPP
#define CONFCOH_CALCULUS_HPP

#include <stdexcept>

#include "confcoh/cochain.hpp"

namespace confcoh {

class DegreeZero : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WrongContext : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The external parameter of iota_mu and theta_mu.
VarId mu_var();
RatPoly mu();

/// Exterior product of a C-valued m-cochain u with an n-cochain g:
/// sum over S_{m+n} of sign/(m! n!) u(first m) g(last n).
Cochain wedge(const Cochain& u, const Cochain& g, int gens);

/// (iota_mu(a) g)_{lam1..}(a1..) = g_{mu,lam1,..}(a, a1, ..).
Cochain contract_lambda(const ConformalAlgebra& A, const AlgValue& a, const Cochain& g);

/// (theta_mu(a) g) = a_mu g(..) - sum_i g_{.., mu + lam_i, ..}(.., [a_mu a_i], ..).
Cochain lie_theta(const ConformalAlgebra& A, const ConformalModule& M, const AlgValue& a, const Cochain& g);

/// Homotopy on the Virasoro complex with trivial coefficients:
/// k(P) = (-1)^(q+1) dP/dlam_q at lam_q = 0, so that dk + kd = (deg - q) on
/// homogeneous P. Throws WrongContext unless A is Vir and g is C-valued.
Cochain homotopy_k(const ConformalAlgebra& A, const Cochain& g);
/// k1(sigma P) = sigma' k(P) on the subcomplex of multiples of sigma = lam1 + .. + lam_q.
Cochain homotopy_k1(const ConformalAlgebra& A, const Cochain& g);

/// Total lam-degree of a homogeneous cochain, or -1 if not homogeneous.
int homogeneous_degree(const Cochain& g);

}  // namespace confcoh

#endif
