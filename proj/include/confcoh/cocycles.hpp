#ifndef CONFCOH_COCYCLES_HPP
#define CONFCOH_COCYCLES_HPP

#include <stdexcept>

#include "confcoh/cochain.hpp"
#include "confcoh/lie.hpp"

namespace confcoh {

class NotEquivariant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reduced n-cochain of Cur sl2 with values in M_U built from g-maps
/// phi_n : Sym^n sl2 -> U and phi_{n-3} : Sym^{n-3} sl2 -> U (columns indexed
/// by the sorted multi-indices of sym_power; an empty matrix means zero):
///   alpha = Pi(lam1..lamn) phi_n(a1...an)
///         + sum_{i<j<k} c3(ai,aj,ak) Pi(other lams) phi_{n-3}(other a's),
/// Pi(l1..lk) = l1...lk prod_{r<s}(lr - ls), c3 = (a1^a2^a3)/(e^f^h).
/// Both maps must be equivariant and vanish on (h^2 + 4ef) Sym^{k-2}.
Cochain sl2_example_cocycle(int n, const RatMatrix& phi_n, const RatMatrix& phi_n3, const LieRep& U);

/// Projection Sym^n sl2 -> V(2n) sending e^n to the highest weight vector.
RatMatrix sl2_top_projection(int n);

/// alpha_lam(a) = lam phi(a) for phi in Hom_g(g, U).
Cochain current_h1_cocycle(const LiePresentation& g, const RatMatrix& phi, const LieRep& U);
/// alpha(a1, a2) = lam1 lam2 phi(a1 ^ a2) for phi in Hom_g(wedge^2 g, U) (columns on pairs i<j).
Cochain current_h2_cocycle(const LiePresentation& g, const RatMatrix& phi, const LieRep& U);

}  // namespace confcoh

#endif
