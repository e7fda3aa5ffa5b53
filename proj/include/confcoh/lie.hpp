#ifndef CONFCOH_LIE_HPP
#define CONFCOH_LIE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "confcoh/linalg.hpp"

namespace confcoh {

using RatMatrix = DenseMatrix;

class InvalidLieAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class RepNotValid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite-dimensional Lie algebra by structure constants [x_i, x_j] = sum_k c[i][j][k] x_k.
/// Antisymmetry and the Jacobi identity are checked on construction.
class LiePresentation {
 public:
  using Constants = std::vector<std::vector<std::vector<Rat>>>;

  LiePresentation(std::string name, std::vector<std::string> basis, Constants c);

  static LiePresentation sl2();  // e, f, h
  static LiePresentation sl3();  // x12 x13 x23 x21 x31 x32 h1 h2
  static LiePresentation abelian(int n);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }
  const Rat& c(int i, int j, int k) const { return c_[i][j][k]; }
  const Constants& constants() const { return c_; }
  int index_of(const std::string& name) const;  // -1 if absent

  std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

  /// Empty if valid, else a description of the first violation.
  static std::optional<std::string> validate(const Constants& c);

 private:
  std::string name_;
  std::vector<std::string> basis_;
  Constants c_;
};

/// rho[i] is the matrix of basis element i; column j holds the image of v_j.
struct LieRep {
  std::string name;
  std::vector<RatMatrix> rho;
  int dim() const { return rho.empty() ? 0 : static_cast<int>(rho.front().size()); }
};

std::optional<std::string> check_representation(const LiePresentation& g,
                                                const std::vector<RatMatrix>& rho);

LieRep adjoint_rep(const LiePresentation& g);
LieRep trivial_rep(const LiePresentation& g, int n);
/// Irreducible sl2-module V(m), basis v_0..v_m with h v_k = (m-2k) v_k,
/// f v_k = v_{k+1}, e v_k = k(m-k+1) v_{k-1}.
LieRep sl2_irrep(int m);
LieRep sl3_standard();
/// Sym^n of a representation on sorted multi-indices; `monomials` receives the basis.
LieRep sym_power(const LieRep& r, int n, std::vector<std::vector<int>>* monomials = nullptr);
/// Exterior square on pairs i < j.
LieRep exterior_square(const LieRep& r, std::vector<std::pair<int, int>>* pairs = nullptr);

/// Basis of Hom_g(from, to); each map is a to.dim x from.dim matrix.
std::vector<RatMatrix> equivariant_maps(const LiePresentation& g, const LieRep& from,
                                        const LieRep& to);

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_zero(int rows, int cols);
std::vector<Rat> mat_apply(const RatMatrix& a, const std::vector<Rat>& v);

}  // namespace confcoh

#endif
