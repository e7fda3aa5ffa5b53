#ifndef CONFCOH_ENGINE_HPP
#define CONFCOH_ENGINE_HPP

#include <compare>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "confcoh/complexes.hpp"
#include "confcoh/linalg.hpp"

namespace confcoh {

class UnstableTruncation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ComplexSpec {
  ConformalAlgebra algebra;
  ConformalModule module;
  Variant variant = Variant::LieReduced;
  std::optional<Bimodule> bimodule;  // Hochschild variants only

  std::string describe() const;
};

/// How the differential moves the total (lam + d) degree.
struct Grading {
  int rmin = 0;
  int rmax = 0;
  bool quotient = false;  // reduced complex over a Scalar module
  Rat a;                  // d-scalar of the quotient
  bool graded() const { return rmin == rmax && (!quotient || a == 0); }
};

/// Coordinate of a cochain: the coefficient of lam^exps * d^del in component
/// comp at generator tuple gens. Skew variants use only strictly decreasing
/// (generator, exponent) sequences.
struct CoordKey {
  Tuple gens;
  std::vector<int> exps;
  int comp = 0;
  int del = 0;
  int degree() const;
  friend auto operator<=>(const CoordKey&, const CoordKey&) = default;
};

/// Slice bases, coordinates and cached differential images for one complex.
class CochainSpace {
 public:
  explicit CochainSpace(ComplexSpec spec);

  const ComplexSpec& spec() const { return spec_; }
  const Grading& grading() const { return grading_; }
  int module_dim() const;
  int gens() const { return spec_.algebra.size(); }

  Cochain zero(int q) const;
  Cochain differential(const Cochain& g) const;
  /// Multiplication by (d_M + sum lam): the generator of the quotient subcomplex.
  Cochain del_times(const Cochain& g) const;
  /// Zero in the complex (for the Scalar quotient: lies in the image of d_M + sum lam).
  bool is_trivial(const Cochain& g) const;

  /// Basis cochains of total degree d in cochain degree q.
  const std::vector<Cochain>& basis(int q, int d);
  /// Coordinates in the degree-q system; keys are registered on first use.
  SparseVec coordinates(const Cochain& g);
  int coordinate_degree(int q, int index) const { return degree_of_.at(static_cast<std::size_t>(q)).at(static_cast<std::size_t>(index)); }
  const CoordKey& coordinate_key(int q, int index) const;

  /// Coordinates of the basis of slice (q, d).
  const std::vector<SparseVec>& basis_coordinates(int q, int d);
  /// Coordinates (degree q+1 system) of the differential of each basis element of (q, d).
  const std::vector<SparseVec>& images(int q, int d);
  /// Coordinates (degree q system) of del_times applied to the basis of (q, d).
  const std::vector<SparseVec>& quotient_vectors(int q, int d);

  Cochain combination(int q, int d, const SparseVec& coeffs);

 private:
  void ensure_q(int q);
  std::vector<Cochain> make_basis(int q, int d);

  ComplexSpec spec_;
  Grading grading_;
  std::map<std::pair<int, int>, std::vector<Cochain>> basis_;
  std::map<std::pair<int, int>, std::vector<SparseVec>> basis_coords_;
  std::map<std::pair<int, int>, std::vector<SparseVec>> images_;
  std::map<std::pair<int, int>, std::vector<SparseVec>> quotient_;
  std::vector<std::map<CoordKey, int>> index_;
  std::vector<std::vector<int>> degree_of_;
  std::vector<std::vector<CoordKey>> keys_;
};

Grading grading_of(const ComplexSpec& spec);

struct SliceMatrix {
  int q = 0;
  int degree = 0;
  std::vector<std::string> domain;    // labels of domain basis
  std::vector<std::string> codomain;  // labels of codomain basis
  DenseMatrix matrix;                 // codomain.size() x domain.size()
  bool quotient_applied = false;
};

/// Matrix of d from slice (q, degree). Graded complexes map into the single
/// slice (q+1, degree+r), taken modulo the quotient subcomplex when there is one;
/// filtered complexes map into the window [degree+rmin, degree+rmax].
SliceMatrix assemble(const ComplexSpec& spec, int q, int degree);
SliceMatrix assemble(CochainSpace& space, int q, int degree);

struct BettiRow {
  int q = 0;
  long dim = 0;
  int D = 0;
  bool stabilized = false;
  std::vector<long> sweep;              // values at D, D+1, D+2
  std::map<int, long> by_degree;        // graded complexes only, at bound D
  std::vector<Cochain> representatives;  // graded complexes only
};

struct BettiTable {
  std::string description;
  Variant variant = Variant::LieReduced;
  bool graded = true;
  std::vector<BettiRow> rows;
  std::vector<long> dims() const;
  bool stabilized() const;
};

/// Dimension of H^q over degrees <= D (graded: summed per degree; filtered:
/// the truncated window complex).
long betti_at(CochainSpace& space, int q, int D, std::map<int, long>* by_degree = nullptr,
              std::vector<Cochain>* representatives = nullptr);

/// The window-complex computation on the direct sum of degrees <= D, used for
/// filtered complexes; for graded ones it must agree with betti_at.
long betti_filtered(CochainSpace& space, int q, int D);

/// Runs bounds D, D+1, D+2 and reports the value at D with a stabilized flag.
BettiTable truncation_sweep(CochainSpace& space, int qmin, int qmax, int D, bool representatives = false);
BettiTable truncation_sweep(const ComplexSpec& spec, int qmin, int qmax, int D, bool representatives = false);
/// As truncation_sweep but throws UnstableTruncation if a row does not stabilize.
BettiTable betti(const ComplexSpec& spec, int qmin, int qmax, int D, bool representatives = false);

struct DSquaredReport {
  long checked = 0;
  long failures = 0;
  std::string first_failure;
};

/// d(d b) = 0 for every basis cochain b of cochain degree q and total degree <= dmax.
/// d b is expanded in the basis of degree q+1 (the expansion is checked to
/// reproduce d b exactly) and d(d b) is assembled from the cached images.
/// Cyclic complexes apply d twice directly.
DSquaredReport check_d_squared(CochainSpace& space, int q, int dmax);

struct CocycleCheck {
  bool cocycle = false;
  bool coboundary = false;
  std::optional<Cochain> witness;
  int window_lo = 0;
  int window_hi = -1;
};

/// Coboundary search runs over the degree window that can reach g.
CocycleCheck verify_cocycle(CochainSpace& space, const Cochain& g);
CocycleCheck verify_cocycle(const ComplexSpec& spec, const Cochain& g);

/// Integer combination (coefficients in [-3, 3]) of `terms` random basis
/// cochains of degree q with slice degrees in [0, max_degree].
Cochain random_cochain(CochainSpace& space, int q, int max_degree, std::mt19937_64& rng, int terms = 4);

std::string format_table(const BettiTable& t);
std::string format_csv(const BettiTable& t);
std::string format_json(const BettiTable& t, const std::vector<std::string>& gens,
                        const std::vector<std::string>& basis);

}  // namespace confcoh

#endif
