#ifndef CONFCOH_COCHAIN_HPP
#define CONFCOH_COCHAIN_HPP

#include <map>
#include <string>
#include <vector>

#include "confcoh/algebra.hpp"
#include "confcoh/skew.hpp"

namespace confcoh {

enum class Variant { LieBasic, LieReduced, Hochschild, HochschildReduced, Cyclic, Leibniz };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& name);  // throws std::invalid_argument
inline bool is_skew_variant(Variant v) { return v == Variant::LieBasic || v == Variant::LieReduced; }

/// Values on generator tuples, polynomials in lam1..lam_arity (and d for
/// basic variants over free modules). Skew variants store only non-increasing
/// tuples; other variants store every tuple with a nonzero value.
struct Cochain {
  Variant variant = Variant::LieBasic;
  int q = 0;
  int dim = 1;  // module dimension (1 for cyclic)
  std::map<Tuple, ModValue> values;

  Cochain() = default;
  Cochain(Variant v, int degree, int module_dim) : variant(v), q(degree), dim(module_dim) {}

  /// Number of arguments: q, or q+1 for cyclic cochains.
  int arity() const { return variant == Variant::Cyclic ? q + 1 : q; }
  bool is_skew() const { return is_skew_variant(variant); }

  /// Adds v at tuple t; for skew variants a non-canonical t is moved to its
  /// canonical tuple with the sign and lam renaming.
  void add(const Tuple& t, const ModValue& v);
  void prune();
  bool is_zero() const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& operator*=(const Rat& c);
  Cochain& operator*=(const RatPoly& p);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(Cochain a, const Rat& c) { return a *= c; }
  friend Cochain operator*(const Rat& c, Cochain a) { return a *= c; }
};

/// Same variant, degree and value set, ignoring zero entries.
bool operator==(const Cochain& a, const Cochain& b);
inline bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

/// Value at an ordered tuple, with the parameters lam_k -> params[k-1].
ModValue evaluate(const Cochain& g, const Tuple& t, const std::vector<RatPoly>& params);
/// Value at an ordered tuple in the standard parameters lam1..lam_n.
ModValue value_at(const Cochain& g, const Tuple& t);

/// Multilinear, conformally antilinear extension: the d-coefficient of
/// argument s is evaluated at d -> -params[s].
ModValue cochain_eval(const Cochain& g, const std::vector<AlgValue>& args,
                      const std::vector<RatPoly>& params);
ModValue cochain_eval(const Cochain& g, const std::vector<AlgValue>& args);

/// Standard parameters lam1..lam_n.
std::vector<RatPoly> standard_params(int n);

/// All values on every ordered tuple (variant changed to Leibniz).
Cochain to_full(const Cochain& g, int gens);

/// Skew cochain from a plain tuple family (values are C-valued, placed in
/// module component `component`).
Cochain cochain_from_family(Variant v, int q, int dim, const TupleFamily& f, int component = 0);

/// Substitutes inside every value.
Cochain substitute_values(const Cochain& g, const std::map<VarId, RatPoly>& repl);

std::string format_cochain(const Cochain& g, const std::vector<std::string>& gens,
                           const std::vector<std::string>& basis);

}  // namespace confcoh

#endif
