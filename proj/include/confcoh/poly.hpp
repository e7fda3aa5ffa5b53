#ifndef CONFCOH_POLY_HPP
#define CONFCOH_POLY_HPP

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "confcoh/rational.hpp"

namespace confcoh {

/// A polynomial variable: lam_i (1-based), the derivation d, or a named
/// parameter. Variables are ordered lam1 < lam2 < ... < d < params (by name).
class VarId {
 public:
  enum class Kind : std::uint8_t { Lam = 0, Del = 1, Param = 2 };

  VarId() : code_(kDelCode) {}
  static VarId lam(int index);
  static VarId del() { return VarId(kDelCode); }
  static VarId param(std::string_view name);

  Kind kind() const {
    if (code_ < kDelCode) return Kind::Lam;
    return code_ == kDelCode ? Kind::Del : Kind::Param;
  }
  bool is_lam() const { return code_ < kDelCode; }
  int index() const { return is_lam() ? code_ : 0; }
  const std::string& name() const;  // parameter name; empty otherwise
  std::string to_string() const;

  friend bool operator==(VarId a, VarId b) { return a.code_ == b.code_; }
  friend bool operator!=(VarId a, VarId b) { return a.code_ != b.code_; }
  friend bool operator<(VarId a, VarId b);

  std::int32_t code() const { return code_; }

 private:
  static constexpr std::int32_t kDelCode = 1 << 20;
  explicit VarId(std::int32_t code) : code_(code) {}
  std::int32_t code_;
};

/// Power product of variables, kept sorted by variable order.
class Monomial {
 public:
  using Factor = std::pair<VarId, int>;
  using Storage = boost::container::small_vector<Factor, 4>;

  Monomial() = default;
  static Monomial of(VarId v, int exponent = 1);
  static Monomial from_factors(std::vector<Factor> factors);  // any order, merges repeats

  const Storage& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent(VarId v) const;
  int degree_in_lams() const;

  Monomial operator*(const Monomial& other) const;
  Monomial without(VarId v) const;

  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  Storage factors_;
  friend class RatPoly;
};

/// Graded lexicographic order: total degree first, then exponents compared
/// variable by variable (lam1 first); a larger exponent makes the larger monomial.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class RatPoly {
 public:
  using TermMap = std::map<Monomial, Rat, GradedLex>;

  RatPoly() = default;
  RatPoly(const Rat& c);  // NOLINT: constants convert implicitly
  RatPoly(long c) : RatPoly(Rat(c)) {}  // NOLINT
  static RatPoly var(VarId v) { return monomial(Monomial::of(v), 1); }
  static RatPoly lam(int i) { return var(VarId::lam(i)); }
  static RatPoly del() { return var(VarId::del()); }
  static RatPoly monomial(const Monomial& m, const Rat& c);
  /// lam_first + ... + lam_last (empty sum is 0).
  static RatPoly lam_sum(int first, int last);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  Rat coeff(const Monomial& m) const;
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(VarId v) const;
  int lam_degree() const;  // maximal total degree in the lam variables
  bool contains(VarId v) const;
  std::vector<VarId> variables() const;

  void add_term(const Monomial& m, const Rat& c);

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rat& c);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rat& c) { return a *= c; }
  friend RatPoly operator*(const Rat& c, RatPoly a) { return a *= c; }
  RatPoly operator-() const;
  RatPoly pow(unsigned e) const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

  /// Replaces every occurrence of v by repl.
  RatPoly substitute(VarId v, const RatPoly& repl) const;
  /// Simultaneous substitution; variables absent from the map are kept.
  RatPoly substitute(const std::map<VarId, RatPoly>& repl) const;
  /// Variable renaming (a bijection is not required; images may collide).
  RatPoly rename(const std::map<VarId, VarId>& ren) const;
  RatPoly derivative(VarId v) const;

  /// Splits p = sum_k v^k * c_k(other variables); index k of the result holds c_k.
  std::vector<RatPoly> coefficients_in(VarId v) const;

  /// Exact quotient by a polynomial that is linear in `pivot` with constant
  /// coefficient 1 there (e.g. lam1 + lam2 + 3). Throws if not divisible.
  RatPoly divide_exact_linear(const RatPoly& divisor, VarId pivot) const;

  /// Terms printed from the highest monomial down, in the input grammar.
  std::string to_string() const;

 private:
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.to_string(); }

/// Unique integer code for polynomial hashing / map keys in caches.
std::size_t hash_value(const Monomial& m);

}  // namespace confcoh

#endif
