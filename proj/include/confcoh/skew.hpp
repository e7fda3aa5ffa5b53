#ifndef CONFCOH_SKEW_HPP
#define CONFCOH_SKEW_HPP

#include <compare>
#include <map>
#include <vector>

#include "confcoh/poly.hpp"

namespace confcoh {

using Tuple = std::vector<int>;

/// (generator index, lam exponent); ordered lexicographically.
struct GenExp {
  int gen = 0;
  int exp = 0;
  friend auto operator<=>(const GenExp&, const GenExp&) = default;
};
using PairSeq = std::vector<GenExp>;

/// Basis of skew value shapes of cochain degree q and lam-degree `degree`
/// over `gens` generators: strictly decreasing pair sequences, sorted.
struct SkewBasis {
  int q = 0;
  int degree = 0;
  int gens = 1;
  std::vector<PairSeq> elements;
};

SkewBasis skew_basis(int q, int degree, int gens);

/// Values on ordered generator tuples; polynomials in lam1..lamq.
using TupleFamily = std::map<Tuple, RatPoly>;

/// Plain alternation: out(t) = sum_pi sign(pi) raw(t o pi) with lam_k -> lam_pi(k).
/// `raw` entries missing from the map count as zero; output lists all tuples
/// with nonzero value.
TupleFamily skew_symmetrize(const TupleFamily& raw, int q);

/// The alternation of e_{k1} lam1^{m1} ... e_{kq} lamq^{mq}.
TupleFamily skew_element(const PairSeq& pairs);

/// True if f changes sign under every adjacent transposition of slots.
bool is_skew(const TupleFamily& f, int q);

/// All permutations of {0..n-1} with their signs, identity first.
const std::vector<std::pair<std::vector<int>, int>>& permutations(int n);

/// Stable permutation p with t[p[0]] >= t[p[1]] >= ...; its sign goes to *sign.
std::vector<int> sort_desc_permutation(const Tuple& t, int* sign);

}  // namespace confcoh

#endif
