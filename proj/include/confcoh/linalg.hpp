#ifndef CONFCOH_LINALG_HPP
#define CONFCOH_LINALG_HPP

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "confcoh/rational.hpp"

namespace confcoh {

/// Sparse rational vector: (index, value) sorted by index, no zero values.
using SparseVec = std::vector<std::pair<int, Rat>>;
using DenseMatrix = std::vector<std::vector<Rat>>;  // row-major

/// Incremental fraction-free echelon form over the integers. Vectors are
/// scaled to primitive integer vectors on entry; elimination uses
/// v <- p*v - c*w followed by division by the content.
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  /// Adds the next vector (its id is the number of earlier inserts).
  /// Returns true if the span grew; a dependent vector yields a relation
  /// when tracking is on.
  bool insert(const SparseVec& v);
  bool in_span(const SparseVec& v) const;
  /// Coefficients c with v = sum c_id * inserted_id. Needs tracking.
  std::optional<SparseVec> express(const SparseVec& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return count_; }
  /// Kernel basis of the map id -> inserted vector (tracking only).
  const std::vector<SparseVec>& relations() const { return relations_; }

 private:
  using IntVec = std::vector<std::pair<int, BigInt>>;
  struct Row {
    IntVec v;
    IntVec combo;
  };
  void reduce(IntVec& v, IntVec* combo) const;

  bool track_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
  std::unordered_map<int, std::size_t> pivot_;
  std::vector<SparseVec> relations_;
};

std::size_t rank(const std::vector<SparseVec>& cols);
/// Basis of {x : sum x_i cols_i = 0}, indexed by column position.
std::vector<SparseVec> kernel(const std::vector<SparseVec>& cols);
/// Some x with sum x_i cols_i = target, if one exists.
std::optional<SparseVec> solve(const std::vector<SparseVec>& cols, const SparseVec& target);

SparseVec to_sparse(const std::vector<Rat>& dense);
std::vector<Rat> to_dense(const SparseVec& v, std::size_t n);

std::size_t rank_bareiss(const DenseMatrix& m);
std::size_t rank_naive(const DenseMatrix& m);

}  // namespace confcoh

#endif
