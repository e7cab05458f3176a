#ifndef LPA_LINALG_HPP
#define LPA_LINALG_HPP

#include "lpa/algebra.hpp"

#include <map>
#include <vector>

namespace lpa {

using SparseVector = std::map<std::size_t, Rational>;

/// Incremental row echelon form over Q. Rows are reduced on insertion, so
/// rank and nullspace are available at any point.
class EchelonSolver {
public:
  explicit EchelonSolver(std::size_t num_cols) : num_cols_(num_cols) {}

  /// Returns true when the row was independent of the rows added so far.
  bool add_row(SparseVector row);
  /// Reduces a copy of `row`; true when it lies in the row space.
  bool in_row_space(SparseVector row) const;

  std::size_t num_cols() const { return num_cols_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Basis of {x : A x = 0}, one vector per free column, ordered by that
  /// column; each vector has a 1 at its free column.
  std::vector<SparseVector> nullspace() const;

private:
  void reduce(SparseVector &row) const;

  std::size_t num_cols_;
  // pivot column -> row whose first entry is a 1 in that column
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> pivots_;
};

} // namespace lpa

#endif // LPA_LINALG_HPP
