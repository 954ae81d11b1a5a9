#pragma once

#include <map>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace fanohyp::linalg {

// Sparse row over the rationals: (column, coefficient) pairs, sorted by
// column, no zero coefficients.
using SparseVec = std::vector<std::pair<int, Rat>>;

/// Incremental exact row reduction. Rows are fed one at a time; each is
/// reduced against the pivot rows collected so far and either becomes a new
/// pivot (rank grows) or cancels to zero. All arithmetic is rational, so
/// ranks are exact. The matrices this library produces are extremely sparse
/// (one or two non-zeros per row), which keeps the pivot rows short.
class RowReducer {
 public:
  /// Returns true when the row was independent of the rows seen so far.
  bool add_row(SparseVec row);
  long long rank() const { return rank_; }

 private:
  std::map<int, SparseVec> pivots_;  // leading column -> normalized row
  long long rank_ = 0;
};

/// row -= c * other, sparse merge.
SparseVec axpy(const SparseVec& row, const Rat& c, const SparseVec& other);

}  // namespace fanohyp::linalg
