#include "linalg.hpp"

namespace fanohyp::linalg {

SparseVec axpy(const SparseVec& row, const Rat& c, const SparseVec& other) {
  SparseVec out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i]);
      ++i;
    } else if (i == row.size() || other[j].first < row[i].first) {
      Rat v = -c * other[j].second;
      if (v != 0) out.emplace_back(other[j].first, std::move(v));
      ++j;
    } else {
      Rat v = row[i].second - c * other[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

bool RowReducer::add_row(SparseVec row) {
  while (!row.empty()) {
    int lead = row.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      // Normalize so the leading coefficient is 1.
      Rat inv = Rat(1) / row.front().second;
      for (auto& [col, v] : row) v *= inv;
      pivots_.emplace(lead, std::move(row));
      ++rank_;
      return true;
    }
    row = axpy(row, row.front().second, it->second);
  }
  return false;
}

}  // namespace fanohyp::linalg
