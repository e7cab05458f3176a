#include "lpa/linalg.hpp"

#include <stdexcept>

namespace lpa {

void EchelonSolver::reduce(SparseVector &row) const {
  auto it = row.begin();
  while (it != row.end()) {
    std::size_t col = it->first;
    auto piv = pivots_.find(col);
    if (piv == pivots_.end()) {
      ++it;
      continue;
    }
    Rational factor = it->second;
    row.erase(it);
    const auto &prow = piv->second;
    for (std::size_t k = 1; k < prow.size(); ++k) {
      auto [c, v] = prow[k];
      auto [slot, inserted] = row.try_emplace(c, -factor * v);
      if (!inserted) {
        slot->second -= factor * v;
        if (slot->second == 0) row.erase(slot);
      }
    }
    it = row.upper_bound(col);
  }
}

bool EchelonSolver::add_row(SparseVector row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->first >= num_cols_) throw std::out_of_range("EchelonSolver: column out of range");
    it = it->second == 0 ? row.erase(it) : std::next(it);
  }
  reduce(row);
  if (row.empty()) return false;
  Rational lead = row.begin()->second;
  std::vector<std::pair<std::size_t, Rational>> stored;
  stored.reserve(row.size());
  for (auto &[c, v] : row) stored.emplace_back(c, v / lead);
  std::size_t col = stored.front().first;
  pivots_.emplace(col, std::move(stored));
  return true;
}

bool EchelonSolver::in_row_space(SparseVector row) const {
  for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
  reduce(row);
  return row.empty();
}

std::vector<SparseVector> EchelonSolver::nullspace() const {
  std::vector<SparseVector> out;
  for (std::size_t free = 0; free < num_cols_; ++free) {
    if (pivots_.count(free)) continue;
    SparseVector x;
    x[free] = 1;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      if (it->first > free) continue; // entries right of `free` stay zero above it
      Rational acc = 0;
      const auto &prow = it->second;
      for (std::size_t k = 1; k < prow.size(); ++k) {
        auto found = x.find(prow[k].first);
        if (found != x.end()) acc -= prow[k].second * found->second;
      }
      if (acc != 0) x[it->first] = acc;
    }
    out.push_back(std::move(x));
  }
  return out;
}

} // namespace lpa
