#include "uqa/linalg.hpp"

#include <utility>

namespace uqa {

namespace {

// In-place reduced row echelon form; returns the pivot column of each
// leading row.
std::vector<std::size_t> rref(DenseMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const Scalar inv = m[row][col].inverse();
    for (std::size_t c = col; c < cols; ++c) {
      if (!m[row][c].is_zero()) m[row][c] *= inv;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Scalar f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Scalar>> nullspace(DenseMatrix m, std::size_t cols) {
  const std::vector<std::size_t> pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of(DenseMatrix m, std::size_t cols) { return rref(m, cols).size(); }

}  // namespace uqa
