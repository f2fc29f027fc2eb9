#pragma once

#include <optional>
#include <vector>

namespace cyl {

// Solves A x = b over a field by Gauss-Jordan elimination. Returns nullopt
// when inconsistent; free variables are set to zero.
template <class F>
std::optional<std::vector<F>> solve_linear(std::vector<std::vector<F>> A, std::vector<F> b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && A[p][col] == F(0)) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[row]);
    std::swap(b[p], b[row]);
    F inv = F(1) / A[row][col];
    for (std::size_t j = col; j < cols; ++j) A[row][j] *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || A[i][col] == F(0)) continue;
      F f = A[i][col];
      for (std::size_t j = col; j < cols; ++j) A[i][j] -= f * A[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (!(b[i] == F(0))) return std::nullopt;
  std::vector<F> x(cols, F(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace cyl
