#pragma once

#include <optional>
#include <vector>

namespace semieq {

// Exact dense linear algebra over any field type F supporting
// F(0), F(1), ==, +=, -, *, /.

template <class F>
using Mat = std::vector<std::vector<F>>;

/// Reduced row echelon form in place; returns the pivot column list.
template <class F>
std::vector<int> rref(Mat<F>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && m[sel][col] == F(0)) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    F inv = F(1) / m[row][col];
    for (size_t c = col; c < cols; ++c) m[row][c] = m[row][c] * inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == F(0)) continue;
      F f = m[r][col];
      for (size_t c = col; c < cols; ++c)
        m[r][c] = m[r][c] - f * m[row][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

template <class F>
int rank(Mat<F> m) {
  return static_cast<int>(rref(m).size());
}

/// Basis of {x : m x = 0}; each vector has length ncols.
template <class F>
std::vector<std::vector<F>> nullspace(Mat<F> m, size_t ncols) {
  if (m.empty()) {
    // no constraints: standard basis
    std::vector<std::vector<F>> basis;
    for (size_t j = 0; j < ncols; ++j) {
      std::vector<F> v(ncols, F(0));
      v[j] = F(1);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (size_t freec = 0; freec < ncols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<F> v(ncols, F(0));
    v[freec] = F(1);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      v[pivots[pi]] = F(0) - m[pi][freec];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m x = b exactly; nullopt if inconsistent. Free variables are 0.
template <class F>
std::optional<std::vector<F>> solve_exact(Mat<F> m, std::vector<F> b) {
  size_t rows = m.size();
  size_t cols = rows == 0 ? 0 : m[0].size();
  for (size_t r = 0; r < rows; ++r) m[r].push_back(b[r]);
  std::vector<int> pivots = rref(m);
  // a pivot in the appended column means inconsistency
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols))
    return std::nullopt;
  std::vector<F> x(cols, F(0));
  for (size_t pi = 0; pi < pivots.size(); ++pi)
    x[pivots[pi]] = m[pi][cols];
  return x;
}

}  // namespace semieq
