#include "mixedvol/qlinalg.hpp"

#include "mixedvol/errors.hpp"

namespace mixedvol {

namespace {

// Reduces m to row echelon form in place, returns the pivot columns.
std::vector<int> echelon(QMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) { p = i; break; }
    }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank_of(QMat m) { return static_cast<int>(echelon(m).size()); }

Rat det(QMat m) {
  const int n = static_cast<int>(m.size());
  Rat result = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (m[i][c] != 0) { p = i; break; }
    }
    if (p < 0) return Rat(0);
    if (p != c) { std::swap(m[p], m[c]); result = -result; }
    result *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return result;
}

std::optional<QVec> solve_square(QMat a, QVec b) {
  const int n = static_cast<int>(a.size());
  internal_check(static_cast<int>(b.size()) == n, "solve_square shape");
  for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (a[i][c] != 0) { p = i; break; }
    }
    if (p < 0) return std::nullopt;
    std::swap(a[p], a[c]);
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (int j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  QVec x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

QVec kernel_vector(QMat m) {
  internal_check(!m.empty() && m[0].size() == m.size() + 1, "kernel_vector shape");
  const int cols = static_cast<int>(m[0].size());
  std::vector<int> pivots = echelon(m);
  internal_check(static_cast<int>(pivots.size()) == cols - 1, "kernel_vector: matrix not of full rank");
  // The single free column determines the kernel direction.
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < cols; ++c) {
    if (!is_pivot[c]) { free_col = c; break; }
  }
  QVec x(cols, Rat(0));
  x[free_col] = 1;
  for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
    int c = pivots[r];
    Rat acc = 0;
    for (int j = c + 1; j < cols; ++j) acc += m[r][j] * x[j];
    x[c] = -acc / m[r][c];
  }
  return x;
}

}  // namespace mixedvol
