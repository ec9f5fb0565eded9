#include "resinv/linalg.hpp"

namespace resinv {

std::vector<int> rref(Matrix& m, int ncols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (int j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = col; j < ncols; ++j)
        if (m[row][j] != 0) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

int rank(Matrix m, int ncols) { return static_cast<int>(rref(m, ncols).size()); }

Matrix nullspace(Matrix m, int ncols) {
  std::vector<int> pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  Matrix basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix intersect_row_spaces(const Matrix& a, const Matrix& b, int ncols) {
  // Solve sum x_i a_i = sum y_j b_j and map the solutions back through a.
  if (a.empty() || b.empty()) return {};
  const int k = static_cast<int>(a.size() + b.size());
  Matrix sys(ncols, Vector(k, 0));
  for (int c = 0; c < ncols; ++c) {
    for (std::size_t i = 0; i < a.size(); ++i) sys[c][i] = a[i][c];
    for (std::size_t j = 0; j < b.size(); ++j) sys[c][a.size() + j] = -b[j][c];
  }
  Matrix out;
  for (const auto& sol : nullspace(sys, k)) {
    Vector v(ncols, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (sol[i] != 0)
        for (int c = 0; c < ncols; ++c) v[c] += sol[i] * a[i][c];
    out.push_back(std::move(v));
  }
  rref(out, ncols);
  return out;
}

bool in_row_space(const Matrix& basis, const Vector& v, int ncols) {
  Matrix m = basis;
  int r0 = rank(m, ncols);
  m.push_back(v);
  return rank(std::move(m), ncols) == r0;
}

}  // namespace resinv
