#ifndef RESINV_LINALG_HPP
#define RESINV_LINALG_HPP

#include <vector>

#include "resinv/rational.hpp"

namespace resinv {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

// Reduced row echelon form in place; zero rows are removed. Returns the
// pivot column of each remaining row.
std::vector<int> rref(Matrix& m, int ncols);

int rank(Matrix m, int ncols);

// Basis of { x : m x = 0 }, in the canonical form given by the free columns.
Matrix nullspace(Matrix m, int ncols);

// Basis of the intersection of two row spaces in K^ncols.
Matrix intersect_row_spaces(const Matrix& a, const Matrix& b, int ncols);

bool in_row_space(const Matrix& basis, const Vector& v, int ncols);

}  // namespace resinv

#endif
