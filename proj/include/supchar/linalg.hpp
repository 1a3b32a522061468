#pragma once

#include <vector>

#include "supchar/cyclotomic.hpp"

namespace supchar::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major, rows are vectors

// Reduced row echelon form of the row space; zero rows dropped.
Matrix row_reduce(Matrix rows);
int rank(const Matrix& rows);
// Basis (reduced) of span(a) intersected with span(b). All rows share a length.
Matrix intersect_spans(const Matrix& a, const Matrix& b);
// Basis of {x : rows * x = 0}.
Matrix null_space(const Matrix& rows, int columns);
bool in_span(const Matrix& reduced_basis, const Vector& v);

}  // namespace supchar::linalg
