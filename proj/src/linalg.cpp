#include "supchar/linalg.hpp"

#include "supchar/error.hpp"

namespace supchar::linalg {

namespace {

// In-place RREF; returns pivot columns.
std::vector<int> rref(Matrix& m, int columns) {
  std::vector<int> pivots;
  int r = 0;
  const int rows = static_cast<int>(m.size());
  for (int c = 0; c < columns && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = c; j < columns; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

}  // namespace

Matrix row_reduce(Matrix rows) {
  if (rows.empty()) return rows;
  const int columns = static_cast<int>(rows[0].size());
  rref(rows, columns);
  return rows;
}

int rank(const Matrix& rows) { return static_cast<int>(row_reduce(rows).size()); }

Matrix null_space(const Matrix& rows, int columns) {
  Matrix m = rows;
  auto pivots = rref(m, columns);
  std::vector<char> is_pivot(columns, 0);
  for (int c : pivots) is_pivot[c] = 1;
  Matrix basis;
  for (int free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Vector v(columns, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix intersect_spans(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) return {};
  const Matrix ra = row_reduce(a), rb = row_reduce(b);
  const std::size_t len = ra.empty() ? 0 : ra[0].size();
  const int na = static_cast<int>(ra.size()), nb = static_cast<int>(rb.size());
  // Solve sum u_i ra_i - sum v_j rb_j = 0; columns of the system are the basis vectors.
  Matrix system(len, Vector(na + nb, 0));
  for (std::size_t t = 0; t < len; ++t) {
    for (int i = 0; i < na; ++i) system[t][i] = ra[i][t];
    for (int j = 0; j < nb; ++j) system[t][na + j] = -rb[j][t];
  }
  Matrix out;
  for (const auto& sol : null_space(system, na + nb)) {
    Vector v(len, 0);
    for (int i = 0; i < na; ++i) {
      if (sol[i] == 0) continue;
      for (std::size_t t = 0; t < len; ++t) v[t] += sol[i] * ra[i][t];
    }
    out.push_back(std::move(v));
  }
  return row_reduce(std::move(out));
}

bool in_span(const Matrix& reduced_basis, const Vector& v) {
  Matrix m = reduced_basis;
  m.push_back(v);
  return rank(m) == static_cast<int>(reduced_basis.size());
}

}  // namespace supchar::linalg
