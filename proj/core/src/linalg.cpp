#include "polysect/linalg.hpp"

#include <utility>

#include "polysect/error.hpp"

namespace polysect {
namespace {

std::size_t column_count(const Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  for (const auto& row : m) {
    if (row.size() != cols) throw DimensionMismatch("matrix rows have unequal length");
  }
  return cols;
}

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Scalar lead = m[row][col];
    for (auto& v : m[row]) v /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Scalar factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

LinearSolution solve_linear(const Matrix& matrix, std::span<const Scalar> rhs) {
  const std::size_t cols = column_count(matrix);
  if (matrix.size() != rhs.size()) {
    throw DimensionMismatch("right-hand side length does not match the row count");
  }
  Matrix aug = matrix;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(rhs[r]);
  const auto pivots = rref(aug, cols);

  LinearSolution out;
  out.rank = pivots.size();
  for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
    if (aug[r][cols] != 0) {
      out.status = SolveStatus::no_solution;
      return out;
    }
  }
  out.values.assign(cols, Scalar(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) out.values[pivots[i]] = aug[i][cols];
  out.status = pivots.size() == cols ? SolveStatus::unique : SolveStatus::underdetermined;
  return out;
}

Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  if (column_count(m) != n) throw DimensionMismatch("determinant of a non-square matrix");
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Scalar factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

std::size_t rank(Matrix matrix) {
  const std::size_t cols = column_count(matrix);
  return rref(matrix, cols).size();
}

std::size_t rank(std::span<const Vec> vectors) {
  Matrix m;
  m.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (!m.empty() && v.dim() != m.front().size()) throw DimensionMismatch("rank of mixed-dimension vectors");
    m.push_back(v.coords());
  }
  return rank(std::move(m));
}

std::vector<Vec> nullspace(const Matrix& matrix, std::size_t cols) {
  if (!matrix.empty() && column_count(matrix) != cols) throw DimensionMismatch("nullspace column count");
  Matrix m = matrix;
  const auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> orthogonalize(std::span<const Vec> vectors) {
  std::vector<Vec> out;
  std::vector<Scalar> norms;
  for (const auto& v : vectors) {
    if (!out.empty()) require_same_dim(out.front(), v, "orthogonalize");
    Vec w = v;
    for (std::size_t i = 0; i < out.size(); ++i) w -= out[i] * (dot(v, out[i]) / norms[i]);
    if (w.is_zero()) continue;
    norms.push_back(norm2(w));
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Vec> orthogonal_complement(std::span<const Vec> vectors, std::size_t dim) {
  Matrix m;
  for (const auto& v : vectors) {
    if (v.dim() != dim) throw DimensionMismatch("orthogonal complement of mixed-dimension vectors");
    m.push_back(v.coords());
  }
  const auto basis = nullspace(m, dim);
  return orthogonalize(basis);
}

Vec cofactor_normal(std::span<const Vec> rows, std::size_t dim) {
  if (rows.size() + 1 != dim) throw DimensionMismatch("cofactor normal needs dim-1 rows");
  Vec n(dim);
  for (std::size_t skip = 0; skip < dim; ++skip) {
    Matrix minor;
    minor.reserve(rows.size());
    for (const auto& r : rows) {
      if (r.dim() != dim) throw DimensionMismatch("cofactor normal row dimension");
      std::vector<Scalar> row;
      row.reserve(dim - 1);
      for (std::size_t c = 0; c < dim; ++c) {
        if (c != skip) row.push_back(r[c]);
      }
      minor.push_back(std::move(row));
    }
    Scalar det = minor.empty() ? Scalar(1) : determinant(std::move(minor));
    n[skip] = (skip % 2 == 0) ? det : Scalar(-det);
  }
  return n;
}

int orientation(std::span<const Point> points) {
  if (points.empty()) throw PreconditionFailed("orientation of an empty point set");
  const std::size_t d = points.front().dim();
  if (points.size() != d + 1) throw DimensionMismatch("orientation needs dim+1 points");
  Matrix m;
  for (std::size_t i = 1; i < points.size(); ++i) m.push_back((points[i] - points[0]).coords());
  return sign(determinant(std::move(m)));
}

}  // namespace polysect
