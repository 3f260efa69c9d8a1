#pragma once

#include <span>
#include <vector>

#include "polysect/vec.hpp"

namespace polysect {

/// Dense row-major matrix of exact scalars.
using Matrix = std::vector<std::vector<Scalar>>;

enum class SolveStatus { unique, no_solution, underdetermined };

struct LinearSolution {
  SolveStatus status = SolveStatus::no_solution;
  /// The solution when unique; a particular solution (free variables zero)
  /// when underdetermined; empty when inconsistent.
  std::vector<Scalar> values;
  std::size_t rank = 0;
};

/// Exact Gaussian elimination over the rationals.
LinearSolution solve_linear(const Matrix& matrix, std::span<const Scalar> rhs);

Scalar determinant(Matrix matrix);
std::size_t rank(Matrix matrix);
std::size_t rank(std::span<const Vec> vectors);

/// Basis of { x : matrix * x = 0 } for a matrix with `cols` columns.
std::vector<Vec> nullspace(const Matrix& matrix, std::size_t cols);

/// Unnormalized Gram-Schmidt: pairwise-orthogonal vectors spanning the same
/// subspace as the input. Dependent inputs are dropped.
std::vector<Vec> orthogonalize(std::span<const Vec> vectors);

/// Orthogonal complement of span(vectors) inside Q^dim, as an orthogonal basis.
std::vector<Vec> orthogonal_complement(std::span<const Vec> vectors, std::size_t dim);

/// Vector orthogonal to the dim-1 rows given, built from signed cofactors.
/// With no rows (dim 1) the result is (1).
Vec cofactor_normal(std::span<const Vec> rows, std::size_t dim);

/// Sign of det[p1 - p0, ..., pd - p0] for d+1 points in dimension d.
int orientation(std::span<const Point> points);

}  // namespace polysect
