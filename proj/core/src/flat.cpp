#include "polysect/flat.hpp"

#include "polysect/error.hpp"
#include "polysect/linalg.hpp"

namespace polysect {

AffineFlat::AffineFlat(Point base, std::vector<Vector> basis) : base_(std::move(base)), basis_(std::move(basis)) {
  if (basis_.size() > base_.dim()) throw PreconditionFailed("flat basis larger than the ambient dimension");
  norms_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    require_same_dim(base_, basis_[i], "flat basis");
    if (basis_[i].is_zero()) throw PreconditionFailed("flat basis vector is zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (dot(basis_[i], basis_[j]) != 0) throw PreconditionFailed("flat basis is not orthogonal");
    }
    norms_.push_back(norm2(basis_[i]));
  }
}

AffineFlat AffineFlat::spanned_by(Point base, std::span<const Vector> directions) {
  for (const auto& d : directions) require_same_dim(base, d, "flat direction");
  return AffineFlat(std::move(base), orthogonalize(directions));
}

AffineFlat AffineFlat::hyperplane(const Vector& normal, const Scalar& offset) {
  if (normal.is_zero()) throw PreconditionFailed("hyperplane normal is zero");
  Point base = normal * (offset / norm2(normal));
  std::vector<Vec> n{normal};
  return AffineFlat(std::move(base), orthogonal_complement(n, normal.dim()));
}

AffineFlat AffineFlat::through_points(std::span<const Point> points) {
  if (points.empty()) throw PreconditionFailed("affine hull of an empty point set");
  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    require_same_dim(points[0], points[i], "affine hull");
    diffs.push_back(points[i] - points[0]);
  }
  return spanned_by(points[0], diffs);
}

AffineFlat AffineFlat::whole_space(std::size_t dim) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(unit_vector(dim, i));
  return AffineFlat(Point(dim), std::move(basis));
}

std::vector<Scalar> AffineFlat::projected_coordinates(const Point& p) const {
  require_same_dim(base_, p, "flat coordinates");
  const Vec rel = p - base_;
  std::vector<Scalar> c;
  c.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c.push_back(dot(rel, basis_[i]) / norms_[i]);
  return c;
}

std::optional<std::vector<Scalar>> AffineFlat::coordinates(const Point& p) const {
  auto c = projected_coordinates(p);
  if (point_at(c) != p) return std::nullopt;
  return c;
}

Point AffineFlat::point_at(std::span<const Scalar> chart) const {
  if (chart.size() != basis_.size()) throw DimensionMismatch("chart coordinate count does not match flat dimension");
  Point p = base_;
  for (std::size_t i = 0; i < basis_.size(); ++i) p += basis_[i] * chart[i];
  return p;
}

std::vector<Vector> AffineFlat::normal_space() const { return orthogonal_complement(basis_, ambient_dim()); }

AffineFlat AffineFlat::rebased(const Point& new_base) const {
  if (!contains(new_base)) throw PreconditionFailed("new base point is not on the flat");
  return AffineFlat(new_base, basis_);
}

std::optional<std::vector<Scalar>> flat_coordinates(const AffineFlat& flat, const Point& point) {
  return flat.coordinates(point);
}

Segment::Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
  require_same_dim(a, b, "segment");
  if (a == b) throw PreconditionFailed("segment endpoints coincide");
}

}  // namespace polysect
