#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polysect/vec.hpp"

namespace polysect {

/// An affine flat `base + span(basis)` with a pairwise-orthogonal (not
/// necessarily unit) basis. The basis doubles as the flat's coordinate
/// chart: chart coordinates c map to base + sum c_i * basis_i.
class AffineFlat {
 public:
  /// Validates that `basis` is nonzero, pairwise orthogonal, and matches
  /// the dimension of `base`.
  AffineFlat(Point base, std::vector<Vector> basis);

  /// Flat through `base` spanned by arbitrary directions (orthogonalized,
  /// dependent directions dropped).
  static AffineFlat spanned_by(Point base, std::span<const Vector> directions);
  /// Hyperplane { x : normal . x = offset }.
  static AffineFlat hyperplane(const Vector& normal, const Scalar& offset);
  /// Affine hull of a non-empty point set.
  static AffineFlat through_points(std::span<const Point> points);
  /// The whole ambient space with the standard basis.
  static AffineFlat whole_space(std::size_t dim);

  const Point& base() const { return base_; }
  const std::vector<Vector>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return base_.dim(); }

  /// Chart coordinates of a point on the flat; nullopt when off the flat.
  std::optional<std::vector<Scalar>> coordinates(const Point& p) const;
  /// Chart coordinates of the orthogonal projection of p onto the flat.
  std::vector<Scalar> projected_coordinates(const Point& p) const;
  Point point_at(std::span<const Scalar> chart) const;
  Point project(const Point& p) const { return point_at(projected_coordinates(p)); }
  bool contains(const Point& p) const { return coordinates(p).has_value(); }

  /// Orthogonal basis of the flat's normal space.
  std::vector<Vector> normal_space() const;

  /// Same flat re-based at one of its points (chart origin moves there).
  AffineFlat rebased(const Point& new_base) const;

 private:
  Point base_;
  std::vector<Vector> basis_;
  std::vector<Scalar> norms_;
};

/// Chart coordinates of `point` on `flat`, or nullopt when not on the flat.
std::optional<std::vector<Scalar>> flat_coordinates(const AffineFlat& flat, const Point& point);

/// Closed segment with distinct endpoints.
struct Segment {
  Segment(Point a, Point b);
  Point a;
  Point b;
  Point midpoint() const { return (a + b) / Scalar(2); }
};

}  // namespace polysect
