#pragma once

#include <optional>
#include <vector>

#include "polysect/flat.hpp"
#include "polysect/polytope.hpp"

namespace polysect {

/// Pointed polyhedral cone apex + cone(generators). Generators are stored as
/// primitive integer directions of the extreme rays, lexicographically
/// sorted, so two equal cones compare equal.
class PolyCone {
 public:
  /// Reduces the directions to extreme rays. Zero directions are ignored.
  /// Throws PreconditionFailed when the cone is not pointed.
  static PolyCone from_generators(Point apex, std::span<const Vector> directions);

  const Point& apex() const { return apex_; }
  const std::vector<Vector>& generators() const { return generators_; }
  std::size_t ambient_dim() const { return apex_.dim(); }
  /// Dimension of the linear span of the generators.
  std::size_t dim() const { return dim_; }
  /// A linear functional strictly positive on every nonzero direction of
  /// the cone (zero for the apex-only cone).
  const Vector& positive_functional() const { return functional_; }

  /// Halfspaces through the apex whose intersection is the cone,
  /// including a pair per equation of the generators' span.
  const HPolytope& halfspace_form() const { return halfspaces_; }

  bool contains(const Point& x) const { return halfspaces_.contains(x); }
  bool contains_direction(const Vector& v) const { return contains(apex_ + v); }

  friend bool operator==(const PolyCone& a, const PolyCone& b) {
    return a.apex_ == b.apex_ && a.generators_ == b.generators_;
  }

 private:
  PolyCone(Point apex, std::vector<Vector> generators, std::size_t dim, Vector functional, HPolytope halfspaces)
      : apex_(std::move(apex)),
        generators_(std::move(generators)),
        dim_(dim),
        functional_(std::move(functional)),
        halfspaces_(std::move(halfspaces)) {}

  Point apex_;
  std::vector<Vector> generators_;
  std::size_t dim_;
  Vector functional_;
  HPolytope halfspaces_;
};

/// C(z, K) = { z + t (x - z) : x in K, t >= 0 } for z strictly outside K.
PolyCone visual_cone(const Point& z, const VPolytope& body);

/// Intersection of a cone with a flat through its apex, in the chart of the
/// flat re-based at the apex (so the chart cone has apex at the origin).
struct ConeSection {
  Point apex;
  AffineFlat flat;
  PolyCone chart_cone;

  std::vector<Vector> ambient_generators() const;
};

/// nullopt when the flat meets the cone only at the apex.
std::optional<ConeSection> cone_section(const PolyCone& cone, const AffineFlat& flat);

struct PolyhedralVerdict {
  bool polyhedral = true;
  std::size_t extreme_rays = 0;
};

/// A generator-form cone is polyhedral by construction; this mirrors the
/// sampled check available for oracle cones.
PolyhedralVerdict is_polyhedral_exact(const PolyCone& cone);

}  // namespace polysect
