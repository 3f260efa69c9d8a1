#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polysect/polytope.hpp"

namespace polysect {

enum class EpsilonCase { interior_crossing, boundary_segment };

/// Sampled hyperplane directions; each normal n gives the hyperplane
/// { y : n . y = n . x } through the midpoint x of the segment.
struct FlatFamily {
  std::vector<Vector> normals;

  /// The coordinate directions followed by `count` random rational ones.
  static FlatFamily random(std::size_t dim, std::size_t count, std::uint64_t seed);
};

/// Radius/angle bound excluding extreme points near p in directions near
/// [p q]. Case-specific fields are filled for the detected case only.
struct EpsilonCert {
  Point p;
  Point q;
  EpsilonCase kind = EpsilonCase::interior_crossing;
  /// Half of `bound`.
  double epsilon = 0;
  double bound = 0;
  Point x;

  // Interior crossing: ball B(x, radius) and the two terms of the bound.
  double radius = 0;
  double distance_px = 0;
  double tangent_term = 0;
  double angle_term = 0;

  // Boundary segment: transversal flat, facet vertices of the section
  // through x, distance from p to the flat, an interior point.
  std::optional<AffineFlat> flat;
  std::vector<Point> flat_vertices;
  std::vector<double> vertex_angles;
  double delta = 0;
  Point interior;
};

/// Requires p != q, both in K, K full-dimensional. Throws PreconditionFailed
/// ("family coverage") when no family member is transversal to [p q] and
/// meets the interior of K.
EpsilonCert epsilon_certificate(const VPolytope& body, const Point& p, const Point& q, const FlatFamily& family);

/// True iff no vertex y != p of K has ||p - y|| < eps and angle ypq < eps.
/// Decided with exact squared comparisons; the angle test errs towards
/// reporting a vertex inside the cone.
bool no_extreme_in_cone(const VPolytope& body, const Point& p, const Point& q, double eps);

/// Angle at p between y - p and q - p, in radians.
double angle_at(const Point& p, const Point& y, const Point& q);

}  // namespace polysect
