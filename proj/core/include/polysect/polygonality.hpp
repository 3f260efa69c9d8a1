#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <span>
#include <vector>

#include "polysect/section_sampling.hpp"

namespace polysect {

/// A maximal run of consecutive collinear sample points, indices taken
/// cyclically from `first` to `last` inclusive.
struct FittedEdge {
  std::size_t first = 0;
  std::size_t last = 0;
  Eigen::Vector2d point;
  Eigen::Vector2d direction;

  double distance(const Eigen::Vector2d& x) const;
};

struct PolygonalityResult {
  bool polygon = false;
  std::vector<FittedEdge> edges;
  /// Intersections of cyclically consecutive fitted lines.
  std::vector<Eigen::Vector2d> vertex_estimate;
  /// Consecutive triple (i-1, i, i+1) centred on the first point that lies
  /// on no fitted line.
  std::optional<std::array<std::size_t, 3>> witness;
  double witness_area = 0;
  double area_threshold = 0;
  double distance_threshold = 0;
};

/// Decides whether cyclically ordered boundary samples of a planar convex
/// set come from a polygon. Consecutive triples with triangle area at most
/// tau * diam^2 are collinear; maximal collinear runs become fitted edges.
/// The verdict is "polygon" iff every point lies within 2 tau diam of a
/// fitted line and there are fewer than n/3 edges. Needs n >= 8.
PolygonalityResult polygonality_detect(std::span<const Eigen::Vector2d> points, double tau);
PolygonalityResult polygonality_detect(const SectionSample& sample, double tau);

double triangle_area(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c);

}  // namespace polysect
