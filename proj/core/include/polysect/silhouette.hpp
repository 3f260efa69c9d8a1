#pragma once

#include <optional>
#include <vector>

#include "polysect/cone.hpp"
#include "polysect/flat.hpp"
#include "polysect/polytope.hpp"

namespace polysect {

/// Chart of the plane xi^perp through the origin: an orthogonal basis
/// (e1, e2) with det(e1, e2, xi) > 0, so counterclockwise in the chart is
/// counterclockwise seen from the tip of xi. For xi = (0,0,1) the chart is
/// the standard (x, y) plane.
AffineFlat shadow_chart(const Vector& xi);

/// The line { x + t xi } over the chart point x.
AffineFlat lift_line(const Vec& chart_point, const Vector& xi);

struct WalkState {
  Vector xi;
  Vec current;
  double angle = 0;
  Point apex;
  std::vector<Vec> visited;
};

struct StepResult {
  /// The lifted line runs along an edge of the visual cone.
  bool isolated = false;
  /// Next point: the counterclockwise endpoint of the projected face when
  /// the line crosses a cone facet, or the next shadow vertex when isolated.
  Vec next;
  Point apex;
  /// Visual cone facets (indices into its halfspace form) containing the line.
  std::vector<std::size_t> cone_facets;
};

/// Apex on the lifted line, 3 support spreads beyond the far support plane.
Point walk_apex(const VPolytope& body, const Vector& xi, const Vec& chart_point);

/// One step of the walk from state.current, which must lie on the shadow
/// boundary.
StepResult step_g(const VPolytope& body, const WalkState& state);

struct ShadowWalk {
  Vector xi;
  AffineFlat chart;
  Vec start;
  /// Shadow vertices in counterclockwise order, chart coordinates.
  std::vector<Vec> vertices;
  /// Unwrapped polar angles about the shadow centroid, increasing.
  std::vector<double> angles;
  /// Apex used at each emitted vertex.
  std::vector<Point> apexes;
  /// Transitions v_j -> v_{j+1} until the cycle closes.
  std::size_t steps = 0;
  /// step_g evaluations, including the bootstrap from a non-vertex start.
  std::size_t step_calls = 0;
};

/// Walks the shadow boundary of a full-dimensional 3-polytope
/// counterclockwise. Without a start point the walk begins at the chart
/// support point in direction (1, 0) (a segment midpoint if that support is
/// an edge). Throws Error if the walk exceeds |V| vertices.
ShadowWalk shadow_walk(const VPolytope& body, const Vector& xi, std::optional<Vec> start = std::nullopt);

}  // namespace polysect
