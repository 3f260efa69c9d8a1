#include "polysect/silhouette.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polysect/error.hpp"

namespace polysect {
namespace {

Vec cross3(const Vec& a, const Vec& b) {
  return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec chart_coords(const AffineFlat& chart, const Point& p) { return Vec(chart.projected_coordinates(p)); }

Scalar cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

void require_walkable(const VPolytope& body, const Vector& xi) {
  if (body.ambient_dim() != 3) throw PreconditionFailed("shadow walks need a 3-dim polytope");
  if (!body.full_dimensional()) throw PreconditionFailed("shadow walks need a full-dimensional polytope");
  require_same_dim(xi, body.vertices().front(), "walk direction");
  if (xi.is_zero()) throw PreconditionFailed("walk direction must be nonzero");
}

}  // namespace

AffineFlat shadow_chart(const Vector& xi) {
  if (xi.dim() != 3) throw PreconditionFailed("shadow charts are defined for 3-dim directions");
  if (xi.is_zero()) throw PreconditionFailed("walk direction must be nonzero");
  for (std::size_t i = 0; i < 3; ++i) {
    const Vector e = unit_vector(3, i);
    Vector e1 = e - xi * (dot(e, xi) / norm2(xi));
    if (e1.is_zero()) continue;
    Vector e2 = cross3(xi, e1);
    return AffineFlat(Point(3), {std::move(e1), std::move(e2)});
  }
  throw Error("unreachable: no chart direction");
}

AffineFlat lift_line(const Vec& chart_point, const Vector& xi) {
  if (chart_point.dim() != 2) throw DimensionMismatch("chart points are 2-dim");
  const AffineFlat chart = shadow_chart(xi);
  return AffineFlat(chart.point_at(chart_point.coords()), {xi});
}

Point walk_apex(const VPolytope& body, const Vector& xi, const Vec& chart_point) {
  Scalar hi = dot(xi, body.vertices().front());
  Scalar lo = hi;
  for (const auto& v : body.vertices()) {
    const Scalar s = dot(xi, v);
    if (s > hi) hi = s;
    if (s < lo) lo = s;
  }
  const Scalar t = (hi + 3 * (hi - lo)) / norm2(xi);
  return shadow_chart(xi).point_at(chart_point.coords()) + xi * t;
}

StepResult step_g(const VPolytope& body, const WalkState& state) {
  require_walkable(body, state.xi);
  const AffineFlat chart = shadow_chart(state.xi);
  StepResult out;
  out.apex = walk_apex(body, state.xi, state.current);
  if (body.contains(out.apex)) throw Error("walk apex landed inside the body");
  const PolyCone cone = visual_cone(out.apex, body);
  const auto& hs = cone.halfspace_form().halfspaces();
  const Point down = out.apex - state.xi;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (hs[i].tight(down)) out.cone_facets.push_back(i);
  }
  if (out.cone_facets.empty()) throw PreconditionFailed("walk point is not on the shadow boundary");

  const Vec x = state.current;
  // Projected face of K on a cone facet and its counterclockwise endpoint.
  auto ccw_end = [&](const Halfspace& h) -> std::optional<Vec> {
    const Vec n{dot(h.normal, chart.basis()[0]), dot(h.normal, chart.basis()[1])};
    const Vec along{-n[1], n[0]};
    std::optional<Vec> best;
    for (const auto& v : body.vertices()) {
      if (!h.tight(v)) continue;
      Vec c = chart_coords(chart, v);
      if (!best || dot(along, c) > dot(along, *best)) best = std::move(c);
    }
    if (!best || !(dot(along, *best) > dot(along, x))) return std::nullopt;
    return best;
  };

  if (out.cone_facets.size() == 1) {
    auto g = ccw_end(hs[out.cone_facets.front()]);
    if (!g) throw Error("cone facet projects to a degenerate segment");
    out.next = std::move(*g);
    return out;
  }

  out.isolated = true;
  std::vector<Vec> candidates;
  for (auto i : out.cone_facets) {
    if (auto g = ccw_end(hs[i])) candidates.push_back(std::move(*g));
  }
  if (candidates.empty()) throw Error("no cone facet continues the walk counterclockwise");
  // The next boundary vertex keeps every other candidate on its left.
  for (const auto& g : candidates) {
    bool boundary = true;
    for (const auto& other : candidates) {
      if (sign(cross2(x, g, other)) < 0) {
        boundary = false;
        break;
      }
    }
    if (boundary) {
      out.next = g;
      return out;
    }
  }
  throw Error("ambiguous walk continuation");
}

ShadowWalk shadow_walk(const VPolytope& body, const Vector& xi, std::optional<Vec> start) {
  require_walkable(body, xi);
  ShadowWalk walk{xi, shadow_chart(xi), Vec(2), {}, {}, {}, 0, 0};
  std::vector<Vec> projected;
  for (const auto& v : body.vertices()) projected.push_back(chart_coords(walk.chart, v));

  if (start) {
    walk.start = *start;
  } else {
    Scalar best = projected.front()[0];
    for (const auto& p : projected) best = std::max(best, p[0]);
    std::optional<Scalar> lo;
    std::optional<Scalar> hi;
    for (const auto& p : projected) {
      if (p[0] != best) continue;
      if (!lo || p[1] < *lo) lo = p[1];
      if (!hi || p[1] > *hi) hi = p[1];
    }
    walk.start = Vec{best, (*lo + *hi) / 2};
  }

  const Vec centre = centroid(projected);
  const double s1 = std::sqrt(to_double(norm2(walk.chart.basis()[0])));
  const double s2 = std::sqrt(to_double(norm2(walk.chart.basis()[1])));
  auto polar = [&](const Vec& p) {
    return std::atan2(to_double(p[1] - centre[1]) * s2, to_double(p[0] - centre[0]) * s1);
  };

  WalkState state{xi, walk.start, 0, Point(3), {}};
  const std::size_t limit = body.vertices().size();
  StepResult step = step_g(body, state);
  ++walk.step_calls;
  if (!step.isolated) {
    state.current = step.next;
    step = step_g(body, state);
    ++walk.step_calls;
  }
  while (true) {
    if (!step.isolated) throw Error("walk reached a point that is not an isolated extreme point");
    if (!walk.vertices.empty() && state.current == walk.vertices.front()) break;
    if (walk.vertices.size() == limit) throw Error("walk exceeded the vertex count without closing");
    double angle = polar(state.current);
    if (!walk.angles.empty()) {
      while (angle <= walk.angles.back()) angle += 2 * std::numbers::pi;
    }
    walk.vertices.push_back(state.current);
    walk.angles.push_back(angle);
    walk.apexes.push_back(step.apex);
    state.visited.push_back(state.current);
    state.current = step.next;
    step = step_g(body, state);
    ++walk.step_calls;
  }
  walk.steps = walk.vertices.size();
  return walk;
}

}  // namespace polysect
