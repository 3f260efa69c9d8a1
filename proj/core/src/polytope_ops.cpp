#include <algorithm>
#include <array>

#include "polysect/error.hpp"
#include "polysect/linalg.hpp"
#include "polysect/polytope.hpp"

namespace polysect {
namespace {

Section finish_section(const AffineFlat& flat, std::optional<VPolytope> chart) {
  Section out{flat, std::move(chart), {}};
  if (out.chart) {
    for (const auto& v : out.chart->vertices()) out.ambient_vertices.push_back(flat.point_at(v.coords()));
  }
  return out;
}

/// Component of v orthogonal to span(basis) for an orthogonal basis.
Vec orthogonal_part(const Vec& v, const std::vector<Vector>& basis) {
  Vec w = v;
  for (const auto& u : basis) w -= u * (dot(v, u) / norm2(u));
  return w;
}

/// Plane sections of full-dimensional bodies: clip the chart box spanned by
/// the projected vertices against every facet restricted to the plane.
/// Linear in the facet count, unlike the generic routes.
std::optional<VPolytope> planar_section(const VPolytope& body, const AffineFlat& flat) {
  std::vector<Scalar> lo(2), hi(2);
  bool first = true;
  for (const auto& v : body.vertices()) {
    const auto c = flat.projected_coordinates(v);
    for (std::size_t i = 0; i < 2; ++i) {
      if (first || c[i] < lo[i]) lo[i] = c[i];
      if (first || c[i] > hi[i]) hi[i] = c[i];
    }
    first = false;
  }
  std::vector<std::array<Scalar, 2>> poly{{lo[0], lo[1]}, {hi[0], lo[1]}, {hi[0], hi[1]}, {lo[0], hi[1]}};
  for (const auto& h : body.facets()) {
    const Scalar a = dot(h.normal, flat.basis()[0]);
    const Scalar b = dot(h.normal, flat.basis()[1]);
    const Scalar rhs = h.offset - dot(h.normal, flat.base());
    std::vector<Scalar> slack;
    slack.reserve(poly.size());
    for (const auto& p : poly) slack.push_back(rhs - a * p[0] - b * p[1]);
    std::vector<std::array<Scalar, 2>> next;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const std::size_t j = (i + 1) % poly.size();
      if (sign(slack[i]) >= 0) next.push_back(poly[i]);
      if (sign(slack[i]) * sign(slack[j]) < 0) {
        const Scalar t = slack[i] / (slack[i] - slack[j]);
        next.push_back({poly[i][0] + (poly[j][0] - poly[i][0]) * t, poly[i][1] + (poly[j][1] - poly[i][1]) * t});
      }
    }
    if (next.empty()) return std::nullopt;
    poly = std::move(next);
  }
  std::vector<Point> pts;
  pts.reserve(poly.size());
  for (const auto& p : poly) pts.emplace_back(std::vector<Scalar>{p[0], p[1]});
  return convex_hull(pts);
}

}  // namespace

Section section(const HPolytope& body, const AffineFlat& flat) {
  if (flat.ambient_dim() != body.ambient_dim()) throw DimensionMismatch("section flat dimension");
  if (flat.dim() == 0) throw PreconditionFailed("section by a 0-dimensional flat");
  const std::size_t k = flat.dim();
  std::vector<Halfspace> restricted;
  for (const auto& h : body.halfspaces()) {
    Vec n(k);
    for (std::size_t i = 0; i < k; ++i) n[i] = dot(h.normal, flat.basis()[i]);
    Scalar rhs = h.offset - dot(h.normal, flat.base());
    if (n.is_zero()) {
      if (sign(rhs) < 0) return finish_section(flat, std::nullopt);
      continue;
    }
    restricted.emplace_back(std::move(n), std::move(rhs));
  }
  return finish_section(flat, vertices_of(HPolytope(k, std::move(restricted))));
}

Section section(const VPolytope& body, const AffineFlat& flat) {
  if (flat.ambient_dim() != body.ambient_dim()) throw DimensionMismatch("section flat dimension");
  if (flat.dim() == 0) throw PreconditionFailed("section by a 0-dimensional flat");
  if (flat.dim() == 2 && body.full_dimensional()) return finish_section(flat, planar_section(body, flat));

  std::optional<VPolytope> current = body;
  for (const auto& raw : flat.normal_space()) {
    const Vector e = primitive_direction(raw);
    const Scalar level = dot(e, flat.base());
    const auto& verts = current->vertices();
    std::vector<Scalar> side;
    side.reserve(verts.size());
    for (const auto& v : verts) side.push_back(dot(e, v) - level);

    std::vector<Point> cut;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (side[i] == 0) cut.push_back(verts[i]);
    }
    for (auto [a, b] : current->edges()) {
      if (sign(side[a]) * sign(side[b]) < 0) {
        const Scalar t = side[a] / (side[a] - side[b]);
        cut.push_back(verts[a] + (verts[b] - verts[a]) * t);
      }
    }
    if (cut.empty()) return finish_section(flat, std::nullopt);
    current = convex_hull(cut);
  }

  std::vector<Point> chart_pts;
  for (const auto& v : current->vertices()) {
    auto c = flat.coordinates(v);
    if (!c) throw Error("internal: section vertex left the flat");
    chart_pts.emplace_back(std::move(*c));
  }
  return finish_section(flat, convex_hull(chart_pts));
}

VPolytope project(const VPolytope& body, const AffineFlat& subspace) {
  if (subspace.ambient_dim() != body.ambient_dim()) throw DimensionMismatch("projection subspace dimension");
  if (!subspace.contains(Point(body.ambient_dim()))) {
    throw PreconditionFailed("projection subspace must pass through the origin");
  }
  std::vector<Point> chart_pts;
  for (const auto& v : body.vertices()) chart_pts.emplace_back(subspace.projected_coordinates(v));
  return convex_hull(chart_pts);
}

bool is_extreme(const Point& x, const VPolytope& body) {
  if (!body.contains(x)) throw PreconditionFailed("point " + to_string(x) + " is outside the body");
  std::vector<Vec> normals;
  for (auto f : body.active_facets(x)) normals.push_back(body.facets()[f].normal);
  return rank(std::span<const Vec>(normals)) == body.dim();
}

bool supporting_line_test(const AffineFlat& line, const HPolytope& body) {
  if (line.dim() != 1) throw PreconditionFailed("supporting line test needs a 1-dimensional flat");
  if (line.ambient_dim() != body.ambient_dim()) throw DimensionMismatch("line dimension");
  const Vec& u = line.basis().front();
  std::optional<Scalar> lo;
  std::optional<Scalar> hi;
  bool lies_in_facet_plane = false;
  for (const auto& h : body.halfspaces()) {
    const Scalar a = dot(h.normal, u);
    const Scalar b = h.offset - dot(h.normal, line.base());
    if (a == 0) {
      if (sign(b) < 0) return false;
      if (b == 0) lies_in_facet_plane = true;
      continue;
    }
    const Scalar t = b / a;
    if (sign(a) > 0) {
      if (!hi || t < *hi) hi = t;
    } else {
      if (!lo || t > *lo) lo = t;
    }
  }
  if (lo && hi && *lo > *hi) return false;
  if (lies_in_facet_plane) return true;
  return lo && hi && *lo == *hi;
}

namespace {

enum class Crossing { single, misses, at_endpoint, more_than_point };

std::pair<Crossing, Point> crossing(const VPolytope& q_face, const Point& p, const Point& q) {
  require_same_dim(p, q, "diamond segment");
  if (p.dim() != q_face.ambient_dim()) throw DimensionMismatch("diamond segment dimension");
  const AffineFlat& span = q_face.affine_span();
  const Vec d = q - p;
  const Vec w = orthogonal_part(d, span.basis());
  const Vec r0 = orthogonal_part(p - span.base(), span.basis());

  if (!w.is_zero()) {
    const Scalar t = -dot(r0, w) / norm2(w);
    if (!(r0 + w * t).is_zero()) return {Crossing::misses, p};
    Point x = p + d * t;
    if (!q_face.contains(x)) return {Crossing::misses, x};
    if (t == 0 || t == 1) return {Crossing::at_endpoint, x};
    if (t < 0 || t > 1) return {Crossing::misses, x};
    return {Crossing::single, x};
  }
  if (!r0.is_zero()) return {Crossing::misses, p};

  // The line lies in aff(Q): intersect parameter intervals.
  Scalar lo = 0;
  Scalar hi = 1;
  for (const auto& h : q_face.facets()) {
    const Scalar a = dot(h.normal, d);
    const Scalar b = h.offset - dot(h.normal, p);
    if (a == 0) {
      if (sign(b) < 0) return {Crossing::misses, p};
      continue;
    }
    if (sign(a) > 0) {
      hi = std::min(hi, Scalar(b / a));
    } else {
      lo = std::max(lo, Scalar(b / a));
    }
  }
  if (lo > hi) return {Crossing::misses, p};
  if (lo < hi) return {Crossing::more_than_point, p};
  Point x = p + d * lo;
  if (lo == 0 || lo == 1) return {Crossing::at_endpoint, x};
  return {Crossing::single, x};
}

}  // namespace

std::optional<Point> diamond_crossing(const VPolytope& q_face, const Point& p, const Point& q) {
  if (p == q) return std::nullopt;
  auto [kind, x] = crossing(q_face, p, q);
  if (kind != Crossing::single) return std::nullopt;
  return x;
}

VPolytope diamond_hull(const VPolytope& q_face, const Point& p, const Point& q) {
  if (p == q) throw PreconditionFailed("diamond needs distinct p and q");
  const std::size_t d = q_face.ambient_dim();
  if (q_face.dim() < 1 || q_face.dim() + 2 > d) {
    throw PreconditionFailed("diamond face must have dimension between 1 and d-2");
  }
  auto [kind, x] = crossing(q_face, p, q);
  switch (kind) {
    case Crossing::misses:
      throw PreconditionFailed("segment (p q) misses Q");
    case Crossing::at_endpoint:
      throw PreconditionFailed("segment [p q] meets Q only at an endpoint");
    case Crossing::more_than_point:
      throw PreconditionFailed("segment (p q) meets Q in more than a point");
    case Crossing::single:
      break;
  }
  std::vector<Point> pts = q_face.vertices();
  pts.push_back(p);
  pts.push_back(q);
  return convex_hull(pts);
}

bool check_diamond_boundary(const HPolytope& body, const VPolytope& diamond) {
  if (diamond.ambient_dim() != body.ambient_dim()) throw DimensionMismatch("diamond dimension");
  for (const auto& v : diamond.vertices()) {
    if (!body.contains(v)) throw PreconditionFailed("diamond vertex " + to_string(v) + " is outside K");
  }
  return std::any_of(body.halfspaces().begin(), body.halfspaces().end(), [&](const Halfspace& h) {
    return std::all_of(diamond.vertices().begin(), diamond.vertices().end(),
                       [&](const Point& v) { return h.tight(v); });
  });
}

}  // namespace polysect
