#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polysect/flat.hpp"
#include "polysect/vec.hpp"

namespace polysect {

/// Closed halfspace { x : normal . x <= offset }.
struct Halfspace {
  Halfspace(Vector normal, Scalar offset);

  Vector normal;
  Scalar offset;

  /// offset - normal . x; nonnegative exactly on the halfspace.
  Scalar slack(const Point& x) const { return offset - dot(normal, x); }
  bool contains(const Point& x) const { return sign(slack(x)) >= 0; }
  bool tight(const Point& x) const { return sign(slack(x)) == 0; }

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Same halfspace scaled so the normal is a primitive integer vector.
Halfspace canonical(const Halfspace& h);

class HPolytope {
 public:
  HPolytope(std::size_t ambient_dim, std::vector<Halfspace> halfspaces);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

  bool contains(const Point& x) const;
  /// Every inequality strict.
  bool strictly_contains(const Point& x) const;
  std::vector<std::size_t> active_set(const Point& x) const;

 private:
  std::size_t ambient_dim_;
  std::vector<Halfspace> halfspaces_;
};

struct FaceRef {
  /// Indices into the owning polytope's facet list.
  std::vector<std::size_t> facets;
  /// Indices into the owning polytope's vertex list, ascending.
  std::vector<std::size_t> vertices;
  std::size_t dim = 0;
};

/// Convex polytope in vertex form. Only constructible through convex_hull,
/// which also records the facet halfspaces and vertex-facet incidence; the
/// rest of the face lattice is derived from that incidence on demand.
class VPolytope {
 public:
  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Intrinsic dimension (dimension of the affine span).
  std::size_t dim() const { return span_.dim(); }
  bool full_dimensional() const { return dim() == ambient_dim_; }

  /// Extreme points, lexicographically sorted, duplicate-free.
  const std::vector<Point>& vertices() const { return vertices_; }
  /// Facets relative to the affine span, in ambient coordinates with
  /// normals parallel to the span. Empty for dimension 0.
  const std::vector<Halfspace>& facets() const { return facets_; }
  /// Vertex indices on each facet, ascending.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return facet_vertices_; }
  const AffineFlat& affine_span() const { return span_; }

  /// Facets plus, for lower-dimensional polytopes, a pair of opposite
  /// halfspaces per equation of the affine span.
  HPolytope h_form() const;

  bool contains(const Point& x) const;
  /// In the relative interior.
  bool relative_interior_contains(const Point& x) const;
  /// Facets (relative to the span) tight at x.
  std::vector<std::size_t> active_facets(const Point& x) const;

  /// Vertex index pairs (i < j) spanning an edge.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  /// Every nonempty face, including the polytope itself, ordered by
  /// dimension then vertex set.
  std::vector<FaceRef> faces() const;
  /// The smallest face containing x (x must lie in the polytope).
  FaceRef minimal_face(const Point& x) const;
  std::vector<Point> face_points(const FaceRef& face) const;

 private:
  friend VPolytope convex_hull(std::span<const Point> points);

  VPolytope(std::size_t ambient_dim, AffineFlat span) : ambient_dim_(ambient_dim), span_(std::move(span)) {}

  std::size_t ambient_dim_;
  AffineFlat span_;
  std::vector<Point> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
  std::vector<Vector> span_equations_;
};

/// Incremental (beneath-beyond) hull with exact orientation tests. Works in
/// the affine span of the input, so lower-dimensional input yields the hull
/// inside its span. Throws on empty input.
VPolytope convex_hull(std::span<const Point> points);

/// All basic feasible points of the system, hulled. Returns nullopt for an
/// empty intersection; throws UnboundedPolyhedron when unbounded.
std::optional<VPolytope> vertices_of(const HPolytope& h);

/// Exact intersection with a flat, reported in the flat's chart.
struct Section {
  AffineFlat flat;
  /// Section polytope in chart coordinates; nullopt when empty.
  std::optional<VPolytope> chart;
  /// Ambient positions of the chart vertices, same order.
  std::vector<Point> ambient_vertices;

  bool empty() const { return !chart.has_value(); }
  /// The section has the flat's full dimension (the flat meets the interior
  /// of a full-dimensional body).
  bool full_dimensional() const { return chart && chart->dim() == flat.dim(); }
};

/// Restricts every halfspace to the flat's chart, then enumerates vertices.
Section section(const HPolytope& body, const AffineFlat& flat);
/// Same result computed from the vertex form: successive hyperplane cuts,
/// each keeping vertices on the cut plus edge crossings.
Section section(const VPolytope& body, const AffineFlat& flat);

/// Orthogonal projection onto a subspace through the origin, in its chart.
VPolytope project(const VPolytope& body, const AffineFlat& subspace);

/// Whether x is an extreme point, decided by facet-incidence rank. Throws
/// PreconditionFailed when x is outside the body.
bool is_extreme(const Point& x, const VPolytope& body);

/// A line (k=1 flat) supports the body when it meets it and the whole
/// intersection lies on the boundary.
bool supporting_line_test(const AffineFlat& line, const HPolytope& body);

/// conv{Q, [p q]} once the open segment (p q) is checked to meet Q in
/// exactly one point. Q must have dimension 1..d-2.
VPolytope diamond_hull(const VPolytope& q_face, const Point& p, const Point& q);

/// The point where (p q) crosses Q, if exactly one.
std::optional<Point> diamond_crossing(const VPolytope& q_face, const Point& p, const Point& q);

/// Whether the diamond lies in the boundary of K, i.e. all its vertices share
/// one facet of K. Throws PreconditionFailed when the diamond is not in K.
bool check_diamond_boundary(const HPolytope& body, const VPolytope& diamond);

}  // namespace polysect
