#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "combinations.hpp"
#include "polysect/error.hpp"
#include "polysect/linalg.hpp"
#include "polysect/polytope.hpp"

namespace polysect {

Halfspace::Halfspace(Vector n, Scalar o) : normal(std::move(n)), offset(std::move(o)) {
  if (normal.is_zero()) throw PreconditionFailed("halfspace normal is zero");
}

Halfspace canonical(const Halfspace& h) {
  Vector n = primitive_direction(h.normal);
  // normal = lambda * n with lambda > 0; scale the offset by the same factor.
  std::size_t i = 0;
  while (n[i] == 0) ++i;
  const Scalar lambda = h.normal[i] / n[i];
  return Halfspace(std::move(n), h.offset / lambda);
}

HPolytope::HPolytope(std::size_t ambient_dim, std::vector<Halfspace> halfspaces)
    : ambient_dim_(ambient_dim), halfspaces_(std::move(halfspaces)) {
  for (const auto& h : halfspaces_) {
    if (h.normal.dim() != ambient_dim_) throw DimensionMismatch("halfspace dimension differs from polytope dimension");
  }
}

bool HPolytope::contains(const Point& x) const {
  if (x.dim() != ambient_dim_) throw DimensionMismatch("membership query dimension");
  return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const Halfspace& h) { return h.contains(x); });
}

bool HPolytope::strictly_contains(const Point& x) const {
  if (x.dim() != ambient_dim_) throw DimensionMismatch("membership query dimension");
  return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const Halfspace& h) { return sign(h.slack(x)) > 0; });
}

std::vector<std::size_t> HPolytope::active_set(const Point& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < halfspaces_.size(); ++i) {
    if (halfspaces_[i].tight(x)) out.push_back(i);
  }
  return out;
}

namespace {

struct HullFacet {
  std::vector<std::size_t> verts;
  Vec normal;
  Scalar offset;
  bool alive = true;
};

HullFacet make_facet(std::vector<std::size_t> verts, const std::vector<Vec>& pts, const Vec& interior) {
  const std::size_t k = interior.dim();
  std::vector<Vec> rows;
  rows.reserve(k - 1);
  for (std::size_t i = 1; i < verts.size(); ++i) rows.push_back(pts[verts[i]] - pts[verts[0]]);
  Vec normal = cofactor_normal(rows, k);
  Scalar offset = dot(normal, pts[verts[0]]);
  if (dot(normal, interior) > offset) {
    normal = -normal;
    offset = -offset;
  }
  std::sort(verts.begin(), verts.end());
  return HullFacet{std::move(verts), std::move(normal), std::move(offset), true};
}

/// Beneath-beyond in a k-dimensional chart, points in general (possibly
/// degenerate) position. Returns the surviving simplicial facets.
std::vector<HullFacet> simplicial_hull(const std::vector<Vec>& pts) {
  const std::size_t k = pts.front().dim();

  // Greedy affinely independent start simplex.
  std::vector<std::size_t> simplex{0};
  std::vector<Vec> diffs;
  for (std::size_t i = 1; i < pts.size() && simplex.size() < k + 1; ++i) {
    diffs.push_back(pts[i] - pts[0]);
    if (rank(std::span<const Vec>(diffs)) == diffs.size()) {
      simplex.push_back(i);
    } else {
      diffs.pop_back();
    }
  }
  Vec interior(k);
  for (auto i : simplex) interior += pts[i];
  interior /= Scalar(static_cast<long>(simplex.size()));

  std::vector<HullFacet> facets;
  for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
    std::vector<std::size_t> verts;
    for (std::size_t j = 0; j < simplex.size(); ++j) {
      if (j != drop) verts.push_back(simplex[j]);
    }
    facets.push_back(make_facet(std::move(verts), pts, interior));
  }

  std::vector<bool> in_simplex(pts.size(), false);
  for (auto i : simplex) in_simplex[i] = true;

  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (in_simplex[p]) continue;
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (facets[f].alive && dot(facets[f].normal, pts[p]) > facets[f].offset) visible.push_back(f);
    }
    if (visible.empty()) continue;

    std::map<std::vector<std::size_t>, int> ridge_count;
    for (auto f : visible) {
      const auto& verts = facets[f].verts;
      for (std::size_t drop = 0; drop < verts.size(); ++drop) {
        std::vector<std::size_t> ridge;
        ridge.reserve(verts.size() - 1);
        for (std::size_t j = 0; j < verts.size(); ++j) {
          if (j != drop) ridge.push_back(verts[j]);
        }
        ++ridge_count[ridge];
      }
      facets[f].alive = false;
    }
    for (auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      std::vector<std::size_t> verts = ridge;
      verts.push_back(p);
      facets.push_back(make_facet(std::move(verts), pts, interior));
    }
  }
  std::erase_if(facets, [](const HullFacet& f) { return !f.alive; });
  return facets;
}

Halfspace to_ambient(const Halfspace& chart_h, const AffineFlat& span) {
  Vector n(span.ambient_dim());
  for (std::size_t i = 0; i < span.dim(); ++i) {
    n += span.basis()[i] * (chart_h.normal[i] / norm2(span.basis()[i]));
  }
  Scalar offset = chart_h.offset + dot(n, span.base());
  return canonical(Halfspace(std::move(n), std::move(offset)));
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
  if (a.normal == b.normal) return a.offset < b.offset;
  return a.normal < b.normal;
}

std::size_t affine_dim(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<Vec> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return rank(std::span<const Vec>(diffs));
}

}  // namespace

VPolytope convex_hull(std::span<const Point> input) {
  if (input.empty()) throw PreconditionFailed("convex hull of an empty point set");
  const std::size_t d = input.front().dim();
  std::vector<Point> pts(input.begin(), input.end());
  for (const auto& p : pts) {
    if (p.dim() != d) throw DimensionMismatch("convex hull of mixed-dimension points");
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  AffineFlat span = AffineFlat::through_points(pts);
  VPolytope out(d, span);
  const std::size_t k = span.dim();
  out.span_equations_ = span.normal_space();

  if (k == 0) {
    out.vertices_ = {pts.front()};
    return out;
  }

  std::vector<Vec> chart;
  chart.reserve(pts.size());
  for (const auto& p : pts) chart.emplace_back(span.projected_coordinates(p));

  const auto simplicial = simplicial_hull(chart);

  // Merge coplanar simplices into facets.
  std::vector<Halfspace> chart_facets;
  std::set<std::size_t> used;
  for (const auto& f : simplicial) {
    Halfspace h = canonical(Halfspace(f.normal, f.offset));
    if (std::find(chart_facets.begin(), chart_facets.end(), h) == chart_facets.end()) chart_facets.push_back(h);
    used.insert(f.verts.begin(), f.verts.end());
  }

  // A used point is a vertex iff the facets through it have full rank.
  std::vector<std::size_t> vertex_ids;
  for (auto i : used) {
    std::vector<Vec> normals;
    for (const auto& h : chart_facets) {
      if (h.tight(chart[i])) normals.push_back(h.normal);
    }
    if (rank(std::span<const Vec>(normals)) == k) vertex_ids.push_back(i);
  }
  for (auto i : vertex_ids) out.vertices_.push_back(pts[i]);

  std::vector<std::pair<Halfspace, std::vector<std::size_t>>> facets;
  for (const auto& h : chart_facets) {
    std::vector<std::size_t> on;
    for (std::size_t v = 0; v < vertex_ids.size(); ++v) {
      if (h.tight(chart[vertex_ids[v]])) on.push_back(v);
    }
    facets.emplace_back(to_ambient(h, span), std::move(on));
  }
  std::sort(facets.begin(), facets.end(),
            [](const auto& a, const auto& b) { return halfspace_less(a.first, b.first); });
  for (auto& [h, on] : facets) {
    out.facets_.push_back(std::move(h));
    out.facet_vertices_.push_back(std::move(on));
  }
  return out;
}

HPolytope VPolytope::h_form() const {
  std::vector<Halfspace> hs = facets_;
  for (const auto& e : span_equations_) {
    const Scalar c = dot(e, span_.base());
    hs.push_back(canonical(Halfspace(e, c)));
    hs.push_back(canonical(Halfspace(-e, -c)));
  }
  return HPolytope(ambient_dim_, std::move(hs));
}

bool VPolytope::contains(const Point& x) const {
  if (x.dim() != ambient_dim_) throw DimensionMismatch("membership query dimension");
  if (!span_.contains(x)) return false;
  return std::all_of(facets_.begin(), facets_.end(), [&](const Halfspace& h) { return h.contains(x); });
}

bool VPolytope::relative_interior_contains(const Point& x) const {
  if (x.dim() != ambient_dim_) throw DimensionMismatch("membership query dimension");
  if (!span_.contains(x)) return false;
  return std::all_of(facets_.begin(), facets_.end(), [&](const Halfspace& h) { return sign(h.slack(x)) > 0; });
}

std::vector<std::size_t> VPolytope::active_facets(const Point& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (facets_[i].tight(x)) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> VPolytope::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t k = dim();
  if (k == 0) return out;
  std::vector<std::vector<std::size_t>> incident(vertices_.size());
  for (std::size_t f = 0; f < facet_vertices_.size(); ++f) {
    for (auto v : facet_vertices_[f]) incident[v].push_back(f);
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(incident[i].begin(), incident[i].end(), incident[j].begin(), incident[j].end(),
                            std::back_inserter(common));
      if (common.size() + 1 < k) continue;
      std::vector<Vec> normals;
      for (auto f : common) normals.push_back(facets_[f].normal);
      if (rank(std::span<const Vec>(normals)) == k - 1) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<Point> VPolytope::face_points(const FaceRef& face) const {
  std::vector<Point> out;
  out.reserve(face.vertices.size());
  for (auto v : face.vertices) out.push_back(vertices_[v]);
  return out;
}

std::vector<FaceRef> VPolytope::faces() const {
  std::set<std::vector<std::size_t>> found;
  std::vector<std::size_t> all(vertices_.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  found.insert(all);
  std::vector<std::vector<std::size_t>> frontier(facet_vertices_.begin(), facet_vertices_.end());
  for (const auto& f : frontier) found.insert(f);
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& face : frontier) {
      for (const auto& facet : facet_vertices_) {
        std::vector<std::size_t> meet;
        std::set_intersection(face.begin(), face.end(), facet.begin(), facet.end(), std::back_inserter(meet));
        if (meet.empty()) continue;
        if (found.insert(meet).second) next.push_back(std::move(meet));
      }
    }
    frontier = std::move(next);
  }
  std::vector<FaceRef> out;
  for (const auto& verts : found) {
    FaceRef ref;
    ref.vertices = verts;
    for (std::size_t f = 0; f < facet_vertices_.size(); ++f) {
      const auto& fv = facet_vertices_[f];
      if (std::includes(fv.begin(), fv.end(), verts.begin(), verts.end())) ref.facets.push_back(f);
    }
    ref.dim = affine_dim(face_points(ref));
    out.push_back(std::move(ref));
  }
  std::stable_sort(out.begin(), out.end(), [](const FaceRef& a, const FaceRef& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  return out;
}

FaceRef VPolytope::minimal_face(const Point& x) const {
  if (!contains(x)) throw PreconditionFailed("point is not in the polytope");
  FaceRef ref;
  ref.facets = active_facets(x);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    bool on_all = std::all_of(ref.facets.begin(), ref.facets.end(),
                              [&](std::size_t f) { return facets_[f].tight(vertices_[v]); });
    if (on_all) ref.vertices.push_back(v);
  }
  ref.dim = affine_dim(face_points(ref));
  return ref;
}

std::optional<VPolytope> vertices_of(const HPolytope& h) {
  const std::size_t d = h.ambient_dim();
  const auto& hs = h.halfspaces();
  if (d == 0) throw PreconditionFailed("vertex enumeration in dimension 0");

  Matrix normals;
  for (const auto& hsp : hs) normals.push_back(hsp.normal.coords());
  const std::size_t r = normals.empty() ? 0 : rank(normals);

  auto feasible = [&](const Vec& x) {
    return std::all_of(hs.begin(), hs.end(), [&](const Halfspace& s) { return s.contains(x); });
  };

  if (r < d) {
    // Nonempty implies a lineality direction, hence unbounded. Decide
    // emptiness inside the row space, where the system is pointed.
    std::vector<Vec> rows;
    for (const auto& hsp : hs) rows.push_back(hsp.normal);
    const auto basis = orthogonalize(rows);
    bool nonempty = basis.empty();
    if (basis.empty()) {
      nonempty = std::all_of(hs.begin(), hs.end(), [](const Halfspace& s) { return sign(s.offset) >= 0; });
    }
    detail::for_each_combination(hs.size(), basis.size(), [&](std::span<const std::size_t> idx) {
      Matrix m;
      std::vector<Scalar> rhs;
      for (auto i : idx) {
        std::vector<Scalar> row;
        for (const auto& b : basis) row.push_back(dot(hs[i].normal, b));
        m.push_back(std::move(row));
        rhs.push_back(hs[i].offset);
      }
      auto sol = solve_linear(m, rhs);
      if (sol.status != SolveStatus::unique) return true;
      Vec x(d);
      for (std::size_t j = 0; j < basis.size(); ++j) x += basis[j] * sol.values[j];
      if (feasible(x)) {
        nonempty = true;
        return false;
      }
      return true;
    });
    if (nonempty) throw UnboundedPolyhedron("halfspace system is unbounded");
    return std::nullopt;
  }

  std::set<Vec> points;
  detail::for_each_combination(hs.size(), d, [&](std::span<const std::size_t> idx) {
    Matrix m;
    std::vector<Scalar> rhs;
    for (auto i : idx) {
      m.push_back(hs[i].normal.coords());
      rhs.push_back(hs[i].offset);
    }
    auto sol = solve_linear(m, rhs);
    if (sol.status != SolveStatus::unique) return true;
    Vec x(std::move(sol.values));
    if (!points.contains(x) && feasible(x)) points.insert(std::move(x));
    return true;
  });
  if (points.empty()) return std::nullopt;

  // Pointed and nonempty: bounded iff the recession cone is {0}. Its
  // extreme rays would be cut out by d-1 independent tight constraints.
  bool unbounded = false;
  detail::for_each_combination(hs.size(), d - 1, [&](std::span<const std::size_t> idx) {
    Matrix m;
    for (auto i : idx) m.push_back(hs[i].normal.coords());
    const auto null = nullspace(m, d);
    if (null.size() != 1) return true;
    for (const Vec& ray : {null[0], Vec(-null[0])}) {
      bool recedes = std::all_of(hs.begin(), hs.end(), [&](const Halfspace& s) { return sign(dot(s.normal, ray)) <= 0; });
      if (recedes) {
        unbounded = true;
        return false;
      }
    }
    return true;
  });
  if (unbounded) throw UnboundedPolyhedron("halfspace system is unbounded");

  std::vector<Point> pts(points.begin(), points.end());
  return convex_hull(pts);
}

}  // namespace polysect
