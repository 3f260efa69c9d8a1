#include "polysect/cone.hpp"

#include <algorithm>
#include <map>

#include "polysect/error.hpp"
#include "polysect/linalg.hpp"

namespace polysect {

PolyCone PolyCone::from_generators(Point apex, std::span<const Vector> directions) {
  const std::size_t d = apex.dim();
  std::vector<Vector> gens;
  for (const auto& v : directions) {
    require_same_dim(apex, v, "cone generator");
    if (!v.is_zero()) gens.push_back(primitive_direction(v));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Halfspace> halfspaces;
  auto add_equality = [&](const Vector& n) {
    const Scalar level = dot(n, apex);
    halfspaces.emplace_back(n, level);
    halfspaces.emplace_back(-n, -level);
  };

  if (gens.empty()) {
    for (std::size_t i = 0; i < d; ++i) add_equality(unit_vector(d, i));
    return PolyCone(std::move(apex), {}, 0, Vector(d), HPolytope(d, std::move(halfspaces)));
  }

  std::vector<Point> with_origin = gens;
  with_origin.push_back(Vector(d));
  const VPolytope hull = convex_hull(with_origin);
  const Point origin(d);
  const auto& hv = hull.vertices();
  if (std::find(hv.begin(), hv.end(), origin) == hv.end()) {
    throw PreconditionFailed("cone is not pointed");
  }

  Vector w(d);
  for (auto f : hull.active_facets(origin)) w -= hull.facets()[f].normal;
  if (hull.dim() == 1) w = gens.front();

  // Rays through the slice { w . x = 1 }; its vertices are the extreme rays.
  std::vector<Point> slice;
  for (const auto& g : gens) slice.push_back(g / dot(w, g));
  const VPolytope cross = convex_hull(slice);
  std::vector<Vector> extreme;
  for (const auto& v : cross.vertices()) extreme.push_back(primitive_direction(v));
  std::sort(extreme.begin(), extreme.end());

  for (const auto& f : cross.facets()) {
    Vector n = f.normal - w * f.offset;
    if (n.is_zero()) continue;
    n = primitive_direction(n);
    halfspaces.emplace_back(n, dot(n, apex));
  }
  if (cross.dim() == 0) halfspaces.emplace_back(-w, -dot(w, apex));
  for (const auto& n : orthogonal_complement(gens, d)) add_equality(n);

  const std::size_t dim = hull.dim();
  return PolyCone(std::move(apex), std::move(extreme), dim, std::move(w), HPolytope(d, std::move(halfspaces)));
}

PolyCone visual_cone(const Point& z, const VPolytope& body) {
  require_same_dim(z, body.vertices().front(), "visual cone apex");
  if (body.contains(z)) throw PreconditionFailed("apex is not strictly outside the body");
  std::vector<Vector> dirs;
  for (const auto& v : body.vertices()) dirs.push_back(v - z);
  return PolyCone::from_generators(z, dirs);
}

std::vector<Vector> ConeSection::ambient_generators() const {
  std::vector<Vector> out;
  for (const auto& g : chart_cone.generators()) out.push_back(flat.point_at(g.coords()) - apex);
  return out;
}

std::optional<ConeSection> cone_section(const PolyCone& cone, const AffineFlat& flat) {
  if (flat.ambient_dim() != cone.ambient_dim()) throw DimensionMismatch("cone section flat dimension");
  if (!flat.contains(cone.apex())) throw PreconditionFailed("flat does not contain the cone apex");
  if (flat.dim() == 0) return std::nullopt;
  const AffineFlat chart = flat.rebased(cone.apex());
  const std::size_t k = chart.dim();

  auto restrict = [&](const Vector& n) {
    Vec r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = dot(n, chart.basis()[i]);
    return r;
  };
  const Vec w = restrict(cone.positive_functional());
  if (w.is_zero()) return std::nullopt;

  std::vector<Halfspace> hs;
  for (const auto& h : cone.halfspace_form().halfspaces()) {
    Vec n = restrict(h.normal);
    if (!n.is_zero()) hs.emplace_back(std::move(n), Scalar(0));
  }
  hs.emplace_back(w, Scalar(1));
  hs.emplace_back(-w, Scalar(-1));
  const auto slice = vertices_of(HPolytope(k, std::move(hs)));
  if (!slice) return std::nullopt;
  return ConeSection{cone.apex(), chart, PolyCone::from_generators(Point(k), slice->vertices())};
}

PolyhedralVerdict is_polyhedral_exact(const PolyCone& cone) { return {true, cone.generators().size()}; }

}  // namespace polysect
