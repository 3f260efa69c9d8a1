#pragma once

#include <set>
#include <vector>

#include "polysect/polytope.hpp"
#include "polysect/random.hpp"

namespace polysect::testing {

/// Points of a planar set that are not in the convex hull of the others,
/// decided by checking every triangle and segment of the other points.
std::set<Vec> planar_extreme_points(const std::vector<Vec>& points);

/// Primitive directions of the rays z -> v that are not nonnegative
/// combinations of the other rays (all pairs and triples tried).
std::set<Vec> brute_force_extreme_rays(const Point& z, const std::vector<Point>& vertices);

/// Every edge-plane crossing of a 3-polytope's edge list against n . x = c.
std::set<Vec> edge_plane_crossings(const VPolytope& body, const Vec& normal, const Scalar& offset);

/// Integer points in [-range, range]^dim, at least dim + 1 of them and
/// affinely spanning; the hull is full-dimensional.
std::vector<Point> random_lattice_points(std::size_t dim, std::size_t count, int range, Rng& rng);

VPolytope cube(std::size_t dim = 3);
VPolytope octahedron();
VPolytope simplex3();

std::set<Vec> as_set(const std::vector<Vec>& v);

/// n / d in lowest terms (the two-argument mpq_class constructor does not
/// canonicalize).
Scalar frac(long n, long d);

}  // namespace polysect::testing
