#include "oracles.hpp"

#include "polysect/linalg.hpp"

namespace polysect::testing {
namespace {

Scalar cross(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool on_segment(const Vec& p, const Vec& a, const Vec& b) {
  if (cross(a, b, p) != 0) return false;
  return dot(p - a, p - b) <= 0;
}

bool in_triangle(const Vec& p, const Vec& a, const Vec& b, const Vec& c) {
  const int s1 = sign(cross(a, b, p));
  const int s2 = sign(cross(b, c, p));
  const int s3 = sign(cross(c, a, p));
  const bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
  const bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
  return !(has_neg && has_pos);
}

bool nonnegative_combination(const Vec& r, const std::vector<Vec>& gens) {
  const std::size_t d = r.dim();
  Matrix m(d, std::vector<Scalar>(gens.size()));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) m[i][j] = gens[j][i];
  }
  const auto sol = solve_linear(m, r.coords());
  if (sol.status != SolveStatus::unique) return false;
  for (const auto& v : sol.values) {
    if (sign(v) < 0) return false;
  }
  return true;
}

}  // namespace

std::set<Vec> planar_extreme_points(const std::vector<Vec>& points) {
  const std::set<Vec> unique(points.begin(), points.end());
  const std::vector<Vec> pts(unique.begin(), unique.end());
  std::set<Vec> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool covered = false;
    for (std::size_t a = 0; a < pts.size() && !covered; ++a) {
      if (a == i) continue;
      for (std::size_t b = a + 1; b < pts.size() && !covered; ++b) {
        if (b == i) continue;
        if (on_segment(pts[i], pts[a], pts[b])) covered = true;
        for (std::size_t c = b + 1; c < pts.size() && !covered; ++c) {
          if (c == i) continue;
          if (cross(pts[a], pts[b], pts[c]) != 0 && in_triangle(pts[i], pts[a], pts[b], pts[c])) covered = true;
        }
      }
    }
    if (!covered) out.insert(pts[i]);
  }
  return out;
}

std::set<Vec> brute_force_extreme_rays(const Point& z, const std::vector<Point>& vertices) {
  std::set<Vec> dirs;
  for (const auto& v : vertices) dirs.insert(primitive_direction(v - z));
  const std::vector<Vec> rays(dirs.begin(), dirs.end());
  std::set<Vec> out;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    bool covered = false;
    for (std::size_t a = 0; a < rays.size() && !covered; ++a) {
      if (a == i) continue;
      for (std::size_t b = a + 1; b < rays.size() && !covered; ++b) {
        if (b == i) continue;
        if (nonnegative_combination(rays[i], {rays[a], rays[b]})) covered = true;
        for (std::size_t c = b + 1; c < rays.size() && !covered; ++c) {
          if (c == i) continue;
          if (nonnegative_combination(rays[i], {rays[a], rays[b], rays[c]})) covered = true;
        }
      }
    }
    if (!covered) out.insert(rays[i]);
  }
  return out;
}

std::set<Vec> edge_plane_crossings(const VPolytope& body, const Vec& normal, const Scalar& offset) {
  std::set<Vec> out;
  const auto& v = body.vertices();
  for (const auto& [i, j] : body.edges()) {
    const Scalar fi = dot(normal, v[i]) - offset;
    const Scalar fj = dot(normal, v[j]) - offset;
    if (fi == 0) out.insert(v[i]);
    if (fj == 0) out.insert(v[j]);
    if (sign(fi) * sign(fj) < 0) {
      const Scalar t = fi / (fi - fj);
      out.insert(v[i] + (v[j] - v[i]) * t);
    }
  }
  return out;
}

std::vector<Point> random_lattice_points(std::size_t dim, std::size_t count, int range, Rng& rng) {
  for (;;) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < count; ++i) {
      Point p(dim);
      for (std::size_t k = 0; k < dim; ++k) p[k] = static_cast<long>(rng.index(2 * range + 1)) - range;
      pts.push_back(p);
    }
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    if (rank(diffs) == dim) return pts;
  }
}

VPolytope cube(std::size_t dim) {
  std::vector<Point> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    Point p(dim);
    for (std::size_t k = 0; k < dim; ++k) p[k] = (mask >> k) & 1 ? 1 : -1;
    pts.push_back(p);
  }
  return convex_hull(pts);
}

VPolytope octahedron() {
  std::vector<Point> pts{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  return convex_hull(pts);
}

VPolytope simplex3() {
  std::vector<Point> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  return convex_hull(pts);
}

std::set<Vec> as_set(const std::vector<Vec>& v) { return {v.begin(), v.end()}; }

Scalar frac(long n, long d) {
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

}  // namespace polysect::testing
