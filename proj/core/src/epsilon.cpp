#include "polysect/epsilon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "polysect/error.hpp"
#include "polysect/random.hpp"

namespace polysect {

FlatFamily FlatFamily::random(std::size_t dim, std::size_t count, std::uint64_t seed) {
  FlatFamily family;
  for (std::size_t i = 0; i < dim; ++i) family.normals.push_back(unit_vector(dim, i));
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) family.normals.push_back(random_direction(dim, rng));
  return family;
}

double angle_at(const Point& p, const Point& y, const Point& q) {
  const Eigen::VectorXd u = to_eigen(y - p).normalized();
  const Eigen::VectorXd v = to_eigen(q - p).normalized();
  return 2.0 * std::atan2((u - v).norm(), (u + v).norm());
}

EpsilonCert epsilon_certificate(const VPolytope& body, const Point& p, const Point& q, const FlatFamily& family) {
  if (!body.full_dimensional()) throw PreconditionFailed("certificate needs a full-dimensional polytope");
  require_same_dim(p, q, "certificate points");
  require_same_dim(p, body.vertices().front(), "certificate points");
  if (p == q) throw PreconditionFailed("p and q must be distinct");
  if (!body.contains(p) || !body.contains(q)) throw PreconditionFailed("p and q must lie in the body");

  EpsilonCert cert;
  cert.p = p;
  cert.q = q;
  cert.x = (p + q) / Scalar(2);
  cert.interior = centroid(body.vertices());

  bool common_facet = false;
  for (const auto& f : body.facets()) {
    if (f.tight(p) && f.tight(q)) {
      common_facet = true;
      break;
    }
  }

  if (!common_facet) {
    // The midpoint is interior; the largest ball around it touches the
    // nearest facet and is kept away from p.
    cert.kind = EpsilonCase::interior_crossing;
    double dist_boundary = std::numeric_limits<double>::infinity();
    for (const auto& f : body.facets()) {
      dist_boundary = std::min(dist_boundary, to_double(f.slack(cert.x)) / std::sqrt(to_double(norm2(f.normal))));
    }
    cert.distance_px = std::sqrt(to_double(norm2(p - cert.x)));
    cert.radius = dist_boundary < cert.distance_px ? dist_boundary : 0.5 * cert.distance_px;
    cert.tangent_term = std::sqrt(cert.distance_px * cert.distance_px - cert.radius * cert.radius);
    cert.angle_term = std::asin(cert.radius / cert.distance_px);
    cert.bound = std::min(cert.tangent_term, cert.angle_term);
    cert.epsilon = 0.5 * cert.bound;
    return cert;
  }

  cert.kind = EpsilonCase::boundary_segment;
  const Vector seg = q - p;
  const std::size_t d = body.ambient_dim();
  std::optional<Section> best;
  Scalar best_score = -1;
  Vector best_normal;
  for (const auto& n : family.normals) {
    const Scalar along = dot(n, seg);
    if (sign(along) == 0) continue;
    const Scalar score = along * along / (norm2(n) * norm2(seg));
    if (score <= best_score) continue;
    auto sec = section(body, AffineFlat::hyperplane(n, dot(n, cert.x)));
    if (sec.chart && sec.chart->dim() == d - 1) {
      best_score = score;
      best = std::move(sec);
      best_normal = n;
    }
  }
  if (!best) throw PreconditionFailed("family coverage: no transversal flat through the midpoint meets the interior");

  cert.flat = best->flat;
  const VPolytope& poly = *best->chart;
  const Point x_chart(*best->flat.coordinates(cert.x));
  std::vector<std::size_t> ids;
  for (auto f : poly.active_facets(x_chart)) {
    for (auto v : poly.facet_vertices()[f]) ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (auto v : ids) {
    Point y = best->ambient_vertices[v];
    if (y == cert.x) continue;
    cert.vertex_angles.push_back(angle_at(p, y, q));
    cert.flat_vertices.push_back(std::move(y));
  }
  cert.delta = std::abs(to_double(dot(best_normal, p - cert.x))) / std::sqrt(to_double(norm2(best_normal)));
  cert.bound = cert.delta;
  for (double a : cert.vertex_angles) cert.bound = std::min(cert.bound, a);
  cert.epsilon = 0.5 * cert.bound;
  return cert;
}

bool no_extreme_in_cone(const VPolytope& body, const Point& p, const Point& q, double eps) {
  if (!(eps > 0)) throw PreconditionFailed("epsilon must be positive");
  if (p == q) throw PreconditionFailed("p and q must be distinct");
  const Scalar eps_q = exact_from_double(eps);
  const Scalar eps2 = eps_q * eps_q;
  const bool any_angle = eps >= std::numbers::pi;
  // Slightly below cos(eps): angle < eps implies cos(angle) > c_lo.
  const Scalar c_lo = any_angle ? Scalar(-1) : exact_from_double(std::cos(eps) - 1e-15);
  const Vector pq = q - p;
  const Scalar pq2 = norm2(pq);

  for (const auto& y : body.vertices()) {
    if (y == p) continue;
    const Vector py = y - p;
    const Scalar py2 = norm2(py);
    if (py2 > eps2) continue;
    bool narrow = true;
    if (!any_angle) {
      const Scalar dp = dot(py, pq);
      const Scalar rhs = c_lo * c_lo * py2 * pq2;
      narrow = sign(c_lo) >= 0 ? (sign(dp) > 0 && dp * dp > rhs) : (sign(dp) >= 0 || dp * dp < rhs);
    }
    if (narrow) return false;
  }
  return true;
}

}  // namespace polysect
