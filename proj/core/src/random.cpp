#include "polysect/random.hpp"

#include <cmath>
#include <numbers>

#include "polysect/error.hpp"

namespace polysect {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u = 0;
  while (u == 0) u = uniform();
  const double v = uniform();
  const double r = std::sqrt(-2.0 * std::log(u));
  spare_ = r * std::sin(2.0 * std::numbers::pi * v);
  has_spare_ = true;
  return r * std::cos(2.0 * std::numbers::pi * v);
}

Eigen::VectorXd Rng::gaussian(std::size_t dim) {
  Eigen::VectorXd v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[static_cast<Eigen::Index>(i)] = normal();
  return v;
}

Eigen::VectorXd Rng::unit_vector(std::size_t dim) {
  while (true) {
    Eigen::VectorXd v = gaussian(dim);
    const double len = v.norm();
    if (len > 1e-6) return v / len;
  }
}

std::vector<Eigen::VectorXd> random_orthonormal_frame(std::size_t dim, std::size_t k, Rng& rng) {
  if (k > dim) throw PreconditionFailed("frame larger than the ambient dimension");
  std::vector<Eigen::VectorXd> frame;
  while (frame.size() < k) {
    Eigen::VectorXd v = rng.gaussian(dim);
    for (const auto& e : frame) v -= e * e.dot(v);
    const double len = v.norm();
    if (len > 1e-6) frame.push_back(v / len);
  }
  return frame;
}

VPolytope random_polytope(std::size_t dim, std::size_t count, Rng& rng, unsigned bits) {
  if (count < dim + 1) throw PreconditionFailed("random polytope needs at least dim + 1 points");
  const Point origin(dim);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < count; ++i) pts.push_back(rationalize(rng.unit_vector(dim) * rng.uniform(0.6, 1.0), bits));
    VPolytope p = convex_hull(pts);
    if (p.full_dimensional() && p.relative_interior_contains(origin)) return p;
  }
  throw Error("could not draw a random polytope around the origin");
}

Vector random_direction(std::size_t dim, Rng& rng, unsigned bits) {
  while (true) {
    Vector v = rationalize(rng.unit_vector(dim), bits);
    if (!v.is_zero()) return v;
  }
}

}  // namespace polysect
