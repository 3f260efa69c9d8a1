#include "polysect/section_sampling.hpp"

#include <cmath>
#include <numbers>

#include "polysect/error.hpp"

namespace polysect {
namespace {

constexpr int bisection_steps = 60;

/// Centre of the boundary band along origin + t * dir: the last parameter
/// judged inside and the first judged outside, each found by doubling then
/// bisection, averaged so a symmetric tolerance band adds no bias.
double boundary_parameter(const BodyOracle& body, const Eigen::VectorXd& origin, const Eigen::VectorXd& dir) {
  double lo = 0;
  double hi = 1;
  int guard = 0;
  while (body.membership(origin + hi * dir) != Membership::outside) {
    lo = hi;
    hi *= 2;
    if (++guard > 200) throw PreconditionFailed("body appears unbounded along a sampling ray");
  }
  auto bisect = [&](double a, double b, Membership keep) {
    for (int i = 0; i < bisection_steps; ++i) {
      const double mid = 0.5 * (a + b);
      const Membership m = body.membership(origin + mid * dir);
      if (keep == Membership::inside ? m == Membership::inside : m != Membership::outside) {
        a = mid;
      } else {
        b = mid;
      }
    }
    return 0.5 * (a + b);
  };
  const double last_inside = bisect(0, hi, Membership::inside);
  const double first_outside = bisect(last_inside, hi, Membership::boundary);
  return 0.5 * (last_inside + first_outside);
}

double extent(const BodyOracle& body, const Eigen::VectorXd& from, const Eigen::VectorXd& frame_dir) {
  return std::max(body.support(frame_dir).value - frame_dir.dot(from), body.support(-frame_dir).value + frame_dir.dot(from));
}

}  // namespace

std::pair<Eigen::VectorXd, Eigen::VectorXd> orthonormal_frame(const AffineFlat& flat) {
  if (flat.dim() != 2) throw PreconditionFailed("boundary sampling needs a 2-dim flat");
  Eigen::VectorXd e1 = to_eigen(flat.basis()[0]);
  Eigen::VectorXd e2 = to_eigen(flat.basis()[1]);
  e1.normalize();
  e2 -= e1 * e1.dot(e2);
  e2.normalize();
  return {e1, e2};
}

std::optional<Eigen::VectorXd> find_interior_point(const BodyOracle& body, const AffineFlat& flat) {
  if (flat.ambient_dim() != body.dim()) throw DimensionMismatch("flat and body dimensions differ");
  const Eigen::VectorXd centre = to_eigen(flat.project(exact_vec(body.interior_point())));
  if (body.membership(centre) == Membership::inside) return centre;

  std::vector<Eigen::VectorXd> frame;
  for (const auto& b : flat.basis()) frame.push_back(to_eigen(b).normalized());
  if (frame.empty()) return std::nullopt;
  double reach = 0;
  for (const auto& e : frame) reach = std::max(reach, extent(body, centre, e));
  if (!(reach > 0)) return std::nullopt;

  const std::size_t k = frame.size();
  for (int n : {33, 129}) {
    if (k > 2 && n > 33) break;
    std::vector<int> idx(k, 0);
    while (true) {
      Eigen::VectorXd x = centre;
      for (std::size_t i = 0; i < k; ++i) x += frame[i] * (reach * (2.0 * idx[i] / (n - 1) - 1.0));
      if (body.membership(x) == Membership::inside) return x;
      std::size_t i = 0;
      while (i < k && ++idx[i] == n) idx[i++] = 0;
      if (i == k) break;
    }
  }
  return std::nullopt;
}

SectionSample sample_section_boundary(const BodyOracle& body, const AffineFlat& flat, std::size_t n, double phase) {
  if (n == 0) throw PreconditionFailed("boundary sample needs at least one point");
  auto [e1, e2] = orthonormal_frame(flat);
  auto start = find_interior_point(body, flat);
  if (!start) throw FlatMissesInterior("flat misses the interior of the body");

  // Re-centre on chord midpoints so the polar angles spread evenly.
  Eigen::VectorXd origin = *start;
  for (const auto* e : {&e1, &e2}) {
    auto chord = body.clip_line(origin, *e);
    if (!chord || !std::isfinite(chord->lo) || !std::isfinite(chord->hi)) continue;
    Eigen::VectorXd mid = origin + 0.5 * (chord->lo + chord->hi) * *e;
    if (body.membership(mid) == Membership::inside) origin = mid;
  }

  SectionSample out{flat, origin, e1, e2, {}, {}, {}};
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = phase + 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Eigen::VectorXd dir = c * e1 + s * e2;
    const double t = boundary_parameter(body, origin, dir);
    out.points.emplace_back(t * c, t * s);
    out.ambient.push_back(origin + t * dir);
    out.angles.push_back(angle);
  }
  return out;
}

}  // namespace polysect
