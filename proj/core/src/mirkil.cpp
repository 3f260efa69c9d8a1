#include "polysect/mirkil.hpp"

#include <cmath>
#include <numbers>

#include "polysect/error.hpp"
#include "polysect/random.hpp"

namespace polysect {
namespace {

constexpr int bisection_steps = 60;

/// Direction v with h_K(v) < v . z, by Gilbert's distance iteration.
Eigen::VectorXd separating_direction(const BodyOracle& body, const Eigen::VectorXd& z) {
  Eigen::VectorXd x = body.interior_point();
  for (int it = 0; it < 1000; ++it) {
    const Eigen::VectorXd v = z - x;
    const double len = v.norm();
    if (len == 0) break;
    const auto s = body.support(v);
    if (s.value < v.dot(z) - 1e-12 * len) return v / len;
    const Eigen::VectorXd seg = s.point - x;
    const double seg2 = seg.squaredNorm();
    if (seg2 == 0) break;
    const double t = std::clamp(seg.dot(z - x) / seg2, 0.0, 1.0);
    x += t * seg;
  }
  throw PreconditionFailed("apex cannot be separated from the body");
}

/// Largest t with base + t * dir in the cone, for a bounded ray.
double cone_boundary(const ConeOracle& cone, const Eigen::VectorXd& base, const Eigen::VectorXd& dir) {
  double lo = 0;
  double hi = 1;
  int guard = 0;
  while (cone.contains(base + hi * dir)) {
    lo = hi;
    hi *= 2;
    if (++guard > 200) throw Error("cone cross-section is unbounded");
  }
  for (int i = 0; i < bisection_steps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (cone.contains(base + mid * dir)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<Eigen::VectorXd> sample_frame(const ConeOracle& cone, Rng& rng) {
  const std::size_t d = cone.dim();
  std::vector<Eigen::VectorXd> frame{cone.interior_direction().normalized()};
  while (frame.size() < 3) {
    Eigen::VectorXd v = rng.gaussian(d);
    for (const auto& e : frame) v -= e * e.dot(v);
    const double len = v.norm();
    if (len > 1e-6) frame.push_back(v / len);
  }
  return frame;
}

}  // namespace

VisualConeOracle::VisualConeOracle(BodyPtr body, Eigen::VectorXd apex) : body_(std::move(body)), apex_(std::move(apex)) {
  if (static_cast<std::size_t>(apex_.size()) != body_->dim()) throw DimensionMismatch("cone apex dimension");
  if (body_->membership(apex_) != Membership::outside) throw PreconditionFailed("apex is not outside the body");
  inward_ = (body_->interior_point() - apex_).normalized();
  functional_ = -separating_direction(*body_, apex_);
  if (body_->exact()) exact_ = visual_cone(exact_vec(apex_), *body_->polytope());
}

bool VisualConeOracle::contains(const Eigen::VectorXd& direction) const {
  const auto hit = body_->clip_line(apex_, direction);
  return hit && hit->hi > 0 && hit->hi >= hit->lo;
}

PolyConeOracle::PolyConeOracle(PolyCone cone) : cone_(std::move(cone)) {
  if (cone_.dim() != cone_.ambient_dim()) throw PreconditionFailed("oracle cone must be full-dimensional");
}

bool PolyConeOracle::contains(const Eigen::VectorXd& direction) const {
  return cone_.contains_direction(exact_vec(direction));
}

Eigen::VectorXd PolyConeOracle::interior_direction() const {
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim()));
  for (const auto& g : cone_.generators()) sum += to_eigen(g).normalized();
  return sum.normalized();
}

std::vector<Eigen::Vector2d> sample_cone_cross_section(const ConeOracle& cone, const std::vector<Eigen::VectorXd>& frame,
                                                       std::size_t n, double phase) {
  if (frame.size() != 3) throw PreconditionFailed("cone cross-section needs a 3-dim frame");
  const Eigen::VectorXd w = cone.positive_functional();
  // w restricted to the subspace, in frame coordinates.
  Eigen::Vector3d wl(w.dot(frame[0]), w.dot(frame[1]), w.dot(frame[2]));
  if (wl.norm() == 0) throw Error("positive functional vanishes on the sampled subspace");
  const Eigen::VectorXd m = cone.interior_direction();
  Eigen::Vector3d ml(m.dot(frame[0]), m.dot(frame[1]), m.dot(frame[2]));
  const double wm = wl.dot(ml);
  if (!(wm > 0)) throw Error("interior direction outside the sampled subspace");
  const Eigen::Vector3d y0 = ml / wm;

  // Orthonormal basis of the plane direction wl^perp inside the subspace.
  Eigen::Vector3d a = wl.unitOrthogonal();
  Eigen::Vector3d b = wl.normalized().cross(a);
  auto lift = [&](const Eigen::Vector3d& c) {
    return Eigen::VectorXd(c[0] * frame[0] + c[1] * frame[1] + c[2] * frame[2]);
  };
  const Eigen::VectorXd base = lift(y0);
  const Eigen::VectorXd fa = lift(a);
  const Eigen::VectorXd fb = lift(b);

  std::vector<Eigen::Vector2d> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = phase + 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double t = cone_boundary(cone, base, c * fa + s * fb);
    out.emplace_back(t * c, t * s);
  }
  return out;
}

MirkilResult mirkil_scan(const ConeOracle& cone, const MirkilOptions& options) {
  if (options.points < 8) throw PreconditionFailed("cone scan needs at least 8 boundary points per section");
  if (const PolyCone* exact = cone.exact_cone()) return mirkil_scan(*exact, options);
  const std::size_t d = cone.dim();
  if (d < 3) throw PreconditionFailed("cone scan needs dimension at least 3");

  MirkilResult out;
  out.budget = options.samples;
  out.zero_budget = options.samples == 0;
  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) {
    MirkilWitness trial;
    trial.sample_index = i;
    trial.frame = sample_frame(cone, rng);
    trial.phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    trial.cross_section = sample_cone_cross_section(cone, trial.frame, options.points, trial.phase);
    trial.detection = polygonality_detect(trial.cross_section, options.tau);
    out.samples_used = i + 1;
    if (!trial.detection.polygon) {
      out.consistent = false;
      out.witness = std::move(trial);
      break;
    }
  }
  return out;
}

MirkilResult mirkil_scan(const PolyCone& cone, const MirkilOptions& options) {
  const std::size_t d = cone.ambient_dim();
  if (d < 3) throw PreconditionFailed("cone scan needs dimension at least 3");
  MirkilResult out;
  out.exact = true;
  out.budget = options.samples;
  out.zero_budget = options.samples == 0;
  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) {
    std::vector<Vector> dirs;
    if (d == 3) {
      // A plane through the apex with a random normal.
      const Vector normal = random_direction(d, rng);
      const auto flat = AffineFlat::hyperplane(normal, dot(normal, cone.apex()));
      dirs = flat.basis();
    } else {
      for (const auto& e : random_orthonormal_frame(d, 3, rng)) dirs.push_back(rationalize(e, 20));
    }
    const auto flat = AffineFlat::spanned_by(cone.apex(), dirs);
    const auto sec = cone_section(cone, flat);
    out.section_rays.push_back(sec ? is_polyhedral_exact(sec->chart_cone).extreme_rays : 0);
    out.samples_used = i + 1;
  }
  return out;
}

bool reverify_cone_witness(const ConeOracle& cone, const MirkilWitness& witness, std::size_t points, double tau) {
  const auto pts = sample_cone_cross_section(cone, witness.frame, points, witness.phase);
  return !polygonality_detect(pts, tau).polygon;
}

}  // namespace polysect
