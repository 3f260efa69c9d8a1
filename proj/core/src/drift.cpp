#include "polysect/drift.hpp"

#include <cmath>
#include <numbers>

#include "polysect/error.hpp"

namespace polysect {
namespace {

constexpr double half_pi = std::numbers::pi / 2;

/// Accurate for small and near-straight angles, unlike acos of a cosine.
double angle_between(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  const Eigen::VectorXd a = u.normalized();
  const Eigen::VectorXd b = v.normalized();
  return 2.0 * std::atan2((a - b).norm(), (a + b).norm());
}

/// cos and sin of xi, exact at the right angle.
std::pair<double, double> xi_cos_sin(double xi) {
  if (std::abs(xi - half_pi) <= std::numeric_limits<double>::epsilon() * half_pi) return {0.0, 1.0};
  return {std::cos(xi), std::sin(xi)};
}

}  // namespace

void validate(const DriftConfig& cfg) {
  if (!(cfg.gamma >= 0 && cfg.gamma < half_pi)) throw PreconditionFailed("gamma must lie in [0, pi/2)");
  if (cfg.phi == 0) throw PreconditionFailed("degenerate configuration: phi = 0");
  if (!(cfg.phi > 0 && cfg.phi <= half_pi)) throw PreconditionFailed("phi must lie in (0, pi/2]");
  if (!(cfg.xi >= 0 && cfg.xi <= half_pi)) throw PreconditionFailed("xi must lie in [0, pi/2]");
  if (!(cfg.eps_length > 0) || !std::isfinite(cfg.eps_length)) throw PreconditionFailed("length scale must be positive");
  if (!(cfg.eps_angle > 0 && cfg.eps_angle < half_pi)) throw PreconditionFailed("angle scale must lie in (0, pi/2)");
}

DriftLengths drift_lengths(const DriftConfig& cfg) {
  validate(cfg);
  const auto [cx, sx] = xi_cos_sin(cfg.xi);
  DriftLengths len;
  len.bq = cfg.eps_length * std::sin(cfg.eps_angle);
  len.bp = cfg.eps_length * std::cos(cfg.eps_angle);
  len.ab = len.bp * std::tan(cfg.gamma);
  len.tq = len.bq * cx;
  len.at = len.tq / std::tan(cfg.phi);
  len.bt = len.bq * sx;
  return len;
}

DriftEvaluation drift_inequality_eval(const DriftConfig& cfg, double rel_tol) {
  validate(cfg);
  const auto [cx, sx] = xi_cos_sin(cfg.xi);
  DriftEvaluation out;
  out.lhs = std::tan(cfg.gamma);
  const double cot_phi = cfg.phi == half_pi ? 0.0 : 1.0 / std::tan(cfg.phi);
  out.rhs = std::tan(cfg.eps_angle) * (cx * cot_phi + sx);
  if (!(rel_tol >= 0)) throw PreconditionFailed("tolerance must be nonnegative");
  out.holds = out.lhs <= out.rhs + rel_tol * std::max(1.0, out.rhs);
  out.lengths = drift_lengths(cfg);
  const double chain = out.lengths.at + out.lengths.bt;
  out.chain_holds = out.lengths.ab <= chain + rel_tol * std::max(1.0, chain);
  return out;
}

std::optional<RealizedDrift> realize_drift(const VPolytope& body, std::size_t p_index, Rng& rng) {
  if (p_index >= body.vertices().size()) throw PreconditionFailed("vertex index out of range");
  std::vector<std::size_t> nbrs;
  for (const auto& [i, j] : body.edges()) {
    if (i == p_index) nbrs.push_back(j);
    if (j == p_index) nbrs.push_back(i);
  }
  if (nbrs.size() < 2) return std::nullopt;
  const std::size_t qi = nbrs[rng.index(nbrs.size())];
  std::size_t ri = qi;
  while (ri == qi) ri = nbrs[rng.index(nbrs.size())];

  RealizedDrift r;
  r.p = to_eigen(body.vertices()[p_index]);
  r.q = to_eigen(body.vertices()[qi]);
  r.qn = r.p + (to_eigen(body.vertices()[ri]) - r.p) / 8.0;
  const Eigen::VectorXd uq = (r.q - r.p).normalized();
  const Eigen::VectorXd un = (r.qn - r.p).normalized();
  r.l = (uq + un + 0.3 * rng.unit_vector(static_cast<std::size_t>(r.p.size()))).normalized();
  const double lq = r.l.dot(r.q - r.p);
  const double ln = r.l.dot(r.qn - r.p);
  if (!(lq > 1e-9 && ln > 1e-9)) return std::nullopt;

  const Eigen::VectorXd nu_raw = (r.q - r.p) - lq * r.l;
  if (nu_raw.norm() < 1e-9) return std::nullopt;
  const Eigen::VectorXd nu = nu_raw.normalized();

  r.b = r.p + ln * r.l;
  r.s = r.qn - nu * nu.dot(r.qn - r.p);
  r.t = r.b + nu * nu.dot(r.qn - r.p);
  r.a = r.p + (ln / lq) * (r.q - r.p);
  if ((r.qn - r.b).norm() < 1e-12 || (r.qn - r.t).norm() < 1e-12 || (r.a - r.t).norm() < 1e-12) return std::nullopt;

  r.config.eps_length = (r.qn - r.p).norm();
  r.config.eps_angle = angle_between(r.qn - r.p, r.l);
  r.config.gamma = angle_between(r.a - r.p, r.b - r.p);
  r.config.phi = angle_between(r.qn - r.a, r.t - r.a);
  r.config.xi = (r.s - r.b).norm() < 1e-15 ? half_pi : angle_between(r.qn - r.b, r.s - r.b);
  if (!(r.config.phi > 0 && r.config.phi <= half_pi) || !(r.config.eps_angle > 0)) return std::nullopt;

  r.measured.bq = (r.b - r.qn).norm();
  r.measured.bp = (r.b - r.p).norm();
  r.measured.ab = (r.a - r.b).norm();
  r.measured.tq = (r.t - r.qn).norm();
  r.measured.at = (r.a - r.t).norm();
  r.measured.bt = (r.b - r.t).norm();

  r.evaluation = drift_inequality_eval(r.config, realized_tolerance);
  r.evaluation.realized = true;
  const auto& tab = r.evaluation.lengths;
  const auto& m = r.measured;
  for (double dev : {tab.bq - m.bq, tab.bp - m.bp, tab.ab - m.ab, tab.tq - m.tq, tab.at - m.at, tab.bt - m.bt}) {
    r.identity_residual = std::max(r.identity_residual, std::abs(dev));
  }
  r.measured_chain_holds = m.ab <= m.at + m.bt + realized_tolerance * std::max(1.0, m.at + m.bt);
  return r;
}

}  // namespace polysect
