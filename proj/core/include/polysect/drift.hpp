#pragma once

#include <Eigen/Dense>
#include <optional>

#include "polysect/polytope.hpp"
#include "polysect/random.hpp"

namespace polysect {

/// Angles (radians) and scales of the drifting-segment configuration:
/// gamma = angle(a p b), xi = angle(q_n b s), phi = angle(q_n a t),
/// eps_length = ||p - q_n||, eps_angle = angle(q_n p b).
struct DriftConfig {
  double gamma = 0;
  double xi = 0;
  double phi = 0;
  double eps_length = 0;
  double eps_angle = 0;
};

/// Lengths implied by a configuration.
struct DriftLengths {
  double bq = 0;  // ||b - q_n|| = eps_length sin eps_angle
  double bp = 0;  // ||b - p||   = eps_length cos eps_angle
  double ab = 0;  // ||a - b||   = bp tan gamma
  double tq = 0;  // ||t - q_n|| = bq cos xi
  double at = 0;  // ||a - t||   = tq cot phi
  double bt = 0;  // ||b - t||   = bq sin xi
};

struct DriftEvaluation {
  double lhs = 0;  // tan gamma
  double rhs = 0;  // tan eps (cos xi cot phi + sin xi)
  bool holds = false;
  DriftLengths lengths;
  /// ab <= at + bt on the table lengths.
  bool chain_holds = false;
  /// Whether the configuration was measured on actual geometry.
  bool realized = false;
};

/// Throws PreconditionFailed unless 0 <= gamma < pi/2, 0 < phi <= pi/2,
/// 0 <= xi <= pi/2, eps_length > 0 and 0 < eps_angle < pi/2.
void validate(const DriftConfig& cfg);
DriftLengths drift_lengths(const DriftConfig& cfg);
/// `holds` compares lhs <= rhs + rel_tol * max(1, rhs). Synthetic tuples are
/// evaluated with rel_tol = 0; realized ones allow for rounding because
/// the realized chain is often an equality (t between a and b).
DriftEvaluation drift_inequality_eval(const DriftConfig& cfg, double rel_tol = 0.0);

/// Rounding allowance used for configurations measured on real geometry.
constexpr double realized_tolerance = 1e-9;

/// Points of a configuration built on real geometry, with every length
/// measured directly from coordinates.
struct RealizedDrift {
  Eigen::VectorXd p, q, qn, a, b, s, t;
  Eigen::VectorXd l;
  DriftConfig config;
  DriftLengths measured;
  DriftEvaluation evaluation;
  /// Largest absolute deviation of a measured length from its table value.
  double identity_residual = 0;
  /// ||a - b|| <= ||a - t|| + ||t - b|| on measured lengths.
  bool measured_chain_holds = false;
};

/// p = vertex `p_index`, q = an adjacent vertex, q_n = p + (r - p) / 8 for
/// another neighbour r. The ray l from p leans between q and q_n, H is the
/// plane through p spanned by l and q - p, and G is the hyperplane through
/// l normal to the part of q - p orthogonal to l. Returns nullopt when the
/// vertex has fewer than two neighbours or the draw is degenerate.
std::optional<RealizedDrift> realize_drift(const VPolytope& body, std::size_t p_index, Rng& rng);

}  // namespace polysect
