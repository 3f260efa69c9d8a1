#pragma once

#include <Eigen/Dense>
#include <vector>

#include "polysect/body_oracle.hpp"
#include "polysect/flat.hpp"

namespace polysect {

/// Boundary of a 2-dim section sampled along rays from an interior point.
/// Chart points are coordinates in the orthonormal frame (e1, e2) centred
/// at `origin`.
struct SectionSample {
  AffineFlat flat;
  Eigen::VectorXd origin;
  Eigen::VectorXd e1;
  Eigen::VectorXd e2;
  std::vector<Eigen::Vector2d> points;
  std::vector<Eigen::VectorXd> ambient;
  std::vector<double> angles;

  std::size_t size() const { return points.size(); }
};

/// Orthonormal frame of a 2-flat's direction space.
std::pair<Eigen::VectorXd, Eigen::VectorXd> orthonormal_frame(const AffineFlat& flat);

/// n boundary points at polar angles phase + 2 pi j / n, each found by 60
/// bisection steps. Throws FlatMissesInterior when no interior point of the
/// body is found on the flat.
SectionSample sample_section_boundary(const BodyOracle& body, const AffineFlat& flat, std::size_t n,
                                      double phase = 0.0);

/// A point of the flat (ambient coordinates) where the body's membership
/// is `inside`, or nullopt.
std::optional<Eigen::VectorXd> find_interior_point(const BodyOracle& body, const AffineFlat& flat);

}  // namespace polysect
