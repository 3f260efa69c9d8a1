#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "polysect/body_oracle.hpp"
#include "polysect/cone.hpp"
#include "polysect/polygonality.hpp"

namespace polysect {

/// Cone with apex known only through directional membership queries.
class ConeOracle {
 public:
  virtual ~ConeOracle() = default;

  virtual std::size_t dim() const = 0;
  virtual Eigen::VectorXd apex() const = 0;
  /// Whether apex + t * direction lies in the cone for t > 0.
  virtual bool contains(const Eigen::VectorXd& direction) const = 0;
  virtual Eigen::VectorXd interior_direction() const = 0;
  /// Linear functional positive on every nonzero cone direction.
  virtual Eigen::VectorXd positive_functional() const = 0;
  /// The exact cone when the oracle wraps one.
  virtual const PolyCone* exact_cone() const { return nullptr; }
};

/// Visual cone C(z, K) of an oracle body. When the body is an exact polytope
/// the exact cone is built as well.
class VisualConeOracle final : public ConeOracle {
 public:
  /// Throws PreconditionFailed unless z is outside the body.
  VisualConeOracle(BodyPtr body, Eigen::VectorXd apex);

  std::size_t dim() const override { return body_->dim(); }
  Eigen::VectorXd apex() const override { return apex_; }
  bool contains(const Eigen::VectorXd& direction) const override;
  Eigen::VectorXd interior_direction() const override { return inward_; }
  Eigen::VectorXd positive_functional() const override { return functional_; }
  const PolyCone* exact_cone() const override { return exact_ ? &*exact_ : nullptr; }

 private:
  BodyPtr body_;
  Eigen::VectorXd apex_;
  Eigen::VectorXd inward_;
  Eigen::VectorXd functional_;
  std::optional<PolyCone> exact_;
};

/// An exact cone viewed through the oracle interface.
class PolyConeOracle final : public ConeOracle {
 public:
  /// The cone must be full-dimensional.
  explicit PolyConeOracle(PolyCone cone);

  std::size_t dim() const override { return cone_.ambient_dim(); }
  Eigen::VectorXd apex() const override { return to_eigen(cone_.apex()); }
  bool contains(const Eigen::VectorXd& direction) const override;
  Eigen::VectorXd interior_direction() const override;
  Eigen::VectorXd positive_functional() const override { return to_eigen(cone_.positive_functional()); }
  const PolyCone* exact_cone() const override { return &cone_; }

 private:
  PolyCone cone_;
};

struct MirkilOptions {
  std::size_t samples = 10;
  std::uint64_t seed = 0;
  std::size_t points = 64;
  double tau = default_tolerance;
};

struct MirkilWitness {
  std::size_t sample_index = 0;
  /// Orthonormal directions spanning the sampled subspace through the apex.
  std::vector<Eigen::VectorXd> frame;
  double phase = 0;
  std::vector<Eigen::Vector2d> cross_section;
  PolygonalityResult detection;
};

struct MirkilResult {
  bool consistent = true;
  bool zero_budget = false;
  bool exact = false;
  std::size_t budget = 0;
  std::size_t samples_used = 0;
  /// Extreme ray counts of the exact sections, in sample order.
  std::vector<std::size_t> section_rays;
  std::optional<MirkilWitness> witness;
};

/// Samples subspaces through the apex (3-dim ones for d >= 4; the cone itself
/// with a random phase for d = 3) and tests each section for polyhedrality.
/// "Consistent" only means no sampled section refuted polyhedrality.
MirkilResult mirkil_scan(const ConeOracle& cone, const MirkilOptions& options);
/// Exact scan: each sampled section is computed exactly and is always
/// polyhedral.
MirkilResult mirkil_scan(const PolyCone& cone, const MirkilOptions& options);

/// Boundary of the cross-section { y in span(frame) : w . y = 1 } of the
/// cone, as 2D points in an orthonormal frame of that plane.
std::vector<Eigen::Vector2d> sample_cone_cross_section(const ConeOracle& cone, const std::vector<Eigen::VectorXd>& frame,
                                                       std::size_t n, double phase);

/// Resamples a witness subspace at `points` boundary points and reports
/// whether it is still judged non-polyhedral.
bool reverify_cone_witness(const ConeOracle& cone, const MirkilWitness& witness, std::size_t points, double tau);

}  // namespace polysect
