#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <string>

#include "polysect/polytope.hpp"

namespace polysect {

enum class Membership { inside, boundary, outside };

struct SupportResult {
  double value = 0;
  Eigen::VectorXd point;
};

/// Parameter interval { t : origin + t * dir in K }.
struct Interval {
  double lo = 0;
  double hi = 0;
};

/// Convex body given by support and membership queries. Floating bodies
/// answer membership within tolerance(); wrapped polytopes answer exactly.
class BodyOracle {
 public:
  virtual ~BodyOracle() = default;

  virtual std::size_t dim() const = 0;
  /// h(u) = max u . x over the body and a point attaining it.
  virtual SupportResult support(const Eigen::VectorXd& u) const = 0;
  virtual Membership membership(const Eigen::VectorXd& x) const = 0;
  virtual std::optional<Interval> clip_line(const Eigen::VectorXd& origin, const Eigen::VectorXd& dir) const = 0;
  virtual Eigen::VectorXd interior_point() const = 0;
  virtual double tolerance() const = 0;
  virtual std::string kind() const = 0;

  virtual bool exact() const { return false; }
  /// The exact polytope behind an exact oracle.
  virtual const VPolytope* polytope() const { return nullptr; }
};

using BodyPtr = std::shared_ptr<const BodyOracle>;

constexpr double default_tolerance = 1e-9;

BodyPtr make_ball(const Eigen::VectorXd& center, double radius, double tau = default_tolerance);
/// Axis-aligned ellipsoid with the given semi-axes.
BodyPtr make_ellipsoid(const Eigen::VectorXd& center, const Eigen::VectorXd& axes, double tau = default_tolerance);
/// Exact oracle for a full-dimensional polytope; support points are vertices.
BodyPtr wrap_polytope(VPolytope polytope);
/// The polytope with one facet replaced by a spherical bulge of the given
/// height: the facet is pushed out by `height` and the result is cut by a
/// ball through every vertex region that touches the pushed facet plane at
/// a single point. Rejects heights for which pushing the facet changes the
/// combinatorics (a conservative convexity-preserving bound).
BodyPtr glue_cap(const VPolytope& polytope, const FaceRef& facet, double height, double tau = default_tolerance);
BodyPtr glue_cap(const VPolytope& polytope, std::size_t facet_index, double height, double tau = default_tolerance);

}  // namespace polysect
