#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polysect/body_oracle.hpp"
#include "polysect/flat.hpp"

namespace polysect {

/// K1: central sections, K2: projections, T11: offset sections,
/// T12: visual cones.
enum class CriterionId { k1, k2, t11, t12 };
std::string criterion_name(CriterionId id);

enum class Verdict { polytope_consistent, non_polytope };
std::string verdict_name(Verdict v);

struct Budgets {
  std::size_t flats = 0;
  std::size_t points = 0;
  double tau = 0;
};

/// Outcome for one sampled flat, subspace or apex.
struct SampleRecord {
  std::size_t index = 0;
  /// exact-polygon, polygon, curved, misses-interior, exact-cone,
  /// cone-consistent or non-polyhedral.
  std::string outcome;
  /// Exact vertex or ray count, or the number of fitted edges.
  std::size_t count = 0;
};

struct CriterionWitness {
  std::size_t index = 0;
  /// The sampled flat or subspace, exactly.
  std::optional<AffineFlat> flat;
  std::optional<Eigen::VectorXd> apex;
  /// Orthonormal directions of the sampled plane (or 3-space for cones).
  std::vector<Eigen::VectorXd> frame;
  Eigen::VectorXd origin;
  double phase = 0;
  /// The offending boundary sample in planar coordinates.
  std::vector<Eigen::Vector2d> sample;
  std::array<std::size_t, 3> triple{};
  double area = 0;
};

struct CriterionReport {
  CriterionId id = CriterionId::k1;
  Verdict verdict = Verdict::polytope_consistent;
  /// Every sample was decided exactly (exact polytope input).
  bool exact = false;
  std::string body_kind;
  Budgets budgets;
  std::uint64_t seed = 0;
  std::optional<CriterionWitness> witness;
  /// Precondition failures met along the way (flats missing the interior).
  std::vector<std::string> violations;
  std::vector<SampleRecord> records;
};

/// delta(xi) for a unit direction xi: the flat is { x : x . xi = delta }.
using OffsetFunction = std::function<double(const Eigen::VectorXd&)>;

struct SectionTestOptions {
  /// Flat dimension; oracle bodies support k = 2 only.
  std::size_t k = 2;
  std::size_t flats = 50;
  /// Empty means central sections (K1); otherwise offset sections (T11).
  OffsetFunction delta;
  std::uint64_t seed = 0;
  std::size_t points = 64;
  double tau = default_tolerance;
  /// When set, every sampled flat contains this direction from the origin.
  std::optional<Eigen::VectorXd> containing_direction;
};

/// Samples flats { x . xi = delta(xi) } and judges each section. The first
/// curved section gives a non-polytope verdict.
CriterionReport klee_section_test(const BodyOracle& body, const SectionTestOptions& options);

/// The i-th flat a section test with these options samples.
std::vector<AffineFlat> sampled_section_flats(std::size_t dim, const SectionTestOptions& options);

struct ProjectionTestOptions {
  std::size_t k = 2;
  std::size_t subspaces = 50;
  std::uint64_t seed = 0;
  std::size_t points = 64;
  double tau = default_tolerance;
  /// Use the support-function route even for exact polytopes.
  bool force_sampling = false;
};

/// Samples 2-dim subspaces E. Exact bodies are projected exactly; oracle
/// bodies are judged through the polar of the shadow, whose boundary points
/// u / (h(u) - u . c) for unit u in E come from the support function.
CriterionReport klee_projection_test(const BodyOracle& body, const ProjectionTestOptions& options);

/// Subspaces a projection test with these options samples, as flats
/// through the origin.
std::vector<AffineFlat> sampled_projection_subspaces(std::size_t dim, const ProjectionTestOptions& options);

/// Polar-point boundary sample of the shadow on span(e1, e2) around c.
std::vector<Eigen::Vector2d> polar_shadow_sample(const BodyOracle& body, const Eigen::VectorXd& e1,
                                                 const Eigen::VectorXd& e2, const Eigen::VectorXd& c, std::size_t n);

struct ConeTestOptions {
  std::size_t apexes = 20;
  /// Apexes are drawn on the sphere of this centre and radius; an empty
  /// centre means the body's interior point.
  Eigen::VectorXd center;
  double radius = 3.0;
  /// Subspace sections scanned per apex.
  std::size_t sections = 10;
  std::uint64_t seed = 0;
  std::size_t points = 64;
  double tau = default_tolerance;
};

/// Builds the visual cone from each sampled apex (exactly for polytopes)
/// and scans its sections. Throws PreconditionFailed for an apex that is not
/// strictly outside the body.
CriterionReport visual_cone_test(const BodyOracle& body, const ConeTestOptions& options);

/// Re-samples the witness at `multiplier` times the recorded point budget
/// and reports whether it is still judged curved / non-polyhedral.
bool reverify_witness(const BodyOracle& body, const CriterionReport& report, std::size_t multiplier);

}  // namespace polysect
