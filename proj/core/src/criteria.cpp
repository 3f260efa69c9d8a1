#include "polysect/criteria.hpp"

#include <cmath>
#include <numbers>

#include "polysect/error.hpp"
#include "polysect/linalg.hpp"
#include "polysect/mirkil.hpp"
#include "polysect/polygonality.hpp"
#include "polysect/random.hpp"
#include "polysect/section_sampling.hpp"

namespace polysect {
namespace {

/// v minus its component along u, exactly.
Vector reject_from(const Vector& v, const Vector& u) { return v - u * (dot(v, u) / norm2(u)); }

Vector exact_direction_orthogonal_to(std::size_t d, Rng& rng, const std::vector<Vector>& avoid) {
  while (true) {
    Vector v = random_direction(d, rng, 10);
    for (const auto& a : orthogonalize(avoid)) v = reject_from(v, a);
    if (!v.is_zero()) return primitive_direction(v);
  }
}

CriterionWitness witness_from_sample(std::size_t index, const SectionSample& sample, const PolygonalityResult& det) {
  CriterionWitness w;
  w.index = index;
  w.flat = sample.flat;
  w.frame = {sample.e1, sample.e2};
  w.origin = sample.origin;
  w.sample = sample.points;
  if (det.witness) w.triple = *det.witness;
  w.area = det.witness_area;
  return w;
}

void require_points(std::size_t points) {
  if (points < 8) throw PreconditionFailed("at least 8 boundary points per section are required");
}

}  // namespace

std::string criterion_name(CriterionId id) {
  switch (id) {
    case CriterionId::k1: return "K1";
    case CriterionId::k2: return "K2";
    case CriterionId::t11: return "T1.1";
    case CriterionId::t12: return "T1.2";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  return v == Verdict::polytope_consistent ? "polytope-consistent" : "non-polytope";
}

std::vector<AffineFlat> sampled_section_flats(std::size_t d, const SectionTestOptions& options) {
  if (options.k < 2 || options.k > d - 1) throw PreconditionFailed("section dimension must satisfy 2 <= k <= d-1");
  Rng rng(options.seed);
  std::vector<Vector> fixed;
  if (options.containing_direction) {
    if (static_cast<std::size_t>(options.containing_direction->size()) != d) {
      throw DimensionMismatch("containing direction dimension");
    }
    Vector c = rationalize(*options.containing_direction, 20);
    if (c.is_zero()) throw PreconditionFailed("containing direction must be nonzero");
    fixed.push_back(std::move(c));
  }
  std::vector<AffineFlat> flats;
  for (std::size_t i = 0; i < options.flats; ++i) {
    const Vector xi = exact_direction_orthogonal_to(d, rng, fixed);
    const Eigen::VectorXd xi_unit = to_eigen(xi).normalized();
    const double delta = options.delta ? options.delta(xi_unit) : 0.0;
    const Scalar level = rationalize(delta * std::sqrt(to_double(norm2(xi))), 20);
    const Point base = xi * (level / norm2(xi));
    if (options.k == d - 1) {
      flats.push_back(AffineFlat::hyperplane(xi, level));
      continue;
    }
    std::vector<Vector> dirs = fixed;
    while (dirs.size() < options.k) {
      std::vector<Vector> avoid = dirs;
      avoid.push_back(xi);
      dirs.push_back(exact_direction_orthogonal_to(d, rng, avoid));
    }
    flats.push_back(AffineFlat::spanned_by(base, dirs));
  }
  return flats;
}

CriterionReport klee_section_test(const BodyOracle& body, const SectionTestOptions& options) {
  require_points(options.points);
  const std::size_t d = body.dim();
  CriterionReport report;
  report.id = options.delta ? CriterionId::t11 : CriterionId::k1;
  report.exact = body.exact();
  report.body_kind = body.kind();
  report.budgets = {options.flats, options.points, options.tau};
  report.seed = options.seed;
  if (!body.exact() && options.k != 2) throw PreconditionFailed("oracle bodies are tested on 2-dim sections only");

  const auto flats = sampled_section_flats(d, options);
  Rng inner(options.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    const auto& flat = flats[i];
    SampleRecord rec{i, "", 0};
    if (body.exact()) {
      const VPolytope& poly = *body.polytope();
      const Section sec = section(poly, flat);
      if (!sec.full_dimensional()) {
        report.violations.push_back("flat " + std::to_string(i) + " misses the interior of the body");
        rec.outcome = "misses-interior";
        report.records.push_back(rec);
        continue;
      }
      if (flat.dim() == 2) {
        rec.outcome = "exact-polygon";
        rec.count = sec.chart->vertices().size();
      } else {
        // Reduce to a 2-flat of H through the section's centroid.
        const Point centre = centroid(sec.ambient_vertices);
        std::vector<Vector> dirs;
        while (dirs.size() < 2) {
          Vector v(d);
          for (const auto& b : flat.basis()) v += b * rationalize(inner.normal(), 10);
          for (const auto& prev : orthogonalize(dirs)) v = reject_from(v, prev);
          if (!v.is_zero()) dirs.push_back(std::move(v));
        }
        const Section inner_sec = section(poly, AffineFlat::spanned_by(centre, dirs));
        if (!inner_sec.full_dimensional()) throw Error("inner 2-flat through a relative interior point is degenerate");
        rec.outcome = "exact-polygon";
        rec.count = inner_sec.chart->vertices().size();
      }
      report.records.push_back(rec);
      continue;
    }

    std::optional<SectionSample> sample;
    try {
      sample = sample_section_boundary(body, flat, options.points);
    } catch (const FlatMissesInterior&) {
      report.violations.push_back("flat " + std::to_string(i) + " misses the interior of the body");
      rec.outcome = "misses-interior";
      report.records.push_back(rec);
      continue;
    }
    const auto det = polygonality_detect(*sample, options.tau);
    if (det.polygon) {
      rec.outcome = "polygon";
      rec.count = det.edges.size();
      report.records.push_back(rec);
      continue;
    }
    rec.outcome = "curved";
    report.records.push_back(rec);
    report.verdict = Verdict::non_polytope;
    report.witness = witness_from_sample(i, *sample, det);
    break;
  }
  return report;
}

std::vector<AffineFlat> sampled_projection_subspaces(std::size_t d, const ProjectionTestOptions& options) {
  if (options.k != 2) throw PreconditionFailed("projection tests use 2-dim subspaces");
  if (d < 3) throw PreconditionFailed("projection tests need dimension at least 3");
  Rng rng(options.seed);
  std::vector<AffineFlat> out;
  for (std::size_t i = 0; i < options.subspaces; ++i) {
    std::vector<Vector> dirs;
    while (dirs.size() < 2) dirs.push_back(exact_direction_orthogonal_to(d, rng, dirs));
    out.push_back(AffineFlat::spanned_by(Point(d), dirs));
  }
  return out;
}

std::vector<Eigen::Vector2d> polar_shadow_sample(const BodyOracle& body, const Eigen::VectorXd& e1,
                                                 const Eigen::VectorXd& e2, const Eigen::VectorXd& c, std::size_t n) {
  std::vector<Eigen::Vector2d> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    const Eigen::VectorXd u = std::cos(angle) * e1 + std::sin(angle) * e2;
    const double gap = body.support(u).value - u.dot(c);
    if (!(gap > 0)) throw Error("shadow centre is not interior to the shadow");
    out.emplace_back(std::cos(angle) / gap, std::sin(angle) / gap);
  }
  return out;
}

CriterionReport klee_projection_test(const BodyOracle& body, const ProjectionTestOptions& options) {
  require_points(options.points);
  const std::size_t d = body.dim();
  CriterionReport report;
  report.id = CriterionId::k2;
  const bool exact = body.exact() && !options.force_sampling;
  report.exact = exact;
  report.body_kind = body.kind();
  report.budgets = {options.subspaces, options.points, options.tau};
  report.seed = options.seed;

  const auto subspaces = sampled_projection_subspaces(d, options);
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    const auto& sub = subspaces[i];
    SampleRecord rec{i, "", 0};
    if (exact) {
      const VPolytope shadow = project(*body.polytope(), sub);
      rec.outcome = "exact-polygon";
      rec.count = shadow.vertices().size();
      report.records.push_back(rec);
      continue;
    }
    const auto [e1, e2] = orthonormal_frame(sub);
    const Eigen::VectorXd c0 = body.interior_point();
    const Eigen::VectorXd c = e1 * e1.dot(c0) + e2 * e2.dot(c0);
    const auto pts = polar_shadow_sample(body, e1, e2, c, options.points);
    const auto det = polygonality_detect(pts, options.tau);
    if (det.polygon) {
      rec.outcome = "polygon";
      rec.count = det.edges.size();
      report.records.push_back(rec);
      continue;
    }
    rec.outcome = "curved";
    report.records.push_back(rec);
    report.verdict = Verdict::non_polytope;
    CriterionWitness w;
    w.index = i;
    w.flat = sub;
    w.frame = {e1, e2};
    w.origin = c;
    w.sample = pts;
    if (det.witness) w.triple = *det.witness;
    w.area = det.witness_area;
    report.witness = std::move(w);
    break;
  }
  return report;
}

CriterionReport visual_cone_test(const BodyOracle& body, const ConeTestOptions& options) {
  require_points(options.points);
  const std::size_t d = body.dim();
  if (d < 3) throw PreconditionFailed("visual cone tests need dimension at least 3");
  if (!(options.radius > 0)) throw PreconditionFailed("apex sphere radius must be positive");
  const Eigen::VectorXd centre = options.center.size() ? options.center : body.interior_point();
  if (static_cast<std::size_t>(centre.size()) != d) throw DimensionMismatch("apex sphere centre dimension");

  CriterionReport report;
  report.id = CriterionId::t12;
  report.exact = body.exact();
  report.body_kind = body.kind();
  report.budgets = {options.apexes, options.points, options.tau};
  report.seed = options.seed;

  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.apexes; ++i) {
    const Eigen::VectorXd z = centre + options.radius * rng.unit_vector(d);
    const std::uint64_t scan_seed = rng.next();
    SampleRecord rec{i, "", 0};
    if (body.exact()) {
      const Point zq = rationalize(z, 20);
      if (body.polytope()->contains(zq)) throw PreconditionFailed("apex " + to_string(zq) + " is not outside the body");
      const PolyCone cone = visual_cone(zq, *body.polytope());
      if (d >= 4) mirkil_scan(cone, {options.sections, scan_seed, options.points, options.tau});
      rec.outcome = "exact-cone";
      rec.count = cone.generators().size();
      report.records.push_back(rec);
      continue;
    }
    if (body.membership(z) != Membership::outside) throw PreconditionFailed("apex is not strictly outside the body");
    const VisualConeOracle cone(std::shared_ptr<const BodyOracle>(&body, [](const BodyOracle*) {}), z);
    auto scan = mirkil_scan(cone, {options.sections, scan_seed, options.points, options.tau});
    if (scan.consistent) {
      rec.outcome = "cone-consistent";
      rec.count = scan.samples_used;
      report.records.push_back(rec);
      continue;
    }
    rec.outcome = "non-polyhedral";
    rec.count = scan.samples_used;
    report.records.push_back(rec);
    report.verdict = Verdict::non_polytope;
    CriterionWitness w;
    w.index = i;
    w.apex = z;
    w.frame = scan.witness->frame;
    w.origin = z;
    w.phase = scan.witness->phase;
    w.sample = scan.witness->cross_section;
    if (scan.witness->detection.witness) w.triple = *scan.witness->detection.witness;
    w.area = scan.witness->detection.witness_area;
    report.witness = std::move(w);
    break;
  }
  return report;
}

bool reverify_witness(const BodyOracle& body, const CriterionReport& report, std::size_t multiplier) {
  if (!report.witness) throw PreconditionFailed("report carries no witness");
  const auto& w = *report.witness;
  const std::size_t n = report.budgets.points * multiplier;
  switch (report.id) {
    case CriterionId::k1:
    case CriterionId::t11: {
      const auto sample = sample_section_boundary(body, *w.flat, n);
      return !polygonality_detect(sample, report.budgets.tau).polygon;
    }
    case CriterionId::k2: {
      const auto pts = polar_shadow_sample(body, w.frame[0], w.frame[1], w.origin, n);
      return !polygonality_detect(pts, report.budgets.tau).polygon;
    }
    case CriterionId::t12: {
      const VisualConeOracle cone(std::shared_ptr<const BodyOracle>(&body, [](const BodyOracle*) {}), *w.apex);
      MirkilWitness mw;
      mw.frame = w.frame;
      mw.phase = w.phase;
      return reverify_cone_witness(cone, mw, n, report.budgets.tau);
    }
  }
  return false;
}

}  // namespace polysect
