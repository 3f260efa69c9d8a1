#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "body_spec.hpp"
#include "polysect/cone.hpp"
#include "polysect/criteria.hpp"
#include "polysect/epsilon.hpp"
#include "polysect/error.hpp"
#include "polysect/mirkil.hpp"
#include "polysect/report.hpp"
#include "polysect/silhouette.hpp"
#include "polysect/svg.hpp"

namespace polysect::cli {
namespace {

struct Options {
  std::string body;
  std::string flat;
  std::string xi;
  std::string apex;
  std::string start;
  std::string p;
  std::string q;
  std::string through;
  std::string delta_coeffs;
  std::optional<double> delta;
  std::uint64_t seed = 0;
  double tau = default_tolerance;
  std::size_t flats = 0;
  std::size_t points = 64;
  std::size_t k = 2;
  std::size_t sections = 10;
  std::size_t family_size = 20;
  double apex_radius = 3.0;
  bool force_sampling = false;
  std::string report;
  std::string svg;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("POLYSECT_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("POLYSECT_SEED must be a nonnegative integer");
  }
  return 0;
}

const VPolytope& require_polytope(const LoadedBody& b, const char* command) {
  if (!b.body->exact()) throw PreconditionFailed(std::string(command) + " needs a polytope body");
  return *b.body->polytope();
}

Eigen::VectorXd parse_real_point(const std::string& text, std::size_t dim) { return to_eigen(parse_point(text, dim)); }

/// Counterclockwise order around the centroid, for drawing.
std::vector<Eigen::Vector2d> cyclic(const std::vector<Point>& pts) {
  std::vector<Eigen::Vector2d> out;
  for (const auto& p : pts) out.emplace_back(to_double(p[0]), to_double(p[1]));
  Eigen::Vector2d c = Eigen::Vector2d::Zero();
  for (const auto& p : out) c += p;
  if (!out.empty()) c /= static_cast<double>(out.size());
  std::sort(out.begin(), out.end(), [&](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return std::atan2(a.y() - c.y(), a.x() - c.x()) < std::atan2(b.y() - c.y(), b.x() - c.x());
  });
  return out;
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int section() {
    const auto body = load();
    const VPolytope& poly = require_polytope(body, "section");
    const AffineFlat flat = parse_flat(opt_.flat, poly.ambient_dim());
    const Section sec = polysect::section(poly, flat);
    Json j = header("section", body);
    j["section"] = to_json(sec);
    if (sec.chart && sec.chart->dim() == 2) svg({{cyclic(sec.chart->vertices()), true, true, "black"}});
    return emit(j, success);
  }

  int project() {
    const auto body = load();
    const VPolytope& poly = require_polytope(body, "project");
    const AffineFlat sub = parse_flat(opt_.flat, poly.ambient_dim());
    if (!sub.base().is_zero() && !sub.contains(Point(poly.ambient_dim()))) {
      throw PreconditionFailed("projection subspace must pass through the origin");
    }
    const VPolytope shadow = polysect::project(poly, sub.rebased(Point(poly.ambient_dim())));
    Json j = header("project", body);
    j["subspace"] = to_json(sub);
    j["projection"] = to_json(shadow);
    if (shadow.dim() == 2) svg({{cyclic(shadow.vertices()), true, true, "black"}});
    return emit(j, success);
  }

  int cone() {
    const auto body = load();
    const VPolytope& poly = require_polytope(body, "cone");
    const Point z = parse_point(opt_.apex, poly.ambient_dim());
    const PolyCone c = visual_cone(z, poly);
    Json j = header("cone", body);
    j["cone"] = to_json(c);
    if (!opt_.flat.empty()) {
      const auto sec = cone_section(c, parse_flat(opt_.flat, poly.ambient_dim()));
      j["section"] = sec ? to_json(*sec) : Json("empty beyond apex");
    }
    return emit(j, success);
  }

  int klee_sections(bool offset) {
    const auto body = load();
    SectionTestOptions so;
    so.k = opt_.k;
    so.flats = opt_.flats ? opt_.flats : 50;
    so.seed = opt_.seed;
    so.points = opt_.points;
    so.tau = opt_.tau;
    if (!opt_.through.empty()) so.containing_direction = parse_real_point(opt_.through, body.body->dim());
    if (offset) {
      if (!opt_.delta_coeffs.empty()) {
        const Eigen::VectorXd c = parse_real_point(opt_.delta_coeffs, body.body->dim() + 1);
        so.delta = [c](const Eigen::VectorXd& xi) { return c[0] + c.tail(c.size() - 1).dot(xi); };
      } else if (opt_.delta) {
        const double d = *opt_.delta;
        so.delta = [d](const Eigen::VectorXd&) { return d; };
      } else {
        throw PreconditionFailed("t11 needs --delta or --delta-coeffs");
      }
    }
    const auto report = klee_section_test(*body.body, so);
    return criterion(offset ? "t11" : "klee-k1", body, report);
  }

  int klee_k2() {
    const auto body = load();
    ProjectionTestOptions po;
    po.k = opt_.k;
    po.subspaces = opt_.flats ? opt_.flats : 50;
    po.seed = opt_.seed;
    po.points = opt_.points;
    po.tau = opt_.tau;
    po.force_sampling = opt_.force_sampling;
    return criterion("klee-k2", body, klee_projection_test(*body.body, po));
  }

  int t12() {
    const auto body = load();
    ConeTestOptions co;
    co.apexes = opt_.flats ? opt_.flats : 20;
    co.radius = opt_.apex_radius;
    co.sections = opt_.sections;
    co.seed = opt_.seed;
    co.points = opt_.points;
    co.tau = opt_.tau;
    return criterion("t12", body, visual_cone_test(*body.body, co));
  }

  int epsilon() {
    const auto body = load();
    const VPolytope& poly = require_polytope(body, "epsilon");
    const Point p = parse_point(opt_.p, poly.ambient_dim());
    const Point q = parse_point(opt_.q, poly.ambient_dim());
    const auto cert = epsilon_certificate(poly, p, q, FlatFamily::random(poly.ambient_dim(), opt_.family_size, opt_.seed));
    Json j = header("epsilon", body);
    j["certificate"] = to_json(cert);
    j["no_extreme_in_cone"] = no_extreme_in_cone(poly, p, q, cert.epsilon);
    return emit(j, success);
  }

  int walk() {
    const auto body = load();
    const VPolytope& poly = require_polytope(body, "walk");
    const Vector xi = parse_point(opt_.xi, poly.ambient_dim());
    std::optional<Vec> start;
    if (!opt_.start.empty()) start = parse_point(opt_.start, 2);
    const ShadowWalk w = shadow_walk(poly, xi, start);
    Json j = header("walk", body);
    j["walk"] = to_json(w);
    std::vector<Eigen::Vector2d> pts;
    for (const auto& v : w.vertices) pts.emplace_back(to_double(v[0]), to_double(v[1]));
    svg({{pts, true, true, "black"}});
    return emit(j, success);
  }

  int mirkil() {
    const auto body = load();
    const Eigen::VectorXd z = parse_real_point(opt_.apex, body.body->dim());
    const VisualConeOracle c(body.body, z);
    const auto result = mirkil_scan(c, {opt_.flats ? opt_.flats : 10, opt_.seed, opt_.points, opt_.tau});
    Json j = header("mirkil", body);
    j["apex"] = to_json(z);
    j["result"] = to_json(result);
    if (result.witness) svg({{result.witness->cross_section, true, false, "black"}});
    return emit(j, result.consistent ? success : witness_found);
  }

 private:
  LoadedBody load() const {
    if (opt_.body.empty()) throw PreconditionFailed("--body is required");
    return load_body(opt_.body);
  }

  Json header(const std::string& command, const LoadedBody& body) const {
    Json j{{"command", command}, {"body", body.source}, {"body_kind", body.body->kind()}, {"seed", opt_.seed}, {"tau", decimal(opt_.tau)}};
    if (body.dropped_points) j["input_warning"] = std::to_string(body.dropped_points) + " input points are not hull vertices";
    return j;
  }

  int criterion(const std::string& command, const LoadedBody& body, const CriterionReport& report) {
    Json j{{"command", command}, {"body_source", body.source}};
    if (body.dropped_points) j["input_warning"] = std::to_string(body.dropped_points) + " input points are not hull vertices";
    const Json body_report = to_json(report);
    for (const auto& [key, value] : body_report.items()) j[key] = value;
    if (report.witness) svg({{report.witness->sample, true, false, "black"}});
    return emit(j, report.verdict == Verdict::non_polytope ? witness_found : success);
  }

  void svg(const std::vector<SvgLayer>& layers) const {
    if (opt_.svg.empty()) return;
    std::ofstream f(opt_.svg, std::ios::binary);
    if (!f) throw Error("cannot write " + opt_.svg);
    f << render_svg(layers);
  }

  int emit(const Json& j, int code) {
    const std::string text = dump(j);
    if (opt_.report.empty()) {
      out_ << text;
    } else {
      std::ofstream f(opt_.report, std::ios::binary);
      if (!f) throw Error("cannot write " + opt_.report);
      f << text;
      out_ << (code == witness_found ? "witness found" : "ok") << ": report written to " << opt_.report << "\n";
    }
    return code;
  }

  const Options& opt_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact polytope sections, projections, visual cones and polytopality criteria", "polysect"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "polysect 0.1.0");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--body", opt.body, "Body file (.off or .json body spec)")->required();
    sub->add_option("--seed", opt.seed, "Random seed (default: $POLYSECT_SEED or 0)");
    sub->add_option("--tau", opt.tau, "Oracle and polygonality tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--report", opt.report, "Write the JSON report here instead of stdout");
    sub->add_option("--svg", opt.svg, "Write an SVG rendering of the 2-dim result");
  };
  auto add_sampling = [&](CLI::App* sub, const char* what) {
    sub->add_option("--flats", opt.flats, what)->check(CLI::NonNegativeNumber);
    sub->add_option("--points", opt.points, "Boundary points per sampled section")->check(CLI::Range(8, 1 << 20));
  };

  auto* section = app.add_subcommand("section", "Exact section of a polytope by a flat");
  add_common(section);
  section->add_option("--flat", opt.flat, "Flat: \"n=1,1,1;c=0\" or \"p=..;u=..;u=..\"")->required();

  auto* project = app.add_subcommand("project", "Orthogonal projection onto a subspace");
  add_common(project);
  project->add_option("--flat", opt.flat, "Subspace through the origin: \"u=..;u=..\"")->required();

  auto* cone = app.add_subcommand("cone", "Visual cone from an exterior apex");
  add_common(cone);
  cone->add_option("--apex", opt.apex, "Apex coordinates, comma-separated")->required();
  cone->add_option("--flat", opt.flat, "Optional flat through the apex to section the cone");

  auto* k1 = app.add_subcommand("klee-k1", "Central section test");
  add_common(k1);
  add_sampling(k1, "Number of sampled flats (default 50)");
  k1->add_option("--k", opt.k, "Flat dimension");
  k1->add_option("--through", opt.through, "Direction every sampled flat contains");

  auto* k2 = app.add_subcommand("klee-k2", "Projection test");
  add_common(k2);
  add_sampling(k2, "Number of sampled subspaces (default 50)");
  k2->add_flag("--force-sampling", opt.force_sampling, "Use the support-function route for polytopes too");

  auto* t11 = app.add_subcommand("t11", "Offset section test");
  add_common(t11);
  add_sampling(t11, "Number of sampled flats (default 50)");
  t11->add_option("--k", opt.k, "Flat dimension");
  t11->add_option("--through", opt.through, "Direction every sampled flat contains");
  t11->add_option("--delta", opt.delta, "Constant offset delta");
  t11->add_option("--delta-coeffs", opt.delta_coeffs, "Offset a0 + a . xi given as a0,a1,...,ad");

  auto* t12 = app.add_subcommand("t12", "Visual cone test");
  add_common(t12);
  add_sampling(t12, "Number of sampled apexes (default 20)");
  t12->add_option("--apex-radius", opt.apex_radius, "Radius of the apex sphere around the body's interior point");
  t12->add_option("--sections", opt.sections, "Subspace sections scanned per apex");

  auto* eps = app.add_subcommand("epsilon", "Cone certificate around a segment [p q]");
  add_common(eps);
  eps->add_option("--p", opt.p, "Point p")->required();
  eps->add_option("--q", opt.q, "Point q")->required();
  eps->add_option("--family-size", opt.family_size, "Random hyperplane directions besides the axes");

  auto* walk = app.add_subcommand("walk", "Shadow walk of a 3-polytope");
  add_common(walk);
  walk->add_option("--xi", opt.xi, "Projection direction")->required();
  walk->add_option("--start", opt.start, "Start point on the shadow boundary (chart coordinates)");

  auto* mirkil = app.add_subcommand("mirkil", "Subspace scan of a visual cone");
  add_common(mirkil);
  add_sampling(mirkil, "Number of sampled subspaces (default 10)");
  mirkil->add_option("--apex", opt.apex, "Apex coordinates, comma-separated")->required();

  std::vector<const char*> argv{"polysect"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    opt.seed = default_seed();
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::CallForVersion&) {
    out << "polysect 0.1.0\n";
    return success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }

  try {
    Runner r(opt, out);
    if (*section) return r.section();
    if (*project) return r.project();
    if (*cone) return r.cone();
    if (*k1) return r.klee_sections(false);
    if (*k2) return r.klee_k2();
    if (*t11) return r.klee_sections(true);
    if (*t12) return r.t12();
    if (*eps) return r.epsilon();
    if (*walk) return r.walk();
    if (*mirkil) return r.mirkil();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
  return failure;
}

}  // namespace polysect::cli
