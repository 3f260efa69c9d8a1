#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "polysect/body_oracle.hpp"
#include "polysect/cone.hpp"
#include "polysect/criteria.hpp"
#include "polysect/drift.hpp"
#include "polysect/epsilon.hpp"
#include "polysect/error.hpp"
#include "polysect/mirkil.hpp"
#include "polysect/silhouette.hpp"

namespace polysect {
namespace {

using testing::as_set;

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail << "first failure: " << what << "; ";
    pass = pass && cond;
  }
};

std::string data(const std::string& name) { return std::string(POLYSECT_DATA_DIR) + "/" + name; }

/// Exact parameter range { t : x + t w in the halfspace system }.
std::pair<Scalar, Scalar> clip(const HPolytope& h, const Point& x, const Vec& w) {
  std::optional<Scalar> lo;
  std::optional<Scalar> hi;
  for (const auto& hs : h.halfspaces()) {
    const Scalar a = dot(hs.normal, w);
    if (a == 0) continue;
    const Scalar t = hs.slack(x) / a;
    if (sign(a) > 0) {
      if (!hi || t < *hi) hi = t;
    } else {
      if (!lo || t > *lo) lo = t;
    }
  }
  return {*lo, *hi};
}

Vec in_plane(const Vec& r, const Vec& n) { return r - n * (dot(r, n) / norm2(n)); }

// 1. Exact section regression.
void exact_section(Check& c) {
  const auto cube = testing::cube();
  const Vec n{1, 1, 1};
  const auto flat = AffineFlat::hyperplane(n, 0);
  const auto v_route = section(cube, flat);
  const auto h_route = section(cube.h_form(), flat);
  const auto brute = testing::edge_plane_crossings(cube, n, 0);
  std::set<Vec> midpoints;
  for (int i = 0; i < 3; ++i) {
    for (int s : {1, -1}) {
      Vec m(3);
      m[i] = s;
      m[(i + 1) % 3] = -s;
      midpoints.insert(m);
    }
  }
  c.require(v_route.ambient_vertices.size() == 6, "V-route vertex count");
  c.require(as_set(v_route.ambient_vertices) == brute, "V-route equals edge-plane crossings");
  c.require(as_set(h_route.ambient_vertices) == brute, "H-route equals edge-plane crossings");
  c.require(brute == midpoints, "crossings are the (1,-1,0)-type midpoints");
  c.detail << "6 vertices, both routes match 12-edge brute force";
}

// 2. Klee K1 soundness and consistency.
void klee_k1(Check& c) {
  Rng rng(2024);
  std::size_t polytopes = 0;
  std::size_t flats = 0;
  for (int i = 0; i < 25; ++i) {
    const std::size_t d = 3 + i % 2;
    const auto body = wrap_polytope(random_polytope(d, d + 2 + rng.index(30 - d - 1), rng));
    c.require(body->polytope()->vertices().size() <= 30, "at most 30 vertices");
    SectionTestOptions opt;
    opt.flats = 50;
    opt.seed = static_cast<std::uint64_t>(i);
    const auto r = klee_section_test(*body, opt);
    c.require(r.verdict == Verdict::polytope_consistent && !r.witness, "random polytope consistent");
    for (const auto& rec : r.records) c.require(rec.outcome == "exact-polygon", "exact polygon section");
    flats += r.records.size();
    ++polytopes;
  }
  const std::vector<BodyPtr> smooth{make_ball(Eigen::Vector3d::Zero(), 1),
                                    make_ellipsoid(Eigen::Vector3d::Zero(), Eigen::Vector3d(2, 1, 1))};
  for (const auto& b : smooth) {
    const auto r = klee_section_test(*b, SectionTestOptions{});
    c.require(r.verdict == Verdict::non_polytope && r.witness && r.witness->index == 0,
              b->kind() + " rejected on first flat");
    c.require(r.witness && reverify_witness(*b, r, 4), b->kind() + " witness re-verifies at 4x");
  }
  c.detail << polytopes << " polytopes x 50 flats (" << flats << " exact sections) consistent; ball and ellipsoid"
           << " rejected on flat 0, re-verified at 4x";
}

// 3. Klee K2 oracle equivalence.
void klee_k2(Check& c) {
  Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    const std::size_t d = 3 + i % 2;
    const auto body = random_polytope(d, d + 2 + rng.index(20), rng);
    std::vector<Vec> dirs{random_direction(d, rng, 8), random_direction(d, rng, 8)};
    const auto sub = AffineFlat::spanned_by(Point(d), dirs);
    if (sub.dim() != 2) {
      --i;
      continue;
    }
    std::vector<Vec> projected;
    for (const auto& v : body.vertices()) projected.emplace_back(sub.projected_coordinates(v));
    c.require(as_set(project(body, sub).vertices()) == testing::planar_extreme_points(projected),
              "shadow equals brute-force extreme set, pair " + std::to_string(i));
  }
  const auto e = make_ellipsoid(Eigen::Vector3d::Zero(), Eigen::Vector3d(2, 1, 1));
  const auto r = klee_projection_test(*e, ProjectionTestOptions{});
  c.require(r.verdict == Verdict::non_polytope && r.witness && r.witness->index == 0,
            "ellipsoid rejected on first subspace");
  c.detail << "100 (polytope, subspace) pairs exact; ellipsoid rejected on subspace 0";
}

// 4. Visual cone exactness.
void visual_cones(Check& c) {
  const Point z{0, 0, 3};
  for (const auto& [name, body] : {std::pair{"cube", testing::cube()}, std::pair{"octahedron", testing::octahedron()}}) {
    const auto cone = visual_cone(z, body);
    c.require(cone.generators().size() == 4, std::string(name) + " has 4 rays");
    c.require(as_set(cone.generators()) == testing::brute_force_extreme_rays(z, body.vertices()),
              std::string(name) + " rays match brute force");
  }
  const VisualConeOracle ball_cone(make_ball(Eigen::Vector3d::Zero(), 1), Eigen::Vector3d(0, 0, 3));
  const auto r = mirkil_scan(ball_cone, {10, 0, 64, default_tolerance});
  c.require(!r.consistent && r.witness && r.witness->sample_index < 10, "ball cone witness within 10 sections");
  c.detail << "cube 4 rays, octahedron 4 rays (brute force agrees); ball cone witness at section "
           << (r.witness ? r.witness->sample_index : 99);
}

// 5. Epsilon certificate suite.
void epsilon_suite(Check& c) {
  Rng rng(5);
  std::size_t pairs = 0;
  std::size_t case1 = 0;
  for (int i = 0; i < 10; ++i) {
    const std::size_t d = 3 + i % 2;
    const auto body = random_polytope(d, d + 2 + rng.index(20 - d - 1), rng);
    const auto family = FlatFamily::random(d, 10, static_cast<std::uint64_t>(i));
    for (const auto& p : body.vertices()) {
      for (const auto& q : body.vertices()) {
        if (p == q) continue;
        try {
          const auto cert = epsilon_certificate(body, p, q, family);
          c.require(cert.epsilon > 0, "epsilon positive");
          c.require(no_extreme_in_cone(body, p, q, cert.epsilon), "no extreme point in the cone");
          case1 += cert.kind == EpsilonCase::interior_crossing;
        } catch (const PreconditionFailed& e) {
          c.require(false, std::string("certificate failed: ") + e.what());
        }
        ++pairs;
      }
    }
  }
  const auto cube = testing::cube();
  const auto cert = epsilon_certificate(cube, Point{1, 1, 1}, Point{-1, -1, -1}, FlatFamily::random(3, 10, 0));
  const double reference = 0.5 * std::min(std::sqrt(2.0), std::asin(1 / std::sqrt(3.0)));
  c.require(cert.kind == EpsilonCase::interior_crossing, "cube diagonal is an interior crossing");
  c.require(std::abs(cert.epsilon - reference) <= 1e-12, "cube diagonal epsilon");
  c.detail << pairs << " ordered vertex pairs certified (" << case1 << " interior crossings); cube diagonal |eps - ref| = "
           << std::abs(cert.epsilon - reference);
}

// 6. Diamond boundary property.
void diamonds(Check& c) {
  Rng rng(6);
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t attempts = 0;
  while ((positive < 200 || negative < 50) && attempts < 5000) {
    ++attempts;
    const std::size_t d = 3 + attempts % 2;
    const auto body = random_polytope(d, d + 3 + rng.index(12), rng, 8);
    const auto h = body.h_form();
    const bool want_positive = positive < 200;

    // Q: a small (1- or (d-2)-dim) cell around a centre, inside one facet or
    // through the interior.
    Point centre;
    Vec facet_normal;
    if (want_positive) {
      const std::size_t f = rng.index(body.facets().size());
      std::vector<Point> fv;
      for (auto i : body.facet_vertices()[f]) fv.push_back(body.vertices()[i]);
      centre = centroid(fv);
      facet_normal = body.facets()[f].normal;
    } else {
      centre = centroid(body.vertices());
    }
    const std::size_t qdim = 1 + rng.index(d - 2);
    std::vector<Vec> qdirs;
    for (std::size_t k = 0; k < qdim; ++k) {
      Vec u = random_direction(d, rng, 6);
      if (want_positive) u = in_plane(u, facet_normal);
      qdirs.push_back(u);
    }
    std::vector<Point> qpts;
    for (const auto& u : qdirs) {
      const auto [lo, hi] = clip(h, centre, u);
      const Scalar s = std::min(Scalar(-lo), hi) / 2;
      qpts.push_back(centre + u * s);
      qpts.push_back(centre - u * s);
    }
    const auto q_cell = convex_hull(qpts);
    if (q_cell.dim() != qdim) continue;

    // p, q: the full chord of K (or of the facet) through the centre.
    Vec w = random_direction(d, rng, 6);
    if (want_positive) w = in_plane(w, facet_normal);
    if (w.is_zero()) continue;
    const auto [lo, hi] = clip(h, centre, w);
    const Point p = centre + w * lo;
    const Point q = centre + w * hi;
    if (!diamond_crossing(q_cell, p, q)) continue;
    const auto dia = diamond_hull(q_cell, p, q);
    const bool on_boundary = check_diamond_boundary(h, dia);
    if (want_positive) {
      c.require(on_boundary, "facet diamond lies in the boundary");
      ++positive;
    } else {
      c.require(!on_boundary, "interior-crossing diamond is rejected");
      ++negative;
    }
  }
  c.require(positive == 200 && negative == 50, "enough configurations generated");
  c.detail << positive << " boundary diamonds accepted, " << negative << " interior-crossing rejected";
}

// 7. Drift inequality.
void drift(Check& c) {
  Rng rng(7);
  std::size_t realized = 0;
  double worst = 0;
  while (realized < 500) {
    const std::size_t d = 3 + rng.index(2);
    const auto body = random_polytope(d, d + 3 + rng.index(15), rng);
    for (std::size_t i = 0; i < body.vertices().size() && realized < 500; ++i) {
      const auto r = realize_drift(body, i, rng);
      if (!r) continue;
      c.require(r->evaluation.holds, "inequality holds on realized geometry");
      c.require(r->measured_chain_holds, "measured triangle chain holds");
      worst = std::max(worst, r->evaluation.lhs - r->evaluation.rhs);
      ++realized;
    }
  }
  for (int i = 0; i < 100; ++i) {
    DriftConfig cfg{0, rng.uniform(0, std::numbers::pi / 2), rng.uniform(0.05, std::numbers::pi / 2),
                    rng.uniform(0.01, 1), rng.uniform(0.01, 1.5)};
    const auto e = drift_inequality_eval(cfg);
    const double closed = std::tan(cfg.eps_angle) * (std::cos(cfg.xi) * (1.0 / std::tan(cfg.phi)) + std::sin(cfg.xi));
    c.require(e.lhs == 0 && e.rhs == closed && e.holds, "gamma = 0 closed form");
    DriftConfig right{rng.uniform(0, 1.5), std::numbers::pi / 2, rng.uniform(0.05, std::numbers::pi / 2),
                      rng.uniform(0.01, 1), rng.uniform(0.01, 1.5)};
    const auto er = drift_inequality_eval(right);
    c.require(er.rhs == std::tan(right.eps_angle), "xi = pi/2 gives tan eps");
    c.require(er.holds == (std::tan(right.gamma) <= std::tan(right.eps_angle)), "xi = pi/2 holds iff gamma <= eps");
  }
  c.detail << realized << " realized configurations hold (max lhs - rhs = " << worst
           << "); 100 gamma=0 and 100 xi=pi/2 closed forms exact";
}

// 8. Silhouette walk.
void walks(Check& c) {
  const auto cube = testing::cube();
  const auto w = shadow_walk(cube, Vec({0, 0, 1}));
  c.require(w.vertices == std::vector<Vec>{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}, "cube corners counterclockwise");
  std::vector<std::pair<VPolytope, Vec>> cases{{cube, Vec({0, 0, 1})},
                                               {cube, Vec({1, 1, 1})},
                                               {testing::octahedron(), Vec({0, 0, 1})},
                                               {testing::octahedron(), Vec({1, 2, 3})},
                                               {testing::simplex3(), Vec({1, 1, 1})}};
  Rng rng(8);
  for (int i = 0; i < 40; ++i) {
    cases.emplace_back(random_polytope(3, 4 + rng.index(25), rng), random_direction(3, rng, 8));
  }
  std::size_t walked = 0;
  for (const auto& [body, xi] : cases) {
    if (xi.is_zero()) continue;
    const auto walk = shadow_walk(body, xi);
    c.require(walk.steps <= body.vertices().size(), "walk ends within |V| steps");
    for (std::size_t k = 1; k < walk.angles.size(); ++k) {
      c.require(walk.angles[k] > walk.angles[k - 1], "polar angles strictly increase");
    }
    c.require(as_set(walk.vertices) == as_set(project(body, shadow_chart(xi)).vertices()), "walk equals shadow");
    ++walked;
  }
  c.detail << walked << " walks terminate within |V| steps with increasing angles; cube emits (1,1),(-1,1),(-1,-1),(1,-1)";
}

// 9. CLI determinism.
const std::vector<std::vector<std::string>>& documented_commands() {
  static const std::vector<std::vector<std::string>> commands{
      {"section", "--body", data("cube.off"), "--flat", "n=1,1,1;c=0"},
      {"project", "--body", data("octahedron.off"), "--flat", "u=1,0,0;u=0,1,0"},
      {"cone", "--body", data("cube.off"), "--apex", "0,0,3", "--flat", "n=0,1,0;c=0"},
      {"klee-k1", "--body", data("ball.json"), "--flats", "5", "--seed", "7"},
      {"klee-k1", "--body", data("cube.off"), "--seed", "3"},
      {"klee-k1", "--body", data("cap_cube.json"), "--through", "1,0,0"},
      {"klee-k2", "--body", data("ellipsoid.json")},
      {"klee-k2", "--body", data("octahedron.off")},
      {"t11", "--body", data("ball.json"), "--delta", "0.2"},
      {"t12", "--body", data("cube.off"), "--flats", "5"},
      {"epsilon", "--body", data("cube.off"), "--p", "1,1,1", "--q=-1,-1,-1"},
      {"walk", "--body", data("cube.off"), "--xi", "0,0,1"},
      {"mirkil", "--body", data("ball.json"), "--apex", "0,0,3"},
  };
  return commands;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void cli_determinism(Check& c) {
  const auto root = std::filesystem::temp_directory_path() / "polysect_acceptance";
  std::filesystem::remove_all(root);
  std::size_t index = 0;
  std::size_t svgs = 0;
  for (const auto& base : documented_commands()) {
    std::string reports[2];
    std::string images[2];
    bool has_image[2];
    int codes[2];
    for (int run = 0; run < 2; ++run) {
      const auto dir = root / std::to_string(run);
      std::filesystem::create_directories(dir);
      const auto report = dir / ("report" + std::to_string(index) + ".json");
      const auto svg = dir / ("shape" + std::to_string(index) + ".svg");
      auto args = base;
      args.insert(args.end(), {"--report", report.string(), "--svg", svg.string()});
      std::ostringstream out;
      std::ostringstream err;
      codes[run] = cli::run(args, out, err);
      c.require(codes[run] != cli::failure, base[0] + " runs: " + err.str());
      reports[run] = slurp(report);
      has_image[run] = std::filesystem::exists(svg);
      if (has_image[run]) images[run] = slurp(svg);
    }
    c.require(codes[0] == codes[1], base[0] + " exit codes agree");
    c.require(!reports[0].empty() && reports[0] == reports[1], base[0] + " reports byte-identical");
    c.require(has_image[0] == has_image[1] && images[0] == images[1], base[0] + " SVGs byte-identical");
    svgs += has_image[0];
    ++index;
  }
  std::filesystem::remove_all(root);
  c.detail << index << " documented commands x 2 runs: reports and " << svgs << " SVGs byte-identical";
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<void(Check&)> body;
};

}  // namespace
}  // namespace polysect

int main() {
  using namespace polysect;
  const std::vector<Criterion> criteria{
      {"exact section regression", 1, exact_section},
      {"Klee K1 soundness and consistency", 60, klee_k1},
      {"Klee K2 oracle equivalence", 30, klee_k2},
      {"visual cone exactness", 10, visual_cones},
      {"epsilon certificate suite", 120, epsilon_suite},
      {"diamond boundary property", 30, diamonds},
      {"drift inequality", 10, drift},
      {"silhouette walk termination and order", 5, walks},
      {"CLI determinism", 10, cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.require(seconds < criteria[i].budget_seconds, "runtime budget");
    failed += !check.pass;
    std::cout << (check.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].name << ": "
              << check.detail.str() << " (" << std::fixed << std::setprecision(2) << seconds << " s, budget "
              << criteria[i].budget_seconds << " s)" << std::defaultfloat << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
