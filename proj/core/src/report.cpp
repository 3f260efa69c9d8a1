#include "polysect/report.hpp"

#include <charconv>
#include <cstdio>

namespace polysect {

std::string decimal(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string decimal(const Scalar& value) { return decimal(to_double(value)); }

Json to_json(const Scalar& value) { return Json{{"exact", to_string(value)}, {"decimal", decimal(value)}}; }

Json to_json(const Vec& v) {
  Json exact = Json::array();
  Json dec = Json::array();
  for (const auto& c : v) {
    exact.push_back(to_string(c));
    dec.push_back(decimal(c));
  }
  return Json{{"exact", exact}, {"decimal", dec}};
}

Json to_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (double c : v) out.push_back(decimal(c));
  return out;
}

namespace {

Json points_json(const std::vector<Point>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

Json planar_json(const std::vector<Eigen::Vector2d>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(Json::array({decimal(p.x()), decimal(p.y())}));
  return out;
}

}  // namespace

Json to_json(const AffineFlat& flat) {
  return Json{{"dim", flat.dim()}, {"base", to_json(flat.base())}, {"basis", points_json(flat.basis())}};
}

Json to_json(const VPolytope& polytope) {
  Json facets = Json::array();
  for (std::size_t i = 0; i < polytope.facets().size(); ++i) {
    const auto& f = polytope.facets()[i];
    facets.push_back(Json{{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}, {"vertices", polytope.facet_vertices()[i]}});
  }
  return Json{{"ambient_dim", polytope.ambient_dim()},
              {"dim", polytope.dim()},
              {"vertex_count", polytope.vertices().size()},
              {"vertices", points_json(polytope.vertices())},
              {"facets", facets}};
}

Json to_json(const Section& section) {
  Json out{{"flat", to_json(section.flat)}, {"empty", section.empty()}};
  if (section.chart) {
    out["dim"] = section.chart->dim();
    out["vertex_count"] = section.ambient_vertices.size();
    out["chart_vertices"] = points_json(section.chart->vertices());
    out["vertices"] = points_json(section.ambient_vertices);
  }
  return out;
}

Json to_json(const PolyCone& cone) {
  Json hs = Json::array();
  for (const auto& h : cone.halfspace_form().halfspaces()) {
    hs.push_back(Json{{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
  }
  return Json{{"apex", to_json(cone.apex())},
              {"dim", cone.dim()},
              {"ray_count", cone.generators().size()},
              {"rays", points_json(cone.generators())},
              {"halfspaces", hs}};
}

Json to_json(const ConeSection& section) {
  return Json{{"apex", to_json(section.apex)},
              {"flat", to_json(section.flat)},
              {"ray_count", section.chart_cone.generators().size()},
              {"chart_rays", points_json(section.chart_cone.generators())},
              {"rays", points_json(section.ambient_generators())}};
}

Json to_json(const CriterionReport& report) {
  Json out{{"criterion", criterion_name(report.id)},
           {"verdict", verdict_name(report.verdict)},
           {"exact", report.exact},
           {"body", report.body_kind},
           {"seed", report.seed},
           {"tau", decimal(report.budgets.tau)},
           {"budgets", Json{{"flats", report.budgets.flats}, {"points", report.budgets.points}, {"tau", decimal(report.budgets.tau)}}}};
  if (report.witness) {
    const auto& w = *report.witness;
    Json wj{{"index", w.index}};
    if (w.flat) wj["flat"] = to_json(*w.flat);
    if (w.apex) wj["apex"] = to_json(*w.apex);
    Json frame = Json::array();
    for (const auto& e : w.frame) frame.push_back(to_json(e));
    wj["frame"] = frame;
    wj["origin"] = to_json(w.origin);
    wj["phase"] = decimal(w.phase);
    wj["triple"] = w.triple;
    wj["triple_area"] = decimal(w.area);
    wj["sample"] = planar_json(w.sample);
    out["witness"] = wj;
  } else {
    out["witness"] = nullptr;
  }
  out["violations"] = report.violations;
  Json recs = Json::array();
  for (const auto& r : report.records) recs.push_back(Json{{"index", r.index}, {"outcome", r.outcome}, {"count", r.count}});
  out["samples"] = recs;
  return out;
}

Json to_json(const EpsilonCert& cert) {
  Json out{{"p", to_json(cert.p)},
           {"q", to_json(cert.q)},
           {"case", cert.kind == EpsilonCase::interior_crossing ? "interior-crossing" : "boundary-segment"},
           {"epsilon", decimal(cert.epsilon)},
           {"bound", decimal(cert.bound)},
           {"x", to_json(cert.x)}};
  if (cert.kind == EpsilonCase::interior_crossing) {
    out["radius"] = decimal(cert.radius);
    out["distance_px"] = decimal(cert.distance_px);
    out["tangent_term"] = decimal(cert.tangent_term);
    out["angle_term"] = decimal(cert.angle_term);
  } else {
    if (cert.flat) out["flat"] = to_json(*cert.flat);
    out["vertices"] = points_json(cert.flat_vertices);
    Json angles = Json::array();
    for (double a : cert.vertex_angles) angles.push_back(decimal(a));
    out["vertex_angles"] = angles;
    out["delta"] = decimal(cert.delta);
    out["interior"] = to_json(cert.interior);
  }
  return out;
}

Json to_json(const DriftConfig& cfg) {
  return Json{{"gamma", decimal(cfg.gamma)},
              {"xi", decimal(cfg.xi)},
              {"phi", decimal(cfg.phi)},
              {"eps_length", decimal(cfg.eps_length)},
              {"eps_angle", decimal(cfg.eps_angle)}};
}

Json to_json(const DriftEvaluation& eval) {
  const auto& l = eval.lengths;
  return Json{{"lhs", decimal(eval.lhs)},
              {"rhs", decimal(eval.rhs)},
              {"holds", eval.holds},
              {"chain_holds", eval.chain_holds},
              {"realized", eval.realized},
              {"lengths",
               Json{{"bq", decimal(l.bq)}, {"bp", decimal(l.bp)}, {"ab", decimal(l.ab)}, {"tq", decimal(l.tq)}, {"at", decimal(l.at)}, {"bt", decimal(l.bt)}}}};
}

Json to_json(const MirkilResult& result) {
  Json out{{"verdict", result.consistent ? "polyhedral-consistent" : "non-polyhedral"},
           {"exact", result.exact},
           {"budget", result.budget},
           {"zero_budget", result.zero_budget},
           {"samples_used", result.samples_used},
           {"section_rays", result.section_rays}};
  if (result.witness) {
    const auto& w = *result.witness;
    Json frame = Json::array();
    for (const auto& e : w.frame) frame.push_back(to_json(e));
    out["witness"] = Json{{"sample_index", w.sample_index},
                          {"frame", frame},
                          {"phase", decimal(w.phase)},
                          {"triple", w.detection.witness ? Json(*w.detection.witness) : Json(nullptr)},
                          {"triple_area", decimal(w.detection.witness_area)},
                          {"cross_section", planar_json(w.cross_section)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const ShadowWalk& walk) {
  Json angles = Json::array();
  for (double a : walk.angles) angles.push_back(decimal(a));
  return Json{{"xi", to_json(walk.xi)},
              {"chart", to_json(walk.chart)},
              {"start", to_json(walk.start)},
              {"vertex_count", walk.vertices.size()},
              {"vertices", points_json(walk.vertices)},
              {"angles", angles},
              {"apexes", points_json(walk.apexes)},
              {"steps", walk.steps},
              {"step_calls", walk.step_calls}};
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace polysect
