#include "body_spec.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "polysect/error.hpp"
#include "polysect/off_io.hpp"

namespace polysect::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, sep);) {
    const auto b = part.find_first_not_of(" \t");
    const auto e = part.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : part.substr(b, e - b + 1));
  }
  return out;
}

Eigen::VectorXd json_vector(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw ParseError(std::string("body spec: '") + what + "' must be a number array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ParseError(std::string("body spec: '") + what + "' must be a number array");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

double json_number(const nlohmann::json& spec, const char* key) {
  if (!spec.contains(key) || !spec[key].is_number()) throw ParseError(std::string("body spec: missing number '") + key + "'");
  return spec[key].get<double>();
}

VPolytope hull_of_file(const std::filesystem::path& path, std::size_t& dropped) {
  const OffData data = read_off_file(path);
  VPolytope hull = convex_hull(data.vertices);
  std::vector<Point> distinct = data.vertices;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  dropped = distinct.size() - hull.vertices().size();
  return hull;
}

}  // namespace

LoadedBody load_body(const std::filesystem::path& path) {
  LoadedBody out;
  out.source = path.filename().string();
  if (path.extension() == ".off") {
    out.body = wrap_polytope(hull_of_file(path, out.dropped_points));
    return out;
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  nlohmann::json spec;
  try {
    spec = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("body spec " + path.string() + ": " + e.what());
  }
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string()) {
    throw ParseError("body spec: missing string 'kind'");
  }
  const std::string kind = spec["kind"];
  const double tau = spec.contains("tau") ? json_number(spec, "tau") : default_tolerance;
  auto off_path = [&]() {
    if (!spec.contains("off") || !spec["off"].is_string()) throw ParseError("body spec: missing string 'off'");
    return path.parent_path() / spec["off"].get<std::string>();
  };
  if (kind == "ball") {
    out.body = make_ball(json_vector(spec.value("center", nlohmann::json()), "center"), json_number(spec, "radius"), tau);
  } else if (kind == "ellipsoid") {
    out.body = make_ellipsoid(json_vector(spec.value("center", nlohmann::json()), "center"),
                              json_vector(spec.value("axes", nlohmann::json()), "axes"), tau);
  } else if (kind == "polytope") {
    out.body = wrap_polytope(hull_of_file(off_path(), out.dropped_points));
  } else if (kind == "cap") {
    const VPolytope poly = hull_of_file(off_path(), out.dropped_points);
    const double height = json_number(spec, "height");
    std::size_t facet = 0;
    if (spec.contains("facet")) {
      if (!spec["facet"].is_number_unsigned()) throw ParseError("body spec: 'facet' must be a facet index");
      facet = spec["facet"].get<std::size_t>();
    } else if (spec.contains("facet_normal")) {
      const Vec n = rationalize(json_vector(spec["facet_normal"], "facet_normal"), 20);
      const Vec want = primitive_direction(n);
      bool found = false;
      for (std::size_t i = 0; i < poly.facets().size(); ++i) {
        if (primitive_direction(poly.facets()[i].normal) == want) {
          facet = i;
          found = true;
          break;
        }
      }
      if (!found) throw ParseError("body spec: no facet with the given outward normal");
    } else {
      throw ParseError("body spec: cap needs 'facet' or 'facet_normal'");
    }
    out.body = glue_cap(poly, facet, height, tau);
  } else {
    throw ParseError("body spec: unknown kind '" + kind + "'");
  }
  return out;
}

Vec parse_point(const std::string& text, std::size_t dim) {
  const auto parts = split(text, ',');
  if (parts.size() != dim) {
    throw ParseError("expected " + std::to_string(dim) + " comma-separated coordinates in '" + text + "'");
  }
  Vec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = parse_scalar(parts[i]);
  return v;
}

AffineFlat parse_flat(const std::string& text, std::size_t dim) {
  std::optional<Vec> normal;
  std::optional<Scalar> offset;
  std::optional<Vec> point;
  std::vector<Vector> dirs;
  for (const auto& item : split(text, ';')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("flat spec: expected key=value in '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "n") {
      normal = parse_point(value, dim);
    } else if (key == "c") {
      offset = parse_scalar(value);
    } else if (key == "p") {
      point = parse_point(value, dim);
    } else if (key == "u") {
      dirs.push_back(parse_point(value, dim));
    } else {
      throw ParseError("flat spec: unknown key '" + key + "'");
    }
  }
  if (normal) {
    if (point || !dirs.empty()) throw ParseError("flat spec: use either n/c or p/u keys");
    if (normal->is_zero()) throw ParseError("flat spec: normal must be nonzero");
    return AffineFlat::hyperplane(*normal, offset.value_or(Scalar(0)));
  }
  if (offset) throw ParseError("flat spec: 'c' needs a normal 'n'");
  if (dirs.empty()) throw ParseError("flat spec: give a normal n=... or directions u=...");
  const AffineFlat flat = AffineFlat::spanned_by(point.value_or(Vec(dim)), dirs);
  if (flat.dim() != dirs.size()) throw ParseError("flat spec: directions are linearly dependent");
  return flat;
}

}  // namespace polysect::cli
