#include "polysect/off_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "polysect/error.hpp"

namespace polysect {
namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::string content = line.substr(0, line.find('#'));
  std::istringstream ss(content);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

std::size_t parse_count(const std::string& tok, const char* what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(std::string("OFF: malformed ") + what + " '" + tok + "'");
  }
  return std::stoul(tok);
}

/// Exact counterclockwise order of coplanar 3D points around their centroid
/// as seen from the side `normal` points to.
std::vector<std::size_t> ccw_order(const std::vector<Point>& pts, std::vector<std::size_t> ids, const Vec& normal) {
  if (ids.size() < 3) return ids;
  std::vector<Point> face;
  for (auto i : ids) face.push_back(pts[i]);
  const Point c = centroid(face);
  auto cross = [](const Vec& a, const Vec& b) {
    return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  const Vec ref = pts[ids[0]] - c;
  auto half = [&](const Vec& v) {
    // 0 for angles in [0, pi), 1 for [pi, 2pi) measured from ref.
    const int s = sign(dot(cross(ref, v), normal));
    if (s > 0) return 0;
    if (s < 0) return 1;
    return sign(dot(ref, v)) > 0 ? 0 : 1;
  };
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    const Vec va = pts[a] - c;
    const Vec vb = pts[b] - c;
    const int ha = half(va);
    const int hb = half(vb);
    if (ha != hb) return ha < hb;
    return sign(dot(cross(va, vb), normal)) > 0;
  });
  return ids;
}

}  // namespace

OffData read_off(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  for (std::string line; std::getline(in, line);) {
    auto toks = tokens_of(line);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  std::size_t at = 0;
  if (at < lines.size() && (lines[at][0] == "OFF" || lines[at][0] == "nOFF" || lines[at][0] == "4OFF")) {
    lines[at].erase(lines[at].begin());
    if (lines[at].empty()) ++at;
  }
  if (at >= lines.size()) throw ParseError("OFF: missing vertex count");
  const auto& counts = lines[at++];
  const std::size_t nv = parse_count(counts[0], "vertex count");
  const std::size_t nf = counts.size() > 1 ? parse_count(counts[1], "facet count") : 0;

  OffData data;
  std::size_t dim = 0;
  for (std::size_t i = 0; i < nv; ++i, ++at) {
    if (at >= lines.size()) throw ParseError("OFF: expected " + std::to_string(nv) + " vertices");
    const auto& toks = lines[at];
    if (dim == 0) {
      dim = toks.size();
      if (dim < 2 || dim > 4) throw ParseError("OFF: vertices must have 2 to 4 coordinates");
    }
    if (toks.size() != dim) throw ParseError("OFF: vertex " + std::to_string(i) + " has the wrong coordinate count");
    Point p(dim);
    for (std::size_t j = 0; j < dim; ++j) p[j] = parse_scalar(toks[j]);
    data.vertices.push_back(std::move(p));
  }
  for (std::size_t f = 0; f < nf; ++f, ++at) {
    if (at >= lines.size()) throw ParseError("OFF: expected " + std::to_string(nf) + " facets");
    const auto& toks = lines[at];
    const std::size_t m = parse_count(toks[0], "facet size");
    if (toks.size() < m + 1) throw ParseError("OFF: facet " + std::to_string(f) + " is truncated");
    std::vector<std::size_t> ids;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t id = parse_count(toks[j], "facet index");
      if (id >= nv) throw ParseError("OFF: facet index out of range");
      ids.push_back(id);
    }
    data.facets.push_back(std::move(ids));
  }
  if (data.vertices.empty()) throw ParseError("OFF: no vertices");
  return data;
}

OffData read_off_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_off(in);
}

void write_off(std::ostream& out, const VPolytope& polytope) {
  const auto& verts = polytope.vertices();
  out << "OFF\n" << verts.size() << ' ' << polytope.facets().size() << " 0\n";
  for (const auto& v : verts) {
    for (std::size_t i = 0; i < v.dim(); ++i) out << (i ? " " : "") << to_string(v[i]);
    out << '\n';
  }
  for (std::size_t f = 0; f < polytope.facets().size(); ++f) {
    auto ids = polytope.facet_vertices()[f];
    if (polytope.ambient_dim() == 3 && polytope.full_dimensional()) {
      ids = ccw_order(verts, ids, polytope.facets()[f].normal);
    }
    out << ids.size();
    for (auto i : ids) out << ' ' << i;
    out << '\n';
  }
}

std::string to_off(const VPolytope& polytope) {
  std::ostringstream ss;
  write_off(ss, polytope);
  return ss.str();
}

}  // namespace polysect
