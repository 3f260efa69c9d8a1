#include "polysect/polygonality.hpp"

#include <cmath>

#include "polysect/error.hpp"

namespace polysect {

double FittedEdge::distance(const Eigen::Vector2d& x) const {
  const Eigen::Vector2d rel = x - point;
  return std::abs(rel.x() * direction.y() - rel.y() * direction.x());
}

double triangle_area(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
  const Eigen::Vector2d u = b - a;
  const Eigen::Vector2d v = c - a;
  return 0.5 * std::abs(u.x() * v.y() - u.y() * v.x());
}

namespace {

FittedEdge fit(std::span<const Eigen::Vector2d> pts, std::size_t first, std::size_t last) {
  const Eigen::Vector2d a = pts[first];
  const Eigen::Vector2d b = pts[last];
  return {first, last, a, (b - a).normalized()};
}

std::optional<Eigen::Vector2d> intersect(const FittedEdge& e, const FittedEdge& f) {
  const double det = e.direction.x() * f.direction.y() - e.direction.y() * f.direction.x();
  if (std::abs(det) < 1e-15) return std::nullopt;
  const Eigen::Vector2d rel = f.point - e.point;
  const double t = (rel.x() * f.direction.y() - rel.y() * f.direction.x()) / det;
  return e.point + t * e.direction;
}

}  // namespace

PolygonalityResult polygonality_detect(std::span<const Eigen::Vector2d> pts, double tau) {
  const std::size_t n = pts.size();
  if (n < 8) throw PreconditionFailed("polygonality detection needs at least 8 points");
  if (!(tau >= 0)) throw PreconditionFailed("tolerance must be nonnegative");

  double diam = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) diam = std::max(diam, (pts[i] - pts[j]).norm());
  }
  PolygonalityResult out;
  out.area_threshold = tau * diam * diam;
  out.distance_threshold = 2 * tau * diam;

  auto prev = [n](std::size_t i) { return (i + n - 1) % n; };
  auto next = [n](std::size_t i) { return (i + 1) % n; };
  std::vector<double> area(n);
  std::vector<bool> collinear(n);
  for (std::size_t i = 0; i < n; ++i) {
    area[i] = triangle_area(pts[prev(i)], pts[i], pts[next(i)]);
    collinear[i] = area[i] <= out.area_threshold;
  }

  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!collinear[i]) {
      start = i;
      break;
    }
  }
  if (start == n) {
    // Every triple collinear: the samples lie on one line.
    out.edges.push_back(fit(pts, 0, n - 1));
  } else {
    std::optional<std::size_t> run_begin;
    std::size_t run_end = start;
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t i = (start + k) % n;
      if (collinear[i]) {
        if (!run_begin) run_begin = i;
        run_end = i;
      } else if (run_begin) {
        out.edges.push_back(fit(pts, prev(*run_begin), next(run_end)));
        run_begin.reset();
      }
    }
    // Merge cyclically adjacent runs lying on one line.
    bool merged = true;
    while (merged && out.edges.size() > 1) {
      merged = false;
      for (std::size_t e = 0; e < out.edges.size(); ++e) {
        const std::size_t f = (e + 1) % out.edges.size();
        if (e == f) break;
        const auto& a = out.edges[e];
        const auto& b = out.edges[f];
        if (a.distance(pts[b.first]) <= out.distance_threshold && a.distance(pts[b.last]) <= out.distance_threshold) {
          FittedEdge joined = fit(pts, a.first, b.last);
          if (f == 0) {
            out.edges.front() = joined;
            out.edges.pop_back();
          } else {
            out.edges[e] = joined;
            out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(f));
          }
          merged = true;
          break;
        }
      }
    }
  }

  for (std::size_t p = 0; p < n && !out.witness; ++p) {
    bool on_line = false;
    for (const auto& e : out.edges) {
      if (e.distance(pts[p]) <= out.distance_threshold) {
        on_line = true;
        break;
      }
    }
    if (!on_line) {
      out.witness = std::array<std::size_t, 3>{prev(p), p, next(p)};
      out.witness_area = area[p];
    }
  }

  out.polygon = !out.witness && 3 * out.edges.size() < n;
  if (!out.polygon && !out.witness) {
    std::size_t worst = 0;
    for (std::size_t p = 1; p < n; ++p) {
      if (area[p] > area[worst]) worst = p;
    }
    out.witness = std::array<std::size_t, 3>{prev(worst), worst, next(worst)};
    out.witness_area = area[worst];
  }
  if (out.polygon && out.edges.size() > 1) {
    for (std::size_t e = 0; e < out.edges.size(); ++e) {
      if (auto v = intersect(out.edges[e], out.edges[(e + 1) % out.edges.size()])) out.vertex_estimate.push_back(*v);
    }
  }
  return out;
}

PolygonalityResult polygonality_detect(const SectionSample& sample, double tau) {
  return polygonality_detect(std::span<const Eigen::Vector2d>(sample.points), tau);
}

}  // namespace polysect
