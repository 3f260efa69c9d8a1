#include "polysect/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace polysect {
namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string render_svg(const std::vector<SvgLayer>& layers, double size) {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = xmin;
  double xmax = -xmin;
  double ymax = -xmin;
  for (const auto& layer : layers) {
    for (const auto& p : layer.points) {
      xmin = std::min(xmin, p.x());
      xmax = std::max(xmax, p.x());
      ymin = std::min(ymin, p.y());
      ymax = std::max(ymax, p.y());
    }
  }
  if (xmin > xmax) xmin = ymin = -1, xmax = ymax = 1;
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double margin = 0.05 * size;
  const double scale = (size - 2 * margin) / span;
  const double cx = 0.5 * (xmin + xmax);
  const double cy = 0.5 * (ymin + ymax);
  auto sx = [&](double x) { return 0.5 * size + (x - cx) * scale; };
  auto sy = [&](double y) { return 0.5 * size - (y - cy) * scale; };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(size) + "\" height=\"" + num(size) +
         "\" viewBox=\"0 0 " + num(size) + " " + num(size) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(size) + "\" height=\"" + num(size) + "\" fill=\"white\"/>\n";
  for (const auto& layer : layers) {
    if (layer.closed && layer.points.size() >= 2) {
      out += "<polygon fill=\"none\" stroke=\"" + layer.stroke + "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < layer.points.size(); ++i) {
        if (i) out += ' ';
        out += num(sx(layer.points[i].x())) + "," + num(sy(layer.points[i].y()));
      }
      out += "\"/>\n";
    }
    for (std::size_t i = 0; i < layer.points.size(); ++i) {
      const auto& p = layer.points[i];
      out += "<circle cx=\"" + num(sx(p.x())) + "\" cy=\"" + num(sy(p.y())) + "\" r=\"3\" fill=\"" + layer.stroke + "\"/>\n";
      if (layer.labels) {
        out += "<text x=\"" + num(sx(p.x()) + 5) + "\" y=\"" + num(sy(p.y()) - 5) +
               "\" font-family=\"monospace\" font-size=\"12\">v" + std::to_string(i) + "</text>\n";
      }
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace polysect
