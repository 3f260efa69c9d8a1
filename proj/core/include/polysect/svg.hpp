#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace polysect {

struct SvgLayer {
  std::vector<Eigen::Vector2d> points;
  /// Draw as a closed polygon; otherwise as loose dots.
  bool closed = true;
  /// Label points v0, v1, ... in order.
  bool labels = false;
  std::string stroke = "black";
};

/// Fixed size x size viewport fitted to the bounding box of every layer
/// with a 5% margin; y grows upward. Numbers use fixed 6-digit formatting
/// so equal input renders byte-identically.
std::string render_svg(const std::vector<SvgLayer>& layers, double size = 400.0);

}  // namespace polysect
