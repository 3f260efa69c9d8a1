#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "polysect/polytope.hpp"

namespace polysect {

/// Seeded generator whose derived distributions are implemented here, so
/// streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }
  /// Standard normal via Box-Muller.
  double normal();
  Eigen::VectorXd gaussian(std::size_t dim);
  Eigen::VectorXd unit_vector(std::size_t dim);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0;
  bool has_spare_ = false;
};

/// k orthonormal vectors from Gram-Schmidt on Gaussian samples.
std::vector<Eigen::VectorXd> random_orthonormal_frame(std::size_t dim, std::size_t k, Rng& rng);

/// Hull of `count` points with radii in [0.6, 1] and coordinates on the grid
/// 2^-bits, redrawn until the origin is an interior point.
VPolytope random_polytope(std::size_t dim, std::size_t count, Rng& rng, unsigned bits = 10);

/// Random rational direction with coordinates on the grid 2^-bits.
Vector random_direction(std::size_t dim, Rng& rng, unsigned bits = 20);

}  // namespace polysect
