#include <benchmark/benchmark.h>

#include <vector>

#include "polysect/body_oracle.hpp"
#include "polysect/polygonality.hpp"
#include "polysect/polytope.hpp"
#include "polysect/random.hpp"
#include "polysect/section_sampling.hpp"
#include "polysect/silhouette.hpp"

using namespace polysect;

namespace {

std::vector<Point> random_points(std::size_t dim, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < count; ++i) pts.push_back(random_direction(dim, rng, 10));
  return pts;
}

AffineFlat random_plane(std::size_t dim, Rng& rng) {
  const std::vector<Vector> dirs{random_direction(dim, rng, 10), random_direction(dim, rng, 10)};
  return AffineFlat::spanned_by(Point(dim), dirs);
}

void BM_ConvexHull(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto pts = random_points(dim, static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts));
}
BENCHMARK(BM_ConvexHull)->Args({3, 20})->Args({3, 60})->Args({4, 20})->Args({4, 40})->Unit(benchmark::kMillisecond);

void BM_SectionVertexRoute(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const auto body = random_polytope(dim, 28, rng);
  const auto flat = random_plane(dim, rng);
  for (auto _ : state) benchmark::DoNotOptimize(section(body, flat));
}
BENCHMARK(BM_SectionVertexRoute)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SectionHalfspaceRoute(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const auto body = random_polytope(dim, 28, rng).h_form();
  const auto flat = random_plane(dim, rng);
  for (auto _ : state) benchmark::DoNotOptimize(section(body, flat));
}
BENCHMARK(BM_SectionHalfspaceRoute)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ShadowWalk(benchmark::State& state) {
  Rng rng(3);
  const auto body = random_polytope(3, static_cast<std::size_t>(state.range(0)), rng);
  const Vector xi = random_direction(3, rng, 10);
  for (auto _ : state) benchmark::DoNotOptimize(shadow_walk(body, xi));
}
BENCHMARK(BM_ShadowWalk)->Arg(12)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_BoundarySampling(benchmark::State& state) {
  const auto ball = make_ball(Eigen::Vector3d::Zero(), 1);
  const auto flat = AffineFlat::hyperplane(Vec({1, 2, 2}), 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_section_boundary(*ball, flat, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BoundarySampling)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_PolygonalityDetect(benchmark::State& state) {
  const auto ball = make_ball(Eigen::Vector3d::Zero(), 1);
  const auto sample = sample_section_boundary(*ball, AffineFlat::hyperplane(Vec({0, 0, 1}), 0),
                                              static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(polygonality_detect(sample, 1e-9));
}
BENCHMARK(BM_PolygonalityDetect)->Arg(64)->Arg(1024)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
