#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "polysect/body_oracle.hpp"
#include "polysect/error.hpp"
#include "polysect/section_sampling.hpp"

namespace polysect {
namespace {

using testing::cube;

TEST(Ball, SupportIsCenterDotPlusRadiusProperty) {
  const Eigen::Vector3d c(0.5, -1, 2);
  const auto ball = make_ball(c, 1.5);
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Eigen::VectorXd u = rng.unit_vector(3);
    const auto s = ball->support(u);
    EXPECT_NEAR(s.value, c.dot(u) + 1.5, ball->tolerance());
    EXPECT_NEAR(u.dot(s.point), s.value, ball->tolerance());
  }
  EXPECT_NEAR(make_ball(Eigen::Vector3d::Zero(), 1)->support(Eigen::Vector3d(0, 0, 1)).value, 1.0, 1e-15);
}

TEST(Ball, MembershipAndClip) {
  const auto ball = make_ball(Eigen::Vector3d::Zero(), 1);
  EXPECT_EQ(ball->membership(Eigen::Vector3d(0, 0, 0)), Membership::inside);
  EXPECT_EQ(ball->membership(Eigen::Vector3d(1, 0, 0)), Membership::boundary);
  EXPECT_EQ(ball->membership(Eigen::Vector3d(2, 0, 0)), Membership::outside);
  const auto iv = ball->clip_line(Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(1, 0, 0));
  ASSERT_TRUE(iv);
  EXPECT_NEAR(iv->lo, -1, 1e-12);
  EXPECT_NEAR(iv->hi, 1, 1e-12);
  EXPECT_FALSE(ball->clip_line(Eigen::Vector3d(0, 0, 2), Eigen::Vector3d(1, 0, 0)));
}

TEST(Oracles, InvalidParametersThrow) {
  EXPECT_THROW(make_ball(Eigen::Vector3d::Zero(), 0), PreconditionFailed);
  EXPECT_THROW(make_ellipsoid(Eigen::Vector3d::Zero(), Eigen::Vector3d(1, -1, 1)), PreconditionFailed);
  const std::vector<Point> flat{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  EXPECT_THROW(wrap_polytope(convex_hull(flat)), PreconditionFailed);
}

TEST(Ellipsoid, AxisSupport) {
  const auto e = make_ellipsoid(Eigen::Vector3d::Zero(), Eigen::Vector3d(2, 1, 1));
  EXPECT_NEAR(e->support(Eigen::Vector3d(1, 0, 0)).value, 2.0, 1e-15);
  EXPECT_NEAR(e->support(Eigen::Vector3d(0, 1, 0)).value, 1.0, 1e-15);
  EXPECT_EQ(e->membership(Eigen::Vector3d(1.9, 0, 0)), Membership::inside);
  EXPECT_EQ(e->membership(Eigen::Vector3d(0, 1.1, 0)), Membership::outside);
}

TEST(Oracles, SupportIsSublinearProperty) {
  const std::vector<BodyPtr> bodies{make_ball(Eigen::Vector3d(0.1, 0.2, 0.3), 1),
                                    make_ellipsoid(Eigen::Vector3d::Zero(), Eigen::Vector3d(2, 1, 0.5)),
                                    wrap_polytope(cube()), glue_cap(cube(), 0, 0.3)};
  Rng rng(9);
  for (const auto& b : bodies) {
    for (int i = 0; i < 200; ++i) {
      const Eigen::VectorXd u = rng.unit_vector(3);
      const Eigen::VectorXd v = rng.unit_vector(3);
      const double huv = b->support(u + v).value;
      EXPECT_LE(huv, b->support(u).value + b->support(v).value + 4 * std::max(b->tolerance(), 1e-12)) << b->kind();
      const auto s = b->support(u);
      EXPECT_LE(std::abs(u.dot(s.point) - s.value), std::max(b->tolerance(), 1e-12)) << b->kind();
      EXPECT_NE(b->membership(s.point), Membership::outside) << b->kind();
    }
  }
}

TEST(WrapPolytope, SupportOnDiagonalAndVertexPoints) {
  const auto c = wrap_polytope(cube());
  EXPECT_TRUE(c->exact());
  EXPECT_EQ(c->tolerance(), 0.0);
  const Eigen::Vector3d u = Eigen::Vector3d(1, 1, 1).normalized();
  EXPECT_NEAR(c->support(u).value, std::sqrt(3.0), 1e-15);
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto s = c->support(rng.unit_vector(3));
    bool is_vertex = false;
    const auto corners = cube();
    for (const auto& v : corners.vertices()) is_vertex |= (to_eigen(v) - s.point).norm() == 0;
    EXPECT_TRUE(is_vertex);
  }
  EXPECT_EQ(c->membership(Eigen::Vector3d(1, 0.5, 0)), Membership::boundary);
  EXPECT_EQ(c->membership(Eigen::Vector3d(1 + 1e-15, 0, 0)), Membership::outside);
}

TEST(GlueCap, BulgesAboveFacetAndKeepsRestOfCube) {
  std::size_t facet = 0;
  for (std::size_t i = 0; i < cube().facets().size(); ++i) {
    if (canonical(cube().facets()[i]).normal == Vec({1, 0, 0})) facet = i;
  }
  const auto cap = glue_cap(cube(), facet, 0.25);
  EXPECT_NEAR(cap->support(Eigen::Vector3d(1, 0, 0)).value, 1.25, 1e-9);
  EXPECT_NEAR(cap->support(Eigen::Vector3d(-1, 0, 0)).value, 1.0, 1e-9);
  EXPECT_EQ(cap->membership(Eigen::Vector3d(1.2, 0, 0)), Membership::inside);
  EXPECT_EQ(cap->membership(Eigen::Vector3d(1.2, 0.99, 0.99)), Membership::outside);
  EXPECT_EQ(cap->membership(Eigen::Vector3d(-0.99, 0.99, 0.99)), Membership::inside);
}

TEST(GlueCap, RejectsHeightsThatBreakConvexity) {
  EXPECT_THROW(glue_cap(testing::octahedron(), 0, 5.0), PreconditionFailed);
  EXPECT_THROW(glue_cap(cube(), 0, -0.1), PreconditionFailed);
  EXPECT_THROW(glue_cap(cube(), 99, 0.1), PreconditionFailed);
}

TEST(GlueCap, MembershipMonotoneAlongRaysProperty) {
  const auto cap = glue_cap(cube(), 1, 0.4);
  const Eigen::VectorXd c = cap->interior_point();
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Eigen::VectorXd u = rng.unit_vector(3);
    bool left = false;
    for (int k = 0; k <= 60; ++k) {
      const auto m = cap->membership(c + 0.05 * k * u);
      if (left) EXPECT_EQ(m, Membership::outside);
      if (m == Membership::outside) left = true;
    }
    EXPECT_TRUE(left);
  }
}

TEST(SampleSection, BallCircleAtHalfHeight) {
  const auto ball = make_ball(Eigen::Vector3d::Zero(), 1);
  const auto s = sample_section_boundary(*ball, AffineFlat::hyperplane(Vec({0, 0, 1}), Scalar(1, 2)), 8);
  ASSERT_EQ(s.size(), 8u);
  for (const auto& p : s.ambient) {
    EXPECT_NEAR(std::hypot(p[0], p[1]), std::sqrt(3.0) / 2, 1e-9);
    EXPECT_NEAR(p[2], 0.5, 1e-12);
  }
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_GT(s.angles[i], s.angles[i - 1]);
}

TEST(SampleSection, CubeSquareAtAxisAngles) {
  const auto c = wrap_polytope(cube());
  const auto s = sample_section_boundary(*c, AffineFlat::hyperplane(Vec({0, 0, 1}), 0), 4);
  for (const auto& p : s.ambient) {
    EXPECT_NEAR(std::max(std::abs(p[0]), std::abs(p[1])), 1.0, 1e-12);
    EXPECT_NEAR(p[2], 0.0, 1e-15);
  }
}

TEST(SampleSection, FlatMissingBallThrows) {
  const auto ball = make_ball(Eigen::Vector3d::Zero(), 1);
  EXPECT_THROW(sample_section_boundary(*ball, AffineFlat::hyperplane(Vec({0, 0, 1}), 2), 8), FlatMissesInterior);
  EXPECT_THROW(sample_section_boundary(*ball, AffineFlat::hyperplane(Vec({0, 0, 1}), 1), 8), FlatMissesInterior);
}

TEST(SampleSection, SmoothSectionsAreStrictlyConvexProperty) {
  const std::vector<BodyPtr> bodies{make_ball(Eigen::Vector3d::Zero(), 1),
                                    make_ellipsoid(Eigen::Vector3d::Zero(), Eigen::Vector3d(2, 1, 1))};
  Rng rng(6);
  for (const auto& b : bodies) {
    for (int t = 0; t < 10; ++t) {
      const Vec n = random_direction(3, rng, 8);
      const auto s = sample_section_boundary(*b, AffineFlat::hyperplane(n, 0), 24);
      std::vector<Vec> pts;
      for (const auto& p : s.points) pts.push_back(rationalize(Eigen::VectorXd(p), 40));
      EXPECT_EQ(testing::planar_extreme_points(pts).size(), pts.size());
    }
  }
}

}  // namespace
}  // namespace polysect
