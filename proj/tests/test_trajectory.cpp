#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "mobsamp/rng.hpp"
#include "mobsamp/trajectory.hpp"

namespace {

using namespace mobsamp;

Trajectory integer_vertical_lines() {
  return Trajectory::parallel_lines(Direction{0.0, 1.0}, DiscreteSet::arithmetic(1.0));
}

// Quadrature oracle: resample the trajectory densely and accumulate the
// polyline length inside the ball.
double quadrature_length_in_ball(const Trajectory& P, const Vec2& c, double r, double h = 1e-4) {
  const Bbox box{{c.x - r - 1.0, c.y - r - 1.0}, {c.x + r + 1.0, c.y + r + 1.0}};
  const DiscretePath path = discretize(P, h, box);
  double total = 0.0;
  for (const auto& comp : path.components) {
    const std::size_t m = comp.points.size();
    for (std::size_t i = 0; i + 1 < m; ++i)
      total += detail::segment_length_in_ball(comp.points[i], comp.points[i + 1], c, r);
    if (comp.closed && m > 1)
      total += detail::segment_length_in_ball(comp.points.back(), comp.points.front(), c, r);
  }
  return total;
}

TEST(ArcLength, LineThroughCenter) {
  const Trajectory P =
      Trajectory::parallel_lines(Direction{0.0, 1.0}, DiscreteSet::explicit1d({0.0}, 100.0));
  for (double r : {0.5, 1.0, 3.0}) EXPECT_NEAR(arc_length_in_ball(P, {0.0, 0.0}, r), 2.0 * r, 1e-12);
}

TEST(ArcLength, CircleInsideBall) {
  const Trajectory P =
      Trajectory::translated_circles(1.0, DiscreteSet::explicit2d({{2.0, 1.0}}, 100.0));
  EXPECT_NEAR(arc_length_in_ball(P, {2.0, 1.0}, 3.0), 2.0 * M_PI, 1e-12);
  // Ball strictly inside the circle's hole contributes nothing.
  EXPECT_NEAR(arc_length_in_ball(P, {2.0, 1.0}, 0.5), 0.0, 1e-12);
}

TEST(ArcLength, IntegerLinesChords) {
  const Trajectory P = integer_vertical_lines();
  const double s = arc_length_in_ball(P, {0.5, 0.0}, 1.0);
  EXPECT_NEAR(s, 2.0 * std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(s, quadrature_length_in_ball(P, {0.5, 0.0}, 1.0), 2e-3);
}

TEST(ArcLength, MonotoneAndAdditive) {
  const Trajectory P = integer_vertical_lines();
  double prev = 0.0;
  for (double r = 0.2; r < 4.0; r += 0.2) {
    const double s = arc_length_in_ball(P, {0.3, 0.7}, r);
    EXPECT_GE(s, prev - 1e-12);
    prev = s;
  }
  // Additivity over disjoint components: two far-apart circles.
  const Trajectory twoc = Trajectory::translated_circles(
      0.5, DiscreteSet::explicit2d({{0.0, 0.0}, {3.0, 0.0}}, 100.0));
  const double both = arc_length_in_ball(twoc, {1.5, 0.0}, 10.0);
  EXPECT_NEAR(both, 2.0 * (2.0 * M_PI * 0.5), 1e-12);
}

TEST(ArcLength, TruncationGuard) {
  const Trajectory P =
      Trajectory::parallel_lines(Direction{0.0, 1.0}, DiscreteSet::explicit1d({0.0, 1.0}, 2.0));
  EXPECT_THROW(arc_length_in_ball(P, {10.0, 0.0}, 1.0), Error);
}

TEST(ArcLength, DilatedPolygonPerimeterScaling) {
  const ConvexBody square = ConvexBody::axis_box(-1, -1, 1, 1);
  Rng rng(3);
  for (int iter = 0; iter < 10; ++iter) {
    const double q = 0.5 + 4.0 * rng.uniform01();
    const Trajectory P =
        Trajectory::dilated_boundary(square, DiscreteSet::explicit1d({q}, 100.0));
    // Ball large enough to hold the whole dilate.
    const double total = arc_length_in_ball(P, {0.0, 0.0}, 10.0 * q);
    EXPECT_NEAR(total, q * square.perimeter(), 1e-12 * q * square.perimeter());
  }
}

TEST(UpperLength, StructuredBounds) {
  const UpperLengthReport lines = check_upper_length_condition(integer_vertical_lines(), 1.0);
  EXPECT_EQ(lines.status, UpperLengthReport::Status::Holds);
  EXPECT_LE(lines.bound, 6.0 + 1e-12);

  const Trajectory circles =
      Trajectory::dilated_boundary(ConvexBody::disk({0, 0}, 1.0), DiscreteSet::ray(1.0, 1.0));
  const UpperLengthReport rep = check_upper_length_condition(circles, 1.0);
  EXPECT_EQ(rep.status, UpperLengthReport::Status::Holds);
  EXPECT_LE(rep.bound, 3.0 * 2.0 * M_PI + 1e-12);

  // The structural bound dominates the measured supremum.
  Rng rng(9);
  for (int i = 0; i < 25; ++i) {
    const Vec2 c{20.0 * rng.uniform01(), 20.0 * (rng.uniform01() - 0.5)};
    EXPECT_LE(arc_length_in_ball(circles, c, 1.0), rep.bound + 1e-9);
    EXPECT_LE(arc_length_in_ball(integer_vertical_lines(), c, 1.0), lines.bound + 1e-9);
  }
}

TEST(UpperLength, RandomizedStructuredFamiliesHold) {
  Rng rng(15);
  for (int iter = 0; iter < 15; ++iter) {
    const double step = 0.3 + 2.0 * rng.uniform01();
    const double r = 0.5 + 2.0 * rng.uniform01();
    EXPECT_EQ(check_upper_length_condition(
                  Trajectory::parallel_lines(Direction{rng.normal(), rng.normal()},
                                             DiscreteSet::arithmetic(step)),
                  r)
                  .status,
              UpperLengthReport::Status::Holds);
    EXPECT_EQ(check_upper_length_condition(
                  Trajectory::translated_circles(0.2 + rng.uniform01(),
                                                 DiscreteSet::lattice({step, 0}, {0, step})),
                  r)
                  .status,
              UpperLengthReport::Status::Holds);
  }
}

TEST(UpperLength, DegeneratePolylineFlagged) {
  const Trajectory pt = Trajectory::polyline({{{0.0, 0.0}}});
  EXPECT_EQ(check_upper_length_condition(pt, 1.0).status, UpperLengthReport::Status::Violated);
  const Trajectory zero_edge = Trajectory::polyline({{{0.0, 0.0}, {0.0, 0.0}}});
  EXPECT_EQ(check_upper_length_condition(zero_edge, 1.0).status,
            UpperLengthReport::Status::Violated);
  // A proper polyline with no grid is indeterminate, with a grid it holds.
  const Trajectory seg = Trajectory::polyline({{{0.0, 0.0}, {4.0, 0.0}}});
  EXPECT_EQ(check_upper_length_condition(seg, 1.0).status,
            UpperLengthReport::Status::Indeterminate);
  std::vector<Vec2> grid;
  for (double x = -1.0; x <= 5.0; x += 0.25) grid.push_back({x, 0.0});
  const UpperLengthReport rep = check_upper_length_condition(seg, 1.0, grid);
  EXPECT_EQ(rep.status, UpperLengthReport::Status::Holds);
  EXPECT_NEAR(rep.bound, 2.0, 1e-12);
}

TEST(LowerLength, StructuredFamiliesPass) {
  EXPECT_TRUE(check_local_lower_length(integer_vertical_lines(), 1.0).holds);
  const Trajectory circles = Trajectory::translated_circles(
      1.0, DiscreteSet::lattice({4.0, 0.0}, {0.0, 4.0}));
  EXPECT_TRUE(check_local_lower_length(circles, 0.5).holds);
  // Circle arc inside B_delta(x) has length >= 2 delta: oracle check
  // against the closed-form arc of one circle through x.
  for (double delta : {0.1, 0.3, 0.5}) {
    const double arc = 4.0 * std::asin(delta / 2.0);  // radius 1 circle
    EXPECT_GE(arc, 2.0 * delta - 1e-12);
  }
}

TEST(LowerLength, ShortSegmentsViolate) {
  std::vector<std::vector<Vec2>> chains;
  for (int k = 0; k < 6; ++k)
    chains.push_back({{3.0 * k, 0.0}, {3.0 * k + 0.01, 0.0}});
  const Trajectory P = Trajectory::polyline(chains);
  const LowerLengthReport rep = check_local_lower_length(P, 0.5, {{0.0, 0.0}});
  EXPECT_FALSE(rep.holds);
  ASSERT_TRUE(rep.violation.has_value());
  EXPECT_NEAR(rep.violation->x, 0.0, 1e-12);
}

TEST(Discretize, CircleEquallySpaced) {
  const Trajectory P =
      Trajectory::translated_circles(1.0, DiscreteSet::explicit2d({{0.0, 0.0}}, 10.0));
  const double eta = 2.0 * M_PI / 8.0;
  const DiscretePath path = discretize(P, eta, Bbox{{-2, -2}, {2, 2}});
  ASSERT_EQ(path.components.size(), 1u);
  EXPECT_TRUE(path.components[0].closed);
  ASSERT_EQ(path.components[0].points.size(), 8u);
  const double sep = dist(path.components[0].points[0], path.components[0].points[1]);
  EXPECT_NEAR(sep, 2.0 * std::sin(M_PI / 8.0), 1e-12);
  EXPECT_GE(sep, eta / 2.0);
}

TEST(Discretize, SegmentEndpoints) {
  const Trajectory P = Trajectory::polyline({{{0.0, 0.0}, {1.0, 0.0}}});
  const DiscretePath path = discretize(P, 0.25, Bbox{{-1, -1}, {2, 1}});
  ASSERT_EQ(path.components.size(), 1u);
  EXPECT_EQ(path.components[0].points.size(), 5u);
  EXPECT_NEAR(path.components[0].arc_param.back(), 1.0, 1e-12);
}

TEST(Discretize, IntegerLinesCoverage) {
  const Trajectory P = integer_vertical_lines();
  const double eta = 0.5;
  const Bbox box{{0, 0}, {1, 1}};
  const DiscretePath path = discretize(P, eta, box);
  ASSERT_GE(path.components.size(), 2u);
  for (const auto& comp : path.components)
    for (const Vec2& p : comp.points) {
      EXPECT_TRUE(std::abs(p.x - 0.0) < 1e-12 || std::abs(p.x - 1.0) < 1e-12);
    }
  // Covering contract: densely resampled P within the box lies within eta
  // of the sample set (directed Hausdorff).
  const std::vector<Vec2> samples = path.flat_points();
  for (double x : {0.0, 1.0})
    for (double y = 0.0; y <= 1.0; y += 0.01) {
      double best = 1e300;
      for (const Vec2& q : samples) best = std::min(best, dist({x, y}, q));
      EXPECT_LE(best, eta);
    }
}

TEST(Discretize, CoveringContractOnRandomFamilies) {
  Rng rng(21);
  for (int iter = 0; iter < 6; ++iter) {
    const double eta = 0.2 + 0.3 * rng.uniform01();
    const Bbox box{{-3, -3}, {3, 3}};
    const Trajectory P = Trajectory::dilated_boundary(
        ConvexBody::disk({0, 0}, 1.0), DiscreteSet::ray(0.8 + rng.uniform01(), 0.5 + rng.uniform01()));
    const DiscretePath coarse = discretize(P, eta, box);
    const DiscretePath fine = discretize(P, eta / 20.0, box);
    const std::vector<Vec2> samples = coarse.flat_points();
    for (const auto& comp : fine.components)
      for (const Vec2& p : comp.points) {
        if (!box.contains(p)) continue;
        double best = 1e300;
        for (const Vec2& q : samples) best = std::min(best, dist(p, q));
        EXPECT_LE(best, eta + 1e-9);
      }
  }
}

}  // namespace
