#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "mobsamp/density.hpp"
#include "mobsamp/rng.hpp"

namespace {

using namespace mobsamp;

// Brute-force open-disk count for 2-D integer lattices.
std::int64_t brute_count_z2(double t) {
  const int b = static_cast<int>(std::ceil(t)) + 1;
  std::int64_t n = 0;
  for (int x = -b; x <= b; ++x)
    for (int y = -b; y <= b; ++y)
      if (x * x + y * y < t * t) ++n;
  return n;
}

TEST(Separation, ExactForms) {
  EXPECT_DOUBLE_EQ(separation(DiscreteSet::arithmetic(1.0)), 1.0);
  EXPECT_DOUBLE_EQ(separation(DiscreteSet::explicit1d({0.0, 0.5, 2.0}, 10.0)), 0.5);
  EXPECT_DOUBLE_EQ(separation(DiscreteSet::lattice({1, 0}, {0, 2})), 1.0);
  // A skewed basis still reduces to the shortest vector.
  EXPECT_NEAR(separation(DiscreteSet::lattice({1, 0}, {5, 1})), 1.0, 1e-12);
  EXPECT_THROW(separation(DiscreteSet::explicit1d({1.0}, 10.0)), Error);
}

TEST(Separation, ScaleEquivariance) {
  Rng rng(5);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<double> pts;
    double x = 0.0;
    for (int i = 0; i < 12; ++i) {
      x += 0.5 + rng.uniform01();
      pts.push_back(x);
    }
    const double a = 0.25 + 4.0 * rng.uniform01();
    std::vector<double> scaled = pts;
    for (double& v : scaled) v *= a;
    const double s1 = separation(DiscreteSet::explicit1d(pts, 100.0));
    const double s2 = separation(DiscreteSet::explicit1d(scaled, 100.0 * a));
    EXPECT_NEAR(s2, a * s1, 1e-12 * a);
  }
}

TEST(LowerUniformDensity, ExactValues) {
  const DensityReport z = lower_uniform_density(DiscreteSet::arithmetic(1.0));
  EXPECT_TRUE(z.exact);
  EXPECT_DOUBLE_EQ(z.value, 1.0);

  const DensityReport q = lower_uniform_density(DiscreteSet::arithmetic(0.25));
  EXPECT_DOUBLE_EQ(q.value, 4.0);

  const DensityReport l = lower_uniform_density(DiscreteSet::lattice({1, 0}, {0, 1}));
  EXPECT_TRUE(l.exact);
  EXPECT_DOUBLE_EQ(l.value, 1.0);

  EXPECT_DOUBLE_EQ(lower_uniform_density(DiscreteSet::lattice({2, 0}, {0, 1})).value, 0.5);
}

TEST(LowerUniformDensity, OffsetDoesNotMatter) {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const double a = 0.2 + 3.0 * rng.uniform01();
    const double b = 10.0 * (rng.uniform01() - 0.5);
    EXPECT_DOUBLE_EQ(lower_uniform_density(DiscreteSet::arithmetic(a, b)).value, 1.0 / a);
  }
}

TEST(LowerUniformDensity, WindowedEdgeAndGapBehavior) {
  // Truncated integers: interior windows give density ~1.
  std::vector<double> zpts;
  for (int k = -100; k <= 100; ++k) zpts.push_back(k);
  DensityOptions opt;
  opt.schedule = {10.0, 25.0, 50.0};
  const DensityReport r = lower_uniform_density(DiscreteSet::explicit1d(zpts, 100.0), opt);
  EXPECT_FALSE(r.exact);
  EXPECT_DOUBLE_EQ(r.window_radius, 50.0);
  EXPECT_NEAR(r.value, 1.0, 0.05);

  // Exponential gaps: some window is empty, the inf-count is zero.
  std::vector<Vec2> sparse;
  for (int k = 0; k <= 9; ++k) sparse.push_back({std::pow(2.0, k), 0.0});
  DensityOptions opt2;
  opt2.schedule = {8.0, 16.0, 64.0};
  const DensityReport s = lower_uniform_density(DiscreteSet::explicit2d(sparse, 1024.0), opt2);
  EXPECT_DOUBLE_EQ(s.value, 0.0);

  // A 1-D set in the plane has 2-D density zero: off-axis windows are empty.
  std::vector<Vec2> axis;
  for (int k = -60; k <= 60; ++k) axis.push_back({static_cast<double>(k), 0.0});
  DensityOptions opt3;
  opt3.schedule = {5.0, 15.0};
  EXPECT_DOUBLE_EQ(lower_uniform_density(DiscreteSet::explicit2d(axis, 60.0), opt3).value, 0.0);
}

TEST(LowerUniformDensity, WindowedMonotoneUnderRefinement) {
  // Lattice plus one extra point: windowed estimates are non-increasing in
  // the window radius.
  std::vector<Vec2> pts;
  for (int x = -30; x <= 30; ++x)
    for (int y = -30; y <= 30; ++y) pts.push_back({static_cast<double>(x), static_cast<double>(y)});
  pts.push_back({0.5, 0.5});
  const DiscreteSet s = DiscreteSet::explicit2d(pts, 42.0);
  double prev = std::numeric_limits<double>::infinity();
  for (double r : {4.0, 8.0, 16.0}) {
    DensityOptions opt;
    opt.schedule = {r};
    const double v = lower_uniform_density(s, opt).value;
    EXPECT_LE(v, prev + 1e-12);
    prev = v;
  }
}

TEST(LowerUniformDensity, ScheduleValidation) {
  const DiscreteSet s = DiscreteSet::explicit1d({0.0, 1.0, 2.0}, 10.0);
  DensityOptions opt;
  opt.schedule = {2.0, 6.0};  // 6 > r_trunc / 2
  EXPECT_THROW(lower_uniform_density(s, opt), Error);
}

TEST(SymmetrizedDensity, RaysAndTranslates) {
  // N = {1, 2, 3, ...}: the symmetrization is Z minus 0.
  EXPECT_DOUBLE_EQ(symmetrized_density(DiscreteSet::ray(1.0, 1.0)).value, 1.0);
  EXPECT_TRUE(symmetrized_density(DiscreteSet::ray(1.0, 1.0)).exact);
  // 2N.
  EXPECT_DOUBLE_EQ(symmetrized_density(DiscreteSet::ray(2.0, 2.0)).value, 0.5);
  // Translated copies keep the step density.
  EXPECT_DOUBLE_EQ(symmetrized_density(DiscreteSet::ray(1.0, 1.3)).value, 1.0);
}

TEST(SymmetrizedDensity, RejectsNonPositive) {
  EXPECT_THROW(symmetrized_density(DiscreteSet::arithmetic(1.0)), Error);
  EXPECT_THROW(symmetrized_density(DiscreteSet::explicit1d({-1.0, 2.0}, 10.0)), Error);
  EXPECT_THROW(symmetrized_density(DiscreteSet::ray(1.0, 0.0)), Error);
}

TEST(SymmetrizedDensity, BruteForceCrossCheck) {
  // The symmetrized window count splits into two one-sided counts; on
  // finite truncated data both densities are governed by their emptiest
  // windows, which the raw point lists exhibit directly.
  Rng rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<double> q;
    double x = 0.5 + rng.uniform01();
    for (int i = 0; i < 15; ++i) {
      q.push_back(x);
      x += 0.5 + rng.uniform01();
    }
    const double R = 4.0 * x;
    const DiscreteSet qset = DiscreteSet::explicit1d(q, R);
    std::vector<double> sym = q;
    for (double v : q) sym.push_back(-v);
    const DiscreteSet symset = DiscreteSet::explicit1d(sym, R);
    DensityOptions opt;
    opt.schedule = {R / 8.0, R / 2.0};
    const double lhs = symmetrized_density(qset, opt).value;
    const double rhs = lower_uniform_density(symset, opt).value;
    EXPECT_DOUBLE_EQ(lhs, rhs);  // same machinery through the symmetrization
    // Brute identity behind d^-: the symmetric count is the sum of the
    // one-sided counts over mirrored windows.
    for (int probe = 0; probe < 40; ++probe) {
      const double c = (rng.uniform01() - 0.5) * R;
      const double r = 0.5 + rng.uniform01() * R / 4.0;
      std::int64_t nsym = 0, npos = 0, nneg = 0;
      for (double v : sym)
        if (std::abs(v - c) <= r) ++nsym;
      for (double v : q) {
        if (std::abs(v - c) <= r) ++npos;
        if (std::abs(-v - c) <= r) ++nneg;
      }
      EXPECT_EQ(nsym, npos + nneg);
    }
  }
}

TEST(Counting, LatticeAgainstBruteForce) {
  const DiscreteSet z2 = DiscreteSet::lattice({1, 0}, {0, 1});
  EXPECT_EQ(counting(z2, 2.5), 21);
  EXPECT_EQ(counting(z2, 2.5), brute_count_z2(2.5));
  EXPECT_EQ(counting(z2, 0.5), 1);
  for (double t : {1.0, 1.5, 3.0, 7.3, 12.0, 20.01})
    EXPECT_EQ(counting(z2, t), brute_count_z2(t)) << "t = " << t;
}

TEST(Counting, AxisAndRay) {
  std::vector<Vec2> axis;
  for (int k = -100; k <= 100; ++k) axis.push_back({static_cast<double>(k), 0.0});
  EXPECT_EQ(counting(DiscreteSet::explicit2d(axis, 100.0), 3.5), 7);

  const DiscreteSet nat = DiscreteSet::ray(1.0, 1.0);
  EXPECT_EQ(counting(nat, 10.0), 9);   // open disk: 1..9
  EXPECT_EQ(counting(nat, 10.5), 10);
  EXPECT_EQ(counting(nat, 0.5), 0);

  EXPECT_THROW(counting(DiscreteSet::explicit2d(axis, 100.0), 200.0), Error);
}

TEST(Counting, MonotoneAndZeroBelowFirstPoint) {
  const DiscreteSet q = DiscreteSet::ray(0.7, 1.4);
  double prev = 0.0;
  for (double t = 0.1; t < 30.0; t += 0.37) {
    const double c = static_cast<double>(counting(q, t));
    EXPECT_GE(c, prev);
    prev = c;
    if (t <= 1.4) EXPECT_EQ(c, 0.0);
  }
}

TEST(LiminfSlope, LatticeDiverges) {
  const DiscreteSet z2 = DiscreteSet::lattice({1, 0}, {0, 1});
  std::vector<double> ts;
  for (int i = 0; i < 12; ++i) ts.push_back(1.0e4 * std::pow(1.6, i));
  const SlopeReport r = liminf_slope(z2, ts);
  EXPECT_TRUE(r.infinite);
  EXPECT_TRUE(std::isinf(r.value));
}

TEST(LiminfSlope, AxisSets) {
  std::vector<Vec2> axis;
  for (int k = -2000; k <= 2000; ++k) axis.push_back({static_cast<double>(k), 0.0});
  std::vector<double> ts{200, 400, 800, 1200, 1600, 2000};
  const SlopeReport r = liminf_slope(DiscreteSet::explicit2d(axis, 2000.0), ts);
  EXPECT_FALSE(r.infinite);
  EXPECT_NEAR(r.value, 2.0, 0.01);

  std::vector<Vec2> even;
  for (int k = -1000; k <= 1000; ++k) even.push_back({2.0 * k, 0.0});
  const SlopeReport r2 = liminf_slope(DiscreteSet::explicit2d(even, 2000.0), ts);
  EXPECT_NEAR(r2.value, 1.0, 0.01);

  EXPECT_THROW(liminf_slope(DiscreteSet::explicit2d(axis, 2000.0), {100.0, 3000.0}), Error);
}

}  // namespace
