#include <gtest/gtest.h>

#include <random>

#include "gaugelat/errors.hpp"
#include "gaugelat/fractal.hpp"
#include "gaugelat/harper.hpp"
#include "gaugelat/spectral.hpp"

using namespace gaugelat;

namespace {

std::vector<double> cantor(int depth) {
  std::vector<double> lo{0.0}, len{1.0};
  for (int k = 0; k < depth; ++k) {
    std::vector<double> nlo, nlen;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      nlo.push_back(lo[i]);
      nlo.push_back(lo[i] + 2 * len[i] / 3);
      nlen.push_back(len[i] / 3);
      nlen.push_back(len[i] / 3);
    }
    lo.swap(nlo);
    len.swap(nlen);
  }
  std::vector<double> pts;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    pts.push_back(lo[i]);
    pts.push_back(lo[i] + len[i]);
  }
  return pts;
}

}  // namespace

TEST(Fractal, UniformGridIsOneDimensional) {
  std::vector<double> g(4096);
  for (int i = 0; i < 4096; ++i) g[static_cast<std::size_t>(i)] = i / 4095.0;
  const DimensionFit f = box_counting_dimension(g);
  // Edge boxes give counts in [1/s, 1/s + 1], which biases the slope low.
  EXPECT_NEAR(f.D, 1.0, 0.025);
  EXPECT_FALSE(f.degenerate);
  ASSERT_EQ(f.scales.size(), 8u);
  for (std::size_t i = 0; i < f.scales.size(); ++i) {
    EXPECT_GE(f.counts[i], 1.0 / f.scales[i] - 1e-9);
    EXPECT_LE(f.counts[i], 1.0 / f.scales[i] + 1.0 + 1e-9);
  }
  for (std::size_t i = 1; i < f.scales.size(); ++i) {
    EXPECT_LT(f.scales[i], f.scales[i - 1]);
    EXPECT_GE(f.counts[i], f.counts[i - 1]);
  }
}

TEST(Fractal, SinglePointAndIdenticalPointsAreDegenerate) {
  const DimensionFit a = box_counting_dimension({0.3});
  EXPECT_TRUE(a.degenerate);
  EXPECT_EQ(a.D, 0.0);
  EXPECT_TRUE(box_counting_dimension({2.0, 2.0, 2.0}).degenerate);
  EXPECT_THROW(box_counting_dimension({}), Error);
}

TEST(Fractal, CantorSet) {
  const DimensionFit f = box_counting_dimension(cantor(8));
  EXPECT_NEAR(f.D, std::log(2.0) / std::log(3.0), 0.03);
}

TEST(Fractal, SmallSetsDropFineScales) {
  std::vector<double> pts{0.0, 0.1, 0.35, 0.5, 0.9, 1.0, 0.62, 0.77, 0.2, 0.44, 0.05, 0.81, 0.3, 0.66, 0.12, 0.55,
                          0.71, 0.95, 0.25, 0.4};
  const DimensionFit f = box_counting_dimension(pts);
  for (double s : f.scales) EXPECT_GE(s, 1.0 / 19.0);
  EXPECT_THROW(box_counting_dimension({0.0, 1.0, 0.5}), Error);  // no usable scale pair
}

TEST(Fractal, TwoLevelSpectrumIsDegenerateToo) {
  // Two distinct levels: not a degenerate input, but too few points for a fit.
  EXPECT_THROW(box_counting_dimension({-1.0, 1.0}), Error);
  // Two-level system with repeated levels collapses to two points as well.
  std::vector<double> two(50, -1.0);
  two.insert(two.end(), 50, 1.0);
  EXPECT_NO_THROW({
    const DimensionFit f = box_counting_dimension(two, {3, 5, 8, 0.0});
    EXPECT_NEAR(f.D, 0.0, 1e-12);
  });
}

TEST(Fractal, SpectrumDimensionLookup) {
  SpectrumSweep s;
  s.records.push_back({1.0, {0.0, 0.25, 0.5, 0.75, 1.0}});
  EXPECT_THROW(spectrum_dimension(s, 2.0), Error);
  EXPECT_NO_THROW(spectrum_dimension(s, 1.0, {1, 2, 1, 0.0}));
}

TEST(Fractal, BandwidthMeasure) {
  std::vector<double> grid;
  for (int i = 0; i <= 400; ++i) grid.push_back(i * 0.01);
  EXPECT_NEAR(bandwidth_measure(grid), 4.0, 1e-12);
  EXPECT_EQ(bandwidth_measure({0.0, 5.0}, 1.0), 0.0);
  EXPECT_NEAR(bandwidth_measure({0.0, 0.1, 0.2, 3.0, 3.05}, 0.5), 0.25, 1e-15);
  EXPECT_NEAR(default_gap_threshold({0.0, 1.0, 3.0, 4.0}), 3.0, 1e-15);
}

TEST(Fractal, AmoMeasureApproachesLimitFromAbove) {
  // Lambda = 0.5 on Fibonacci approximants of the golden flux; the
  // incommensurate limit is |4 - 4 Lambda| = 2.
  std::vector<double> m;
  for (auto [p, q] : {std::pair{89, 144}, std::pair{233, 377}, std::pair{610, 987}}) {
    const Eigen::VectorXd e = eigenvalues(amo_matrix({0.5, 2 * M_PI * p / q, 0.0, q, Boundary::periodic}));
    m.push_back(bandwidth_measure(std::vector<double>(e.data(), e.data() + e.size())));
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    EXPECT_GT(m[i], 2.0);
    if (i > 0) EXPECT_LT(m[i], m[i - 1]);
  }
  EXPECT_LT(m.back() - 2.0, 0.02);
}

TEST(Fractal, DegenerateLevelsDoNotCollapseThreshold) {
  EXPECT_NEAR(default_gap_threshold({0.0, 0.0, 1.0, 1.0, 2.0, 2.0, 4.0}), 3.0, 1e-15);
}

// Property: affine maps of the input do not change the fit.
TEST(FractalProperty, AffineInvariance) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 30; ++t) {
    std::vector<double> pts(300);
    for (double& x : pts) x = u(rng) * u(rng);
    const DimensionFit f = box_counting_dimension(pts);
    std::vector<double> scaled = pts;
    for (double& x : scaled) x = -8.0 * x;  // exact in binary
    EXPECT_EQ(box_counting_dimension(scaled).counts.size(), f.counts.size());
    std::vector<double> moved = pts;
    const double c = 0.5 + 3 * u(rng), b = 10 * u(rng) - 5;
    for (double& x : moved) x = c * x + b;
    EXPECT_NEAR(box_counting_dimension(moved).D, f.D, 1e-9);
    // Pure power-of-two scaling is exact.
    std::vector<double> pow2 = pts;
    for (double& x : pow2) x *= 4.0;
    EXPECT_EQ(box_counting_dimension(pow2).D, f.D);
  }
}

// Property: adding points inside the hull never lowers a per-scale count.
TEST(FractalProperty, CountsMonotoneUnderInsertion) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 30; ++t) {
    std::vector<double> pts{0.0, 1.0};
    for (int i = 0; i < 200; ++i) pts.push_back(u(rng) * u(rng));
    std::vector<double> more = pts;
    for (int i = 0; i < 100; ++i) more.push_back(u(rng));
    const DimensionFit a = box_counting_dimension(pts, {3, 7, 8, 0.0});
    const DimensionFit b = box_counting_dimension(more, {3, 7, 8, 0.0});
    ASSERT_EQ(a.counts.size(), b.counts.size());
    for (std::size_t k = 0; k < a.counts.size(); ++k) EXPECT_GE(b.counts[k], a.counts[k]);
  }
}

// Property: the measure is nondecreasing in the gap threshold.
TEST(FractalProperty, MeasureMonotoneInThreshold) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> v(100);
    for (double& x : v) x = u(rng);
    std::sort(v.begin(), v.end());
    double prev = 0;
    for (double thr = 0.0; thr < 0.2; thr += 0.005) {
      const double m = bandwidth_measure(v, thr);
      EXPECT_GE(m, prev);
      prev = m;
    }
  }
}
