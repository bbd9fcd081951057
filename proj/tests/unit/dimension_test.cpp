#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <random>
#include <vector>

#include "baker/dimension.hpp"
#include "baker/dynamics.hpp"
#include "baker/errors.hpp"
#include "support/oracles.hpp"

namespace baker {
namespace {

TEST(MoranTest, Examples) {
  const MoranResult quarter = moran_exponent(Params(0.25, 0.25));
  EXPECT_NEAR(quarter.d, 0.5, 1e-12);
  EXPECT_NEAR(moran_exponent(Params(0.3, 0.3)).d, std::log(2.0) / std::log(1.0 / 0.3), 1e-12);
  const MoranResult skew = moran_exponent(Params(0.2, 0.3));
  EXPECT_NEAR(skew.d, 0.496337940703618002, 1e-12);
  EXPECT_NEAR(skew.d, oracle::moran_root(0.2, 0.3), 1e-10);
}

TEST(MoranTest, ResidualAndOracleAgreement) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> beta(1e-3, 0.999);
  int tested = 0;
  while (tested < 500) {
    const double b1 = beta(gen), b2 = beta(gen);
    if (b1 + b2 >= 1.0) continue;
    const MoranResult r = moran_exponent(Params(b1, b2));
    EXPECT_LT(std::abs(r.residual), 1e-12);
    EXPECT_NEAR(std::pow(b1, r.d) + std::pow(b2, r.d) - 1.0, r.residual, 1e-15);
    EXPECT_NEAR(r.d, oracle::moran_root(b1, b2), 1e-10);
    ++tested;
  }
}

TEST(MoranTest, IncreasesInBothRates) {
  const double d1 = moran_exponent(Params(0.2, 0.3)).d;
  const double d2 = moran_exponent(Params(0.25, 0.3)).d;
  const double d3 = moran_exponent(Params(0.25, 0.35)).d;
  EXPECT_LT(d1, d2);
  EXPECT_LT(d2, d3);
}

TEST(MoranTest, CoveringRegimeIsRegimeError) {
  EXPECT_THROW(moran_exponent(Params(0.6, 0.5)), RegimeError);
  EXPECT_THROW(moran_exponent(Params(0.6, 0.4)), RegimeError);
}

TEST(MoranTest, FastEnough) {
  const auto start = std::chrono::steady_clock::now();
  moran_exponent(Params(0.2, 0.3));
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_LT(std::chrono::duration<double>(elapsed).count(), 1e-3);
}

TEST(TheoreticalDimTest, Examples) {
  EXPECT_NEAR(theoretical_attractor_dim(Params(0.25, 0.25)), 1.5, 1e-12);
  EXPECT_EQ(theoretical_attractor_dim(Params(0.6, 0.5)), 2.0);
  EXPECT_NEAR(theoretical_attractor_dim(Params(0.2, 0.3)), 1.496337940703618, 1e-12);
}

TEST(BoxCountTest, Examples) {
  const PointSet single(2, {0.1, -0.7});
  for (int k = 1; k <= 24; ++k) EXPECT_EQ(box_count(single, k), 1u);
  const PointSet corners(2, {-1, -1, -1, 1, 1, -1, 1, 1});
  EXPECT_EQ(box_count(corners, 1), 4u);
}

TEST(BoxCountTest, UniformPointsFillCoarseGrid) {
  const PointSet points = product_sample(BernoulliSpec(0.5), Params(0.5, 0.5), std::size_t{1} << 20, 64, 1);
  EXPECT_EQ(box_count(points, 4), 256u);
}

TEST(BoxCountTest, MonotoneAndBounded) {
  const Params params(0.6, 0.4);
  const PointSet points = attractor_sample(params, 50'000, 4, natural_weights(params));
  const auto counts = box_counts(points, 1, 24);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    EXPECT_GE(counts[i], 1u);
    EXPECT_LE(counts[i], std::min<std::uint64_t>(points.size(), std::uint64_t{1} << (2 * k)));
    if (i > 0) EXPECT_GE(counts[i], counts[i - 1]);
    EXPECT_EQ(counts[i], box_count(points, k));
  }
}

TEST(BoxCountTest, OneDimensional) {
  const PointSet points = PointSet::line({-1.0, -0.4, 0.1, 0.12, 0.9});
  EXPECT_EQ(box_count(points, 1), 2u);
  EXPECT_EQ(box_count(points, 2), 4u);
  EXPECT_EQ(box_count(points, 8), 5u);
}

TEST(BoxCountTest, Errors) {
  EXPECT_THROW(box_count(PointSet(2, {}), 3), DomainError);
  EXPECT_THROW(box_count(PointSet(2, {0, 0}), 0), DomainError);
  EXPECT_THROW(box_count(PointSet(2, {0, 0}), 25), DomainError);
}

TEST(FitBoxDimensionTest, ExactPowerLaws) {
  std::vector<std::uint64_t> counts;
  for (int k = 4; k <= 10; ++k) counts.push_back(std::uint64_t{1} << (2 * k));
  const DimensionFit square = fit_box_counts(counts, 4);
  EXPECT_NEAR(square.slope, 2.0, 1e-12);
  EXPECT_NEAR(square.r_squared, 1.0, 1e-12);
  EXPECT_EQ(square.k_min, 4);
  EXPECT_EQ(square.k_max, 10);

  counts.clear();
  for (int k = 3; k <= 12; ++k) counts.push_back(1u << k);
  EXPECT_NEAR(fit_box_counts(counts, 3).slope, 1.0, 1e-12);
}

TEST(FitBoxDimensionTest, SegmentHasDimensionOne) {
  const PointSet xs = pushforward_sample(BernoulliSpec(0.5), Params(0.5, 0.5), 1'000'000, 64, 2);
  std::vector<double> coords;
  for (double x : xs.coords()) {
    coords.push_back(x);
    coords.push_back(0.0);
  }
  const DimensionFit fit = fit_box_dimension(PointSet(2, std::move(coords)), 4, 10);
  EXPECT_NEAR(fit.slope, 1.0, 0.05);
}

TEST(FitBoxDimensionTest, DegenerateWindow) {
  const PointSet points(2, {0.0, 0.0});
  EXPECT_THROW(fit_box_dimension(points, 5, 5), DomainError);
  EXPECT_THROW(fit_box_dimension(points, 6, 5), DomainError);
  EXPECT_THROW(fit_box_dimension(points, 0, 5), DomainError);
}

TEST(CorrelationDimensionTest, IdenticalPointsHaveSlopeZero) {
  const PointSet points(2, std::vector<double>(2 * 1500, 0.25));
  const DimensionFit fit = correlation_dimension(points, geometric_radii(0.1, 0.5, 5));
  EXPECT_EQ(fit.slope, 0.0);
  for (double c : fit.raw) EXPECT_EQ(c, 1.0);
}

TEST(CorrelationDimensionTest, SegmentAndSquare) {
  const auto radii = geometric_radii(0.1, std::sqrt(0.5), 8);
  const PointSet square = product_sample(BernoulliSpec(0.5), Params(0.5, 0.5), 100'000, 64, 3);
  EXPECT_NEAR(correlation_dimension(square, radii, 1).slope, 2.0, 0.1);

  std::vector<double> coords;
  for (std::size_t i = 0; i < 20'000; ++i) {
    coords.push_back(square.point2(i).x);
    coords.push_back(0.0);
  }
  EXPECT_NEAR(correlation_dimension(PointSet(2, std::move(coords)), radii, 1).slope, 1.0, 0.1);
}

TEST(CorrelationDimensionTest, Errors) {
  const PointSet few(2, std::vector<double>(2 * 999, 0.0));
  const PointSet enough(2, std::vector<double>(2 * 1000, 0.0));
  EXPECT_THROW(correlation_dimension(few, geometric_radii(0.1, 0.5, 5)), DomainError);
  EXPECT_THROW(correlation_dimension(enough, geometric_radii(0.1, 0.5, 3)), DomainError);
  const std::vector<double> increasing{0.01, 0.02, 0.04, 0.08};
  EXPECT_THROW(correlation_dimension(enough, increasing), DomainError);
}

TEST(BoundsTest, Examples) {
  EXPECT_NEAR(bound_vertical(BernoulliSpec(0.5)), 2.0, 1e-15);
  EXPECT_EQ(bound_vertical(BernoulliSpec(0.0)), 1.0);
  EXPECT_NEAR(bound_vertical(BernoulliSpec(0.25)), 1.811278124459132864, 1e-12);
  EXPECT_NEAR(bound_horizontal(BernoulliSpec(0.5), Params(0.5, 0.5)), 2.0, 1e-15);
  EXPECT_EQ(bound_horizontal(BernoulliSpec(0.0), Params(0.3, 0.9)), 1.0);
  EXPECT_NEAR(bound_horizontal(BernoulliSpec(0.5), Params(0.6, 0.4)), 1.971395468660336346, 1e-12);
}

TEST(BoundsTest, CombinedNeverExceedsTwoWhenCovering) {
  for (int i = 1; i < 60; ++i) {
    for (int j = 1; j < 60; ++j) {
      const Params params(i / 60.0, j / 60.0);
      if (!params.covering()) continue;
      for (int k = 0; k <= 200; ++k) {
        const double p = k / 200.0;
        const double v = bound_combined(BernoulliSpec(p), params);
        EXPECT_LE(v, 2.0 + 1e-15);
        if (k != 100) EXPECT_LT(v, 2.0);
      }
    }
  }
}

TEST(SupBoundTest, AtOrAboveQuarterProductReachesTwo) {
  for (const Params params : {Params(0.5, 0.5), Params(0.7, 0.65)}) {
    const BoundProfile profile = sup_bernoulli_bound(params, 101, 1e-12);
    EXPECT_NEAR(profile.sup_value, 2.0, 1e-12);
    EXPECT_NEAR(profile.sup_p, 0.5, 1e-6);
  }
}

TEST(SupBoundTest, MatchesDenseGridOracle) {
  for (const Params params : {Params(0.6, 0.4), Params(0.9, 0.2), Params(0.3, 0.75)}) {
    const BoundProfile profile = sup_bernoulli_bound(params, 1001, 1e-12);
    const auto oracle = oracle::dense_bound_search(params.beta1(), params.beta2(), 1'000'000);
    EXPECT_GE(profile.sup_value, oracle.value - 1e-12);
    // the maximum sits on a kink, so a dense grid undershoots by O(step)
    EXPECT_LE(profile.sup_value - oracle.value, 1e-6);
    EXPECT_NEAR(profile.sup_p, oracle.p, 2e-6);
    EXPECT_LT(profile.sup_value, 2.0);
    EXPECT_GE(profile.sup_value, *std::max_element(profile.combined.begin(), profile.combined.end()));
  }
  const BoundProfile spot = sup_bernoulli_bound(Params(0.6, 0.4));
  EXPECT_NEAR(spot.sup_value, 1.9926757683970, 1e-9);
  EXPECT_NEAR(spot.sup_p, 0.5503397132, 1e-8);
  EXPECT_NEAR(spot.sup_p, 0.5503, 1e-3);
}

TEST(SupBoundTest, ProfileLayout) {
  const BoundProfile profile = sup_bernoulli_bound(Params(0.6, 0.4), 101, 1e-9);
  ASSERT_EQ(profile.p.size(), 101u);
  EXPECT_EQ(profile.p.front(), 0.0);
  EXPECT_EQ(profile.p.back(), 1.0);
  for (std::size_t i = 0; i < profile.p.size(); ++i) {
    EXPECT_EQ(profile.combined[i], std::min(profile.vertical[i], profile.horizontal[i]));
  }
}

TEST(SupBoundTest, Errors) {
  EXPECT_THROW(sup_bernoulli_bound(Params(0.6, 0.4), 100, 1e-9), DomainError);
  EXPECT_THROW(sup_bernoulli_bound(Params(0.6, 0.4), 101, 0.0), DomainError);
}

}  // namespace
}  // namespace baker
