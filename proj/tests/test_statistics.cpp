#include <gtest/gtest.h>

#include "modlat/errors.hpp"
#include "modlat/statistics.hpp"

using namespace modlat;

TEST(MonteCarloRank, TwoByTwoBinaryWithinThreeSigma) {
  const auto report = monte_carlo_rank(2, 2, 2, 20000, 1);
  EXPECT_EQ(report.trials, 20000u);
  std::uint64_t total = 0;
  for (auto c : report.counts) total += c;
  EXPECT_EQ(total, 20000u);
  EXPECT_TRUE(report.within_sigma(3.0));
  EXPECT_NEAR(report.full_rank_frequency(), 0.375, 0.02);
  EXPECT_EQ(report.degrees_of_freedom(), 2u);
}

TEST(MonteCarloRank, DeterministicForSeed) {
  EXPECT_EQ(monte_carlo_rank(3, 5, 3, 500, 9).counts, monte_carlo_rank(3, 5, 3, 500, 9).counts);
}

TEST(MonteCarloRank, ZeroTrials) {
  const auto report = monte_carlo_rank(2, 3, 2, 0, 1);
  EXPECT_EQ(report.trials, 0u);
  EXPECT_DOUBLE_EQ(report.empirical(0), 0.0);
}

TEST(MonteCarloRank, ZScoreOnDegenerateBand) {
  // With no rows the rank is always 0, so the band has zero width.
  const auto report = monte_carlo_rank(0, 4, 101, 100, 2);
  EXPECT_DOUBLE_EQ(report.z_score(0), 0.0);
  EXPECT_TRUE(report.within_sigma(3.0));
}

TEST(FullRankTrend, ApproachesOne) {
  const auto points = full_rank_trend({8, 16, 32}, 2, 4000, 3);
  ASSERT_EQ(points.size(), 3u);
  EXPECT_EQ(points[1].m, 8u);
  EXPECT_GE(points[1].frequency, 0.99);
  EXPECT_NEAR(points[0].exact, (1 - 1 / 256.0) * (1 - 1 / 128.0) * (1 - 1 / 64.0) * (1 - 1 / 32.0), 1e-12);
}

TEST(DimensionChain, VectorPolicyHitsPredictedDimensions) {
  const ParamPolicy policy = ParamPolicy::make(PolicyKind::vector16ths, 101, 16, 64, 1000);
  const auto report = protocol_dim_stats(policy, 200, 5);
  EXPECT_EQ(report.trials, 200u);
  EXPECT_EQ(report.predicted_meet, 6u);
  EXPECT_EQ(report.predicted_join, 12u);
  EXPECT_EQ(report.predicted_pairing, 1u);
  EXPECT_GE(DimensionChainReport::frequency(report.p_pub, 6, report.trials), 0.99);
  EXPECT_GE(DimensionChainReport::frequency(report.q_meet_r, 6, report.trials), 0.99);
  EXPECT_GE(DimensionChainReport::frequency(report.joined, 12, report.trials), 0.99);
  EXPECT_GE(DimensionChainReport::frequency(report.pairing, 1, report.trials), 0.99);
}

TEST(DimensionChain, RequiresVectorPolicy) {
  EXPECT_THROW(protocol_dim_stats(ParamPolicy::make(PolicyKind::geometry5, 5, 5, 8), 10, 1), InvalidArgument);
}
