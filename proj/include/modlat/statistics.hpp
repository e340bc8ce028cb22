#pragma once

// Monte Carlo checks of the rank law and of the protocol's dimension chain.
// Trial i always runs on SeededRng(derive_seed(seed, i)), so results do not
// depend on scheduling.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "modlat/combinatorics.hpp"
#include "modlat/ibe.hpp"

namespace modlat {

struct RankMonteCarloReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::size_t trials = 0;
  std::vector<std::uint64_t> counts;  // index = rank
  RankDistribution exact;

  double empirical(std::size_t r) const;
  /// (empirical - p) / sqrt(p (1 - p) / trials); zero when the band is
  /// degenerate and the observation matches it exactly.
  double z_score(std::size_t r) const;
  /// Every rank's empirical frequency lies within k standard errors.
  bool within_sigma(double k) const;
  /// Pearson statistic over ranks with nonzero probability.
  double chi_square() const;
  std::size_t degrees_of_freedom() const;
  double full_rank_frequency() const;
};

RankMonteCarloReport monte_carlo_rank(std::size_t m, std::size_t n, std::uint64_t q, std::size_t trials,
                                      std::uint64_t seed);

struct FullRankPoint {
  std::size_t n = 0;
  std::size_t m = 0;
  double frequency = 0.0;
  double exact = 0.0;  // prod (1 - q^{i-n})
};

/// Full-rank frequency of m x n matrices with m = n / 2 for each listed n.
std::vector<FullRankPoint> full_rank_trend(const std::vector<std::size_t>& ns, std::uint64_t q, std::size_t trials,
                                           std::uint64_t seed);

using Histogram = std::map<std::size_t, std::size_t>;

/// Dimensions observed over repeated setup / extract / encrypt runs.
struct DimensionChainReport {
  std::size_t trials = 0;
  Histogram p_pub;        // P . s
  Histogram q_meet_r;     // Q_ID . r
  Histogram joined;       // Q_ID . r + P_pub
  Histogram pairing;      // e_d(Q_ID . r, P_pub)
  Histogram private_key;  // s . Q_ID
  Histogram u;            // r . P
  std::size_t predicted_meet = 0;     // ceil(3n/8)
  std::size_t predicted_join = 0;     // ceil(3n/4)
  std::size_t predicted_pairing = 0;  // ceil(n/16)

  static double frequency(const Histogram& h, std::size_t value, std::size_t trials);
};

/// Requires the vector16ths policy.
DimensionChainReport protocol_dim_stats(const ParamPolicy& policy, std::size_t trials, std::uint64_t seed);

double to_double(const BigRational& r);

}  // namespace modlat
