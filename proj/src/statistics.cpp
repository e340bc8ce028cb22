#include "modlat/statistics.hpp"

#include <cmath>
#include <string>

#include "modlat/errors.hpp"
#include "modlat/ibe_trace.hpp"
#include "modlat/pairing.hpp"

namespace modlat {

double to_double(const BigRational& r) { return r.get_d(); }

double RankMonteCarloReport::empirical(std::size_t r) const {
  if (trials == 0 || r >= counts.size()) return 0.0;
  return static_cast<double>(counts[r]) / static_cast<double>(trials);
}

double RankMonteCarloReport::z_score(std::size_t r) const {
  if (trials == 0) return 0.0;
  const double p = to_double(exact.at(r));
  const double diff = empirical(r) - p;
  const double sd = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  if (sd == 0.0) return diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff);
  return diff / sd;
}

bool RankMonteCarloReport::within_sigma(double k) const {
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (std::abs(z_score(r)) > k) return false;
  }
  return true;
}

double RankMonteCarloReport::chi_square() const {
  if (trials == 0) return 0.0;
  double stat = 0.0;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    const double expected = to_double(exact.at(r)) * static_cast<double>(trials);
    if (expected <= 0.0) continue;
    const double diff = static_cast<double>(counts[r]) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

std::size_t RankMonteCarloReport::degrees_of_freedom() const {
  std::size_t bins = 0;
  for (const auto& p : exact.probabilities) {
    if (p > 0) ++bins;
  }
  return bins > 0 ? bins - 1 : 0;
}

double RankMonteCarloReport::full_rank_frequency() const { return empirical(std::min(m, n)); }

RankMonteCarloReport monte_carlo_rank(std::size_t m, std::size_t n, std::uint64_t q, std::size_t trials,
                                      std::uint64_t seed) {
  if (q >= (std::uint64_t{1} << 31)) throw InvalidArgument("modulus too large");
  const FieldSpec field(static_cast<std::uint32_t>(q));
  RankMonteCarloReport report{m, n, q, trials, std::vector<std::uint64_t>(std::min(m, n) + 1, 0), rank_pmf(m, n, q)};
  for (std::size_t t = 0; t < trials; ++t) {
    SeededRng rng(derive_seed(seed, t));
    ++report.counts[rank(random_matrix(m, n, field, rng))];
  }
  return report;
}

std::vector<FullRankPoint> full_rank_trend(const std::vector<std::size_t>& ns, std::uint64_t q, std::size_t trials,
                                           std::uint64_t seed) {
  std::vector<FullRankPoint> out;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const std::size_t n = ns[i];
    const std::size_t m = n / 2;
    const auto report = monte_carlo_rank(m, n, q, trials, derive_seed(seed, i));
    out.push_back({n, m, report.full_rank_frequency(), to_double(full_rank_probability(m, n, q))});
  }
  return out;
}

double DimensionChainReport::frequency(const Histogram& h, std::size_t value, std::size_t trials) {
  if (trials == 0) return 0.0;
  const auto it = h.find(value);
  return it == h.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(trials);
}

DimensionChainReport protocol_dim_stats(const ParamPolicy& policy, std::size_t trials, std::uint64_t seed) {
  if (policy.kind != PolicyKind::vector16ths) {
    throw InvalidArgument("dimension-chain statistics are defined for the vector16ths policy");
  }
  const std::size_t n = policy.n;
  DimensionChainReport report;
  report.trials = trials;
  report.predicted_meet = (3 * n + 7) / 8;
  report.predicted_join = (3 * n + 3) / 4;
  report.predicted_pairing = (n + 15) / 16;
  const SubspaceLattice lat = policy.lattice();
  for (std::size_t t = 0; t < trials; ++t) {
    SeededRng rng(derive_seed(seed, t));
    auto [params, msk] = setup(policy, rng);
    const std::string id = "user-" + std::to_string(t);
    const auto key = extract(params, msk, id);
    const auto message = BitString::random(policy.message_bits, rng);
    const auto trace = instrumented::encrypt_traced(params, id, message, rng);
    const Subspace joined = lat.join(trace.q_id_meet_r, params.P_pub);
    ++report.p_pub[params.P_pub.dim()];
    ++report.q_meet_r[trace.q_id_meet_r.dim()];
    ++report.joined[joined.dim()];
    ++report.pairing[trace.session_key.dim()];
    ++report.private_key[key.S_ID.dim()];
    ++report.u[trace.ciphertext.U.dim()];
  }
  return report;
}

}  // namespace modlat
