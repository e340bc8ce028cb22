#include "modlat/oracles.hpp"

#include <algorithm>
#include <set>

#include "modlat/errors.hpp"

namespace modlat {

std::vector<Subspace> action_preimages(const PairingContext<SubspaceLattice>& ctx, const Subspace& x,
                                       const Subspace& y, std::uint64_t budget) {
  const SubspaceLattice& lat = ctx.lattice();
  if (!lat.leq(y, x)) return {};
  std::vector<Subspace> out;
  for_each_superspace(lat, ctx.d(), std::nullopt, budget, [&](const Subspace& a) {
    if (lat.meet(a, x) == y) out.push_back(a);
  });
  std::sort(out.begin(), out.end());
  return out;
}

BdhCandidates brute_force_bdh(const PublicParams& params, const Subspace& q_id, const Subspace& u,
                              std::uint64_t budget) {
  const SubspaceLattice lat = params.policy.lattice();
  if (!lat.contains(q_id) || !lat.contains(u)) throw ParameterMismatch("BDH instance does not match the parameters");
  const DimensionPlan plan = params.policy.plan();
  std::size_t lo = 0, hi = 0;
  if (plan.exact) {
    lo = plan.r_min;
    hi = plan.r_max;
  } else {
    lo = hi = std::min(params.policy.n, params.d.dim() + plan.r_min);
  }

  BigInteger total = 0;
  for (std::size_t k = lo; k <= hi; ++k) total += interval_size(lat, params.d, k);
  if (total > BigInteger(static_cast<unsigned long>(budget))) {
    throw BudgetExceeded("BDH search over " + total.get_str() + " elements exceeds budget " + std::to_string(budget),
                         total.get_str());
  }

  const PairingContext<SubspaceLattice> ctx(lat, params.d);
  std::set<Subspace> keys;
  BdhCandidates result;
  for (std::size_t k = lo; k <= hi; ++k) {
    for_each_superspace(lat, params.d, k, budget, [&](const Subspace& r) {
      ++result.searched;
      if (lat.meet(r, params.P) != u) return;
      if (lat.leq(params.P, r) || lat.leq(q_id, r)) return;
      Subspace key = ctx.pair(lat.meet(q_id, r), params.P_pub);
      if (key.is_zero() || key == params.d) return;
      ++result.consistent_r;
      keys.insert(std::move(key));
    });
  }
  result.keys.assign(keys.begin(), keys.end());
  return result;
}

}  // namespace modlat
