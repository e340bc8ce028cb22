#pragma once

// Exhaustive-search attacks for tiny instances: recovering the acting element
// (the discrete-log analogue) and recovering the session key (the bilinear
// Diffie-Hellman analogue).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "modlat/enumeration.hpp"
#include "modlat/ibe.hpp"
#include "modlat/pairing.hpp"

namespace modlat {

/// All a in [d, I] with a . x == y, in ascending canonical order. Empty when
/// y is not below x. Throws BudgetExceeded when [d, I] has more than `budget`
/// elements.
std::vector<Subspace> action_preimages(const PairingContext<SubspaceLattice>& ctx, const Subspace& x,
                                       const Subspace& y, std::uint64_t budget = default_enumeration_budget());

struct BdhCandidates {
  std::vector<Subspace> keys;     // distinct candidate session keys, ascending
  std::size_t consistent_r = 0;   // ephemeral elements consistent with the view
  std::size_t searched = 0;       // elements of [d, I] of the policy dimension(s)

  std::size_t ambiguity() const noexcept { return keys.size(); }
};

/// Given the public view (params, Q_ID, U), enumerates every r in [d, I] of
/// the policy's ephemeral dimension with r . P == U that also satisfies the
/// encryptor's public constraints (P !<= r, Q_ID !<= r, key not in {O, d}),
/// and collects e_d(Q_ID . r, P_pub). The true session key is always among
/// the candidates.
BdhCandidates brute_force_bdh(const PublicParams& params, const Subspace& q_id, const Subspace& u,
                              std::uint64_t budget = default_enumeration_budget());

}  // namespace modlat
