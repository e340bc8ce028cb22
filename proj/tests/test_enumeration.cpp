#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "modlat/enumeration.hpp"
#include "modlat/errors.hpp"
#include "modlat/ibe_trace.hpp"
#include "modlat/oracles.hpp"
#include "support/brute_force.hpp"

using namespace modlat;

TEST(Enumeration, RrefVisitsEveryBasisOnce) {
  for (std::size_t k = 0; k <= 3; ++k) {
    std::set<Subspace> seen;
    std::size_t visits = 0;
    for_each_rref(FieldSpec(3), 3, k, [&](const Matrix& m) {
      seen.insert(Subspace::span(m));
      ++visits;
    });
    EXPECT_EQ(visits, seen.size());
    EXPECT_EQ(BigInteger(visits), gaussian_coeff(3, k, 3));
  }
}

TEST(Enumeration, AllSubspacesMatchBruteForce) {
  const FieldSpec f(2);
  const SubspaceLattice lat(f, 4);
  const bf::Space space{2, 4};
  std::set<bf::VecSet> ours;
  for_each_subspace(lat, 1000, [&](const Subspace& s) { ours.insert(space.of(s)); });
  const auto all = space.all_subspaces();
  EXPECT_EQ(ours, std::set<bf::VecSet>(all.begin(), all.end()));
}

TEST(Enumeration, SuperspacesOfRandomBases) {
  const SubspaceLattice lat(FieldSpec(3), 5);
  SeededRng rng(4);
  for (int t = 0; t < 10; ++t) {
    const Subspace base = lat.random_subspace_of_dim(rng.uniform_below(4), rng);
    std::set<Subspace> seen;
    for_each_superspace(lat, base, std::nullopt, 100000, [&](const Subspace& s) {
      EXPECT_TRUE(lat.leq(base, s));
      seen.insert(s);
    });
    EXPECT_EQ(BigInteger(seen.size()), interval_size(lat, base));
    std::size_t exact = 0;
    const std::size_t target = base.dim() + 1;
    for_each_superspace(lat, base, target, 100000, [&](const Subspace& s) {
      EXPECT_EQ(s.dim(), target);
      ++exact;
    });
    EXPECT_EQ(BigInteger(exact), count_containing_spaces(5, base.dim(), target, 3));
  }
}

TEST(Enumeration, BudgetIsCheckedBeforeVisiting) {
  const SubspaceLattice lat(FieldSpec(2), 6);
  std::size_t visits = 0;
  try {
    for_each_subspace(lat, 10, [&](const Subspace&) { ++visits; });
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.count(), subspace_count(6, 2).get_str());
  }
  EXPECT_EQ(visits, 0u);
}

TEST(Oracles, ActionPreimagesExamples) {
  const FieldSpec f(2);
  const SubspaceLattice lat(f, 3);
  const PairingContext<SubspaceLattice> ctx(lat, Subspace::coordinate(f, 3, {0}));
  const Subspace x = Subspace::coordinate(f, 3, {0, 1});
  // a . x = x exactly for the a above x: the plane x itself and I.
  const auto fixed = action_preimages(ctx, x, x);
  EXPECT_EQ(fixed.size(), 2u);
  for (const auto& a : fixed) EXPECT_TRUE(lat.leq(x, a));
  // y not below x has no preimage.
  EXPECT_TRUE(action_preimages(ctx, x, Subspace::coordinate(f, 3, {2})).empty());
}

TEST(Oracles, ActionPreimagesContainTheSecret) {
  const SubspaceLattice lat(FieldSpec(2), 5);
  SeededRng rng(10);
  for (int t = 0; t < 20; ++t) {
    const PairingContext<SubspaceLattice> ctx(lat, lat.random_subspace_of_dim(2, rng));
    const Subspace a = lat.random_superspace_of_dim(ctx.d(), 4, rng);
    const Subspace x = lat.random_subspace_of_dim(3, rng);
    const auto pre = action_preimages(ctx, x, ctx.act(a, x));
    EXPECT_NE(std::find(pre.begin(), pre.end(), a), pre.end());
    for (const auto& b : pre) EXPECT_EQ(ctx.act(b, x), ctx.act(a, x));
  }
}

TEST(Oracles, ActionPreimagesRespectBudget) {
  const SubspaceLattice lat(FieldSpec(3), 6);
  const PairingContext<SubspaceLattice> ctx(lat, Subspace::coordinate(FieldSpec(3), 6, {0}));
  EXPECT_THROW(action_preimages(ctx, lat.top(), lat.top(), 5), BudgetExceeded);
}

TEST(Oracles, BdhCandidatesContainTheSessionKey) {
  const ParamPolicy policy = ParamPolicy::make(PolicyKind::geometry5, 2, 5, 32);
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SeededRng rng(seed);
    const auto [params, msk] = setup(policy, rng);
    const auto trace = instrumented::encrypt_traced(params, "victim", BitString(32), rng);
    const auto found = brute_force_bdh(params, trace.q_id, trace.ciphertext.U);
    EXPECT_GE(found.consistent_r, 1u);
    EXPECT_GE(found.searched, found.consistent_r);
    EXPECT_NE(std::find(found.keys.begin(), found.keys.end(), trace.session_key), found.keys.end());
    ++checked;
  }
  EXPECT_EQ(checked, 30u);
}
