#include <gtest/gtest.h>

#include "modlat/errors.hpp"
#include "modlat/pairing.hpp"

using namespace modlat;

namespace {

Subspace span_rows(FieldSpec f, std::size_t n, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  return Subspace::span(Matrix::from_rows(f, n, rows));
}

}  // namespace

TEST(Pairing, RejectsBoundsAsTarget) {
  const SubspaceLattice lat(FieldSpec(2), 3);
  EXPECT_THROW(PairingContext<SubspaceLattice>(lat, lat.top()), PreconditionViolation);
  EXPECT_THROW(PairingContext<SubspaceLattice>(lat, lat.bottom()), PreconditionViolation);
}

TEST(Pairing, Examples) {
  const FieldSpec f(2);
  const SubspaceLattice lat(f, 4);
  const PairingContext<SubspaceLattice> ctx(lat, Subspace::coordinate(f, 4, {0, 1}));
  EXPECT_EQ(ctx.pair(lat.bottom(), lat.bottom()), lat.bottom());
  EXPECT_EQ(ctx.pair(lat.top(), Subspace::coordinate(f, 4, {3})), ctx.d());
  EXPECT_EQ(ctx.pair(Subspace::coordinate(f, 4, {2}), span_rows(f, 4, {{1, 0, 1, 0}})),
            Subspace::coordinate(f, 4, {0}));
}

TEST(Pairing, ValuesLieInRange) {
  const SubspaceLattice lat(FieldSpec(3), 5);
  SeededRng rng(2);
  const PairingContext<SubspaceLattice> ctx(lat, lat.random_subspace_of_dim(2, rng));
  const auto range = ctx.range();
  for (int t = 0; t < 200; ++t) {
    EXPECT_TRUE(range.contains(ctx.pair(lat.random_element(rng), lat.random_element(rng))));
  }
}

TEST(Pairing, ActionRequiresElementAboveTarget) {
  const FieldSpec f(2);
  const SubspaceLattice lat(f, 3);
  const PairingContext<SubspaceLattice> ctx(lat, Subspace::coordinate(f, 3, {0}));
  EXPECT_THROW(ctx.act(Subspace::coordinate(f, 3, {1}), lat.top()), PreconditionViolation);
  EXPECT_THROW(ctx.check_bilinear(lat.top(), lat.top(), Subspace::coordinate(f, 3, {1})), PreconditionViolation);
  EXPECT_EQ(ctx.act(lat.top(), Subspace::coordinate(f, 3, {1})), Subspace::coordinate(f, 3, {1}));
}

TEST(Pairing, BilinearWithTopAndWithTarget) {
  const SubspaceLattice lat(FieldSpec(2), 4);
  SeededRng rng(6);
  for (int t = 0; t < 200; ++t) {
    const PairingContext<SubspaceLattice> ctx(lat, lat.random_subspace_of_dim(1 + rng.uniform_below(3), rng));
    const Subspace x1 = lat.random_element(rng), x2 = lat.random_element(rng);
    EXPECT_TRUE(ctx.check_bilinear(x1, x2, lat.top()));
    EXPECT_TRUE(ctx.check_bilinear(x1, x2, ctx.d()));
  }
}

TEST(Pairing, BilinearOnRandomTriples) {
  const SubspaceLattice lat(FieldSpec(3), 6);
  SeededRng rng(7);
  for (int t = 0; t < 1000; ++t) {
    const PairingContext<SubspaceLattice> ctx(lat, lat.random_subspace_of_dim(3, rng));
    const Subspace a = lat.random_superspace(ctx.d(), rng.uniform_below(4), rng);
    const Subspace b = lat.random_superspace(ctx.d(), rng.uniform_below(4), rng);
    const Subspace x1 = lat.random_element(rng), x2 = lat.random_element(rng);
    ASSERT_TRUE(ctx.check_bilinear(x1, x2, a));
    ASSERT_TRUE(ctx.check_bilinear(x1, x2, a, b));
  }
}

TEST(Pairing, BilinearityFailsInPentagon) {
  // Bilinearity rests on the modular law, so N5 must have a failing instance
  // (for example d = c, a = c, x1 = b, x2 = a).
  const FiniteLattice n5 = FiniteLattice::pentagon();
  bool broken = false;
  for (std::size_t d = 1; d < 4; ++d) {
    const PairingContext<FiniteLattice> ctx(n5, d);
    for (std::size_t a = 0; a < 5; ++a) {
      if (!ctx.acts(a)) continue;
      for (std::size_t x1 = 0; x1 < 5; ++x1) {
        for (std::size_t x2 = 0; x2 < 5; ++x2) broken = broken || !ctx.check_bilinear(x1, x2, a);
      }
    }
  }
  EXPECT_TRUE(broken);
}

TEST(Pairing, LeakValueOnBooleanBackendAlwaysMatches) {
  const BooleanLattice b(6);
  SeededRng rng(3);
  for (int t = 0; t < 500; ++t) {
    Subset d = b.random_element(rng);
    if (d == b.bottom() || d == b.top()) continue;
    const PairingContext<BooleanLattice> ctx(b, d);
    const Subset x = b.random_element(rng), y = b.random_element(rng);
    EXPECT_EQ(ctx.pair(x, y), ctx.leak_value(x, y));
  }
}

TEST(Pairing, LeakValueDiffersInSubspaceLattice) {
  const FieldSpec f(2);
  const SubspaceLattice lat(f, 2);
  const PairingContext<SubspaceLattice> ctx(lat, span_rows(f, 2, {{1, 1}}));
  const Subspace x = Subspace::coordinate(f, 2, {0}), y = Subspace::coordinate(f, 2, {1});
  EXPECT_EQ(ctx.pair(x, y), ctx.d());
  EXPECT_EQ(ctx.leak_value(x, y), lat.bottom());
  EXPECT_EQ(ctx.leak_value(x, x), ctx.pair(x, x));
}

TEST(Pairing, NondegeneracyReportOnSubspaces) {
  const SubspaceLattice lat(FieldSpec(2), 4);
  SeededRng rng(12);
  const PairingContext<SubspaceLattice> ctx(lat, lat.random_subspace_of_dim(2, rng));
  const auto report =
      check_nondegenerate(ctx, 10000, [&](SeededRng& r) { return lat.random_subspace(3, r); }, rng);
  EXPECT_EQ(report.samples, 10000u);
  EXPECT_GE(report.distinct_values(), 2u);
  EXPECT_FALSE(report.collapsed());
  EXPECT_FALSE(report.distributive_degenerate());
}

TEST(Pairing, ChainBackendIsDistributiveDegenerate) {
  // The chain 000 < 100 < 110 < 111 inside a product of one-point Boolean
  // lattices.
  const Lattice chain_like = Lattice::product({Lattice::boolean(1), Lattice::boolean(1), Lattice::boolean(1)});
  auto prefix = [](std::size_t k) {
    Element::Tuple t;
    for (std::size_t i = 0; i < 3; ++i) t.push_back(Subset{i < k ? 1u : 0u});
    return Element(t);
  };
  const PairingContext<Lattice> ctx(chain_like, prefix(2));
  SeededRng rng(1);
  const auto report = check_nondegenerate(
      ctx, 200, [&](SeededRng& r) { return prefix(r.uniform_below(4)); }, rng);
  EXPECT_TRUE(report.distributive_degenerate());
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Element x = prefix(i), y = prefix(j), v = ctx.pair(x, y);
      EXPECT_TRUE(v == chain_like.meet(ctx.d(), x) || v == chain_like.meet(ctx.d(), y) || v == ctx.d());
    }
  }
}
