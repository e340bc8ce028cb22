#include <gtest/gtest.h>

#include <cmath>

#include "modlat/errors.hpp"
#include "modlat/laws.hpp"
#include "modlat/subspace.hpp"
#include "support/brute_force.hpp"

using namespace modlat;

namespace {

Subspace span_rows(FieldSpec f, std::size_t n, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  return Subspace::span(Matrix::from_rows(f, n, rows));
}

}  // namespace

TEST(Subspace, CanonicalBasisMakesEqualityExact) {
  const FieldSpec f(3);
  EXPECT_EQ(span_rows(f, 3, {{1, 1, 0}, {0, 1, 1}}), span_rows(f, 3, {{1, 2, 1}, {2, 2, 0}, {1, 0, 2}}));
  EXPECT_NE(span_rows(f, 3, {{1, 1, 0}}), span_rows(f, 3, {{1, 2, 0}}));
  EXPECT_TRUE(Subspace::zero(f, 3).is_zero());
  EXPECT_TRUE(Subspace::full(f, 3).is_full());
}

TEST(Subspace, ContainsVector) {
  const FieldSpec f(5);
  const Subspace s = span_rows(f, 3, {{1, 2, 0}});
  const FieldElement in[] = {3, 1, 0};
  const FieldElement out[] = {1, 0, 0};
  EXPECT_TRUE(s.contains(in));
  EXPECT_FALSE(s.contains(out));
  const FieldElement wrong[] = {1, 0};
  EXPECT_THROW(s.contains(wrong), ShapeMismatch);
}

TEST(SubspaceLattice, JoinExamples) {
  const FieldSpec f(2);
  const SubspaceLattice l2(f, 2), l4(f, 4);
  EXPECT_EQ(l2.join(Subspace::coordinate(f, 2, {0}), Subspace::coordinate(f, 2, {1})), l2.top());
  const Subspace x = span_rows(f, 4, {{1, 1, 0, 0}});
  EXPECT_EQ(l4.join(x, l4.bottom()), x);
  EXPECT_EQ(l4.join(Subspace::coordinate(f, 4, {2}), span_rows(f, 4, {{1, 0, 1, 0}})),
            Subspace::coordinate(f, 4, {0, 2}));
}

TEST(SubspaceLattice, MeetExamples) {
  const FieldSpec f(2);
  const SubspaceLattice l3(f, 3);
  EXPECT_EQ(l3.meet(Subspace::coordinate(f, 3, {0, 1}), Subspace::coordinate(f, 3, {1, 2})),
            Subspace::coordinate(f, 3, {1}));
  const Subspace x = span_rows(f, 3, {{1, 1, 1}});
  EXPECT_EQ(l3.meet(x, l3.top()), x);
  EXPECT_EQ(l3.meet(Subspace::coordinate(f, 3, {0}), Subspace::coordinate(f, 3, {1})), l3.bottom());
}

TEST(SubspaceLattice, LeqExamples) {
  const FieldSpec f(2);
  const SubspaceLattice l3(f, 3);
  EXPECT_TRUE(l3.leq(l3.bottom(), span_rows(f, 3, {{0, 1, 1}})));
  EXPECT_TRUE(l3.leq(Subspace::coordinate(f, 3, {0}), Subspace::coordinate(f, 3, {0, 1})));
  EXPECT_FALSE(l3.leq(span_rows(f, 3, {{1, 1, 0}}), Subspace::coordinate(f, 3, {0, 2})));
}

TEST(SubspaceLattice, OperationsMatchVectorSetsExhaustively) {
  // Every pair of subspaces of F_2^3, F_3^2 and F_2^4, compared with set-level
  // intersection and span-closure of the union.
  for (auto [q, n] : {std::pair<std::uint32_t, std::size_t>{2, 3}, {3, 2}, {2, 4}}) {
    const FieldSpec f(q);
    const SubspaceLattice lat(f, n);
    const bf::Space space{q, n};
    std::vector<Subspace> all;
    for (const auto& set : space.all_subspaces()) {
      std::vector<std::vector<std::int64_t>> rows;
      for (std::size_t v = 0; v < set.size(); ++v) {
        if (!set[v]) continue;
        auto d = space.digits(v);
        rows.emplace_back(d.begin(), d.end());
      }
      all.push_back(Subspace::span(Matrix::from_rows(f, n, rows)));
      ASSERT_EQ(space.of(all.back()), set);
    }
    for (const auto& x : all) {
      for (const auto& y : all) {
        const auto sx = space.of(x), sy = space.of(y);
        EXPECT_EQ(space.of(lat.meet(x, y)), bf::Space::meet(sx, sy));
        EXPECT_EQ(space.of(lat.join(x, y)), space.join(sx, sy));
        EXPECT_EQ(lat.leq(x, y), bf::Space::leq(sx, sy));
      }
    }
  }
}

TEST(SubspaceLattice, DimensionFormulaAndAxiomsOnRandomElements) {
  const FieldSpec f(3);
  const SubspaceLattice lat(f, 6);
  SeededRng rng(17);
  for (int t = 0; t < 300; ++t) {
    const Subspace x = lat.random_element(rng), y = lat.random_element(rng), z = lat.random_element(rng);
    EXPECT_EQ(lat.join(x, y).dim() + lat.meet(x, y).dim(), x.dim() + y.dim());
    EXPECT_TRUE(check_lattice_axioms(lat, x, y, z));
  }
}

TEST(SubspaceLattice, RejectsForeignElements) {
  const SubspaceLattice lat(FieldSpec(2), 3);
  EXPECT_THROW(lat.join(Subspace::zero(FieldSpec(2), 4), lat.top()), LatticeMismatch);
  EXPECT_THROW(lat.meet(Subspace::zero(FieldSpec(3), 3), lat.top()), LatticeMismatch);
}

TEST(SubspaceLattice, ComplementIsNotUnique) {
  const FieldSpec f(2);
  const SubspaceLattice lat(f, 2);
  const Subspace e1 = Subspace::coordinate(f, 2, {0});
  EXPECT_EQ(lat.complement_of(e1), Subspace::coordinate(f, 2, {1}));
  EXPECT_TRUE(is_complement(lat, e1, span_rows(f, 2, {{1, 1}})));
  EXPECT_TRUE(is_complement(lat, lat.bottom(), lat.top()));
  EXPECT_FALSE(is_complement(lat, e1, e1));
}

TEST(SubspaceLattice, ComplementOfRandomElements) {
  const SubspaceLattice lat(FieldSpec(5), 7);
  SeededRng rng(23);
  for (int t = 0; t < 100; ++t) {
    const Subspace x = lat.random_element(rng);
    EXPECT_TRUE(is_complement(lat, x, lat.complement_of(x)));
  }
}

TEST(Samplers, DimensionsAndContainment) {
  const FieldSpec f(101);
  const SubspaceLattice lat(f, 16);
  SeededRng rng(8);
  EXPECT_TRUE(lat.random_subspace(0, rng).is_zero());
  std::size_t full = 0;
  for (int t = 0; t < 10000; ++t) full += lat.random_subspace(4, rng).dim() == 4 ? 1 : 0;
  EXPECT_GE(full, 9990u);
  const Subspace base = lat.random_subspace_of_dim(5, rng);
  EXPECT_EQ(base.dim(), 5u);
  const Subspace above = lat.random_superspace_of_dim(base, 9, rng);
  EXPECT_EQ(above.dim(), 9u);
  EXPECT_TRUE(lat.leq(base, above));
  EXPECT_TRUE(lat.leq(base, lat.random_superspace(base, 3, rng)));
  EXPECT_TRUE(lat.leq(lat.random_subspace_within(above, 4, rng), above));
  EXPECT_THROW(lat.random_superspace_of_dim(base, 4, rng), InvalidArgument);
}

TEST(Samplers, SquareBinaryFullRankFrequency) {
  // Pr(dim = 8) for the span of 8 uniform vectors of F_2^8 is
  // prod_{i<8} (1 - 2^{i-8}) = 0.28935...
  const SubspaceLattice lat(FieldSpec(2), 8);
  SeededRng rng(99);
  constexpr int trials = 20000;
  double p = 1.0;
  for (int i = 0; i < 8; ++i) p *= 1.0 - std::ldexp(1.0, i - 8);
  int hits = 0;
  for (int t = 0; t < trials; ++t) hits += lat.random_subspace(8, rng).dim() == 8 ? 1 : 0;
  const double sigma = std::sqrt(p * (1 - p) / trials);
  EXPECT_NEAR(static_cast<double>(hits) / trials, p, 3 * sigma);
}

TEST(CanonicalText, RoundTripsAndRejectsNonCanonical) {
  const FieldSpec f(5);
  const Subspace s = span_rows(f, 3, {{2, 4, 1}});
  const std::string text = to_canonical_text(s);
  EXPECT_EQ(text, "q=5 n=3 k=1\n1 2 3\n");
  EXPECT_EQ(parse_canonical_text(text), s);
  EXPECT_EQ(to_canonical_text(Subspace::zero(f, 2)), "q=5 n=2 k=0\n");
  EXPECT_THROW(parse_canonical_text("q=5 n=3 k=1\n2 4 1\n"), FormatError);   // not RREF
  EXPECT_THROW(parse_canonical_text("q=5 n=3 k=1\n1 2 3"), FormatError);     // missing newline
  EXPECT_THROW(parse_canonical_text("q=5 n=3 k=1\n1  2 3\n"), FormatError);  // double space
  EXPECT_THROW(parse_canonical_text("q=4 n=3 k=0\n"), FormatError);
  EXPECT_THROW(parse_canonical_text("q=5 n=3 k=1\n1 2 7\n"), FormatError);
  EXPECT_THROW(parse_canonical_text("q=5 n=3 k=0\nextra"), FormatError);
}
