#include <gtest/gtest.h>

#include "oracles.hpp"
#include "subordkit/harness.hpp"
#include "subordkit/space.hpp"

using namespace subordkit;

TEST(Space, ClassesAreCanonical) {
  const FinSubSpace x = FinSubSpace::from_classes(3, {0b100, 0b011});
  EXPECT_EQ(x.n_classes(), 2u);
  EXPECT_EQ(x.class_index(0), 0u);
  EXPECT_EQ(x.class_index(2), 1u);
  EXPECT_EQ(x, FinSubSpace(std::vector<unsigned>{5, 5, 9}));
  EXPECT_EQ(format_classes(x), "{0,1},{2}");
}

TEST(Space, RejectsNonPartitions) {
  EXPECT_THROW(FinSubSpace::from_classes(3, {0b011, 0b110}), PreconditionError);
  EXPECT_THROW(FinSubSpace::from_classes(3, {0b011}), PreconditionError);
}

TEST(Space, Saturation) {
  const FinSubSpace x = FinSubSpace::from_classes(3, {0b011, 0b100});
  EXPECT_EQ(x.saturate(0b001), 0b011u);
  EXPECT_EQ(x.saturate(0b100), 0b100u);
  EXPECT_TRUE(x.is_saturated(0b011));
  EXPECT_FALSE(x.is_saturated(0b101));
}

TEST(Relations, CompositionAndConverseMatchOracle) {
  const FinSubSpace x = FinSubSpace::discrete(3);
  SplitMix64 rng(11);
  for (int i = 0; i < 50; ++i) {
    PointRelation a(x, x), b(x, x);
    for (unsigned p = 0; p < 3; ++p) {
      a.set_row(p, static_cast<PointSet>(rng.below(8)));
      b.set_row(p, static_cast<PointSet>(rng.below(8)));
    }
    EXPECT_EQ(oracle::pairs_of(compose(a, b)), oracle::compose(oracle::pairs_of(a), oracle::pairs_of(b)));
    EXPECT_EQ(oracle::pairs_of(converse(a)), oracle::converse(oracle::pairs_of(a)));
  }
}

TEST(Relations, SaturationIsCompatibleAndIdempotent) {
  const FinSubSpace x1 = FinSubSpace::from_classes(3, {0b011, 0b100});
  const FinSubSpace x2 = FinSubSpace::from_classes(2, {0b11});
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const PointRelation r = gen_compatible_relation(seed, x1, x2);
    EXPECT_TRUE(is_compatible(r)) << seed;
    EXPECT_EQ(saturate(r), r);
  }
}

TEST(Relations, CompatibilityWitness) {
  const FinSubSpace x = FinSubSpace::one_class(2);
  PointRelation id = PointRelation::identity(x);
  const auto w = compatibility_witness(id);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::pair<unsigned, unsigned>{0, 1}));
  EXPECT_TRUE(is_compatible(PointRelation::equivalence(x)));
}

TEST(Relations, ImageAndPreimage) {
  const FinSubSpace x = FinSubSpace::discrete(3);
  PointRelation r(x, x);
  r.add(0, 1);
  r.add(2, 1);
  EXPECT_EQ(r.image(0b001), 0b010u);
  EXPECT_EQ(r.preimage(0b010), 0b101u);
  EXPECT_EQ(r.preimage(0b001), 0u);
}
