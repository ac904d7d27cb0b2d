#include <gtest/gtest.h>

#include "oracles.hpp"
#include "subordkit/duality.hpp"
#include "subordkit/harness.hpp"

using namespace subordkit;

namespace {

FinSubSpace three_points() { return FinSubSpace::from_classes(3, {0b011, 0b100}); }

}  // namespace

TEST(Ult, Examples) {
  EXPECT_EQ(ult(order_algebra(BoolAlg(2))), FinSubSpace::discrete(2));
  for (unsigned k = 1; k <= 4; ++k) {
    for (const FinSubSpace& x : gen_partitions(k)) {
      EXPECT_EQ(ult(clop(x)), x);
      EXPECT_EQ(clop(ult(clop(x))), clop(x));
    }
  }
}

TEST(Ult, RejectsNonEquivalence) {
  const BoolAlg b(2);
  Subordination s = order(b);
  s.add(0b01, 0b10);
  EXPECT_THROW(ult(SubAlgebra::trusted(s, kSub)), PreconditionError);
}

TEST(Clop, Examples) {
  EXPECT_EQ(clop(FinSubSpace::discrete(3)).s(), order(BoolAlg(3)));
  const SubAlgebra one = clop(FinSubSpace::one_class(2));
  EXPECT_EQ(one.s(), from_equivalence(FinSubSpace::one_class(2)).s());
  EXPECT_TRUE(one.profile() & kS5);
}

TEST(Quotient, Examples) {
  const FinSubSpace d = FinSubSpace::discrete(3);
  EXPECT_EQ(quotient(d).size, 3u);
  PointRelation r(d, d, {{0, 1}, {2, 2}});
  EXPECT_EQ(q_of_relation(r), r);
  EXPECT_EQ(quotient(FinSubSpace::one_class(3)).size, 1u);
  EXPECT_THROW(q_of_relation(PointRelation::identity(FinSubSpace::one_class(2))), PreconditionError);
}

TEST(Quotient, PreservesComposition) {
  const FinSubSpace x = three_points(), y = FinSubSpace::one_class(2), z = FinSubSpace::discrete(2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PointRelation r1 = gen_compatible_relation(seed, x, z);
    const PointRelation r2 = gen_compatible_relation(seed + 1000, z, y);
    EXPECT_EQ(q_of_relation(compose(r1, r2)), compose(q_of_relation(r1), q_of_relation(r2)));
  }
}

TEST(Box, Examples) {
  const FinSubSpace x = three_points();
  EXPECT_EQ(box_r(x, 0b101), 0b100u);
  for (PointSet u = 0; u < 8; ++u) {
    EXPECT_EQ(box_r(x, box_r(x, u)), box_r(x, u));
    EXPECT_EQ(x.is_saturated(u), box_r(x, u) == u);
    // Largest saturated subset of u, by scanning.
    PointSet best = 0;
    for (PointSet v = 0; v < 8; ++v) {
      if ((v & ~u) == 0 && x.is_saturated(v) && std::popcount(v) > std::popcount(best)) best = v;
    }
    EXPECT_EQ(box_r(x, u), best);
  }
  EXPECT_EQ(box_rel(PointRelation::equivalence(x), 0b101), 0b100u);
}

TEST(Phi, PrincipalIdealGivesAtoms) {
  const SubAlgebra b = order_algebra(BoolAlg(3));
  for (Mask a = 0; a < 8; ++a) {
    ElemFamily i = ElemFamily::down(b.alg(), a);
    EXPECT_EQ(phi(b, i), a);
    EXPECT_EQ(psi(b, ElemFamily::up(b.alg(), a)), a);
  }
}

TEST(Phi, TranslationLawsOnSmallAlgebras) {
  for (unsigned k = 1; k <= 3; ++k) {
    for (const FinSubSpace& x : gen_partitions(k)) {
      const SubAlgebra b = clop(x);
      EXPECT_FALSE(check_translation_laws(b).has_value());
      EXPECT_FALSE(check_phi_box(b).has_value());
      EXPECT_FALSE(check_psi_r(b).has_value());
    }
  }
}

TEST(Phi, MutatedBoxIsCaught) {
  const SubAlgebra b = clop(three_points());
  EXPECT_TRUE(check_phi_box(b, mutated_box()).has_value());
}

TEST(SaturatedOpens, Examples) {
  const FinSubSpace d2 = FinSubSpace::discrete(2);
  EXPECT_EQ(saturated_open_frame(d2), FinFrame::powerset(2));
  const RegularOpens ro = r_regular_opens(d2);
  for (Idx i = 0; i < ro.elements.size(); ++i) {
    for (Idx j = 0; j < ro.elements.size(); ++j) {
      EXPECT_EQ(has(ro.prec[i], j), (ro.elements[i] & ~ro.elements[j]) == 0);
    }
  }
  EXPECT_EQ(saturated_opens(three_points()).size(), 4u);
}

TEST(Isomorphisms, OrderAndThreeAtom) {
  for (unsigned k = 1; k <= 3; ++k) {
    const DualityReport r = duality_isomorphisms(order_algebra(BoolAlg(k)));
    EXPECT_TRUE(r.ok()) << r.detail;
    EXPECT_EQ(r.quotient_size, k);
  }
  const DualityReport t = duality_isomorphisms(clop(three_points()));
  EXPECT_TRUE(t.ok()) << t.detail;
  EXPECT_EQ(t.quotient_size, 2u);
  EXPECT_EQ(round_ideals(clop(three_points())).size(), 1u << t.quotient_size);
}

TEST(Isomorphisms, EveryPartitionUpToFourPoints) {
  std::size_t count = 0;
  for (unsigned k = 1; k <= 4; ++k) {
    for (const FinSubSpace& x : gen_partitions(k)) {
      const DualityReport r = duality_isomorphisms(clop(x));
      EXPECT_TRUE(r.ok()) << format_classes(x) << ": " << r.detail;
      ++count;
    }
  }
  EXPECT_EQ(count, 23u);
}

TEST(FourWay, IdentityAndSmallRelations) {
  const FourWayReport id = continuity_crosscheck(PointRelation::identity(FinSubSpace::discrete(2)));
  EXPECT_TRUE(id.q_continuous && id.saturated_preimage && id.clopen_interpolation && id.algebraic);
  for (unsigned k1 = 1; k1 <= 3; ++k1) {
    for (unsigned k2 = 1; k2 <= 3; ++k2) {
      for (const FinSubSpace& x1 : gen_partitions(k1)) {
        for (const FinSubSpace& x2 : gen_partitions(k2)) {
          for (const PointRelation& r : all_compatible_relations(x1, x2)) {
            EXPECT_TRUE(continuity_crosscheck(r).agree());
          }
        }
      }
    }
  }
}

TEST(PointFunctional, GraphsAndSplits) {
  const FinSubSpace x1 = three_points(), x2 = FinSubSpace::discrete(2);
  EXPECT_TRUE(point_functional(PointRelation(x1, x2, {{0, 1}, {1, 1}, {2, 0}})).functional);
  const PointFunctional split = point_functional(PointRelation(x1, x2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}}));
  EXPECT_FALSE(split.single);
  const PointFunctional partial = point_functional(PointRelation(x1, x2, {{2, 0}}));
  EXPECT_FALSE(partial.total);
  ASSERT_TRUE(partial.witness.has_value());
  EXPECT_EQ(*partial.witness, (std::pair<unsigned, unsigned>{0, 0}));
}

TEST(PointFunctional, AgreesWithAlgebraicFunctionality) {
  for (unsigned k1 = 1; k1 <= 3; ++k1) {
    for (unsigned k2 = 1; k2 <= 2; ++k2) {
      for (const FinSubSpace& x1 : gen_partitions(k1)) {
        for (const FinSubSpace& x2 : gen_partitions(k2)) {
          for (const PointRelation& r : all_compatible_relations(x1, x2)) {
            EXPECT_EQ(point_functional(r).functional,
                      is_functional(from_closed_relation(r), clop(x1).s(), clop(x2).s()).functional);
          }
        }
      }
    }
  }
}

TEST(Irreducible, OnlyIdentityAtFiniteScale) {
  for (unsigned k = 1; k <= 4; ++k) {
    for (const FinSubSpace& x : gen_partitions(k)) EXPECT_EQ(is_irreducible(x), x.is_discrete());
  }
}
