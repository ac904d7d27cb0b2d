#include <gtest/gtest.h>

#include "oracles.hpp"
#include "subordkit/harness.hpp"
#include "subordkit/morphclass.hpp"

using namespace subordkit;

namespace {

std::vector<SubAlgebra> small_algebras(unsigned max_atoms) {
  std::vector<SubAlgebra> out;
  for (unsigned k = 1; k <= max_atoms; ++k) {
    for (const FinSubSpace& x : gen_partitions(k)) out.push_back(from_equivalence(x));
  }
  return out;
}

DeVriesMap table_map(const SubAlgebra& a, const SubAlgebra& b, std::vector<Mask> t) { return DeVriesMap(a, b, std::move(t)); }

}  // namespace

TEST(Continuity, IdentityIsContinuous) {
  for (const SubAlgebra& b : small_algebras(3)) {
    EXPECT_TRUE(is_continuous(b.s(), b.s(), b.s()).continuous);
  }
}

TEST(Continuity, ClosedUnderComposition) {
  const auto parts = gen_partitions(2);
  for (const FinSubSpace& x : parts) {
    for (const FinSubSpace& y : parts) {
      for (const FinSubSpace& z : parts) {
        for (const PointRelation& r1 : all_compatible_relations(x, y)) {
          for (const PointRelation& r2 : all_compatible_relations(y, z)) {
            const Subordination t = compose(from_closed_relation(r1), from_closed_relation(r2));
            EXPECT_TRUE(is_continuous(t, from_equivalence(x).s(), from_equivalence(z).s()).continuous);
          }
        }
      }
    }
  }
}

// Every relation satisfying S1-S4 and compatibility between algebras with at
// most two atoms, compared against the literal definition. None is
// non-continuous at this size.
TEST(Continuity, EveryCompatibleSubordinationUpToTwoAtoms) {
  std::size_t checked = 0;
  for (const SubAlgebra& b1 : small_algebras(2)) {
    for (const SubAlgebra& b2 : small_algebras(2)) {
      const unsigned n1 = b1.alg().n_atoms(), n2 = b2.alg().n_atoms();
      const unsigned cells = static_cast<unsigned>(b1.alg().size() * b2.alg().size());
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
        Subordination t(b1.alg(), b2.alg());
        for (unsigned c = 0; c < cells; ++c) {
          if (bits >> c & 1u) t.add(c / static_cast<unsigned>(b2.alg().size()), c % b2.alg().size());
        }
        if (!is_compatible(t, b1.s(), b2.s()).compatible) continue;
        if (!(check_axioms(t).profile & kSub)) continue;
        ++checked;
        const bool want =
            oracle::continuous(oracle::pairs_of(t), oracle::pairs_of(b1.s()), oracle::pairs_of(b2.s()), n1, n2);
        EXPECT_EQ(is_continuous(t, b1.s(), b2.s()).continuous, want);
        EXPECT_TRUE(want);
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(Continuity, NoNonContinuousCompatibleRelationUpToThreePoints) {
  EXPECT_FALSE(search_noncontinuous(3).has_value());
}

TEST(Continuity, UncheckedReportsWitnessOnIncompatibleRelation) {
  const SubAlgebra b = from_equivalence(FinSubSpace::one_class(2));
  Subordination t(b.alg(), b.alg());
  t.add(0, 0);
  t.add(0b11, 0b11);
  t.add(0b01, 0b01);
  const ContinuityResult r = continuity_unchecked(t, b.s(), b.s());
  EXPECT_FALSE(r.continuous);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(b.s().relates(r.witness->first, r.witness->second));
  EXPECT_FALSE(oracle::continuous(oracle::pairs_of(t), oracle::pairs_of(b.s()), oracle::pairs_of(b.s()), 2, 2));
  EXPECT_THROW(is_continuous(t, b.s(), b.s()), PreconditionError);
}

TEST(Continuity, VariantsAgree) {
  const SubAlgebra p = order_algebra(BoolAlg(2));
  const ContinuityVariants v = continuity_variants(p.s(), p.s(), p.s());
  EXPECT_TRUE(v.v1a && v.v1b && v.v1c && v.v2b && v.v2c);
  for (unsigned k1 = 1; k1 <= 3; ++k1) {
    for (const FinSubSpace& x1 : gen_partitions(k1)) {
      for (const FinSubSpace& x2 : gen_partitions(2)) {
        for (const PointRelation& r : all_compatible_relations(x1, x2)) {
          EXPECT_TRUE(continuity_variants(from_closed_relation(r), from_equivalence(x1).s(),
                                          from_equivalence(x2).s())
                          .agree());
        }
      }
    }
  }
}

TEST(Continuity, ExplicitDiamondWitnessesCMorphism) {
  const FinSubSpace x1 = FinSubSpace::from_classes(3, {0b011, 0b100});
  const FinSubSpace x2 = FinSubSpace::discrete(2);
  const RoundIdealFrame ri1 = round_ideals(from_equivalence(x1));
  const RoundIdealFrame ri2 = round_ideals(from_equivalence(x2));
  for (const PointRelation& r : all_compatible_relations(x1, x2)) {
    const Subordination t = from_closed_relation(r);
    EXPECT_TRUE(is_cmorph_witness(ri_on_morphism(t, ri1, ri2), explicit_diamond(t, ri1, ri2)));
  }
}

TEST(Functional, IdentityAndFunctionGraph) {
  for (const SubAlgebra& b : small_algebras(3)) EXPECT_TRUE(is_functional(b.s(), b.s(), b.s()).functional);

  const FinSubSpace x1 = FinSubSpace::from_classes(3, {0b011, 0b100});
  const FinSubSpace x2 = FinSubSpace::discrete(2);
  const PointRelation graph(x1, x2, {{0, 1}, {1, 1}, {2, 0}});
  const FunctionalResult f =
      is_functional(from_closed_relation(graph), from_equivalence(x1).s(), from_equivalence(x2).s());
  EXPECT_TRUE(f.functional);
}

TEST(Functional, SplittingRelationIsNotFunctional) {
  const FinSubSpace x1 = FinSubSpace::discrete(1);
  const FinSubSpace x2 = FinSubSpace::discrete(2);
  const PointRelation split(x1, x2, {{0, 0}, {0, 1}});
  const Subordination t = from_closed_relation(split);
  const FunctionalResult f = is_functional(t, from_equivalence(x1).s(), from_equivalence(x2).s());
  EXPECT_FALSE(f.functional);
  EXPECT_FALSE(f.detail.empty());
  const oracle::Pairs rr = oracle::compose(oracle::converse(oracle::pairs_of(split)), oracle::pairs_of(split));
  EXPECT_TRUE(rr.count({0, 1}));  // R o R^ relates inequivalent points
}

TEST(Functional, CharacterizationAndContinuityOnSmallRelations) {
  for (unsigned k1 = 1; k1 <= 3; ++k1) {
    for (const FinSubSpace& x1 : gen_partitions(k1)) {
      for (unsigned k2 = 1; k2 <= 2; ++k2) {
        for (const FinSubSpace& x2 : gen_partitions(k2)) {
          const Subordination s1 = from_equivalence(x1).s(), s2 = from_equivalence(x2).s();
          for (const PointRelation& r : all_compatible_relations(x1, x2)) {
            const Subordination t = from_closed_relation(r);
            const bool fun = is_functional(t, s1, s2).functional;
            EXPECT_EQ(functional_characterization(t, s1, s2).holds(), fun);
            if (fun) {
              EXPECT_TRUE(is_continuous(t, s1, s2).continuous);
            }
          }
        }
      }
    }
  }
}

TEST(DeVries, IdentityAndDroppingAnAtom) {
  const SubAlgebra p = order_algebra(BoolAlg(2));
  EXPECT_TRUE(check_devries_morphism(DeVriesMap::identity(p)).morphism());

  const DeVriesMap drop = table_map(p, p, {0b00, 0b00, 0b10, 0b10});
  const DeVriesFlags fl = check_devries_morphism(drop);
  EXPECT_TRUE(fl.m2);
  bool m3 = true;
  for (Mask a = 0; a < 4; ++a) {
    for (Mask b = 0; b < 4; ++b) {
      if ((a & ~b) == 0 && (0b11 & ~drop(0b11 & ~a) & ~drop(b)) != 0) m3 = false;
    }
  }
  EXPECT_EQ(fl.m3, m3);
}

TEST(DeVries, CompositionOnOrderIsPointwise) {
  SplitMix64 rng(5);
  const SubAlgebra p = order_algebra(BoolAlg(2));
  for (int i = 0; i < 40; ++i) {
    const DeVriesMap f = devmap_from_coatoms(2, 2, {static_cast<Mask>(rng.below(4)), static_cast<Mask>(rng.below(4))});
    const DeVriesMap g = devmap_from_coatoms(2, 2, {static_cast<Mask>(rng.below(4)), static_cast<Mask>(rng.below(4))});
    const DeVriesMap gf = devries_compose(f, g);
    for (Mask a = 0; a < 4; ++a) EXPECT_EQ(gf(a), g(f(a)));
    EXPECT_TRUE(check_devries_morphism(gf).continuous_mult());
  }
}

TEST(BoxT, IdentityExamples) {
  const SubAlgebra p = order_algebra(BoolAlg(2));
  EXPECT_EQ(box_of(p.s(), p, p), DeVriesMap::identity(p));
  EXPECT_EQ(t_of(DeVriesMap::identity(p)), p.s());
  EXPECT_THROW(box_of(from_equivalence(FinSubSpace::one_class(2)).s(), from_equivalence(FinSubSpace::one_class(2)),
                      from_equivalence(FinSubSpace::one_class(2))),
               PreconditionError);
}

TEST(BoxT, RoundTripOnEveryMultiplicativeTable) {
  for (unsigned k1 = 1; k1 <= 2; ++k1) {
    for (unsigned k2 = 1; k2 <= 2; ++k2) {
      const SubAlgebra b1 = order_algebra(BoolAlg(k1)), b2 = order_algebra(BoolAlg(k2));
      const std::size_t n = b2.alg().size(), m = b1.alg().size();
      std::size_t accepted = 0;
      std::vector<Mask> t(n, 0);
      std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == n) {
          const DeVriesMap box(b2, b1, t);
          if (!check_devries_morphism(box).continuous_mult()) return;
          ++accepted;
          const Subordination tb = t_of(box);
          EXPECT_EQ(box_of(tb, b1, b2), box);
          EXPECT_EQ(t_of(box_of(tb, b1, b2)), tb);
          return;
        }
        for (Mask v = 0; v < m; ++v) {
          t[i] = v;
          go(i + 1);
        }
      };
      go(0);
      EXPECT_GT(accepted, 0u);
    }
  }
}
