#include <gtest/gtest.h>

#include "oracles.hpp"
#include "subordkit/functors.hpp"
#include "subordkit/harness.hpp"

using namespace subordkit;

namespace {

SubAlgebra three_atom() { return from_equivalence(FinSubSpace::from_classes(3, {0b011, 0b100})); }

std::set<unsigned> members(const BoolAlg& alg, Row r) {
  std::set<unsigned> out;
  for (Mask m = 0; m < alg.size(); ++m) {
    if (has(r, m)) out.insert(m);
  }
  return out;
}

}  // namespace

TEST(RoundIdeals, Examples) {
  EXPECT_EQ(round_ideals(order_algebra(BoolAlg(1))).size(), 2u);
  const RoundIdealFrame ri = round_ideals(three_atom());
  ASSERT_EQ(ri.size(), 4u);
  EXPECT_EQ(ri.generator(0), 0b000u);
  EXPECT_EQ(ri.generator(1), 0b100u);
  EXPECT_EQ(ri.generator(2), 0b011u);
  EXPECT_EQ(ri.generator(3), 0b111u);
  EXPECT_EQ(ri.frame().label(1), "down{2}");
}

TEST(RoundIdeals, MatchEveryFamilyScan) {
  for (unsigned k = 1; k <= 3; ++k) {
    for (const FinSubSpace& x : gen_partitions(k)) {
      const SubAlgebra b = from_equivalence(x);
      const RoundIdealFrame ri = round_ideals(b);
      std::set<std::set<unsigned>> got;
      for (Idx i = 0; i < ri.size(); ++i) got.insert(members(b.alg(), ri.ideal(i)));
      const auto want = oracle::round_ideals(oracle::pairs_of(b.s()), k);
      EXPECT_EQ(got, std::set<std::set<unsigned>>(want.begin(), want.end()));
      EXPECT_EQ(ri.size(), 1u << x.n_classes());
    }
  }
}

TEST(RoundIdeals, FormulasAgreeWithGenericFrameOps) {
  for (unsigned k = 1; k <= 4; ++k) {
    for (const FinSubSpace& x : gen_partitions(k)) {
      const RoundIdealFrame ri = round_ideals(from_equivalence(x));
      const RoundIdealReport rep = check_round_ideal_frame(ri);
      EXPECT_TRUE(rep.ok()) << rep.detail;
      const oracle::Poset p = oracle::poset_of(ri.frame());
      for (Idx i = 0; i < ri.size(); ++i) {
        EXPECT_EQ(ri.index_of(ri.pseudocomplement_formula(i)), p.pseudocomplement(i));
      }
    }
  }
}

TEST(RiOnMorphism, IdentityAndTop) {
  const SubAlgebra b = three_atom();
  const RoundIdealFrame ri = round_ideals(b);
  EXPECT_EQ(ri_on_morphism(b.s(), ri, ri), LatticeMap::identity(ri.frame()));
  EXPECT_TRUE(ri_identity_law(ri));

  const FinSubSpace x1 = FinSubSpace::from_classes(3, {0b011, 0b100});
  const FinSubSpace x2 = FinSubSpace::one_class(2);
  const PointRelation r = gen_compatible_relation(4, x1, x2);
  const SubAlgebra b2 = from_equivalence(x2);
  const RoundIdealFrame ri2 = round_ideals(b2);
  const LatticeMap h = ri_on_morphism(from_closed_relation(r), ri, ri2);
  EXPECT_EQ(h(ri2.frame().top()), ri.frame().top());
  EXPECT_TRUE(is_preframe(h));
}

TEST(RiOnMorphism, PreframeOnAllSmallRelations) {
  for (unsigned k1 = 1; k1 <= 2; ++k1) {
    for (unsigned k2 = 1; k2 <= 2; ++k2) {
      for (const FinSubSpace& x1 : gen_partitions(k1)) {
        for (const FinSubSpace& x2 : gen_partitions(k2)) {
          const RoundIdealFrame ri1 = round_ideals(from_equivalence(x1));
          const RoundIdealFrame ri2 = round_ideals(from_equivalence(x2));
          for (const PointRelation& r : all_compatible_relations(x1, x2)) {
            EXPECT_TRUE(classify_map(ri_on_morphism(from_closed_relation(r), ri1, ri2), false).preframe);
          }
        }
      }
    }
  }
}

TEST(MacNeille, Examples) {
  const MacNeilleAlgebra p = macneille(order_algebra(BoolAlg(2)));
  EXPECT_EQ(p.algebra().alg().n_atoms(), 2u);
  EXPECT_EQ(p.algebra().s(), order(BoolAlg(2)));

  const MacNeilleAlgebra t = macneille(three_atom());
  EXPECT_EQ(t.algebra().alg().size(), 4u);
  EXPECT_EQ(t.rp.b.incl.size(), t.ri.size());

  const MacNeilleAlgebra one = macneille(from_equivalence(FinSubSpace::one_class(2)));
  EXPECT_EQ(one.algebra().alg().size(), 2u);
  EXPECT_TRUE(check_macneille(one).fixpoint_agrees);
}

TEST(MacNeille, QRelation) {
  const MacNeilleAlgebra p = macneille(order_algebra(BoolAlg(1)));
  const Subordination q = q_relation(p);
  const auto m = p.mask_of(ElemFamily::down(BoolAlg(1), 1).row());
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(q.relates(1, *m));
  for (unsigned k = 1; k <= 3; ++k) {
    for (const FinSubSpace& x : gen_partitions(k)) {
      const MacNeilleAlgebra ni = macneille(from_equivalence(x));
      const QIsoReport r = check_q_iso(ni);
      EXPECT_TRUE(r.left && r.right && r.q_compatible) << r.detail;
      EXPECT_FALSE(interpolation_counterexample(ni).has_value());
    }
  }
}

TEST(MacNeille, Iota) {
  const SubAlgebra p = order_algebra(BoolAlg(2));
  for (Mask m = 0; m < 4; ++m) EXPECT_EQ(iota(p, m), ElemFamily::down(BoolAlg(2), m).row());
  EXPECT_TRUE(iota_report(macneille(p)).injective);

  const SubAlgebra b = three_atom();
  EXPECT_EQ(iota(b, 0b001), iota(b, 0));
  EXPECT_EQ(iota(b, 0b111), full_row(8));
  EXPECT_FALSE(iota_report(macneille(b)).injective);
}

TEST(BFunctor, Examples) {
  const FinFrame p = FinFrame::powerset(2);
  const BRelation id = b_on_morphism(LatticeMap::identity(p));
  EXPECT_EQ(id.rel, order(BoolAlg(2)));
  EXPECT_TRUE(b_identity_law(p));

  const BRelation top = b_on_morphism(LatticeMap(p, p, std::vector<Idx>(4, p.top())));
  EXPECT_EQ(top.rel.size(), 16u);
}

TEST(BFunctor, RejectsNonRegularFrames) {
  const FinFrame c = FinFrame::chain(3);
  EXPECT_THROW(b_on_morphism(LatticeMap::identity(c)), PreconditionError);
}

TEST(FIso, PowersetAndNaturality) {
  const FIso f = f_iso(FinFrame::powerset(2));
  EXPECT_TRUE(frame_iso_check(f.map));
  for (Idx a = 0; a < 4; ++a) {
    EXPECT_EQ(f.ri.ideal(f.map(a)), ElemFamily::down(BoolAlg(2), f.rp.coords.to_mask(a)).row());
  }
  EXPECT_THROW(f_iso(FinFrame::chain(3)), PreconditionError);

  const FinFrame anti = FinFrame::downsets(2, {});
  EXPECT_TRUE(frame_iso_check(f_iso(anti).map));

  SplitMix64 rng(21);
  for (int i = 0; i < 50; ++i) {
    const unsigned k1 = rng.between(1, 4), k2 = rng.between(1, 4);
    std::vector<Mask> images(k1);
    for (auto& m : images) m = static_cast<Mask>(rng.below(1u << k2));
    const LatticeMap box = preframe_from_coatoms(k1, k2, images);
    EXPECT_TRUE(naturality_f(box));
  }
}

TEST(Naturality, QSquareOnCompatibleRelations) {
  const auto parts = gen_partitions(2);
  for (const FinSubSpace& x1 : parts) {
    for (const FinSubSpace& x2 : gen_partitions(3)) {
      const MacNeilleAlgebra n1 = macneille(from_equivalence(x1));
      const MacNeilleAlgebra n2 = macneille(from_equivalence(x2));
      for (const PointRelation& r : all_compatible_relations(x1, x2)) {
        EXPECT_TRUE(naturality_q(from_closed_relation(r), n1, n2));
      }
    }
  }
}
