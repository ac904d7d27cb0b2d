#include <gtest/gtest.h>

#include "subordkit/boolcore.hpp"
#include "subordkit/harness.hpp"

using namespace subordkit;

namespace {

ElemFamily fam(const BoolAlg& alg, std::initializer_list<Mask> ms) { return ElemFamily(alg, ms); }

}  // namespace

TEST(Elements, MeetJoinComplement) {
  const BoolAlg b2(2), b3(3);
  EXPECT_EQ(meet(Element(b2, 0b01), Element(b2, 0b11)).mask, 0b01u);
  EXPECT_EQ(complement(Element(b2, 0b01)).mask, 0b10u);
  EXPECT_EQ(join(Element(b3, 0b001), Element(b3, 0b100)).mask, 0b101u);
  EXPECT_TRUE(leq(Element(b3, 0b001), Element(b3, 0b011)));
}

TEST(Elements, RejectsForeignAtomsAndMixedAlgebras) {
  EXPECT_THROW(Element(BoolAlg(2), 0b100), PreconditionError);
  EXPECT_THROW(meet(Element(BoolAlg(2), 1), Element(BoolAlg(3), 1)), MismatchError);
}

TEST(Families, UpperBounds) {
  const BoolAlg b2(2), b3(3);
  EXPECT_EQ(upper_bounds(fam(b2, {0b01})), fam(b2, {0b01, 0b11}));
  EXPECT_EQ(upper_bounds(fam(b2, {0b01, 0b10})), fam(b2, {0b11}));
  EXPECT_EQ(upper_bounds(fam(b3, {0})).count(), 8u);
}

TEST(Families, LowerBounds) {
  const BoolAlg b2(2), b3(3);
  EXPECT_EQ(lower_bounds(fam(b2, {0b11})).count(), 4u);
  EXPECT_EQ(lower_bounds(fam(b2, {0b01, 0b10})), fam(b2, {0}));
  EXPECT_EQ(lower_bounds(ElemFamily(b3)).count(), 8u);
}

TEST(Families, Negation) {
  const BoolAlg b1(1), b2(2);
  EXPECT_EQ(negate_family(fam(b1, {0})), fam(b1, {1}));
  EXPECT_EQ(negate_family(ElemFamily::down(b2, 0b01)), ElemFamily::up(b2, 0b10));
}

TEST(Families, NegationIsAnInvolution) {
  const BoolAlg b3(3);
  SplitMix64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const ElemFamily f = ElemFamily::from_row(b3, rng.below(256));
    EXPECT_EQ(negate_family(negate_family(f)), f);
  }
}

TEST(Families, IdealGenerated) {
  const BoolAlg b2(2), b3(3);
  EXPECT_EQ(ideal_generated(fam(b2, {0b01, 0b10})).count(), 4u);
  EXPECT_EQ(ideal_generated(ElemFamily(b3)), fam(b3, {0}));
  EXPECT_EQ(ideal_generated(fam(b3, {0b001, 0b010})), ElemFamily::down(b3, 0b011));
  EXPECT_EQ(ideal_generated(fam(b3, {0b001})).kind(), FamilyKind::ideal);
}

TEST(Families, IdealGeneratedMatchesSaturation) {
  // Close under joins and downsets until nothing changes.
  const BoolAlg b3(3);
  for (Row r = 0; r < 256; r += 3) {
    std::set<Mask> s{0};
    for (Mask m = 0; m < 8; ++m) {
      if (has(r, m)) s.insert(m);
    }
    for (bool grew = true; grew;) {
      grew = false;
      for (Mask a : std::set<Mask>(s)) {
        for (Mask b = 0; b < 8; ++b) {
          if ((b & ~a) == 0 && s.insert(b).second) grew = true;
          if (s.count(b) && s.insert(a | b).second) grew = true;
        }
      }
    }
    ElemFamily want(b3);
    for (Mask m : s) want.insert(m);
    EXPECT_EQ(ideal_generated(ElemFamily::from_row(b3, r)), want) << r;
  }
}

TEST(Families, TagsAndPredicates) {
  const BoolAlg b2(2);
  EXPECT_TRUE(is_ideal(ElemFamily::down(b2, 0b01)));
  EXPECT_TRUE(is_filter(ElemFamily::up(b2, 0b01)));
  EXPECT_FALSE(is_ideal(fam(b2, {0b01, 0b10})));
  ElemFamily bad = fam(b2, {0b11});
  bad.set_kind(FamilyKind::ideal);
  EXPECT_FALSE(tag_valid(bad));
  EXPECT_EQ(join_all(fam(b2, {0b01, 0b10})), 0b11u);
  EXPECT_EQ(meet_all(ElemFamily(b2)), 0b11u);
}

TEST(Families, CanonicalLexOrder) {
  const std::vector<Mask> want = {0b000, 0b001, 0b011, 0b111, 0b101, 0b010, 0b110, 0b100};
  EXPECT_EQ(lex_order(3), want);
  EXPECT_EQ(format_mask(0b101), "{0,2}");
  EXPECT_EQ(format_mask(0), "{}");
}
