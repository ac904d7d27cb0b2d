#include <gtest/gtest.h>

#include "oracles.hpp"
#include "subordkit/frames.hpp"
#include "subordkit/harness.hpp"

using namespace subordkit;

namespace {

// 0 < a, b, c < 1 with a, b, c pairwise incomparable.
std::vector<Row> m3() {
  return {0b11111, 0b10010, 0b10100, 0b11000, 0b10000};
}

LatticeMap constant_top(const FinFrame& l) { return LatticeMap(l, l, std::vector<Idx>(l.size(), l.top())); }

}  // namespace

TEST(Validation, Examples) {
  EXPECT_TRUE(validate_frame(FinFrame::chain(2).up_rows()).valid());
  EXPECT_TRUE(validate_frame(FinFrame::powerset(2).up_rows()).valid());
  const FrameReport r = validate_frame(m3());
  EXPECT_TRUE(r.partial_order);
  EXPECT_TRUE(r.lattice);
  EXPECT_FALSE(r.distributive);
  EXPECT_EQ(r.witness.size(), 3u);
  EXPECT_THROW(FinFrame::make(m3()), PreconditionError);
}

TEST(Validation, RejectsNonOrders) {
  EXPECT_FALSE(validate_frame({0b01, 0b01}).partial_order);  // not reflexive
  EXPECT_FALSE(validate_frame({0b011, 0b010, 0b100}).lattice);  // no top
  EXPECT_THROW(FinFrame::downsets(2, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST(Validation, DistributivityMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const FinFrame f = gen_frame(seed, 4);
    const oracle::Poset p = oracle::poset_of(f);
    EXPECT_TRUE(p.distributive());
    for (Idx a = 0; a < f.size(); ++a) {
      for (Idx b = 0; b < f.size(); ++b) {
        EXPECT_EQ(f.meet(a, b), *p.meet(a, b));
        EXPECT_EQ(f.join(a, b), *p.join(a, b));
      }
    }
  }
}

TEST(Pseudocomplement, PowersetIsComplement) {
  const FinFrame p = FinFrame::powerset(3);
  for (Idx a = 0; a < p.size(); ++a) {
    EXPECT_EQ(pseudocomplement(p, a), 0b111u & ~a);
    for (Idx b = 0; b < p.size(); ++b) EXPECT_EQ(well_inside(p, a, b), p.leq(a, b));
  }
  EXPECT_TRUE(is_regular_frame(p));
  EXPECT_TRUE(is_boolean(p));
}

TEST(Pseudocomplement, ThreeChain) {
  const FinFrame c = FinFrame::chain(3);
  EXPECT_EQ(pseudocomplement(c, 1), 0u);
  EXPECT_EQ(double_pseudocomplement(c, 1), 2u);
  EXPECT_FALSE(well_inside(c, 1, 1));
  EXPECT_FALSE(is_regular_frame(c));
}

TEST(Pseudocomplement, ExtremesAreWellInside) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const FinFrame f = gen_frame(seed, 5);
    const oracle::Poset p = oracle::poset_of(f);
    for (Idx a = 0; a < f.size(); ++a) {
      EXPECT_TRUE(well_inside(f, f.bottom(), a));
      EXPECT_TRUE(well_inside(f, a, f.top()));
      EXPECT_EQ(pseudocomplement(f, a), p.pseudocomplement(a));
    }
  }
}

TEST(Booleanization, Examples) {
  const FinFrame p = FinFrame::powerset(2);
  EXPECT_EQ(booleanization(p).frame, p);
  const Booleanization c = booleanization(FinFrame::chain(3));
  EXPECT_EQ(c.frame.size(), 2u);
  EXPECT_EQ(c.incl, (std::vector<Idx>{0, 2}));
  EXPECT_EQ(booleanization(FinFrame::downsets(2, {{0, 1}})).frame.size(), 2u);
}

TEST(Booleanization, IsBooleanAndFixpointSet) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const FinFrame f = gen_frame(seed, 5);
    const Booleanization b = booleanization(f);
    EXPECT_TRUE(is_boolean(b.frame));
    const oracle::Poset p = oracle::poset_of(f);
    for (Idx a = 0; a < f.size(); ++a) {
      const bool fixed = p.pseudocomplement(p.pseudocomplement(a)) == a;
      EXPECT_EQ(b.index_of(a).has_value(), fixed);
    }
  }
}

TEST(MapClassification, IdentityAndConstantTop) {
  const FinFrame l = FinFrame::downsets(3, {{0, 1}});
  const MapProfile id = classify_map(LatticeMap::identity(l));
  EXPECT_TRUE(id.frame);
  EXPECT_EQ(id.cmorph, Verdict::yes);
  EXPECT_EQ(id.diamond, LatticeMap::identity(l).table);

  const MapProfile top = classify_map(constant_top(l));
  EXPECT_TRUE(top.preframe);
  EXPECT_FALSE(top.frame);
}

TEST(MapClassification, NonMonotoneMapIsNothing) {
  const FinFrame c = FinFrame::chain(2);
  const MapProfile p = classify_map(LatticeMap(c, c, {1, 0}));
  EXPECT_FALSE(p.monotone);
  EXPECT_FALSE(p.preframe);
  EXPECT_EQ(p.cmorph, Verdict::no);
}

TEST(FrameIso, Examples) {
  const FinFrame c3 = FinFrame::chain(3);
  EXPECT_TRUE(frame_iso_check(LatticeMap::identity(c3)));
  EXPECT_FALSE(frame_iso_check(LatticeMap(c3, FinFrame::chain(2), {0, 1, 1})));
}

TEST(GenFrame, Boundaries) {
  EXPECT_EQ(gen_frame(5, 0).size(), 1u);
  EXPECT_EQ(FinFrame::downsets(1, {}).size(), 2u);
  const FinFrame anti = FinFrame::downsets(2, {});
  EXPECT_EQ(anti.size(), 4u);
  EXPECT_TRUE(is_boolean(anti));
  const FinFrame chain = FinFrame::downsets(2, {{0, 1}});
  EXPECT_EQ(chain, FinFrame::chain(3));
  EXPECT_FALSE(is_regular_frame(chain));
}

TEST(GenFrame, Deterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_EQ(gen_frame(seed, 5), gen_frame(seed, 5));
}
