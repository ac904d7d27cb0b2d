#include <gtest/gtest.h>

#include "oracles.hpp"
#include "subordkit/harness.hpp"
#include "subordkit/subord.hpp"

using namespace subordkit;

namespace {

FinSubSpace three_atom_space() { return FinSubSpace::from_classes(3, {0b011, 0b100}); }

std::vector<bool> verdicts(const AxiomReport& r) {
  std::vector<bool> out;
  for (const auto& a : r.results) out.push_back(a.pass);
  return out;
}

}  // namespace

TEST(Axioms, OrderOnOneAtomIsDeVries) {
  const AxiomReport r = check_axioms(order(BoolAlg(1)));
  EXPECT_TRUE(r.all_applicable_pass());
  EXPECT_EQ(r.profile, kSub | kS5 | kCompingent | kDeVries);
}

TEST(Axioms, ThreeAtomExampleFailsDensityAtSingleton) {
  const SubAlgebra b = from_equivalence(three_atom_space());
  const AxiomReport r = check_axioms(b.s());
  for (Axiom ax : kAllAxioms) {
    if (ax != Axiom::S8) {
      EXPECT_TRUE(r[ax].pass) << to_string(ax);
    }
  }
  EXPECT_FALSE(r[Axiom::S8].pass);
  EXPECT_EQ(r[Axiom::S8].witness, std::vector<Mask>{0b001});
  EXPECT_EQ(format_profile(r.profile), "SUB,S5");
}

TEST(Axioms, EmptyRelationFailsFirstAxiom) {
  const BoolAlg b(1);
  const AxiomReport r = check_axioms(Subordination(b, b));
  EXPECT_FALSE(r[Axiom::S1].pass);
  EXPECT_EQ(r.profile, 0u);
}

TEST(Axioms, EndoOnlyAxiomsRejectForeignRelations) {
  const Subordination t(BoolAlg(1), BoolAlg(2));
  EXPECT_THROW(check_axiom(t, Axiom::S5), PreconditionError);
  EXPECT_THROW(check_axiom(t, Axiom::S8), PreconditionError);
  EXPECT_FALSE(check_axioms(t)[Axiom::S6].applicable);
}

TEST(Axioms, CapIsEnforced) {
  EXPECT_THROW(check_axioms(order(BoolAlg(6))), CapError);
}

TEST(Axioms, AgreeWithOracleOnRandomRelations) {
  SplitMix64 rng(3);
  for (unsigned n = 1; n <= 2; ++n) {
    const BoolAlg b(n);
    for (int i = 0; i < 300; ++i) {
      Subordination s(b, b);
      for (Mask a = 0; a < b.size(); ++a) s.set_targets(a, rng.next());
      EXPECT_EQ(verdicts(check_axioms(s)), oracle::axioms(oracle::pairs_of(s), n));
    }
  }
}

TEST(Axioms, AgreeWithOracleOnEveryPartition) {
  for (unsigned k = 1; k <= 3; ++k) {
    for (const FinSubSpace& x : gen_partitions(k)) {
      const SubAlgebra b = from_equivalence(x);
      const auto want = oracle::axioms(oracle::pairs_of(b.s()), k);
      EXPECT_EQ(verdicts(check_axioms(b.s())), want);
      EXPECT_EQ(want[7], x.is_discrete());
    }
  }
}

TEST(Composition, MatchesOracleAndAbsorbsEmpty) {
  const SubAlgebra b = from_equivalence(three_atom_space());
  const Subordination s = b.s();
  EXPECT_EQ(oracle::pairs_of(compose(s, s)), oracle::compose(oracle::pairs_of(s), oracle::pairs_of(s)));
  EXPECT_EQ(compose(s, s), s);
  const Subordination empty(b.alg(), b.alg());
  EXPECT_EQ(compose(s, empty), empty);
  EXPECT_EQ(compose(empty, s), empty);
  EXPECT_THROW(compose(s, order(BoolAlg(2))), MismatchError);
}

TEST(Composition, ConverseAndTilde) {
  const BoolAlg b(2);
  const Subordination le = order(b);
  EXPECT_EQ(oracle::pairs_of(converse(le)), oracle::converse(oracle::pairs_of(le)));
  EXPECT_EQ(tilde_inverse(le), le);
  const SubAlgebra se = from_equivalence(FinSubSpace::one_class(2));
  EXPECT_EQ(tilde_inverse(se.s()), se.s());
  EXPECT_EQ(tilde_inverse(tilde_inverse(se.s())), se.s());
}

TEST(Compatibility, IdentityAndOrder) {
  const SubAlgebra b = from_equivalence(three_atom_space());
  EXPECT_TRUE(is_compatible(b.s(), b, b));
  const SubAlgebra p = order_algebra(BoolAlg(1));
  EXPECT_TRUE(is_compatible(p.s(), p, p));
}

TEST(Compatibility, EqualityGraphUnderOneClass) {
  const SubAlgebra b = from_equivalence(FinSubSpace::one_class(2));
  Subordination eq(b.alg(), b.alg());
  for (Mask a = 0; a < 4; ++a) eq.add(a, a);
  const CompatResult r = is_compatible(eq, b.s(), b.s());
  EXPECT_FALSE(r.compatible);
  EXPECT_EQ(r.equation, "S2 o T = T");
  EXPECT_TRUE(oracle::compose(oracle::pairs_of(eq), oracle::pairs_of(b.s())).count(r.witness));
  EXPECT_FALSE(eq.relates(r.witness.first, r.witness.second));
}

TEST(FromEquivalence, Examples) {
  EXPECT_EQ(from_equivalence(FinSubSpace::discrete(2)).s(), order(BoolAlg(2)));
  const SubAlgebra one = from_equivalence(FinSubSpace::one_class(2));
  for (Mask v = 0; v < 4; ++v) EXPECT_EQ(one.s().relates(0b01, v), v == 0b11);
  const SubAlgebra b = from_equivalence(three_atom_space());
  unsigned reflexive = 0;
  for (Mask a = 0; a < 8; ++a) reflexive += b.s().relates(a, a);
  EXPECT_EQ(reflexive, 4u);
}

TEST(FromEquivalence, MatchesOracle) {
  for (unsigned k = 1; k <= 4; ++k) {
    for (const FinSubSpace& x : gen_partitions(k)) {
      EXPECT_EQ(oracle::pairs_of(from_equivalence(x).s()), oracle::s_e(x));
    }
  }
}

TEST(FromClosedRelation, Examples) {
  const FinSubSpace d2 = FinSubSpace::discrete(2);
  EXPECT_EQ(from_closed_relation(PointRelation::identity(d2)), order(BoolAlg(2)));

  const FinSubSpace x1 = FinSubSpace::one_class(2), x2 = FinSubSpace::discrete(1);
  const Subordination t = from_closed_relation(PointRelation(x1, x2, {{0, 0}, {1, 0}}));
  for (Mask u = 0; u < 4; ++u) {
    for (Mask v = 0; v < 2; ++v) EXPECT_EQ(t.relates(u, v), u == 0 || v == 1);
  }

  const Subordination total = from_closed_relation(PointRelation(d2, d2));
  EXPECT_EQ(total.size(), 16u);
}

TEST(FromClosedRelation, RejectsIncompatible) {
  const FinSubSpace x = FinSubSpace::one_class(2);
  EXPECT_THROW(from_closed_relation(PointRelation::identity(x)), PreconditionError);
}
