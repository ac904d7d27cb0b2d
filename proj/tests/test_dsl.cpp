#include <gtest/gtest.h>

#include "subordkit/dsl.hpp"
#include "subordkit/harness.hpp"

using namespace subordkit;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return ParseError(0, 0, {}, "");
}

SemanticError semantic_error(const std::string& text) {
  try {
    parse(text);
  } catch (const SemanticError& e) {
    return e;
  }
  ADD_FAILURE() << "no semantic error for: " << text;
  return SemanticError(0, "");
}

}  // namespace

TEST(Parse, Algebra) {
  const Workspace ws = parse("algebra B atoms=2\n");
  ASSERT_EQ(ws.size(), 1u);
  EXPECT_EQ(ws.get<BoolAlg>("B").size(), 4u);
}

TEST(Parse, RunningExampleMatchesConstruction) {
  const Workspace ws = parse(
      "space X points=3 classes={0,1},{2}\n"
      "sub S = from_equiv(X)\n");
  EXPECT_EQ(ws.get<Subordination>("S"), from_equivalence(FinSubSpace::from_classes(3, {0b011, 0b100})).s());

  const Workspace ws2 = parse(
      "algebra B atoms=3\n"
      "equiv E on B classes={0,1},{2}\n"
      "sub S = from_equiv(E)\n");
  EXPECT_EQ(ws2.get<Subordination>("S"), ws.get<Subordination>("S"));
}

TEST(Parse, DoesNotValidate) {
  const Workspace ws = parse("algebra B atoms=2\nsub T : B -> B = pairs ({};{})\n");
  EXPECT_FALSE(check_axioms(ws.get<Subordination>("T"))[Axiom::S1].pass);
}

TEST(Parse, CommentsAndWhitespace) {
  const Workspace a = parse("# header\n\n  algebra   B   atoms = 2   # trailing\n");
  const Workspace b = parse("algebra B atoms=2");
  EXPECT_EQ(a, b);
}

TEST(Parse, FramesMapsAndDevmaps) {
  const Workspace ws = parse(
      "frame C3 = downsets of poset points=2 edges (0<1)\n"
      "frame C2 = order 11,01\n"
      "map h : C3 -> C2 = [0->0, 1->0, 2->1]\n"
      "algebra P atoms=1\n"
      "devmap f : P -> P = [{} -> {}, {0} -> {0}]\n");
  EXPECT_EQ(ws.get<FinFrame>("C3"), FinFrame::chain(3));
  EXPECT_EQ(ws.get<FinFrame>("C2"), FinFrame::chain(2));
  EXPECT_EQ(ws.get<LatticeMap>("h").table, (std::vector<Idx>{0, 0, 1}));
  EXPECT_EQ(ws.get<DeVriesMap>("f").table, (std::vector<Mask>{0, 1}));
}

TEST(Parse, RelationsAndFamilies) {
  const Workspace ws = parse(
      "space X points=3 classes={0,1},{2}\n"
      "space Y points=2 classes={0},{1}\n"
      "rel R : X -> Y = (0,0), (1,0), (2,1)\n"
      "sub T = from_rel(R)\n"
      "algebra B atoms=2\n"
      "family I : B ideal = {},{0}\n");
  EXPECT_EQ(ws.get<Subordination>("T"), from_closed_relation(ws.get<PointRelation>("R")));
  EXPECT_EQ(ws.get<ElemFamily>("I").kind(), FamilyKind::ideal);
  EXPECT_EQ(ws.get<ElemFamily>("I").count(), 2u);
}

TEST(Errors, PositionAndExpectedSet) {
  const ParseError e = parse_error("algebra B atoms=2\nsub T : B -> B = pairs ({0};{0}\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 32u);
  EXPECT_NE(std::string(e.what()).find("expected ')'"), std::string::npos);

  const ParseError kw = parse_error("algbra B atoms=2\n");
  EXPECT_EQ(kw.line(), 1u);
  EXPECT_EQ(kw.column(), 1u);
  EXPECT_GT(kw.expected().size(), 1u);
}

TEST(Errors, ColumnsCountCodePoints) {
  const ParseError e = parse_error("algebra B atoms=2 # é\nalgebra C atoms=é\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 17u);
}

TEST(Errors, Semantic) {
  EXPECT_EQ(semantic_error("sub S = from_equiv(E)\n").line(), 1u);
  EXPECT_EQ(semantic_error("algebra B atoms=2\nalgebra B atoms=3\n").line(), 2u);
  EXPECT_EQ(semantic_error("algebra B atoms=2\nsub T : B -> B = pairs ({2};{0})\n").line(), 2u);
  EXPECT_EQ(semantic_error("frame L = order 11,01\nsub S = from_equiv(L)\n").line(), 2u);
  EXPECT_EQ(semantic_error("space X points=3 classes={0,1},{1,2}\n").line(), 1u);
  EXPECT_EQ(semantic_error("algebra B atoms=2\nfamily F : B raw = {0},{0}\n").line(), 2u);
}

TEST(Serialize, EmptyAndCanonical) {
  EXPECT_EQ(serialize(Workspace{}), "");
  const std::string a =
      "algebra B atoms=3\nequiv E on B classes={2},{0,1}\nsub S = from_equiv(E)\nframe L = order 11,01\n";
  const std::string b =
      "frame L = order 11,01\nalgebra B atoms=3\nequiv E on B classes={0,1},{2}\nsub S = from_equiv(E)\n";
  EXPECT_EQ(serialize(parse(a)), serialize(parse(b)));
  EXPECT_EQ(serialize(parse(serialize(parse(a)))), serialize(parse(a)));
}

TEST(Serialize, RoundTripOnSeededWorkspaces) {
  SplitMix64 rng = stream(1, 9);
  for (int i = 0; i < 200; ++i) {
    const Workspace ws = gen_workspace(rng);
    const std::string text = serialize(ws);
    EXPECT_EQ(parse(text), ws) << text;
  }
}

TEST(Serialize, RoundTripOnFixtureStatements) {
  const std::string text =
      "algebra A atoms=2\n"
      "sub T : A -> A = pairs ({0};{0})\n"
      "sub U : A -> A = pairs\n"
      "space X points=2 classes={0},{1}\n"
      "rel R : X -> X =\n"
      "frame P = downsets of poset points=3 edges (0<2), (1<2)\n";
  const Workspace ws = parse(text);
  EXPECT_EQ(parse(serialize(ws)), ws);
  EXPECT_EQ(ws.get<Subordination>("U").size(), 0u);
}
