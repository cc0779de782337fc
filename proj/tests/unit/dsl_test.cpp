#include <gtest/gtest.h>

#include "curvegen/dsl.hpp"
#include "curvegen/testing/generators.hpp"
#include "helpers.hpp"

namespace curvegen::dsl {
namespace {

constexpr const char* kSectionlessPair =
    "curve genus 2\nobject E = bundle(r=1,d=0) + bundle(r=1,d=1,id=L)\nassume hom(E.1, L) = 0\nanalyze E";

ParseError parse_error(const std::string& src) {
  try {
    parse(src);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << src;
  return ParseError(ParseErrorKind::Syntax, 0, 0, "");
}

TEST(Parse, SectionlessPairRequest) {
  const AnalysisRequest r = parse(kSectionlessPair);
  EXPECT_EQ(r.curve, Curve(2));
  ASSERT_EQ(r.objects.size(), 1u);
  const ObjectDecl& e = r.objects[0];
  EXPECT_EQ(e.name, "E");
  ASSERT_EQ(e.summands.size(), 2u);
  EXPECT_EQ(e.summands[0].piece.cls(), ChernPair(1, 0));
  EXPECT_EQ(e.summands[0].piece.id(), "E.1");
  EXPECT_EQ(e.summands[1].piece.id(), "L");
  EXPECT_EQ(r.assumptions, (std::vector<Assumption>{{"E.1", "L"}}));
  EXPECT_EQ(r.queries, (std::vector<Query>{{QueryKind::Analyze, "E", ""}}));
  EXPECT_EQ(r.assumptions_for(e).size(), 1u);
}

TEST(Parse, ShiftedLineBundle) {
  const AnalysisRequest r = parse("curve genus 0\nobject F = bundle(r=1,d=2)[3]\nanalyze F");
  ASSERT_EQ(r.objects.size(), 1u);
  EXPECT_EQ(r.objects[0].summands[0].shift, 3);
  const FormalObject f = r.objects[0].build(r.curve);
  ASSERT_EQ(f.graded().size(), 1u);
  EXPECT_EQ(f.graded().begin()->first, -3);
}

TEST(Parse, ZeroClassIsSemanticError) {
  const ParseError e = parse_error("object X = bundle(r=0,d=0)");
  EXPECT_EQ(e.kind(), ParseErrorKind::Semantic);
  EXPECT_NE(e.message().find("zero class"), std::string::npos);
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 12);
}

TEST(Parse, AllQueryKindsAndAttributes) {
  const AnalysisRequest r = parse(
      "# comment line\n"
      "curve genus 3\n"
      "object A = bundle(r=2,d=1,stable,h0=0) + tors(len=2)[-1]  # trailing comment\n"
      "object B = bundle(r=1,d=4,hn_only) + bundle(r=1,d=0,hn_only)\n"
      "analyze A\npairing A B\nsemiorth B A\nfaltings A\n");
  ASSERT_EQ(r.queries.size(), 4u);
  EXPECT_EQ(r.queries[1].kind, QueryKind::Pairing);
  EXPECT_EQ(r.queries[2].left, "B");
  EXPECT_EQ(r.queries[2].right, "A");
  EXPECT_TRUE(r.objects[0].summands[0].piece.annotations().stable);
  EXPECT_EQ(r.objects[0].summands[0].piece.annotations().h0, 0);
  EXPECT_TRUE(r.objects[0].summands[1].piece.is_torsion());
  EXPECT_FALSE(r.objects[1].build(r.curve).graded().at(0).is_split());
}

TEST(Parse, HnOnlyIgnoredOnGenusZero) {
  const AnalysisRequest r = parse("curve genus 0\nobject B = bundle(r=1,d=4,hn_only) + bundle(r=1,d=0)\n");
  EXPECT_TRUE(r.objects[0].build(r.curve).graded().at(0).is_split());
}

TEST(Parse, RankZeroBundleIsTorsion) {
  const AnalysisRequest r = parse("curve genus 1\nobject T = bundle(r=0,d=3)\n");
  EXPECT_TRUE(r.objects[0].summands[0].piece.is_torsion());
  EXPECT_EQ(r.objects[0].summands[0].piece.cls().length(), 3);
}

struct ErrorCase {
  const char* name;
  const char* source;
  ParseErrorKind kind;
  int line;
  int column;
  const char* fragment;
};

class ParseErrors : public ::testing::TestWithParam<ErrorCase> {};

TEST_P(ParseErrors, ReportsPosition) {
  const ErrorCase& c = GetParam();
  const ParseError e = parse_error(c.source);
  EXPECT_EQ(e.kind(), c.kind) << e.what();
  EXPECT_EQ(e.line(), c.line) << e.what();
  EXPECT_EQ(e.column(), c.column) << e.what();
  EXPECT_NE(e.message().find(c.fragment), std::string::npos) << e.what();
}

INSTANTIATE_TEST_SUITE_P(
    Cases, ParseErrors,
    ::testing::Values(
        ErrorCase{"empty", "", ParseErrorKind::Syntax, 1, 1, "'curve'"},
        ErrorCase{"genus_not_integer", "curve genus x", ParseErrorKind::Syntax, 1, 13, "genus"},
        ErrorCase{"negative_genus", "curve genus -1", ParseErrorKind::Semantic, 1, 13, "non-negative"},
        ErrorCase{"missing_comma", "curve genus 2\nobject E = bundle(r=1 d=0)", ParseErrorKind::Syntax, 2, 23, "','"},
        ErrorCase{"unknown_piece", "curve genus 2\nobject E = sheaf(r=1)", ParseErrorKind::Syntax, 2, 12, "'bundle'"},
        ErrorCase{"dangling_plus", "curve genus 2\nobject E = bundle(r=1,d=0) +", ParseErrorKind::Syntax, 2, 29, "end of input"},
        ErrorCase{"duplicate_object", "curve genus 2\nobject E = bundle(r=1,d=0)\nobject E = tors(len=1)", ParseErrorKind::Semantic, 3,
                  8, "duplicate object"},
        ErrorCase{"zero_length_torsion", "curve genus 2\nobject E = tors(len=0)", ParseErrorKind::Semantic, 2, 12, "zero class"},
        ErrorCase{"annotation_on_torsion", "curve genus 2\nobject E = bundle(r=0,d=2,stable)", ParseErrorKind::Semantic, 2, 12,
                  "annotation on torsion"},
        ErrorCase{"duplicate_attribute", "curve genus 2\nobject E = bundle(r=1,d=0,stable,stable)", ParseErrorKind::Semantic, 2, 34,
                  "duplicate attribute"},
        ErrorCase{"h0_contradicts_riemann_roch", "curve genus 2\nobject E = bundle(r=1,d=5,h0=0)", ParseErrorKind::Semantic, 2, 27, "h0=0"},
        ErrorCase{"unknown_query_object", "curve genus 2\nobject E = bundle(r=1,d=0)\nanalyze F", ParseErrorKind::Semantic, 3, 9,
                  "unknown object"},
        ErrorCase{"unknown_label", "curve genus 2\nobject E = bundle(r=1,d=0)\nassume hom(E.1, M) = 0", ParseErrorKind::Semantic, 3,
                  17, "unknown piece label"},
        ErrorCase{"position_out_of_range", "curve genus 2\nobject E = bundle(r=1,d=0)\nassume hom(E.3, E.1) = 0", ParseErrorKind::Semantic,
                  3, 12, "has 1 pieces"},
        ErrorCase{"assumption_contradicts_riemann_roch", "curve genus 2\nobject E = bundle(r=1,d=0) + bundle(r=1,d=3)\nassume hom(E.1, E.2) = 0",
                  ParseErrorKind::Semantic, 3, 12, "Riemann-Roch"},
        ErrorCase{"assumption_across_objects", "curve genus 2\nobject E = bundle(r=1,d=0,id=A)\nobject F = bundle(r=1,d=1,id=B)\n"
                  "assume hom(A, B) = 0",
                  ParseErrorKind::Semantic, 4, 12, "same object"},
        ErrorCase{"label_with_two_classes", "curve genus 2\nobject E = bundle(r=1,d=0,id=A)\nobject F = bundle(r=2,d=1,id=A)",
                  ParseErrorKind::Semantic, 1, 1, "different classes"},
        ErrorCase{"declaration_after_query", "curve genus 2\nobject E = bundle(r=1,d=0)\nanalyze E\nobject F = bundle(r=1,d=0)",
                  ParseErrorKind::Syntax, 4, 1, "'analyze'"},
        ErrorCase{"assumption_not_zero", "curve genus 2\nobject E = bundle(r=1,d=0)\nassume hom(E.1, E.1) = 1", ParseErrorKind::Syntax, 3,
                  24, "'0'"},
        ErrorCase{"integer_overflow", "curve genus 2\nobject E = bundle(r=1,d=99999999999999999999)", ParseErrorKind::Syntax, 2, 25,
                  "out of range"},
        ErrorCase{"bad_character", "curve genus 2\nobject E = bundle(r=1,d=0) & x", ParseErrorKind::Syntax, 2, 28,
                  "unexpected character"},
        ErrorCase{"missing_curve", "object E = bundle(r=1,d=0)", ParseErrorKind::Semantic, 1, 1, "missing"},
        ErrorCase{"keyword_as_name", "curve genus 2\nobject analyze = bundle(r=1,d=0)", ParseErrorKind::Syntax, 2, 8, "object name"}));

TEST(Parse, SyntaxErrorListsExpectedTokens) {
  const ParseError e = parse_error("curve genus 2\nobject E = bundle(r=1,d=0)\nanalyze E\nbogus");
  EXPECT_EQ(e.expected(), (std::vector<std::string>{"'analyze'", "'pairing'", "'semiorth'", "'faltings'",
                                                    "end of input"}));
  EXPECT_NE(std::string(e.what()).find("4:1:"), std::string::npos);
}

TEST(ToSource, RoundTripsExamples) {
  for (const char* src : {kSectionlessPair, "curve genus 0\nobject F = bundle(r=1,d=2)[3]\nanalyze F",
                          "curve genus 3\nobject A = bundle(r=2,d=1,stable,h0=0,id=V) + tors(len=2)[-1] + "
                          "bundle(r=0,d=1,hn_only)\nobject B = bundle(r=2,d=1,id=V) + bundle(r=1,d=9)\n"
                          "assume hom(B.2, V) = 0\npairing A B\nfaltings B\n"}) {
    const AnalysisRequest r = parse(src);
    const std::string printed = to_source(r);
    EXPECT_EQ(parse(printed), r) << printed;
    EXPECT_EQ(to_source(parse(printed)), printed);
  }
}

// Random requests: print, parse, compare.
AnalysisRequest random_request(testing::Generator& gen) {
  AnalysisRequest r;
  r.curve = Curve(gen.uniform(0, 10));
  const auto objects = gen.uniform(1, 3);
  for (std::int64_t i = 0; i < objects; ++i) {
    ObjectDecl d;
    d.name = "X" + std::to_string(i);
    const auto n = gen.uniform(1, 5);
    for (std::int64_t k = 0; k < n; ++k) {
      DeclaredPiece p{SemistablePiece::torsion(gen.uniform(1, 4)), gen.uniform(-2, 2), false};
      if (gen.chance(0.8)) {
        PieceAnnotations ann;
        const std::int64_t rank = gen.uniform(1, 5);
        if (rank > 1 && gen.chance(0.3)) ann.stable = true;
        if (gen.chance(0.3)) ann.id = d.name + "_p" + std::to_string(k);
        p.piece = SemistablePiece(ChernPair(rank, gen.uniform(-20, 20)), 1, ann);
        p.hn_only = gen.chance(0.2);
      }
      d.summands.push_back(p);
    }
    r.objects.push_back(d);
    r.queries.push_back({QueryKind::Analyze, d.name, ""});
  }
  r.queries.push_back({QueryKind::Pairing, r.objects.front().name, r.objects.back().name});
  return r;
}

TEST(ToSource, RandomRoundTrip) {
  testing::Generator gen(401);
  for (int i = 0; i < 500; ++i) {
    const AnalysisRequest r = random_request(gen);
    const std::string src = to_source(r);
    ASSERT_EQ(parse(src), r) << src;
  }
}

}  // namespace
}  // namespace curvegen::dsl
