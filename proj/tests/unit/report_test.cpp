#include <gtest/gtest.h>

#include <json.hpp>

#include "curvegen/report.hpp"
#include "helpers.hpp"

namespace curvegen {
namespace {

using Json = nlohmann::json;

Json analyze_json(const std::string& src) { return Json::parse(render_json(run(dsl::parse(src)))); }

TEST(Run, SectionlessPair) {
  const Report r = run(dsl::parse(
      "curve genus 2\nobject E = bundle(r=1,d=0) + bundle(r=1,d=1,id=L)\nassume hom(E.1, L) = 0\nanalyze E"));
  ASSERT_EQ(r.queries.size(), 1u);
  const auto& a = std::get<AnalyzeResult>(r.queries[0].outcome);
  EXPECT_TRUE(a.is_generator);
  EXPECT_EQ(a.classical.decision, Decision::No);
  EXPECT_EQ(a.classical.rule, Rule::SimpleOrthogonal);
  EXPECT_FALSE(r.has_errors());
}

TEST(Run, GenusOneAndSkyscraper) {
  const Json g1 = analyze_json("curve genus 1\nobject G = bundle(r=1,d=0)+bundle(r=1,d=1)\nanalyze G");
  const Json& q1 = g1["queries"][0]["result"];
  EXPECT_EQ(q1["classical"]["decision"], "yes");
  EXPECT_EQ(q1["classical"]["rule"], 3);
  EXPECT_EQ(q1["gentime"]["value"], 4);

  const Json g2 = analyze_json("curve genus 2\nobject G = tors(len=1)+bundle(r=1,d=0)\nanalyze G");
  const Json& q2 = g2["queries"][0]["result"];
  EXPECT_EQ(q2["classical"]["rule"], 4);
  EXPECT_EQ(q2["classical"]["rule_id"], "torsion-plus-bundle");
  EXPECT_EQ(q2["gentime"]["status"], "finite");
  EXPECT_EQ(q2["gentime"]["value"], 97);
  EXPECT_EQ(q2["invariants"]["total_rank"], 1);
  EXPECT_EQ(q2["invariants"]["torsion_length"], 1);
  EXPECT_EQ(q2["invariants"]["mu_max"], "inf");
  EXPECT_EQ(q2["invariants"]["classification"]["support"], "mixed");
}

TEST(Run, QueryErrorsAreAttributedAndOthersStillRun) {
  const Report r = run(dsl::parse(
      "curve genus 2\nobject E = bundle(r=1,d=0)+bundle(r=1,d=1)\nobject F = bundle(r=2,d=1)\n"
      "faltings E\nfaltings F\npairing E F\nsemiorth E F\n"));
  ASSERT_EQ(r.queries.size(), 4u);
  EXPECT_TRUE(r.has_errors());
  EXPECT_EQ(r.queries[0].error_code, ErrorCode::NotSemistable);
  const auto& f = std::get<FaltingsResult>(r.queries[1].outcome);
  EXPECT_EQ(f.orthogonal.minimal_class, ChernPair(2, 3));
  EXPECT_EQ(std::get<PairingResult>(r.queries[2].outcome).euler_characteristic,
            test::chi_oracle(ChernPair(1, 0), ChernPair(2, 1), 2) + test::chi_oracle(ChernPair(1, 1), ChernPair(2, 1), 2));
  const auto& s = std::get<SemiorthogonalityResult>(r.queries[3].outcome);
  EXPECT_EQ(s.witness, Obstruction::NotSemistable);
  EXPECT_EQ(s.side, Side::Left);

  const Json j = Json::parse(render_json(r));
  EXPECT_EQ(j["queries"][0]["error"]["code"], "NotSemistable");
  EXPECT_TRUE(j["queries"][0]["result"].is_null());
  EXPECT_TRUE(j["queries"][1]["error"].is_null());
}

TEST(Run, AnalyzeUsesOnlyTheObjectsAssumptions) {
  const Report r = run(dsl::parse(
      "curve genus 2\nobject E = bundle(r=1,d=0,id=O) + bundle(r=1,d=1,id=L)\nobject F = bundle(r=1,d=0,id=O)\n"
      "assume hom(O, L) = 0\nanalyze E\nanalyze F\n"));
  EXPECT_EQ(std::get<AnalyzeResult>(r.queries[0].outcome).classical.assumptions_used.size(), 1u);
  EXPECT_EQ(std::get<AnalyzeResult>(r.queries[1].outcome).classical.rule, Rule::Semistable);
}

TEST(Render, JsonShapeIsStable) {
  const Json j = analyze_json("curve genus 2\nobject E = bundle(r=1,d=0)+bundle(r=1,d=5)\nanalyze E");
  std::vector<std::string> keys;
  for (const auto& [k, v] : j["queries"][0]["result"].items()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(keys, (std::vector<std::string>{"classical", "gentime", "invariants", "is_generator"}));
  const Json& trace = j["queries"][0]["result"]["gentime"]["derivation"];
  ASSERT_TRUE(trace.is_array());
  EXPECT_EQ(trace.back()["value"], 391);
  for (const auto& step : trace) {
    EXPECT_TRUE(step.contains("rule"));
    EXPECT_FALSE(step["citation"].get<std::string>().empty());
  }
}

TEST(Render, Deterministic) {
  const std::string src =
      "curve genus 3\nobject A = bundle(r=2,d=1,stable) + tors(len=2)[-1]\nobject B = bundle(r=1,d=9)\n"
      "analyze A\npairing A B\nsemiorth B A\nfaltings B\n";
  const std::string first = render_json(run(dsl::parse(src)));
  for (int i = 0; i < 5; ++i) EXPECT_EQ(render_json(run(dsl::parse(src))), first);
  EXPECT_EQ(render_text(run(dsl::parse(src))), render_text(run(dsl::parse(src))));
}

TEST(Render, TextMentionsVerdict) {
  const std::string text = render_text(run(dsl::parse("curve genus 2\nobject G = tors(len=1)+bundle(r=1,d=0)\nanalyze G")));
  EXPECT_NE(text.find("classical generator: yes (rule 4"), std::string::npos);
  EXPECT_NE(text.find("<= 97"), std::string::npos);
}

TEST(Invariants, PlainSums) {
  const Invariants inv = invariants(test::graded({{0, {test::b(2, 3), test::t(2)}}, {1, {test::b(1, -1)}}}));
  EXPECT_EQ(inv.total_rank, 3);
  EXPECT_EQ(inv.total_degree, 4);
  EXPECT_EQ(inv.torsion_length, 2);
  EXPECT_TRUE(inv.mu_max.is_infinite());
  EXPECT_EQ(inv.mu_min, ExtendedSlope(-1));
}

}  // namespace
}  // namespace curvegen
