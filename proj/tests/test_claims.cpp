#include <gtest/gtest.h>

#include "support.hpp"

using namespace minorstar;
using testing_support::double_wheel;

namespace {

Verdict verdict(const PlaneGraph& g, std::string_view id) { return check_claim(g, find_claim(id)).verdict; }

std::vector<CorpusEntry> entries(const std::vector<PlaneGraph>& graphs) {
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < graphs.size(); ++i) out.push_back({"g" + std::to_string(i), graphs[i]});
  return out;
}

PlaneGraph octahedron() {
  return testing_support::from_triangles(
      6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}});
}

}  // namespace

TEST(Claims, RegistryOrderAndLookup) {
  std::vector<std::string> ids;
  for (const auto& c : claim_registry()) ids.push_back(c.id);
  const std::vector<std::string> expected{"MR1",  "MR2",  "T2",  "T3",      "T4",      "T5",      "T6",      "T7",
                                          "NO78", "NO79", "NO711", "NO6", "MR2-D28", "MR2-W45", "MR2-W44", "WH"};
  EXPECT_EQ(ids, expected);
  EXPECT_EQ(select_claims("all").size(), expected.size());
  const auto some = select_claims("T7, T3");
  ASSERT_EQ(some.size(), 2u);
  EXPECT_EQ(some[0].id, "T7");
  EXPECT_EQ(some[1].id, "T3");
  EXPECT_THROW(select_claims("T7,NOPE"), std::invalid_argument);
  EXPECT_THROW(select_claims(""), std::invalid_argument);
  EXPECT_THROW(select_claims(" , "), std::invalid_argument);
}

TEST(Claims, IcosahedronVerdicts) {
  const PlaneGraph g = icosahedron();
  for (const char* id : {"MR1", "MR2", "T3", "T4", "T5", "T6", "T7", "NO78", "NO79", "NO711"}) {
    EXPECT_EQ(verdict(g, id), Verdict::holds) << id;
  }
  for (const char* id : {"T2", "NO6", "MR2-D28", "MR2-W45", "MR2-W44", "WH"}) {
    EXPECT_EQ(verdict(g, id), Verdict::vacuous) << id;
  }
  EXPECT_EQ(check_claim(g, find_claim("T3")).detail, "minor 4-star at 1 weight 25 height 5");
  EXPECT_EQ(check_claim(g, find_claim("WH")).detail, "contains a <5,6,6,5,*>-star");
  EXPECT_EQ(check_claim(g, find_claim("T2")).detail, "maximum degree 5 < 13");
}

TEST(Claims, DoubleWheelThirteen) {
  // Every 5-vertex sits on the ring; its lightest 5-star is 5 + 13 + 4*5.
  const PlaneGraph g = double_wheel(13);
  EXPECT_EQ(min_weight_minor_star(g, 5), 38);
  EXPECT_EQ(min_height_minor_star(g, 5), 13);
  EXPECT_EQ(verdict(g, "T2"), Verdict::holds);
  EXPECT_EQ(verdict(g, "MR2-D28"), Verdict::vacuous);
  EXPECT_EQ(verdict(g, "NO711"), Verdict::holds);
}

TEST(Claims, CounterexampleDetailNamesTheScan) {
  ClaimSpec tight{"X", "impossible", {}, {StarBoundConclusion{5, AffineBound{0, 29}, std::nullopt}}};
  const auto out = check_claim(icosahedron(), tight);
  EXPECT_EQ(out.verdict, Verdict::counterexample);
  EXPECT_EQ(out.detail, "no minor 5-star with weight <= 29 (scanned all 12 minor centers)");

  ClaimSpec delta{"Y", "impossible", {}, {StarBoundConclusion{5, AffineBound{1, 24}, 4}}};
  EXPECT_EQ(check_claim(icosahedron(), delta).detail,
            "no minor 5-star with weight <= D+24 and height <= 4 (scanned all 12 minor centers)");
}

TEST(Claims, PreconditionsAreCheckedBeforeConclusions) {
  ClaimSpec c{"Z", "needs 3-connected and Delta >= 6", {}, {StarBoundConclusion{5, AffineBound{0, 1}, std::nullopt}}};
  c.pre.min_max_degree = 6;
  EXPECT_EQ(check_claim(icosahedron(), c).verdict, Verdict::vacuous);
  c.pre.min_max_degree.reset();
  c.pre.forbidden_degrees = {5};
  EXPECT_EQ(check_claim(icosahedron(), c).detail, "has a 5-vertex (1)");
}

TEST(Claims, RejectsLowMinimumDegree) {
  EXPECT_THROW(check_claim(octahedron(), find_claim("T7")), std::invalid_argument);
  const auto a = analyze_graph({"octa", octahedron()}, select_claims("all"));
  ASSERT_TRUE(a.input_error.has_value());
}

TEST(Report, CorpusHasNoCounterexamples) {
  auto graphs = testing_support::small_corpus(100, 100, 11).graphs;
  graphs.push_back(icosahedron());
  const Report r = run_corpus(entries(graphs), select_claims("all"));
  EXPECT_EQ(r.graphs, static_cast<long>(graphs.size()));
  EXPECT_EQ(r.counterexamples(), 0);
  EXPECT_FALSE(r.refuted());
  for (const auto& c : r.claims) EXPECT_EQ(c.evaluated + c.vacuous, r.graphs) << c.id;
  EXPECT_EQ(r.claims[0].evaluated, r.graphs);  // MR1 has no preconditions
  for (const DischargeStats* s : {&r.thm1, &r.thm2}) {
    EXPECT_EQ(s->runs, r.graphs);
    EXPECT_EQ(s->conservation_failures, 0);
    EXPECT_EQ(s->star_presence_failures, 0);
    EXPECT_EQ(s->strong_flow_failures, 0);
    EXPECT_EQ(s->other_flow_failures, 0);
    EXPECT_EQ(s->graphs_with_negative, r.graphs);
    EXPECT_GT(s->strong_flow_checks, 0);
  }
  EXPECT_EQ(r.consistency_checks, r.graphs);
  EXPECT_EQ(r.consistency_failures, 0);
  ASSERT_TRUE(r.omega.count(5));
  EXPECT_EQ(r.omega.at(5).max_of_min, 30);
  EXPECT_EQ(r.omega.at(5).min_of_min, 30);
  long bucketed = 0;
  for (const auto& [d, b] : r.omega) {
    bucketed += b.graphs;
    EXPECT_LE(b.min_of_min, b.max_of_min);
  }
  EXPECT_EQ(bucketed, r.graphs);
}

TEST(Report, OmegaBucketsOnDoubleWheels) {
  const Report r = run_corpus(entries({double_wheel(9), double_wheel(13), icosahedron()}), select_claims("T7"));
  EXPECT_EQ(r.omega.at(5).max_of_min, 30);
  EXPECT_EQ(r.omega.at(9).max_of_min, 34);
  EXPECT_EQ(r.omega.at(13).max_of_min, 38);
}

TEST(Report, ParallelAndSerialAgree) {
  const auto corpus = entries(testing_support::small_corpus(40, 90, 21).graphs);
  const auto claims = select_claims("all");
  const std::string serial = report_json(run_corpus(corpus, claims, "c", 1)).dump(2);
  EXPECT_EQ(report_json(run_corpus(corpus, claims, "c", 4)).dump(2), serial);
  EXPECT_EQ(report_json(run_corpus(corpus, claims, "c", 1)).dump(2), serial);
  EXPECT_EQ(report_text(run_corpus(corpus, claims, "c", 3)), report_text(run_corpus(corpus, claims, "c", 1)));
}

TEST(Report, InputErrorsAreListedNotCounted) {
  ReportBuilder b(select_claims("T7"), "mixed");
  b.add(analyze_graph({"good", icosahedron()}, b.claims()));
  b.add(analyze_graph({"bad", octahedron()}, b.claims()));
  b.add_input_error("file: graph 3", "truncated");
  const Report r = std::move(b).finish();
  EXPECT_EQ(r.graphs, 1);
  ASSERT_EQ(r.input_errors.size(), 2u);
  EXPECT_EQ(r.input_errors[0].id, "bad");
  EXPECT_EQ(r.input_errors[1].message, "truncated");
}

TEST(Report, JsonSchema) {
  const Report r = run_corpus(entries({icosahedron()}), select_claims("T7,WH"), "ico");
  const auto j = report_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"source", "graphs", "input_errors", "claims", "omega", "discharge",
                                            "consistency", "proof_cited_only"}));
  EXPECT_EQ(j["claims"]["T7"]["evaluated"], 1);
  EXPECT_EQ(j["claims"]["WH"]["vacuous"], 1);
  EXPECT_EQ(j["omega"]["5"]["max_min_weight"], 30);
  EXPECT_EQ(j["discharge"]["thm1"]["negative_vertices"], 12);
  EXPECT_EQ(j["discharge"]["thm1"]["negative_localized_radius1"], 12);
  EXPECT_TRUE(j["proof_cited_only"].empty());
  const std::string text = report_text(r);
  const std::string row = "T7" + std::string(17, ' ') + "1" + std::string(10, ' ') + "0" + std::string(10, ' ') + "0\n";
  EXPECT_NE(text.find(row), std::string::npos) << text;
}
