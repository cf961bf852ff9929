#include <gtest/gtest.h>

#include <sstream>

#include "cis/report_io.hpp"
#include "json.hpp"

namespace cis {
namespace {

using nlohmann::json;

std::size_t lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

TEST(ReportIo, ExtremalJsonFields) {
  GraphClass cls;
  cls.n = 5;
  cls.c = 1;
  const ExtremalReport r = extremal_search(cls, Objective::Max, 1);
  const json j = json::parse(to_json(r));
  EXPECT_EQ(j["class"]["n"], 5);
  EXPECT_EQ(j["class"]["c"], 1);
  EXPECT_TRUE(j["class"]["p"].is_null());
  EXPECT_EQ(j["objective"], "max");
  EXPECT_EQ(j["optimum"], 24);
  EXPECT_EQ(j["formula_prediction"], 24);
  EXPECT_EQ(j["prediction_matches"], true);
  EXPECT_EQ(j["witnesses"].size(), 1u);
  EXPECT_FALSE(j.contains("elapsed_seconds"));
  EXPECT_TRUE(json::parse(to_json(r, true)).contains("elapsed_seconds"));
  EXPECT_EQ(lines(to_csv(r)), 2u);
}

TEST(ReportIo, TheoremJsonIsStable) {
  const TheoremReport a = verify_theorem(TheoremId::Main1Cut, 3, 6, 1);
  const TheoremReport b = verify_theorem(TheoremId::Main1Cut, 3, 6, 3);
  EXPECT_EQ(to_json(a), to_json(b));
  const json j = json::parse(to_json(a));
  EXPECT_EQ(j["theorem_id"], "main1cut");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["cells"].size(), a.cells.size());
  EXPECT_EQ(j["cells"][0]["relation"], "=");
  EXPECT_EQ(lines(to_csv(a)), a.cells.size() + 1);
}

TEST(ReportIo, LemmaReports) {
  std::vector<LemmaReport> reports;
  for (const LemmaInstance& inst : one_cut_chain(7)) reports.push_back(check(inst));
  const json j = json::parse(to_json(reports));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["lemma_id"], "one_cut");
  EXPECT_EQ(j[0]["lhs"], 96);
  EXPECT_EQ(j[0]["relation_claimed"], ">");
  EXPECT_EQ(j[0]["holds"], true);
  EXPECT_TRUE(j[0]["equality_condition_matched"].is_null());
  EXPECT_EQ(lines(to_csv(reports)), 3u);
}

TEST(ReportIo, ScanRows) {
  const auto rows = open_problem_scan(5, 5, 1);
  const json j = json::parse(to_json(rows));
  ASSERT_EQ(j.size(), rows.size());
  EXPECT_EQ(j[0]["n"], 5);
  EXPECT_EQ(j[0]["report"]["optimum"], 20);
  EXPECT_EQ(lines(to_csv(rows)), rows.size() + 1);
}

}  // namespace
}  // namespace cis
