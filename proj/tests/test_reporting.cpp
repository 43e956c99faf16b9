#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace driverset;

TEST(AnalyzeTest, PathFiveReport) {
  const auto report = analyze(path_graph(5), "path:5");
  EXPECT_EQ(report.n, 5);
  EXPECT_EQ(report.max_mult, 1);
  EXPECT_EQ(report.min_driver_size, 1);
  EXPECT_EQ(report.driver_count, 2);
  EXPECT_EQ(report.zero_forcing_num, 1);
  EXPECT_EQ(report.driver_sets, (std::vector<std::vector<int>>{{1}, {5}}));
  EXPECT_EQ(report.numeric_disagreements, 0);
}

TEST(AnalyzeTest, ReportInvariants) {
  for (const Graph& g : {path_graph(6), cycle_graph(8), hypercube_graph(3)}) {
    const auto report = analyze(g, family_name(g.family()));
    EXPECT_LE(report.max_mult, report.min_driver_size);
    EXPECT_LE(report.min_driver_size, report.zero_forcing_num);
    long long orbit_sum = 0;
    for (const auto& row : report.orbits)
      if (row.driver) orbit_sum += row.size;
    EXPECT_EQ(orbit_sum, report.driver_count);
    for (const auto& [rep, c] : report.classifications) {
      if (c.verdict == DriverType::kTypeI) {
        EXPECT_TRUE(is_zero_forcing_set(g, rep));
      }
    }
  }
}

TEST(AnalyzeTest, JsonDeterministicAcrossWorkerCounts) {
  for (const Graph& g : {cycle_graph(9), hypercube_graph(3)}) {
    AnalyzeOptions serial;
    serial.jobs = 1;
    AnalyzeOptions parallel;
    parallel.jobs = 8;
    const auto a = report_to_json(analyze(g, "g", serial)).dump(2);
    const auto b = report_to_json(analyze(g, "g", parallel)).dump(2);
    EXPECT_EQ(a, b);
  }
}

TEST(AnalyzeTest, JsonSchemaFields) {
  const auto js = report_to_json(analyze(cycle_graph(6), "cycle:6"));
  EXPECT_EQ(js["schema"], 1);
  EXPECT_EQ(js["descriptor"], "cycle:6");
  EXPECT_EQ(js["n"], 6);
  EXPECT_EQ(js["M"], 2);
  EXPECT_EQ(js["D"], 2);
  EXPECT_EQ(js["N_D"], 12);
  EXPECT_EQ(js["Z"], 2);
  EXPECT_EQ(js["orbits"].size(), 3u);
  EXPECT_EQ(js["driver_sets"].size(), 12u);
  EXPECT_EQ(js["zero_forcing_sets"].size(), 6u);
  // One classification entry per minimum driver set.
  EXPECT_EQ(js["classifications"].size(), 12u);
  for (const auto& c : js["classifications"]) {
    EXPECT_TRUE(c.contains("set"));
    EXPECT_TRUE(c.contains("verdict"));
  }
  for (const auto& orbit : js["orbits"]) {
    EXPECT_TRUE(orbit.contains("representative"));
    EXPECT_TRUE(orbit.contains("size"));
    EXPECT_TRUE(orbit.contains("driver"));
    EXPECT_TRUE(orbit.contains("zero_forcing"));
  }
}

TEST(AnalyzeTest, TableFormatMentionsKeyQuantities) {
  const auto text = report_to_table(analyze(path_graph(5), "path:5"));
  EXPECT_NE(text.find("path:5"), std::string::npos);
  EXPECT_NE(text.find("N_D"), std::string::npos);
  EXPECT_NE(text.find("type_I"), std::string::npos);
}

TEST(ReferenceChecksTest, AllPass) {
  std::ostringstream sink;
  const auto outcome = run_reference_checks(sink);
  EXPECT_EQ(outcome.failed, 0) << sink.str();
  EXPECT_GT(outcome.passed, 50);
}
