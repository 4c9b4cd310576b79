// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hjd/errors.hpp"
#include "hjd/experiment.hpp"

using namespace hjd;

namespace {

ExperimentConfig small_exact(Algorithm a) {
  ExperimentConfig c;
  c.scenario.n = 2;
  c.scenario.K1 = 2;
  c.scenario.K2 = 2;
  c.scenario.cond_target = 1.0;
  c.algorithms = {a};
  c.trials = 1;
  c.seed = 5;
  return c;
}

std::string config_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::config);
    return e.what();
  }
  ADD_FAILURE() << "no error for " << text;
  return {};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string l; std::getline(ss, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Algorithms, NamesRoundTrip) {
  for (auto a : {Algorithm::co_hjd, Algorithm::ro_hjd, Algorithm::aro_hjd, Algorithm::h_cjdi,
                 Algorithm::cjdi, Algorithm::sobi_jd})
    EXPECT_EQ(parse_algorithm(to_string(a)), a);
  EXPECT_THROW(parse_algorithm("jade"), Error);
}

TEST(Config, RoundTripsThroughJson) {
  for (const auto& name : builtin_config_names()) {
    const ExperimentConfig c = builtin_config(name);
    EXPECT_EQ(config_to_json(parse_config(config_to_json(c))), config_to_json(c)) << name;
  }
}

TEST(Config, ErrorsNameFieldPath) {
  EXPECT_NE(config_error(R"({"algorithms":["co-hjd"],"trials":0})").find("config.trials"),
            std::string::npos);
  EXPECT_NE(config_error(R"({"algorithms":["co-hjd"],"scenario":{"n":"five"}})")
                .find("config.scenario.n"),
            std::string::npos);
  EXPECT_NE(config_error(R"({"algorithms":["co-hjd"],"bogus":1})").find("config.bogus"),
            std::string::npos);
  EXPECT_NE(config_error(R"({"algorithms":[]})").find("config.algorithms"), std::string::npos);
  EXPECT_NE(config_error("{not json").find("config"), std::string::npos);
}

TEST(Config, UnknownBuiltin) { EXPECT_THROW(builtin_config("fig9"), Error); }

TEST(Experiment, EmptyTableCsvIsHeaderOnly) {
  ResultTable t;
  EXPECT_EQ(results_csv(t), "axis_value,algorithm,trial,sweep,pi,cost,max_sin,max_sinh,converged\r\n");
  EXPECT_EQ(plotdata_csv(t), "sweep\r\n");
}

TEST(Experiment, SmokeExactCoHjd) {
  const ResultTable t = run_experiment(small_exact(Algorithm::co_hjd));
  ASSERT_FALSE(t.rows.empty());
  EXPECT_TRUE(t.failures.empty());
  EXPECT_LT(*t.rows.back().pi, 1e-10);
  EXPECT_TRUE(t.rows.back().converged);
}

TEST(Experiment, Deterministic) {
  ExperimentConfig c = builtin_config("fig4b");
  c.trials = 3;
  const std::string a = results_csv(run_experiment(c));
  c.workers = 2;
  EXPECT_EQ(a, results_csv(run_experiment(c)));
}

TEST(Experiment, IsolatedAlgorithms) {
  ExperimentConfig both = small_exact(Algorithm::co_hjd);
  both.scenario.n = 4;
  both.algorithms = {Algorithm::h_cjdi, Algorithm::co_hjd};
  ExperimentConfig single = both;
  single.algorithms = {Algorithm::co_hjd};
  auto co_rows = [](const ResultTable& t) {
    std::string s;
    for (const auto& r : t.rows)
      if (r.algorithm == Algorithm::co_hjd) s += std::to_string(*r.pi) + ";";
    return s;
  };
  EXPECT_EQ(co_rows(run_experiment(both)), co_rows(run_experiment(single)));
}

TEST(Experiment, FailureBecomesRow) {
  ExperimentConfig c = small_exact(Algorithm::ro_hjd);
  c.scenario.n = 4;
  c.scenario.cond_target = 1e12;  // N_1 numerically rank deficient
  const ResultTable t = run_experiment(c);
  ASSERT_EQ(t.failures.size(), 1u);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_FALSE(t.rows[0].converged);
  EXPECT_FALSE(t.rows[0].pi.has_value());
}

TEST(Experiment, PlotdataIsMedianPerSweep) {
  ExperimentConfig c = small_exact(Algorithm::co_hjd);
  c.scenario.n = 4;
  c.scenario.cond_target.reset();
  c.scenario.snr_db = 20.0;
  c.trials = 3;
  const ResultTable t = run_experiment(c);
  // sweep 0 median by hand
  std::vector<double> first;
  for (const auto& r : t.rows)
    if (r.sweep == 0) first.push_back(*r.pi);
  ASSERT_EQ(first.size(), 3u);
  std::sort(first.begin(), first.end());
  const auto ls = lines(plotdata_csv(t));
  EXPECT_EQ(ls[0], "sweep,co-hjd\r");
  char buf[64];
  std::snprintf(buf, sizeof buf, "0,%.17g\r", first[1]);
  EXPECT_EQ(ls[1], buf);
}

TEST(Experiment, RhoAxisLayout) {
  ExperimentConfig c = builtin_config("fig3");
  c.trials = 1;
  const auto ls = lines(plotdata_csv(run_experiment(c)));
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0], "rho,co-hjd,ro-hjd,aro-hjd\r");
  EXPECT_EQ(ls[1].rfind("0.10000000000000001,", 0), 0u);
  EXPECT_EQ(ls[2].rfind("0.90000000000000002,", 0), 0u);
}

TEST(Experiment, WritesOutputs) {
  const auto dir = std::filesystem::temp_directory_path() / "hjd_test_outputs";
  std::filesystem::remove_all(dir);
  const ExperimentConfig c = small_exact(Algorithm::co_hjd);
  write_outputs(c, run_experiment(c), dir.string());
  for (const char* f : {"results.csv", "timings.csv", "plotdata.csv", "summary.json"})
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  std::ifstream in(dir / "summary.json");
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("median_final_pi"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Median, IgnoresNan) {
  EXPECT_DOUBLE_EQ(median({3, 1, 2}), 2.0);
  EXPECT_DOUBLE_EQ(median({4, 1, 2, 3}), 2.5);
  EXPECT_DOUBLE_EQ(median({1, std::nan(""), 3}), 2.0);
  EXPECT_TRUE(std::isnan(median({})));
}
