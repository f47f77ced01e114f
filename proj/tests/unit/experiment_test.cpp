#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "rigicount/experiment.hpp"

using namespace rigicount;

namespace {

std::string csv_of(const ExperimentConfig& cfg) {
  std::ostringstream out;
  write_csv(out, cfg, run_experiment(cfg));
  return out.str();
}

int count_lines(const std::string& text, bool comments) {
  std::istringstream in(text);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if ((line[0] == '#') == comments) ++count;
  }
  return count;
}

}  // namespace

TEST(MRule, ParseAndPrint) {
  EXPECT_EQ(parse_m_rule("hitting").kind, MRule::Kind::hitting);
  const auto off = parse_m_rule("hitting+12");
  EXPECT_EQ(off.kind, MRule::Kind::hitting_offset);
  EXPECT_EQ(off.value, 12);
  EXPECT_EQ(to_string(parse_m_rule("fixed:300")), "fixed:300");
  EXPECT_THROW(parse_m_rule("random"), std::invalid_argument);
  EXPECT_THROW(parse_m_rule("fixed:x"), std::invalid_argument);
}

TEST(Config, ParseSerializeRoundTrip) {
  std::istringstream in("# sweep\nn=20, 30\nd=2\nsamples=4\nseed=9\nm_rule=hitting+3\nthreads=2\n");
  const auto cfg = parse_config(in);
  EXPECT_EQ(cfg.ns, (std::vector<int>{20, 30}));
  EXPECT_EQ(cfg.samples, 4);
  EXPECT_EQ(cfg.seed, 9U);
  std::istringstream again(serialize_config(cfg));
  EXPECT_EQ(serialize_config(parse_config(again)), serialize_config(cfg));
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
  std::istringstream unknown("colour=blue\n");
  EXPECT_THROW(parse_config(unknown), std::invalid_argument);
  std::istringstream bad("d=two\n");
  EXPECT_THROW(parse_config(bad), std::invalid_argument);
  std::istringstream no_eq("samples 3\n");
  EXPECT_THROW(parse_config(no_eq), std::invalid_argument);
}

TEST(Config, EnvironmentSeedOverride) {
  ::setenv("RIGICOUNT_SEED", "777", 1);
  EXPECT_EQ(default_seed(), 777U);
  std::istringstream in("n=10\n");
  EXPECT_EQ(parse_config(in).seed, 777U);
  ::setenv("RIGICOUNT_SEED", "junk", 1);
  EXPECT_EQ(default_seed(), 1U);
  ::unsetenv("RIGICOUNT_SEED");
  EXPECT_EQ(default_seed(), 1U);
}

TEST(Experiment, ShapeAndHeader) {
  ExperimentConfig cfg;
  cfg.ns = {30, 40};
  cfg.samples = 5;
  const auto text = csv_of(cfg);
  EXPECT_EQ(text.rfind("#schema=1\n", 0), 0U);
  EXPECT_EQ(count_lines(text, false), 1 + 10);
  EXPECT_NE(text.find("# aggregate n=30 samples=5"), std::string::npos);
  EXPECT_NE(text.find("# aggregate n=40 samples=5"), std::string::npos);
}

TEST(Experiment, ByteIdenticalAcrossRunsAndThreadCounts) {
  ExperimentConfig cfg;
  cfg.ns = {40};
  cfg.samples = 6;
  cfg.seed = 123;
  const auto one = csv_of(cfg);
  EXPECT_EQ(one, csv_of(cfg));
  cfg.threads = 3;
  EXPECT_EQ(one, csv_of(cfg));
}

TEST(Experiment, RowsFollowTheMRule) {
  ExperimentConfig cfg;
  cfg.ns = {25};
  cfg.samples = 3;
  cfg.m_rule = parse_m_rule("fixed:50");
  for (const auto& row : run_experiment(cfg).rows) EXPECT_EQ(row.m, 50);
}

TEST(Experiment, FailuresBecomeRows) {
  ExperimentConfig cfg;
  cfg.ns = {10};
  cfg.samples = 2;
  cfg.m_rule = parse_m_rule("fixed:1000");
  const auto result = run_experiment(cfg);
  ASSERT_EQ(result.rows.size(), 2U);
  for (const auto& row : result.rows) {
    EXPECT_EQ(row.status, "error");
    EXPECT_FALSE(row.error.empty());
  }
  EXPECT_EQ(result.aggregates.at(0).errors, 2);
}
