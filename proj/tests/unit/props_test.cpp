#include <gtest/gtest.h>

#include "rigicount/props.hpp"
#include "support/oracles.hpp"

using namespace rigicount;

namespace {

bool no_edges_between(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  for (Vertex u : a)
    for (Vertex v : b)
      if (u == v || g.has_edge(u, v)) return false;
  return true;
}

}  // namespace

TEST(Adjacency, CompleteAndCycle) {
  EXPECT_EQ(check_adjacency(complete_graph(4), CheckMode::exact).verdict, Verdict::holds);
  const auto c4 = check_adjacency(cycle_graph(4), CheckMode::exact);
  EXPECT_EQ(c4.verdict, Verdict::fails);
  ASSERT_EQ(c4.witness.size(), 2U);
  EXPECT_EQ(c4.witness[0].size(), 1U);
  EXPECT_TRUE(no_edges_between(cycle_graph(4), c4.witness[0], c4.witness[1]));
}

TEST(Adjacency, ThresholdIsRecorded) {
  const auto r = check_adjacency(cycle_graph(10), CheckMode::exact);
  ASSERT_FALSE(r.clauses.empty());
  EXPECT_NEAR(r.clauses[0].threshold, 10 * std::pow(std::log(10.0), -6.0), 1e-12);
}

TEST(Adjacency, VacuousForTinyGraphs) {
  const auto r = check_adjacency(path_graph(3), CheckMode::exact);
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_EQ(r.clauses[0].verdict, Verdict::vacuous);
}

TEST(Adjacency, ExactMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const auto m = static_cast<std::int64_t>((seed * 5) % (n * (n - 1) / 2 + 1));
    const auto g = oracle::random_graph(n, m, seed);
    const auto r = check_adjacency(g, CheckMode::exact);
    EXPECT_EQ(r.verdict != Verdict::fails, oracle::adjacency_holds(g)) << "seed " << seed;
    if (r.verdict == Verdict::fails) EXPECT_TRUE(no_edges_between(g, r.witness[0], r.witness[1]));
  }
}

TEST(Adjacency, SampledNeverContradictsExact) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 6 + static_cast<int>(seed % 9);
    const auto g = oracle::random_graph(n, static_cast<std::int64_t>(n * (n - 1) / 2 - 1 - seed % 3), seed);
    const auto sampled = check_adjacency(g, CheckMode::sampled, seed, 200);
    if (sampled.verdict == Verdict::fails) {
      EXPECT_EQ(check_adjacency(g, CheckMode::exact).verdict, Verdict::fails);
      EXPECT_TRUE(no_edges_between(g, sampled.witness[0], sampled.witness[1]));
    }
  }
}

TEST(Adjacency, ExactModeHasBudget) {
  EXPECT_THROW(check_adjacency(complete_graph(21), CheckMode::exact), std::length_error);
}

TEST(Sparsity, Examples) {
  EXPECT_EQ(check_sparsity(cycle_graph(5), CheckMode::exact).verdict, Verdict::holds);
  const auto k4 = check_sparsity(complete_graph(4), CheckMode::exact);
  EXPECT_EQ(k4.verdict, Verdict::fails);
  EXPECT_EQ(k4.witness.at(0), (std::vector<Vertex>{0, 1, 2, 3}));
  const auto k4e = check_sparsity(complete_graph(4).without_edge(0, 1), CheckMode::exact);
  EXPECT_EQ(k4e.verdict, Verdict::fails);
  EXPECT_EQ(k4e.witness.at(0), (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Sparsity, SecondClauseVacuousAtDeskScale) {
  const auto r = check_sparsity(cycle_graph(12), CheckMode::exact);
  ASSERT_EQ(r.clauses.size(), 2U);
  EXPECT_EQ(r.clauses[1].verdict, Verdict::vacuous);
  EXPECT_LT(r.clauses[1].threshold, 1.0);
}

TEST(Sparsity, ExactMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const auto m = static_cast<std::int64_t>((seed * 3) % (n * (n - 1) / 2 + 1));
    const auto g = oracle::random_graph(n, m, seed);
    const auto r = check_sparsity(g, CheckMode::exact);
    EXPECT_EQ(r.verdict != Verdict::fails, oracle::sparsity_holds(g)) << "seed " << seed;
    for (const auto& w : r.witness) {
      const int e = induced_edge_count(g, w);
      const int s = static_cast<int>(w.size());
      EXPECT_TRUE(e > s || 4 * e >= 5 * s);
    }
  }
}

TEST(Sparsity, HeuristicFindsDenseCore) {
  auto edges = cycle_graph(30).edges();
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      if (!(v == u + 1)) edges.emplace_back(u, v);
  const Graph g(30, edges);
  const auto r = check_sparsity(g, CheckMode::sampled);
  EXPECT_EQ(r.verdict, Verdict::fails);
  EXPECT_GT(induced_edge_count(g, r.witness.at(0)), static_cast<int>(r.witness.at(0).size()));
  EXPECT_EQ(check_sparsity(cycle_graph(40), CheckMode::sampled).verdict,
            Verdict::no_counterexample_found);
}

TEST(Monotonicity, EdgeToggles) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 5 + static_cast<int>(seed % 6);
    const auto sigma = sample_edge_ordering(n, seed);
    const auto m = static_cast<std::int64_t>(1 + seed % (sigma.num_pairs() - 1));
    const auto g = graph_at(sigma, m);
    const auto h = graph_at(sigma, m + 1);
    if (check_adjacency(g, CheckMode::exact).verdict == Verdict::holds) {
      EXPECT_EQ(check_adjacency(h, CheckMode::exact).verdict, Verdict::holds);
    }
    if (check_sparsity(h, CheckMode::exact).verdict == Verdict::holds) {
      EXPECT_EQ(check_sparsity(g, CheckMode::exact).verdict, Verdict::holds);
    }
  }
}

TEST(CoreReport, Examples) {
  const auto k10 = core_report(complete_graph(10), 3);
  EXPECT_EQ(k10.verdict, Verdict::holds);
  const auto fig = core_report(oracle::figure_one(), 3);
  EXPECT_EQ(fig.verdict, Verdict::fails);
  for (const auto& c : fig.clauses) EXPECT_EQ(c.verdict, Verdict::fails);
  EXPECT_FALSE(fig.witness.empty());
}

TEST(CoreReport, SeparatorWitnessCutsTheCore) {
  // Two K_5 sharing two vertices: the 3-core is everything, 2-connected only.
  std::vector<Edge> edges;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
  const int map[5] = {0, 1, 5, 6, 7};
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      if (!(u < 2 && v < 2)) edges.emplace_back(map[u], map[v]);
  const Graph g(8, edges);
  const auto r = core_report(g, 3);
  EXPECT_EQ(r.clauses[0].verdict, Verdict::fails);
  ASSERT_FALSE(r.witness.empty());
  std::uint64_t mask = 0;
  for (Vertex v : r.witness[0]) mask |= std::uint64_t{1} << v;
  EXPECT_LT(r.witness[0].size(), 3U);
  EXPECT_FALSE(oracle::connected_without(g, mask));
}
