#include <gtest/gtest.h>

#include <algorithm>
#include <variant>

#include "rigicount/ordering.hpp"
#include "support/oracles.hpp"

using namespace rigicount;

namespace {

// Edge count well above the d-th hitting time so the d(d+1)-core is present.
Graph dense_random(int n, std::uint64_t seed, double factor) {
  const auto sigma = sample_edge_ordering(n, seed);
  const auto m = static_cast<std::int64_t>(factor * n);
  return graph_at(sigma, std::min<std::int64_t>(m, sigma.num_pairs()));
}

}  // namespace

TEST(Ordering, CompleteGraphIsAllCore) {
  const auto result = construct_ordering(complete_graph(8), 2);
  const auto* co = std::get_if<ConstructionOrdering>(&result);
  ASSERT_NE(co, nullptr);
  EXPECT_EQ(co->s, 8);
  EXPECT_EQ(co->t, 8);
  EXPECT_EQ(co->k, 6);
  EXPECT_TRUE(validate_ordering(complete_graph(8), *co));
}

TEST(Ordering, FigureOneHasEmptyKCore) {
  const auto result = construct_ordering(oracle::figure_one(), 2);
  const auto* f = std::get_if<OrderingFailure>(&result);
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->reason, OrderingFailure::Reason::empty_k_core);
}

TEST(Ordering, PendantVerticesAppendedAfterCore) {
  // K_7 plus two vertices each joined to two core vertices.
  auto edges = complete_graph(7).edges();
  edges.insert(edges.end(), {{0, 7}, {1, 7}, {2, 8}, {3, 8}});
  const Graph g(9, edges);
  const auto result = construct_ordering(g, 2);
  const auto* co = std::get_if<ConstructionOrdering>(&result);
  ASSERT_NE(co, nullptr);
  EXPECT_EQ(co->t, 7);
  EXPECT_TRUE(validate_ordering(g, *co));
  const auto counts = earlier_neighbour_counts(g, co->order);
  EXPECT_EQ(counts[7], 2);
  EXPECT_EQ(counts[8], 2);
}

TEST(Ordering, ValidatesOnRandomGraphs) {
  int successes = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int d = 1 + static_cast<int>(seed % 3);
    const int n = 20 + static_cast<int>(seed % 40);
    const auto g = dense_random(n, seed, 1.0 + d * 2.5);
    const auto result = construct_ordering(g, d);
    if (const auto* co = std::get_if<ConstructionOrdering>(&result)) {
      ++successes;
      EXPECT_TRUE(validate_ordering(g, *co)) << "seed " << seed;
      EXPECT_EQ(static_cast<int>(k_core(g, d + 1).survivors.size()), co->t);
      EXPECT_EQ(static_cast<int>(k_core(g, d * (d + 1)).survivors.size()), co->s);
    }
  }
  EXPECT_GT(successes, 30);
}

TEST(Ordering, ValidatorRejectsTampering) {
  const auto g = dense_random(30, 5, 6.0);
  const auto result = construct_ordering(g, 2);
  auto co = std::get<ConstructionOrdering>(result);
  ASSERT_TRUE(validate_ordering(g, co));
  auto bad = co;
  bad.t = bad.s - 1;
  EXPECT_FALSE(validate_ordering(g, bad));
  bad = co;
  bad.order.back() = bad.order.front();
  EXPECT_FALSE(validate_ordering(g, bad));
}

TEST(Neighbourly, ExactMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const auto m = static_cast<std::int64_t>((seed * 11) % (n * (n - 1) / 2 + 1));
    const auto g = oracle::random_graph(n, m, seed);
    for (int d = 1; d <= 3; ++d) {
      const auto report = is_d_neighbourly_exact(g, d);
      const bool expected = oracle::is_d_neighbourly(g, d);
      EXPECT_EQ(report.verdict == NeighbourlyVerdict::holds, expected) << "seed " << seed;
      if (report.verdict == NeighbourlyVerdict::fails) {
        EXPECT_FALSE(neighbourly_condition(g, report.witness, d));
        EXPECT_LE(2 * report.witness.size(), static_cast<std::size_t>(n));
      }
    }
  }
}

TEST(Neighbourly, SampledWitnessIsGenuine) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = oracle::random_graph(14, 18, seed);
    const auto report = is_d_neighbourly_sampled(g, 2, 500, seed);
    if (report.verdict == NeighbourlyVerdict::fails) {
      EXPECT_FALSE(neighbourly_condition(g, report.witness, 2));
      EXPECT_EQ(is_d_neighbourly_exact(g, 2).verdict, NeighbourlyVerdict::fails);
    }
  }
}

TEST(Neighbourly, ExactModeHasBudget) {
  EXPECT_THROW(is_d_neighbourly_exact(complete_graph(kNeighbourlyExactMaxN + 1), 1),
               std::length_error);
}

TEST(Ordering, NeighbourlyWithLargeCoreSucceeds) {
  // A d(d+1)-core with at least 5n/9 vertices plus the d-neighbourly
  // property leaves pass 1 nothing to block on.
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = oracle::random_graph(14, 45, seed);
    if (9 * k_core(g, 2).survivors.size() < 5 * 14) continue;
    if (is_d_neighbourly_exact(g, 1).verdict != NeighbourlyVerdict::holds) continue;
    EXPECT_TRUE(std::holds_alternative<ConstructionOrdering>(construct_ordering(g, 1)))
        << "seed " << seed;
  }
}
