#include <gtest/gtest.h>

#include "rigicount/rigidity.hpp"
#include "support/oracles.hpp"

using namespace rigicount;

TEST(ModP, FieldArithmetic) {
  using namespace modp;
  EXPECT_EQ(add(kPrime - 1, 2), 1U);
  EXPECT_EQ(sub(1, 2), kPrime - 1);
  EXPECT_EQ(mul(kPrime - 1, kPrime - 1), 1U);
  for (std::uint64_t a : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{12345}, kPrime - 1}) EXPECT_EQ(mul(a, inv(a)), 1U);
}

TEST(ModP, RankAndLeftKernel) {
  modp::Matrix m(3, 3);
  // Rows r0, r1 and r0 + r1.
  const std::uint64_t r0[] = {1, 2, 3}, r1[] = {4, 5, 6};
  for (int c = 0; c < 3; ++c) {
    m.at(0, c) = r0[c];
    m.at(1, c) = r1[c];
    m.at(2, c) = modp::add(r0[c], r1[c]);
  }
  EXPECT_EQ(modp::rank(m), 2);
  const auto kernel = modp::left_kernel(m);
  ASSERT_EQ(kernel.size(), 1U);
  for (int c = 0; c < 3; ++c) {
    std::uint64_t acc = 0;
    for (int r = 0; r < 3; ++r) acc = modp::add(acc, modp::mul(kernel[0][r], m.at(r, c)));
    EXPECT_EQ(acc, 0U);
  }
}

TEST(Rigidity, RankMatchesFloatingPointOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    const int d = 1 + static_cast<int>(seed % 3);
    const auto m = static_cast<std::int64_t>((seed * 13) % (n * (n - 1) / 2 + 1));
    const auto g = oracle::random_graph(n, m, seed);
    EXPECT_EQ(rigidity_rank(g, d, seed), oracle::float_rigidity_rank(g, d, seed + 99))
        << "seed " << seed;
  }
}

TEST(Rigidity, LamanGraphsAreRigidInThePlane) {
  // Triangle plus 0-extensions: 2n - 3 edges, minimally rigid.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = oracle::random_tower(2, 5, seed);
    EXPECT_TRUE(is_generically_d_rigid(g, 2, seed));
    EXPECT_FALSE(is_generically_d_rigid(g.without_edge(0, 1), 2, seed));
  }
}

TEST(Rigidity, SmallCompleteGraphs) {
  for (int d = 1; d <= 3; ++d) {
    EXPECT_TRUE(is_generically_globally_d_rigid(complete_graph(d + 1), d, 1));
    EXPECT_TRUE(is_generically_globally_d_rigid(complete_graph(d + 2), d, 1));
    EXPECT_FALSE(is_generically_globally_d_rigid(complete_graph(d + 1).without_edge(0, 1), d, 1));
  }
}

TEST(GlobalRigidity, KnownCases) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_TRUE(is_generically_globally_d_rigid(cycle_graph(5), 1, seed));
    EXPECT_FALSE(is_generically_globally_d_rigid(path_graph(5), 1, seed));
    EXPECT_FALSE(is_generically_globally_d_rigid(oracle::figure_one(), 2, seed));
    // K_{3,3} is rigid but not redundantly rigid in the plane.
    std::vector<Edge> k33;
    for (int a = 0; a < 3; ++a)
      for (int b = 3; b < 6; ++b) k33.emplace_back(a, b);
    const Graph bip(6, k33);
    const auto r = global_rigidity(bip, 2, seed);
    EXPECT_TRUE(r.rigid);
    EXPECT_FALSE(r.globally_rigid);
    // The wheel W_5 is globally rigid in the plane.
    auto wheel = cycle_graph(5).edges();
    for (int v = 0; v < 5; ++v) wheel.emplace_back(v, 5);
    EXPECT_TRUE(is_generically_globally_d_rigid(Graph(6, wheel), 2, seed));
  }
}

TEST(GlobalRigidity, DegreeDVertexBreaksIt) {
  for (int d = 1; d <= 3; ++d) {
    auto edges = complete_graph(d + 3).edges();
    for (int v = 0; v < d; ++v) edges.emplace_back(v, d + 3);
    const Graph g(d + 4, edges);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      EXPECT_TRUE(global_rigidity(g, d, seed).rigid);
      EXPECT_FALSE(global_rigidity(g, d, seed).globally_rigid);
    }
  }
}

TEST(GlobalRigidity, StressRankBounded) {
  const auto g = complete_graph(7);
  const auto r = global_rigidity(g, 2, 3);
  EXPECT_EQ(r.stress_rank, 7 - 2 - 1);
}
