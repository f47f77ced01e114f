#include <gtest/gtest.h>

#include "rigicount/certify.hpp"
#include "support/oracles.hpp"

using namespace rigicount;

TEST(Certify, CompleteGraphHasCountOne) {
  for (int d = 1; d <= 3; ++d) {
    const auto cert = certify_count(complete_graph(d * (d + 1) + 2), d, 1);
    EXPECT_EQ(cert.status, CertificateStatus::certified_deterministic);
    EXPECT_EQ(cert.exponent, 0);
    EXPECT_FALSE(cert.first_failed.has_value());
  }
}

TEST(Certify, LowDegreeIsRefuted) {
  const auto cert = certify_count(path_graph(6), 2, 1);
  EXPECT_EQ(cert.status, CertificateStatus::refuted);
  EXPECT_EQ(cert.first_failed, std::string(check::min_degree));
  EXPECT_FALSE(cert.exponent.has_value());
}

TEST(Certify, FigureOneIsInconclusive) {
  const auto cert = certify_count(oracle::figure_one(), 2, 7);
  EXPECT_EQ(cert.status, CertificateStatus::inconclusive);
  EXPECT_EQ(cert.core_size, 0);
  EXPECT_FALSE(cert.has_passed(check::ordering_exists));
  EXPECT_FALSE(cert.has_passed(check::peel_exact_d));
  EXPECT_EQ(predicted_count(oracle::figure_one(), 2), 32);
}

TEST(Certify, PendantsDoubleTheCount) {
  // K_7 with two 0-extensions at d = 2: exponent 2.
  auto edges = complete_graph(7).edges();
  edges.insert(edges.end(), {{0, 7}, {1, 7}, {2, 8}, {7, 8}});
  const Graph g(9, edges);
  const auto cert = certify_count(g, 2, 3);
  EXPECT_TRUE(cert.certified());
  EXPECT_EQ(cert.exponent, 2);
  EXPECT_EQ(predicted_count(g, 2), 4);
}

TEST(Certify, RandomizedRouteWhenDeterministicFails) {
  // The wheel W_5 is globally rigid in the plane but its 6-core is empty.
  auto edges = cycle_graph(5).edges();
  for (int v = 0; v < 5; ++v) edges.emplace_back(v, 5);
  edges.emplace_back(0, 6);
  edges.emplace_back(2, 6);
  const Graph g(7, edges);
  const auto cert = certify_count(g, 2, 11);
  EXPECT_EQ(cert.status, CertificateStatus::certified_randomized);
  EXPECT_EQ(cert.exponent, 1);
  EXPECT_FALSE(cert.has_passed(check::ordering_exists));
  EXPECT_TRUE(cert.has_passed(check::core_globally_rigid));
}

TEST(Certify, NeverCertifiesWithoutExactPeel) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = oracle::random_graph(12, 20 + static_cast<std::int64_t>(seed % 30), seed);
    const auto cert = certify_count(g, 2, seed);
    if (cert.status == CertificateStatus::certified_randomized) {
      for (const auto& r : k_core(g, 3).removed) EXPECT_EQ(r.degree, 2);
    }
    if (cert.certified()) {
      EXPECT_EQ(*cert.exponent, 12 - static_cast<int>(k_core(g, 3).survivors.size()));
      EXPECT_GE(g.min_degree(), 2);
    }
  }
}

TEST(Certify, Deterministic) {
  const auto g = oracle::random_graph(40, 160, 2);
  const auto a = certify_count(g, 2, 5);
  const auto b = certify_count(g, 2, 5);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.exponent, b.exponent);
}

TEST(Spherical, AgreesWithConeCertificate) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int d = 1 + static_cast<int>(seed % 2);
    const auto g = oracle::random_graph(10, 22 + static_cast<std::int64_t>(seed % 15), seed);
    const auto sph = spherical_count(g, d, seed);
    const auto direct = certify_count(cone(g), d + 1, seed);
    EXPECT_EQ(sph.certified(), direct.certified()) << "seed " << seed;
    if (sph.certified()) EXPECT_EQ(*sph.exponent, *direct.exponent);
  }
}

TEST(Spherical, ConeOfCompleteGraph) {
  const auto cert = spherical_count(complete_graph(6), 2, 1);
  EXPECT_TRUE(cert.certified());
  EXPECT_EQ(cert.exponent, 0);
  EXPECT_TRUE(cert.has_passed(check::cone_exponent_agrees));
}

TEST(CoreCommutation, ConeCoreIsConeOverCore) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = oracle::random_graph(15, 30, seed);
    for (int k = 1; k <= 4; ++k) {
      const auto inner = k_core(g, k).survivors;
      if (inner.empty()) continue;
      auto expected = inner;
      expected.push_back(15);
      EXPECT_EQ(k_core(cone(g), k + 1).survivors, expected);
    }
  }
}
