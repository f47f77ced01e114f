#include <gtest/gtest.h>

#include <sstream>

#include "rigicount/psd.hpp"
#include "rigicount/testing/hidden_factor.hpp"
#include "support/oracles.hpp"

using namespace rigicount;
using rigicount::testing::HiddenFactorAccess;

namespace {

PartialPSDMatrix path_instance() {
  // Rank one: p = (1, 2, -3).
  return PartialPSDMatrix(3, 1, {1.0, 4.0, 9.0}, {{{0, 1}, 2.0}, {{1, 2}, -6.0}});
}

bool contains_gram(const std::vector<Eigen::MatrixXcd>& completions, const Eigen::MatrixXd& b,
                   double tol) {
  for (const auto& c : completions)
    if ((c - b.cast<Complex>()).cwiseAbs().maxCoeff() < tol) return true;
  return false;
}

}  // namespace

TEST(PartialMatrix, ValidatesInput) {
  EXPECT_THROW(PartialPSDMatrix(2, 3, {1.0, 1.0}, {}), std::invalid_argument);
  EXPECT_THROW(PartialPSDMatrix(2, 1, {1.0}, {}), std::invalid_argument);
  EXPECT_THROW(PartialPSDMatrix(2, 1, {1.0, 1.0}, {{{1, 1}, 1.0}}), std::invalid_argument);
  const PartialPSDMatrix a(3, 1, {1.0, 1.0, 1.0}, {{{2, 0}, 0.5}});
  EXPECT_EQ(a.known(0, 2), Complex(0.5));
  EXPECT_FALSE(a.known(0, 1).has_value());
  EXPECT_EQ(a.known_count(0), 2);
}

TEST(Sampler, DiagonalIsColumnNormAndEntriesMatchFactor) {
  const auto a = sample_partial_psd(6, 2, 8, 3);
  const auto& p = HiddenFactorAccess::factor(a);
  ASSERT_TRUE(p.has_value());
  const Eigen::MatrixXd b = p->transpose() * *p;
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(a.diag()[i].real(), p->col(i).squaredNorm(), 1e-12);
    EXPECT_GT(a.diag()[i].real(), 0.0);
  }
  EXPECT_EQ(a.underlying_graph().num_edges(), 8);
  for (const auto& [e, value] : a.off()) EXPECT_NEAR(value.real(), b(e.first, e.second), 1e-12);
}

TEST(Sampler, FullEdgeCountKeepsEverything) {
  const auto a = sample_partial_psd(5, 2, 10, 1);
  EXPECT_TRUE(a.underlying_graph().is_complete());
  EXPECT_EQ(a.off().size(), 10U);
}

TEST(PartialCore, MatchesGraphCoreOneLower) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 4 + static_cast<int>(seed % 10);
    const auto m = static_cast<std::int64_t>((seed * 3) % (n * (n - 1) / 2 + 1));
    const auto a = sample_partial_psd(n, 1 + static_cast<int>(seed % 3) % n, m, seed);
    for (int k = 2; k <= 5; ++k) {
      EXPECT_EQ(partial_core(a, k), k_core(a.underlying_graph(), k - 1).survivors);
    }
  }
}

TEST(PartialCore, RowDeletionByKnownCount) {
  // Naive row deletion: drop any row with fewer than k known entries.
  const auto a = sample_partial_psd(9, 2, 14, 12);
  for (int k = 1; k <= 5; ++k) {
    std::vector<bool> alive(9, true);
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < 9; ++i) {
        if (!alive[i]) continue;
        int known = 1;
        for (int j = 0; j < 9; ++j)
          if (j != i && alive[j] && a.known(i, j)) ++known;
        if (known < k) {
          alive[i] = false;
          changed = true;
        }
      }
    }
    std::vector<int> expected;
    for (int i = 0; i < 9; ++i)
      if (alive[i]) expected.push_back(i);
    EXPECT_EQ(partial_core(a, k), expected);
  }
}

TEST(PartialCore, PathAndFullMatrix) {
  EXPECT_EQ(partial_core(path_instance(), 2), (std::vector<int>{0, 1, 2}));
  const auto full = sample_partial_psd(5, 2, 10, 2);
  EXPECT_EQ(partial_core(full, 3).size(), 5U);
}

TEST(Normalize, ArithmeticExamples) {
  auto lengths_of = [](Complex aii, Complex ajj, Complex aij) {
    return normalize_to_sphere(PartialPSDMatrix(2, 1, {aii, ajj}, {{{0, 1}, aij}})).lengths[0];
  };
  EXPECT_NEAR(std::abs(lengths_of(1.0, 1.0, 1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(lengths_of(1.0, 1.0, -1.0) - 4.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(lengths_of(4.0, 9.0, 3.0) - 1.0), 0.0, 1e-15);
  EXPECT_THROW(normalize_to_sphere(PartialPSDMatrix(2, 1, {0.0, 1.0}, {{{0, 1}, 1.0}})),
               std::invalid_argument);
}

TEST(Normalize, InvariantUnderRowScaling) {
  const auto a = sample_partial_psd(6, 2, 9, 5);
  const double lambda = 1.7;
  auto diag = a.diag();
  diag[2] *= lambda * lambda;
  auto off = a.off();
  for (auto& [e, value] : off)
    if (e.first == 2 || e.second == 2) value *= lambda;
  const PartialPSDMatrix scaled(6, 2, diag, off);
  const auto x = normalize_to_sphere(a).lengths;
  const auto y = normalize_to_sphere(scaled).lengths;
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(std::abs(x[i] - y[i]), 0.0, 1e-12);
}

TEST(Predict, Examples) {
  const auto full = sample_partial_psd(5, 2, 10, 7);
  EXPECT_EQ(predicted_completions(full, 2).count, 1);
  const auto path = predicted_completions(path_instance(), 1);
  EXPECT_TRUE(path.finite);
  EXPECT_EQ(path.core_size, 3);
  EXPECT_EQ(path.count, 1);
  const PartialPSDMatrix sparse(4, 3, {1.0, 1.0, 1.0, 1.0}, {{{0, 1}, 0.1}});
  EXPECT_FALSE(predicted_completions(sparse, 3).finite);
}

TEST(Complete, PathInstanceHasOneCompletion) {
  const auto a = path_instance();
  const auto res = enumerate_completions(a, 1, 4);
  EXPECT_EQ(res.status, CompletionStatus::certified);
  ASSERT_EQ(res.completions.size(), 1U);
  const Complex expected = *a.known(0, 1) * *a.known(1, 2) / a.diag()[1];
  EXPECT_NEAR(std::abs(res.completions[0](0, 2) - expected), 0.0, 1e-8);
}

TEST(Complete, FullMatrixIsItsOwnCompletion) {
  const auto a = sample_partial_psd(5, 2, 10, 9);
  const auto res = enumerate_completions(a, 2, 1);
  ASSERT_EQ(res.completions.size(), 1U);
  const auto& p = *HiddenFactorAccess::factor(a);
  EXPECT_TRUE(contains_gram(res.completions, p.transpose() * p, 1e-8));
}

TEST(Complete, SampledInstancesMatchPredictionAndContainHiddenGram) {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 8 && seed < 200; ++seed) {
    const int d = 1 + static_cast<int>(seed % 2);
    const int n = 6 + static_cast<int>(seed % 3);
    const auto m = static_cast<std::int64_t>(d * n + seed % 4);
    const auto a = sample_partial_psd(n, d, m, seed);
    const auto pred = predicted_completions(a, d);
    if (!pred.finite) continue;
    const auto res = enumerate_completions(a, d, seed);
    if (res.status != CompletionStatus::certified) continue;
    ++checked;
    EXPECT_EQ(BigInt(res.completions.size()), pred.count) << "seed " << seed;
    const auto& p = *HiddenFactorAccess::factor(a);
    EXPECT_TRUE(contains_gram(res.completions, p.transpose() * p, 1e-6)) << "seed " << seed;
  }
  EXPECT_GE(checked, 4);
}

TEST(Complete, CountInvariantUnderDiagonalScaling) {
  const auto a = sample_partial_psd(7, 2, 14, 31);
  auto diag = a.diag();
  auto off = a.off();
  const std::vector<double> s{1.3, 0.7, 2.0, 1.0, 0.5, 1.1, 0.9};
  for (int i = 0; i < 7; ++i) diag[i] *= s[i] * s[i];
  for (auto& [e, value] : off) value *= s[e.first] * s[e.second];
  const PartialPSDMatrix scaled(7, 2, diag, off);
  const auto x = enumerate_completions(a, 2, 3);
  const auto y = enumerate_completions(scaled, 2, 3);
  EXPECT_EQ(x.status, y.status);
  EXPECT_EQ(x.completions.size(), y.completions.size());
}

TEST(MatrixIo, RoundTrip) {
  const auto a = sample_partial_psd(5, 2, 6, 2);
  std::stringstream buf;
  write_partial_matrix(buf, a);
  const auto b = read_partial_matrix(buf);
  EXPECT_EQ(b.n(), 5);
  EXPECT_EQ(b.d(), 2);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(a.diag()[i], b.diag()[i]);
  EXPECT_EQ(a.off(), b.off());
  EXPECT_FALSE(HiddenFactorAccess::factor(b).has_value());
}

TEST(MatrixIo, ComplexValuesSwitchField) {
  std::istringstream in("2 1\n1\n1+2i\n0 1 0.5-0.5i\n");
  const auto a = read_partial_matrix(in);
  EXPECT_EQ(a.field(), Field::complex);
  EXPECT_EQ(a.diag()[1], Complex(1, 2));
}
