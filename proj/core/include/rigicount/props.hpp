#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rigicount/graph.hpp"

namespace rigicount {

enum class Verdict { holds, vacuous, fails, no_counterexample_found };
std::string to_string(Verdict v);

enum class CheckMode { exact, sampled };
CheckMode parse_check_mode(const std::string& s);

inline constexpr int kPropsExactMaxN = 20;

struct Clause {
  std::string name;
  double threshold = 0.0;  // evaluated at this n
  Verdict verdict = Verdict::holds;
  std::string detail;
};

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::holds;
  std::vector<std::vector<Vertex>> witness;  // non-empty when verdict == fails
  std::vector<Clause> clauses;
  std::vector<std::pair<std::string, double>> parameters;
};

// n * ln(n)^-6; +inf for n <= 1.
double adjacency_threshold(int n);

// Disjoint S1, S2 with |S1|, |S2| >= n ln^-6 n must have an edge between
// them. Exact mode tests every S1 of the smallest qualifying size against its
// non-neighbourhood; sampled mode draws `samples` random pairs. Exact mode
// throws std::length_error when n > kPropsExactMaxN.
PropertyReport check_adjacency(const Graph& g, CheckMode mode, std::uint64_t seed = 0,
                               int samples = 10000);

// |S| < 500 => |E(S)| <= |S|, and |S| <= 2n ln^-6 n => |E(S)| < 1.25 |S|.
// Exact mode runs over all subsets; sampled mode searches BFS balls and the
// min-degree peeling sequence for dense subsets.
PropertyReport check_sparsity(const Graph& g, CheckMode mode);

// |k-core|, k-connectivity of the core, |core| >= 5n/9 and
// |core| >= n - n exp(-ln(n)^eps).
PropertyReport core_report(const Graph& g, int k, double eps = 0.5);

// Number of edges with both ends in `s`.
int induced_edge_count(const Graph& g, const std::vector<Vertex>& s);

}  // namespace rigicount
