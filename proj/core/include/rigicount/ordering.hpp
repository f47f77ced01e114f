#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rigicount/graph.hpp"

namespace rigicount {

// Vertex order v_1..v_n with v_1..v_s the d(d+1)-core, v_1..v_t the
// (d+1)-core, every later vertex attached to >= d earlier ones and every
// vertex past t attached to exactly d earlier ones.
struct ConstructionOrdering {
  std::vector<Vertex> order;
  int s = 0;
  int t = 0;
  int d = 0;
  int k = 0;  // d(d+1)
};

struct OrderingFailure {
  enum class Reason { empty_k_core, blocked };
  Reason reason = Reason::blocked;
  // Vertices that could not be placed. When |blocking| <= n/2 this set has no
  // vertex with d neighbours outside it.
  std::vector<Vertex> blocking;
};

using OrderingResult = std::variant<ConstructionOrdering, OrderingFailure>;

OrderingResult construct_ordering(const Graph& g, int d);

// Checks all ConstructionOrdering invariants, recomputing both cores.
bool validate_ordering(const Graph& g, const ConstructionOrdering& co);

// Number of neighbours of order[i] among order[0..i-1], for each i.
std::vector<int> earlier_neighbour_counts(const Graph& g, const std::vector<Vertex>& order);

enum class NeighbourlyVerdict { holds, fails, no_counterexample_found };

struct NeighbourlyReport {
  NeighbourlyVerdict verdict = NeighbourlyVerdict::holds;
  std::vector<Vertex> witness;  // set B violating the property, when found
  std::uint64_t sets_checked = 0;
};

// Exhaustive over all B with 1 <= |B| <= floor(n/2).
inline constexpr int kNeighbourlyExactMaxN = 24;

// Throws std::length_error if n > kNeighbourlyExactMaxN.
NeighbourlyReport is_d_neighbourly_exact(const Graph& g, int d);

// R random subsets plus the structural candidates (low-degree singletons and
// the pass-1 blocking set of construct_ordering).
NeighbourlyReport is_d_neighbourly_sampled(const Graph& g, int d, int samples, std::uint64_t seed);

// True when some vertex of B has at least d neighbours outside B.
bool neighbourly_condition(const Graph& g, const std::vector<Vertex>& b, int d);

std::string to_string(NeighbourlyVerdict v);

}  // namespace rigicount
