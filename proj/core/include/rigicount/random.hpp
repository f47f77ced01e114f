#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rigicount/graph.hpp"

namespace rigicount {

// Bijection from the C(n,2) vertex pairs of K_n to ranks 1..C(n,2). Pairs are
// indexed by slot in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
class EdgeOrdering {
 public:
  // `ranks[slot]` is the rank of that slot; validated to be a bijection.
  EdgeOrdering(int n, std::vector<std::int64_t> ranks);

  int num_vertices() const noexcept { return n_; }
  std::int64_t num_pairs() const noexcept { return static_cast<std::int64_t>(ranks_.size()); }
  std::int64_t rank(Vertex u, Vertex v) const;
  // Pair carrying rank r (1-based).
  Edge pair_at_rank(std::int64_t r) const;

  const std::vector<std::int64_t>& ranks() const noexcept { return ranks_; }

  bool operator==(const EdgeOrdering& other) const {
    return n_ == other.n_ && ranks_ == other.ranks_;
  }

 private:
  int n_;
  std::vector<std::int64_t> ranks_;
  std::vector<std::int64_t> slot_by_rank_;
};

std::int64_t pair_count(int n);
std::int64_t pair_slot(int n, Vertex u, Vertex v);
Edge slot_pair(int n, std::int64_t slot);

// Uniform ordering by Fisher-Yates over the edge slots. Throws for n < 2.
EdgeOrdering sample_edge_ordering(int n, std::uint64_t seed);

// G(n, M, sigma): edges of rank <= M. Throws when M is outside [0, C(n,2)].
Graph graph_at(const EdgeOrdering& sigma, std::int64_t m);

// M_d(sigma): first M at which the minimum degree reaches d.
std::int64_t min_degree_threshold(const EdgeOrdering& sigma, int d);

// M_1 <= ... <= M_dmax in one replay.
struct HittingTimes {
  std::vector<std::int64_t> m;  // m[d-1] = M_d
};
HittingTimes hitting_times(const EdgeOrdering& sigma, int d_max);

// G(n, p): each pair, in slot order, present with probability p.
Graph sample_gnp(int n, double p, std::uint64_t seed);

// Header "n", then C(n,2) lines "u v rank" in slot order.
void write_edge_ordering(std::ostream& out, const EdgeOrdering& sigma);
EdgeOrdering read_edge_ordering(std::istream& in);

}  // namespace rigicount
