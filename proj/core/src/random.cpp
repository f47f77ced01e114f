#include "rigicount/random.hpp"

#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rigicount/prng.hpp"

namespace rigicount {

std::int64_t pair_count(int n) {
  return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

std::int64_t pair_slot(int n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n || u == v) throw std::invalid_argument("pair_slot: invalid pair");
  // Pairs (u, *) start after the rows 0..u-1, which hold (n-1) + ... + (n-u).
  const std::int64_t before = static_cast<std::int64_t>(u) * (2 * n - u - 1) / 2;
  return before + (v - u - 1);
}

Edge slot_pair(int n, std::int64_t slot) {
  Vertex u = 0;
  std::int64_t row = n - 1;
  while (slot >= row) {
    slot -= row;
    ++u;
    --row;
  }
  return {u, static_cast<Vertex>(u + 1 + slot)};
}

EdgeOrdering::EdgeOrdering(int n, std::vector<std::int64_t> ranks)
    : n_(n), ranks_(std::move(ranks)) {
  if (n < 2) throw std::invalid_argument("edge ordering: n must be at least 2");
  const std::int64_t pairs = pair_count(n);
  if (static_cast<std::int64_t>(ranks_.size()) != pairs) {
    throw std::invalid_argument("edge ordering: wrong number of ranks");
  }
  slot_by_rank_.assign(pairs, -1);
  for (std::int64_t slot = 0; slot < pairs; ++slot) {
    const std::int64_t r = ranks_[slot];
    if (r < 1 || r > pairs || slot_by_rank_[r - 1] != -1) {
      throw std::invalid_argument("edge ordering: ranks are not a bijection onto 1..C(n,2)");
    }
    slot_by_rank_[r - 1] = slot;
  }
}

std::int64_t EdgeOrdering::rank(Vertex u, Vertex v) const {
  return ranks_[pair_slot(n_, u, v)];
}

Edge EdgeOrdering::pair_at_rank(std::int64_t r) const {
  if (r < 1 || r > num_pairs()) throw std::out_of_range("edge ordering: rank out of range");
  return slot_pair(n_, slot_by_rank_[r - 1]);
}

EdgeOrdering sample_edge_ordering(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sample_edge_ordering: n must be at least 2");
  const std::int64_t pairs = pair_count(n);
  // order[i] = slot that receives rank i+1.
  std::vector<std::int64_t> order(pairs);
  std::iota(order.begin(), order.end(), 0);
  Prng rng(seed);
  for (std::int64_t i = pairs - 1; i > 0; --i) {
    const auto j = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<std::int64_t> ranks(pairs);
  for (std::int64_t i = 0; i < pairs; ++i) ranks[order[i]] = i + 1;
  return EdgeOrdering(n, std::move(ranks));
}

Graph graph_at(const EdgeOrdering& sigma, std::int64_t m) {
  if (m < 0 || m > sigma.num_pairs()) throw std::out_of_range("graph_at: M out of range");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t r = 1; r <= m; ++r) edges.push_back(sigma.pair_at_rank(r));
  return Graph(sigma.num_vertices(), std::move(edges));
}

HittingTimes hitting_times(const EdgeOrdering& sigma, int d_max) {
  const int n = sigma.num_vertices();
  if (d_max < 1 || d_max > n - 1) {
    throw std::invalid_argument("hitting_times: d must lie in 1..n-1");
  }
  HittingTimes out;
  out.m.assign(d_max, 0);
  std::vector<int> deg(n, 0);
  // below[d] = number of vertices with degree < d+1.
  std::vector<int> below(d_max, n);
  int next_d = 0;
  for (std::int64_t r = 1; r <= sigma.num_pairs() && next_d < d_max; ++r) {
    const auto [u, v] = sigma.pair_at_rank(r);
    for (Vertex x : {u, v}) {
      ++deg[x];
      if (deg[x] <= d_max) --below[deg[x] - 1];
    }
    while (next_d < d_max && below[next_d] == 0) out.m[next_d++] = r;
  }
  return out;
}

std::int64_t min_degree_threshold(const EdgeOrdering& sigma, int d) {
  return hitting_times(sigma, d).m.back();
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_gnp: p must lie in [0,1]");
  if (n < 0) throw std::invalid_argument("sample_gnp: negative n");
  Prng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

void write_edge_ordering(std::ostream& out, const EdgeOrdering& sigma) {
  const int n = sigma.num_vertices();
  out << n << '\n';
  for (std::int64_t slot = 0; slot < sigma.num_pairs(); ++slot) {
    const auto [u, v] = slot_pair(n, slot);
    out << u << ' ' << v << ' ' << sigma.ranks()[slot] << '\n';
  }
}

EdgeOrdering read_edge_ordering(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 2) throw std::runtime_error("edge ordering file: bad header");
  const std::int64_t pairs = pair_count(static_cast<int>(n));
  std::vector<std::int64_t> ranks(pairs, 0);
  std::vector<bool> seen(pairs, false);
  for (std::int64_t i = 0; i < pairs; ++i) {
    long long u = 0, v = 0, r = 0;
    if (!(in >> u >> v >> r)) {
      throw std::runtime_error("edge ordering file: expected " + std::to_string(pairs) +
                               " lines");
    }
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw std::runtime_error("edge ordering file: invalid pair");
    }
    const auto slot = pair_slot(static_cast<int>(n), static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (seen[slot]) throw std::runtime_error("edge ordering file: repeated pair");
    seen[slot] = true;
    ranks[slot] = r;
  }
  try {
    return EdgeOrdering(static_cast<int>(n), std::move(ranks));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("edge ordering file: ") + e.what());
  }
}

}  // namespace rigicount
