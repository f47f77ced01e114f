#include "rigicount/ordering.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "rigicount/prng.hpp"

namespace rigicount {

OrderingResult construct_ordering(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("construct_ordering: d must be positive");
  const int n = g.num_vertices();
  const int k = d * (d + 1);
  const auto core = k_core(g, k).survivors;
  if (core.empty()) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    return OrderingFailure{OrderingFailure::Reason::empty_k_core, std::move(all)};
  }

  // Pass 1: core in ascending label, then greedily any vertex with >= d
  // placed neighbours (lowest label first).
  std::vector<Vertex> w;
  w.reserve(n);
  std::vector<bool> placed(n, false);
  std::vector<int> placed_nbrs(n, 0);
  std::set<Vertex> eligible;
  auto place = [&](Vertex v) {
    placed[v] = true;
    w.push_back(v);
    for (Vertex u : g.neighbours(v)) {
      if (placed[u]) continue;
      if (++placed_nbrs[u] == d) eligible.insert(u);
    }
  };
  for (Vertex v : core) place(v);
  for (Vertex v : core) eligible.erase(v);
  while (static_cast<int>(w.size()) < n) {
    if (eligible.empty()) {
      OrderingFailure failure{OrderingFailure::Reason::blocked, {}};
      for (Vertex v = 0; v < n; ++v)
        if (!placed[v]) failure.blocking.push_back(v);
      return failure;
    }
    const Vertex v = *eligible.begin();
    eligible.erase(eligible.begin());
    place(v);
  }

  // Pass 2: orient every edge from the later to the earlier endpoint of w,
  // then fill positions n..s+1 with an in-degree-0 vertex of least out-degree.
  const int s = static_cast<int>(core.size());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[w[i]] = i;
  std::vector<int> out_deg(n, 0), in_deg(n, 0);
  for (const auto& [a, b] : g.edges()) {
    const auto [later, earlier] = pos[a] > pos[b] ? std::pair{a, b} : std::pair{b, a};
    ++out_deg[later];
    ++in_deg[earlier];
  }
  std::set<std::pair<int, Vertex>> ready;
  for (int i = s; i < n; ++i)
    if (in_deg[w[i]] == 0) ready.emplace(out_deg[w[i]], w[i]);

  ConstructionOrdering co;
  co.d = d;
  co.k = k;
  co.s = s;
  co.order.assign(n, -1);
  std::copy(w.begin(), w.begin() + s, co.order.begin());
  for (int i = n - 1; i >= s; --i) {
    // Removing in-degree-0 vertices preserves everyone's out-degree, so the
    // queue is never empty while non-core vertices remain.
    const auto [od, v] = *ready.begin();
    ready.erase(ready.begin());
    co.order[i] = v;
    for (Vertex u : g.neighbours(v)) {
      if (pos[u] < pos[v] && pos[u] >= s && --in_deg[u] == 0) ready.emplace(out_deg[u], u);
    }
  }
  co.t = static_cast<int>(k_core(g, d + 1).survivors.size());
  return co;
}

std::vector<int> earlier_neighbour_counts(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> pos(g.num_vertices(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<int> counts(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex u : g.neighbours(order[i]))
      if (pos[u] >= 0 && pos[u] < static_cast<int>(i)) ++counts[i];
  }
  return counts;
}

namespace {

bool prefix_equals(const std::vector<Vertex>& order, int len, std::vector<Vertex> expected) {
  std::vector<Vertex> prefix(order.begin(), order.begin() + len);
  std::sort(prefix.begin(), prefix.end());
  std::sort(expected.begin(), expected.end());
  return prefix == expected;
}

}  // namespace

bool validate_ordering(const Graph& g, const ConstructionOrdering& co) {
  const int n = g.num_vertices();
  if (co.d < 1 || co.k != co.d * (co.d + 1)) return false;
  if (static_cast<int>(co.order.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : co.order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  if (!(0 <= co.s && co.s <= co.t && co.t <= n)) return false;
  if (!prefix_equals(co.order, co.s, k_core(g, co.k).survivors)) return false;
  if (!prefix_equals(co.order, co.t, k_core(g, co.d + 1).survivors)) return false;
  const auto counts = earlier_neighbour_counts(g, co.order);
  for (int i = co.s; i < n; ++i)
    if (counts[i] < co.d) return false;
  for (int i = co.t; i < n; ++i)
    if (counts[i] != co.d) return false;
  return true;
}

bool neighbourly_condition(const Graph& g, const std::vector<Vertex>& b, int d) {
  std::vector<bool> in_b(g.num_vertices(), false);
  for (Vertex v : b) in_b[v] = true;
  for (Vertex v : b) {
    int outside = 0;
    for (Vertex u : g.neighbours(v))
      if (!in_b[u]) ++outside;
    if (outside >= d) return true;
  }
  return false;
}

NeighbourlyReport is_d_neighbourly_exact(const Graph& g, int d) {
  const int n = g.num_vertices();
  if (n > kNeighbourlyExactMaxN) {
    throw std::length_error("is_d_neighbourly: exact mode supports n <= " +
                            std::to_string(kNeighbourlyExactMaxN));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  const int max_size = n / 2;
  NeighbourlyReport report;
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    if (std::popcount(mask) > max_size) continue;
    ++report.sets_checked;
    bool ok = false;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (std::popcount(adj[v] & ~mask) >= d) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      report.verdict = NeighbourlyVerdict::fails;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
        report.witness.push_back(std::countr_zero(rest));
      return report;
    }
  }
  return report;
}

NeighbourlyReport is_d_neighbourly_sampled(const Graph& g, int d, int samples,
                                           std::uint64_t seed) {
  const int n = g.num_vertices();
  const int max_size = n / 2;
  NeighbourlyReport report;
  report.verdict = NeighbourlyVerdict::no_counterexample_found;
  auto check = [&](std::vector<Vertex> b) {
    ++report.sets_checked;
    if (neighbourly_condition(g, b, d)) return false;
    std::sort(b.begin(), b.end());
    report.verdict = NeighbourlyVerdict::fails;
    report.witness = std::move(b);
    return true;
  };
  if (max_size < 1) return report;

  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < d && check({v})) return report;
  const auto pass1 = construct_ordering(g, d);
  if (const auto* failure = std::get_if<OrderingFailure>(&pass1)) {
    if (failure->reason == OrderingFailure::Reason::blocked &&
        static_cast<int>(failure->blocking.size()) <= max_size && check(failure->blocking)) {
      return report;
    }
  }

  Prng rng(seed);
  std::vector<Vertex> pool(n);
  for (int i = 0; i < samples; ++i) {
    std::iota(pool.begin(), pool.end(), 0);
    const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size)));
    for (int j = 0; j < size; ++j) {
      const auto pick = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - j)));
      std::swap(pool[j], pool[pick]);
    }
    if (check(std::vector<Vertex>(pool.begin(), pool.begin() + size))) return report;
  }
  return report;
}

std::string to_string(NeighbourlyVerdict v) {
  switch (v) {
    case NeighbourlyVerdict::holds:
      return "holds";
    case NeighbourlyVerdict::fails:
      return "fails";
    case NeighbourlyVerdict::no_counterexample_found:
      return "no-counterexample-found";
  }
  return "unknown";
}

}  // namespace rigicount
