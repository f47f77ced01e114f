#include "rigicount/props.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "rigicount/prng.hpp"

namespace rigicount {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::vacuous:
      return "vacuously-holds";
    case Verdict::fails:
      return "fails";
    case Verdict::no_counterexample_found:
      return "no-counterexample-found";
  }
  return "unknown";
}

CheckMode parse_check_mode(const std::string& s) {
  if (s == "exact") return CheckMode::exact;
  if (s == "sampled") return CheckMode::sampled;
  throw std::invalid_argument("mode must be 'exact' or 'sampled', got '" + s + "'");
}

double adjacency_threshold(int n) {
  if (n <= 1) return std::numeric_limits<double>::infinity();
  return n * std::pow(std::log(static_cast<double>(n)), -6.0);
}

int induced_edge_count(const Graph& g, const std::vector<Vertex>& s) {
  std::vector<bool> in(g.num_vertices(), false);
  for (Vertex v : s) in[v] = true;
  int count = 0;
  for (const auto& [u, v] : g.edges())
    if (in[u] && in[v]) ++count;
  return count;
}

namespace {

using Mask = std::uint32_t;

std::vector<Vertex> members(Mask mask) {
  std::vector<Vertex> out;
  for (int v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1U) out.push_back(v);
  return out;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

Verdict combine(const std::vector<Clause>& clauses) {
  bool all_settled = true;
  for (const auto& c : clauses) {
    if (c.verdict == Verdict::fails) return Verdict::fails;
    if (c.verdict == Verdict::no_counterexample_found) all_settled = false;
  }
  return all_settled ? Verdict::holds : Verdict::no_counterexample_found;
}

// Next k-subset of {0..n-1} in lexicographic order; false after the last.
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

PropertyReport check_adjacency(const Graph& g, CheckMode mode, std::uint64_t seed, int samples) {
  const int n = g.num_vertices();
  const double tau = adjacency_threshold(n);
  PropertyReport report;
  report.property = "adjacency";
  report.parameters = {{"n", n}, {"threshold", tau}};
  Clause clause{"edge-between-large-disjoint-sets", tau, Verdict::holds, {}};

  const double smallest = std::max(1.0, std::ceil(tau));
  if (!std::isfinite(tau) || 2.0 * smallest > n) {
    clause.verdict = Verdict::vacuous;
    clause.detail = "no two disjoint sets reach the threshold";
    report.clauses.push_back(clause);
    report.verdict = Verdict::holds;
    return report;
  }
  const int s = static_cast<int>(smallest);
  report.parameters.emplace_back("set_size", s);

  if (mode == CheckMode::exact) {
    if (n > kPropsExactMaxN) throw std::length_error("check_adjacency: exact mode needs n <= 20");
    const auto adj = adjacency_masks(g);
    const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    do {
      Mask s1 = 0, reach = 0;
      for (int v : idx) {
        s1 |= Mask{1} << v;
        reach |= adj[v];
      }
      const Mask outside = all & ~s1 & ~reach;
      if (std::popcount(outside) >= s) {
        auto rest = members(outside);
        rest.resize(s);
        report.witness = {members(s1), rest};
        clause.verdict = Verdict::fails;
        break;
      }
    } while (next_combination(idx, n));
  } else {
    Prng rng(seed);
    std::vector<Vertex> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    clause.verdict = Verdict::no_counterexample_found;
    for (int t = 0; t < samples; ++t) {
      for (int i = 0; i < 2 * s; ++i) {
        std::swap(perm[i], perm[i + static_cast<int>(rng.below(n - i))]);
      }
      std::vector<bool> in_first(n, false);
      for (int i = 0; i < s; ++i) in_first[perm[i]] = true;
      bool linked = false;
      for (int i = s; i < 2 * s && !linked; ++i) {
        for (Vertex w : g.neighbours(perm[i])) {
          if (in_first[w]) {
            linked = true;
            break;
          }
        }
      }
      if (!linked) {
        std::vector<Vertex> s1(perm.begin(), perm.begin() + s);
        std::vector<Vertex> s2(perm.begin() + s, perm.begin() + 2 * s);
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        report.witness = {s1, s2};
        clause.verdict = Verdict::fails;
        break;
      }
    }
    clause.detail = std::to_string(samples) + " sampled pairs";
  }
  report.clauses.push_back(clause);
  report.verdict = combine(report.clauses);
  return report;
}

namespace {

// Keeps the first violating set seen for each clause.
class SparsityTracker {
 public:
  SparsityTracker(double small_limit, bool second_active)
      : small_limit_(small_limit), second_active_(second_active) {}

  void consider(int size, int edges, const std::vector<Vertex>& set) {
    if (size < 500 && edges > size && first_.empty()) first_ = set;
    if (second_active_ && size <= small_limit_ && 4 * edges >= 5 * size && second_.empty()) {
      second_ = set;
    }
  }

  const std::vector<Vertex>& first() const { return first_; }
  const std::vector<Vertex>& second() const { return second_; }

 private:
  double small_limit_;
  bool second_active_;
  std::vector<Vertex> first_;
  std::vector<Vertex> second_;
};

}  // namespace

PropertyReport check_sparsity(const Graph& g, CheckMode mode) {
  const int n = g.num_vertices();
  const double tau = adjacency_threshold(n);
  const double small_limit = 2.0 * tau;
  const bool second_active = std::isfinite(small_limit) ? small_limit >= 1.0 : true;
  PropertyReport report;
  report.property = "sparsity";
  report.parameters = {{"n", n}, {"small_set_limit", small_limit}};
  SparsityTracker tracker(small_limit, second_active);

  if (mode == CheckMode::exact) {
    if (n > kPropsExactMaxN) throw std::length_error("check_sparsity: exact mode needs n <= 20");
    const auto adj = adjacency_masks(g);
    const Mask total = Mask{1} << n;
    std::vector<std::uint16_t> edges(total, 0);
    for (Mask mask = 1; mask < total; ++mask) {
      const int low = std::countr_zero(mask);
      const Mask rest = mask & (mask - 1);
      edges[mask] = static_cast<std::uint16_t>(edges[rest] + std::popcount(adj[low] & rest));
      const int size = std::popcount(mask);
      if ((edges[mask] > size && tracker.first().empty()) ||
          (second_active && size <= small_limit && 4 * edges[mask] >= 5 * size &&
           tracker.second().empty())) {
        tracker.consider(size, edges[mask], members(mask));
      }
    }
  } else {
    auto check_prefixes = [&](const std::vector<Vertex>& order) {
      std::vector<bool> in(n, false);
      int edges = 0;
      std::vector<Vertex> set;
      for (std::size_t i = 0; i < order.size() && i < 500; ++i) {
        const Vertex v = order[i];
        for (Vertex w : g.neighbours(v))
          if (in[w]) ++edges;
        in[v] = true;
        set.push_back(v);
        const int size = static_cast<int>(set.size());
        if (edges > size || (second_active && size <= small_limit && 4 * edges >= 5 * size)) {
          auto sorted = set;
          std::sort(sorted.begin(), sorted.end());
          tracker.consider(size, edges, sorted);
        }
      }
    };
    for (Vertex root = 0; root < n; ++root) {
      std::vector<Vertex> order{root};
      std::vector<bool> seen(n, false);
      seen[root] = true;
      for (std::size_t head = 0; head < order.size(); ++head) {
        for (Vertex w : g.neighbours(order[head])) {
          if (!seen[w]) {
            seen[w] = true;
            order.push_back(w);
          }
        }
      }
      check_prefixes(order);
    }
    // Reverse min-degree peeling: dense cores appear as late survivors.
    std::vector<int> deg(n);
    std::set<std::pair<int, Vertex>> queue;
    for (int v = 0; v < n; ++v) {
      deg[v] = g.degree(v);
      queue.insert({deg[v], v});
    }
    std::vector<bool> gone(n, false);
    std::vector<Vertex> removal;
    while (!queue.empty()) {
      const Vertex v = queue.begin()->second;
      queue.erase(queue.begin());
      gone[v] = true;
      removal.push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (gone[w]) continue;
        queue.erase({deg[w], w});
        queue.insert({--deg[w], w});
      }
    }
    std::reverse(removal.begin(), removal.end());
    check_prefixes(removal);
  }

  const Verdict open = mode == CheckMode::exact ? Verdict::holds : Verdict::no_counterexample_found;
  Clause first{"small-sets-at-most-one-edge-per-vertex", 500.0,
               tracker.first().empty() ? open : Verdict::fails, {}};
  Clause second{"very-small-sets-below-1.25", small_limit,
                second_active ? (tracker.second().empty() ? open : Verdict::fails)
                              : Verdict::vacuous,
                second_active ? "" : "2n ln^-6 n < 1"};
  report.clauses = {first, second};
  if (!tracker.first().empty()) report.witness.push_back(tracker.first());
  if (!tracker.second().empty()) report.witness.push_back(tracker.second());
  report.verdict = combine(report.clauses);
  return report;
}

PropertyReport core_report(const Graph& g, int k, double eps) {
  if (k < 1) throw std::invalid_argument("core_report: k must be positive");
  const int n = g.num_vertices();
  const auto core = k_core(g, k).survivors;
  const int size = static_cast<int>(core.size());
  PropertyReport report;
  report.property = "core";
  report.parameters = {{"n", n}, {"k", k}, {"eps", eps}, {"core_size", size}};

  Clause connected{"core-k-connected", static_cast<double>(k), Verdict::holds, {}};
  const auto sub = induced_subgraph(g, core);
  if (size <= k) {
    connected.verdict = Verdict::fails;
    connected.detail = "core has at most k vertices";
    report.witness.push_back(core);
  } else if (auto cut = find_small_separator(sub.graph, k)) {
    connected.verdict = Verdict::fails;
    std::vector<Vertex> original;
    for (Vertex v : *cut) original.push_back(sub.to_original[v]);
    connected.detail = "separator of size " + std::to_string(original.size());
    report.witness.push_back(original);
  }

  const double five_ninths = 5.0 * n / 9.0;
  Clause large{"core-at-least-5n/9", five_ninths, size >= five_ninths ? Verdict::holds : Verdict::fails,
               {}};
  const double log_n = n > 1 ? std::log(static_cast<double>(n)) : 0.0;
  const double almost_all = n - n * std::exp(-std::pow(log_n, eps));
  Clause nearly{"core-at-least-n-n*exp(-ln^eps n)", almost_all,
                size >= almost_all ? Verdict::holds : Verdict::fails, {}};
  if ((large.verdict == Verdict::fails || nearly.verdict == Verdict::fails) &&
      connected.verdict != Verdict::fails) {
    report.witness.push_back(core);
  }
  report.clauses = {connected, large, nearly};
  report.verdict = combine(report.clauses);
  return report;
}

}  // namespace rigicount
