#include "rigicount/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rigicount {

Graph::Graph(int n) : n_(n), adj_(n < 0 ? 0 : n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("graph: vertex label out of range");
    }
    if (u == v) throw std::invalid_argument("graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("graph: duplicate edge");
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int Graph::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& list : adj_) best = std::min(best, static_cast<int>(list.size()));
  return n_ == 0 ? 0 : best;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::optional<int> Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::is_complete() const {
  return static_cast<long long>(edges_.size()) ==
         static_cast<long long>(n_) * (n_ - 1) / 2;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  auto edges = edges_;
  edges.emplace_back(u, v);
  return Graph(n_, std::move(edges));
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto edges = edges_;
  auto it = std::find(edges.begin(), edges.end(), Edge{u, v});
  if (it == edges.end()) throw std::invalid_argument("graph: edge not present");
  edges.erase(it);
  return Graph(n_, std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(g.num_vertices(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  return {Graph(static_cast<int>(keep.size()), std::move(edges)),
          std::vector<Vertex>(keep.begin(), keep.end())};
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cone(const Graph& g) {
  const int n = g.num_vertices();
  auto edges = g.edges();
  for (int v = 0; v < n; ++v) edges.emplace_back(v, n);
  return Graph(n + 1, std::move(edges));
}

PeelTrace k_core(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k_core: k must be positive");
  const int n = g.num_vertices();
  std::vector<int> deg(n);
  std::vector<bool> alive(n, true);
  std::set<Vertex> low;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < k) low.insert(v);
  }
  PeelTrace trace;
  trace.k = k;
  while (!low.empty()) {
    const Vertex v = *low.begin();
    low.erase(low.begin());
    Removal r{v, deg[v], {}};
    for (Vertex w : g.neighbours(v)) {
      if (!alive[w]) continue;
      r.neighbours.push_back(w);
      if (--deg[w] == k - 1) low.insert(w);
    }
    alive[v] = false;
    trace.removed.push_back(std::move(r));
  }
  for (int v = 0; v < n; ++v)
    if (alive[v]) trace.survivors.push_back(v);
  return trace;
}

PeelTrace peel_to_core(const Graph& g, int k) { return k_core(g, k); }

bool is_connected(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbours(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

namespace {

// Vertex-split unit network: v_in = 2v, v_out = 2v+1. The internal arc
// v_in -> v_out has capacity 1; arcs between distinct vertices are uncapped so
// every finite cut is a set of vertices.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : nodes_(2 * g.num_vertices()), adj_(nodes_) {
    for (int v = 0; v < g.num_vertices(); ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (const auto& [u, v] : g.edges()) {
      add_arc(2 * u + 1, 2 * v, kInf);
      add_arc(2 * v + 1, 2 * u, kInf);
    }
  }

  // Max flow from s_out to t_in, stopping once it reaches `limit`.
  int flow(Vertex s, Vertex t, int limit) {
    for (auto& a : arcs_) a.flow = 0;
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int total = 0;
    while (total < limit && augment(source, sink)) ++total;
    return total;
  }

  // After flow() returned below its limit: vertices whose split arc crosses
  // the source side of the residual cut.
  std::vector<Vertex> cut_vertices(Vertex s) {
    const auto reach = reachable(2 * s + 1);
    std::vector<Vertex> cut;
    for (int v = 0; v < nodes_ / 2; ++v) {
      if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
    }
    return cut;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max() / 4;

  struct Arc {
    int to;
    int cap;
    int flow;
  };

  void add_arc(int from, int to, int cap) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap, 0});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, 0});
  }

  std::vector<bool> reachable(int source) const {
    std::vector<bool> seen(nodes_, false);
    std::queue<int> queue;
    queue.push(source);
    seen[source] = true;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      for (int id : adj_[x]) {
        const auto& a = arcs_[id];
        if (!seen[a.to] && a.cap - a.flow > 0) {
          seen[a.to] = true;
          queue.push(a.to);
        }
      }
    }
    return seen;
  }

  bool augment(int source, int sink) {
    std::vector<int> via(nodes_, -1);
    std::vector<bool> seen(nodes_, false);
    std::queue<int> queue;
    queue.push(source);
    seen[source] = true;
    while (!queue.empty() && !seen[sink]) {
      const int x = queue.front();
      queue.pop();
      for (int id : adj_[x]) {
        const auto& a = arcs_[id];
        if (!seen[a.to] && a.cap - a.flow > 0) {
          seen[a.to] = true;
          via[a.to] = id;
          queue.push(a.to);
        }
      }
    }
    if (!seen[sink]) return false;
    for (int x = sink; x != source;) {
      const int id = via[x];
      arcs_[id].flow += 1;
      arcs_[id ^ 1].flow -= 1;
      x = arcs_[id ^ 1].to;
    }
    return true;
  }

  int nodes_;
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace

int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  if (s == t) throw std::invalid_argument("local_connectivity: s == t");
  SplitNetwork net(g);
  return net.flow(s, t, limit);
}

std::optional<std::vector<Vertex>> find_small_separator(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("find_small_separator: k must be positive");
  const int n = g.num_vertices();
  if (n <= k) return std::nullopt;
  SplitNetwork net(g);
  // Any cut of size < k misses one of the first k vertices, and that vertex
  // has a non-neighbour on the far side of the cut.
  for (Vertex x = 0; x < k; ++x) {
    for (Vertex w = 0; w < n; ++w) {
      if (w == x || g.has_edge(x, w)) continue;
      if (net.flow(x, w, k) < k) return net.cut_vertices(x);
    }
  }
  return std::nullopt;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("is_k_connected: k must be positive");
  if (g.num_vertices() <= k) return false;
  return !find_small_separator(g, k).has_value();
}

Graph read_graph(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw std::runtime_error("graph file: expected header \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v)) {
      std::ostringstream msg;
      msg << "graph file: expected " << m << " edge lines, got " << i;
      throw std::runtime_error(msg.str());
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("graph file: ") + e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in);
}

}  // namespace rigicount
