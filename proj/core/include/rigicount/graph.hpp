#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rigicount {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected graph on vertices 0..n-1. Immutable once built;
// edges are stored with u < v and sorted lexicographically.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws std::invalid_argument on self-loops, duplicates or labels out of range.
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int min_degree() const;
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;
  // Position of {u,v} in edges(), if present.
  std::optional<int> edge_index(Vertex u, Vertex v) const;
  bool is_complete() const;

  // Sorted ascending.
  std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Induced subgraph relabelled 0..|keep|-1 in the order of `keep`.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

// Cone G*o: vertex n is joined to every original vertex.
Graph cone(const Graph& g);

struct Removal {
  Vertex vertex = 0;
  int degree = 0;  // degree in the remaining graph at removal time
  std::vector<Vertex> neighbours;  // remaining neighbours at removal time
};

struct PeelTrace {
  int k = 0;
  std::vector<Removal> removed;
  std::vector<Vertex> survivors;  // ascending
};

// k-core by lowest-label-first peeling of vertices with degree <= k-1.
PeelTrace k_core(const Graph& g, int k);
// Same peel; kept as a separate entry point for callers that replay the
// removals as 0-extensions.
PeelTrace peel_to_core(const Graph& g, int k);

// Exact vertex connectivity test: more than k vertices and no vertex cut of
// size < k. Unit-capacity max-flow over the vertex-split network.
bool is_k_connected(const Graph& g, int k);

// A vertex cut of size < k separating the graph, if one exists. Returns an
// empty optional when the graph is k-connected or has at most k vertices.
std::optional<std::vector<Vertex>> find_small_separator(const Graph& g, int k);

// Number of internally vertex-disjoint s-t paths, capped at `limit`.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit);

bool is_connected(const Graph& g);

// Text format: "n m" then m lines "u v"; 0-based, LF-terminated.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path);

}  // namespace rigicount
