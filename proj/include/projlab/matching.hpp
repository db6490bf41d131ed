#pragma once

#include <vector>

namespace projlab {

/// Bipartite graph with left vertices 0..left-1 and right vertices 0..right-1.
struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adj;  // left -> sorted right neighbours

  BipartiteGraph() = default;
  BipartiteGraph(int l, int r) : left(l), right(r), adj(l) {}
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  /// Common degree if every vertex on both sides has the same degree, else -1.
  int regular_degree() const;
};

/// Simple undirected graph on vertices 0..order-1.
struct Graph {
  int order = 0;
  std::vector<std::vector<int>> adj;

  Graph() = default;
  explicit Graph(int n) : order(n), adj(n) {}
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
};

struct BipartiteMatching {
  std::vector<int> mate_left;   // right partner or -1
  std::vector<int> mate_right;  // left partner or -1
  int size = 0;
  bool perfect = false;
};

struct GeneralMatching {
  std::vector<int> mate;  // partner or -1
  int size = 0;
  bool perfect = false;
};

/// Hopcroft-Karp. Left vertices and adjacency lists are scanned in index
/// order, so the result depends only on the graph. When no perfect matching
/// exists the maximum matching is returned with perfect = false.
BipartiteMatching maximum_bipartite_matching(const BipartiteGraph& g);

/// As above; throws std::invalid_argument when the sides differ in size.
BipartiteMatching bipartite_perfect_matching(const BipartiteGraph& g);

/// Edmonds' blossom algorithm with deterministic vertex order. Odd order
/// returns an empty, non-perfect matching without searching.
GeneralMatching general_perfect_matching(const Graph& g);

/// Maximum matching in a general graph (no parity short-cut).
GeneralMatching maximum_general_matching(const Graph& g);

}  // namespace projlab
