#include "projlab/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace projlab {

void BipartiteGraph::add_edge(int u, int v) {
  if (u < 0 || u >= left || v < 0 || v >= right)
    throw std::out_of_range("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of bounds");
  auto& a = adj[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) a.insert(it, v);
}

bool BipartiteGraph::has_edge(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int BipartiteGraph::regular_degree() const {
  std::vector<int> rdeg(right, 0);
  int d = -1;
  for (int u = 0; u < left; ++u) {
    const int du = static_cast<int>(adj[u].size());
    if (d < 0) d = du;
    if (du != d) return -1;
    for (int v : adj[u]) ++rdeg[v];
  }
  for (int v = 0; v < right; ++v) {
    if (d < 0) d = rdeg[v];
    if (rdeg[v] != d) return -1;
  }
  return d < 0 ? 0 : d;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= order || v < 0 || v >= order || u == v)
    throw std::out_of_range("invalid edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
    auto& l = adj[a];
    auto it = std::lower_bound(l.begin(), l.end(), b);
    if (it == l.end() || *it != b) l.insert(it, b);
  }
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g), mate_l_(g.left, -1), mate_r_(g.right, -1), level_(g.left, kInf) {}

  BipartiteMatching run() {
    int size = 0;
    while (bfs())
      for (int u = 0; u < g_.left; ++u)
        if (mate_l_[u] < 0 && dfs(u)) ++size;
    BipartiteMatching m;
    m.mate_left = mate_l_;
    m.mate_right = mate_r_;
    m.size = size;
    m.perfect = g_.left == g_.right && size == g_.left;
    return m;
  }

 private:
  bool bfs() {
    std::queue<int> queue;
    for (int u = 0; u < g_.left; ++u) {
      level_[u] = mate_l_[u] < 0 ? 0 : kInf;
      if (level_[u] == 0) queue.push(u);
    }
    bool found = false;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : g_.adj[u]) {
        const int w = mate_r_[v];
        if (w < 0) {
          found = true;
        } else if (level_[w] == kInf) {
          level_[w] = level_[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : g_.adj[u]) {
      const int w = mate_r_[v];
      if (w < 0 || (level_[w] == level_[u] + 1 && dfs(w))) {
        mate_l_[u] = v;
        mate_r_[v] = u;
        return true;
      }
    }
    level_[u] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<int> mate_l_, mate_r_, level_;
};

// Edmonds' blossom shrinking, O(V^3).
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order), mate_(n_, -1), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

  GeneralMatching run() {
    for (int v = 0; v < n_; ++v)
      if (mate_[v] < 0) augment_from(v);
    GeneralMatching m;
    m.mate = mate_;
    m.size = static_cast<int>(std::count_if(mate_.begin(), mate_.end(), [](int x) { return x >= 0; })) / 2;
    m.perfect = 2 * m.size == n_;
    return m;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void augment_from(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int to : g_.adj[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          const int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i)
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push(i);
              }
            }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0) {
            flip(to);
            return;
          }
          used_[mate_[to]] = true;
          queue.push(mate_[to]);
        }
      }
    }
  }

  void flip(int v) {
    while (v >= 0) {
      const int pv = parent_[v];
      const int ppv = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = ppv;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> mate_, parent_, base_;
  std::vector<bool> used_, blossom_;
};

}  // namespace

BipartiteMatching maximum_bipartite_matching(const BipartiteGraph& g) {
  return HopcroftKarp(g).run();
}

BipartiteMatching bipartite_perfect_matching(const BipartiteGraph& g) {
  if (g.left != g.right)
    throw std::invalid_argument("perfect matching needs equal sides (" + std::to_string(g.left) +
                                " vs " + std::to_string(g.right) + ")");
  return HopcroftKarp(g).run();
}

GeneralMatching general_perfect_matching(const Graph& g) {
  if (g.order % 2 != 0) {
    GeneralMatching m;
    m.mate.assign(g.order, -1);
    return m;
  }
  return Blossom(g).run();
}

GeneralMatching maximum_general_matching(const Graph& g) { return Blossom(g).run(); }

}  // namespace projlab
