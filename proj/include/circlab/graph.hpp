#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "circlab/bits.hpp"

namespace circlab {

// Simple undirected graph on vertices 0..n-1, one adjacency word per vertex.
class Graph {
 public:
  Graph() : n_(0) {}
  explicit Graph(int n) : n_(checked_order(n)), adj_(static_cast<size_t>(n), 0) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }

  int edge_count() const {
    int s = 0;
    for (int v = 0; v < n_; ++v) s += popcount(adj_[v]);
    return s / 2;
  }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }

  vword neighbors(int v) const { return adj_[v]; }

  int degree(int v) const { return popcount(adj_[v]); }

  int min_degree() const {
    if (n_ == 0) throw std::logic_error("min_degree of empty graph");
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= vbit(v);
    adj_[v] |= vbit(u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~vbit(v);
    adj_[v] &= ~vbit(u);
  }

  Graph with_edge(int u, int v) const {
    Graph g = *this;
    g.add_edge(u, v);
    return g;
  }

  Graph without_edge(int u, int v) const {
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  static int checked_order(int n) {
    if (n < 0 || n > kWordBits) throw std::invalid_argument("graph order out of range");
    return n;
  }

  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
  }

  int n_;
  std::vector<vword> adj_;
};

Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complement(const Graph& g);

// Disjoint union: vertices of b are shifted past those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

// Join: disjoint union plus all edges between the two sides.
Graph join(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

// 2-connected: order >= 3, connected, and no cut vertex.
bool is_two_connected(const Graph& g);

struct BlockDecomposition {
  std::vector<vword> blocks;  // vertex sets of maximal 2-connected blocks / bridges
  vword cut_vertices = 0;
};

BlockDecomposition blocks(const Graph& g);

}  // namespace circlab
