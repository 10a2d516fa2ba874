#include "circlab/graph.hpp"

#include <algorithm>

namespace circlab {

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs order >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complement(const Graph& g) {
  int n = g.order();
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  int na = a.order(), nb = b.order();
  if (na + nb > kWordBits) throw std::invalid_argument("union exceeds vertex cap");
  Graph g(na + nb);
  for (int u = 0; u < na; ++u)
    for (int v = u + 1; v < na; ++v)
      if (a.adjacent(u, v)) g.add_edge(u, v);
  for (int u = 0; u < nb; ++u)
    for (int v = u + 1; v < nb; ++v)
      if (b.adjacent(u, v)) g.add_edge(na + u, na + v);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  return g;
}

namespace {

vword reach_from(const Graph& g, int start, vword allowed) {
  vword seen = vbit(start), frontier = vbit(start);
  while (frontier) {
    vword next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v) & allowed; });
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  int n = g.order();
  if (n <= 1) return true;
  return popcount(reach_from(g, 0, low_mask(n))) == n;
}

bool is_two_connected(const Graph& g) {
  int n = g.order();
  if (n < 3) return false;
  if (!is_connected(g)) return false;
  vword all = low_mask(n);
  for (int v = 0; v < n; ++v) {
    vword rest = all & ~vbit(v);
    int start = lowest_bit(rest);
    if (popcount(reach_from(g, start, rest)) != n - 1) return false;
  }
  return true;
}

namespace {

// Tarjan lowpoint block search; emits vertex sets of biconnected components.
struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> stack;  // edge stack
  BlockDecomposition out;
  int timer = 0;

  explicit BlockFinder(const Graph& gr)
      : g(gr), disc(gr.order(), -1), low(gr.order(), 0) {}

  void emit_block(int u, int v) {
    vword verts = 0;
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      verts |= vbit(a) | vbit(b);
      if (a == u && b == v) break;
    }
    out.blocks.push_back(verts);
  }

  void dfs(int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for_each_bit(g.neighbors(u), [&](int v) {
      if (v == parent) return;
      if (disc[v] == -1) {
        ++children;
        stack.push_back({u, v});
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if ((parent == -1 && children > 1) || (parent != -1 && low[v] >= disc[u])) {
          out.cut_vertices |= vbit(u);
          emit_block(u, v);
        }
        // Root with one child: its block is flushed when the root call unwinds.
      } else if (disc[v] < disc[u]) {
        stack.push_back({u, v});
        low[u] = std::min(low[u], disc[v]);
      }
    });
  }

  void run() {
    for (int v = 0; v < g.order(); ++v) {
      if (disc[v] != -1 || g.degree(v) == 0) continue;
      dfs(v, -1);
      if (!stack.empty()) {
        vword verts = 0;
        for (auto [a, b] : stack) verts |= vbit(a) | vbit(b);
        stack.clear();
        out.blocks.push_back(verts);
      }
    }
  }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
  BlockFinder f(g);
  f.run();
  return f.out;
}

}  // namespace circlab
