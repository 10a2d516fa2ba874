#include "circlab/canonical.hpp"

#include <cstdint>
#include <stdexcept>

#include "circlab/graph6.hpp"

namespace circlab {

namespace {

constexpr int kBitsField = 55;  // T(kCanonicalMaxOrder)

// Branch-and-bound search for the minimal upper-triangle bitstring over all
// vertex orderings. Sound prunes only:
//  - at each level, only vertices realizing the minimal next column can lead
//    to the minimum (columns are compared before anything later in the stream);
//  - a candidate with an unused twin of smaller index is skipped, since the
//    twin transposition is an automorphism mapping one branch onto the other;
//  - a branch whose partial string already exceeds the best full string dies.
struct Canonizer {
  int n;
  std::uint16_t adj[kCanonicalMaxOrder];
  bool twin[kCanonicalMaxOrder][kCanonicalMaxOrder];
  int order[kCanonicalMaxOrder];
  std::uint64_t best;
  bool have_best;

  explicit Canonizer(const Graph& g) : n(g.order()), best(0), have_best(false) {
    for (int v = 0; v < n; ++v) adj[v] = static_cast<std::uint16_t>(g.neighbors(v));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        std::uint16_t diff = adj[u] ^ adj[v];
        diff &= static_cast<std::uint16_t>(~((1u << u) | (1u << v)));
        twin[u][v] = diff == 0;
      }
  }

  std::uint64_t run() {
    if (n == 0) return 0;
    dfs(0, 0, 0, 0);
    return best;
  }

  // level: vertices placed; used: bitmask of placed; acc: partial string with
  // stream bit p at bit (kBitsField - 1 - p); filled: bits placed so far.
  void dfs(int level, unsigned used, std::uint64_t acc, int filled) {
    if (level == n) {
      if (!have_best || acc < best) {
        best = acc;
        have_best = true;
      }
      return;
    }
    // Column `level` holds adjacency of the new vertex to order[0..level-1],
    // earliest placed vertex in the highest bit.
    unsigned bestcol = ~0u;
    for (int v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      unsigned col = 0;
      for (int i = 0; i < level; ++i)
        col = (col << 1) | ((adj[v] >> order[i]) & 1u);
      if (col < bestcol) bestcol = col;
    }
    int shift = kBitsField - filled - level;
    std::uint64_t acc2 = acc | (static_cast<std::uint64_t>(bestcol) << shift);
    if (have_best) {
      std::uint64_t mask = ~((std::uint64_t{1} << shift) - 1) & ((std::uint64_t{1} << kBitsField) - 1);
      if ((acc2 & mask) > (best & mask)) return;
    }
    for (int v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      unsigned col = 0;
      for (int i = 0; i < level; ++i)
        col = (col << 1) | ((adj[v] >> order[i]) & 1u);
      if (col != bestcol) continue;
      bool skip = false;
      for (int u = 0; u < v && !skip; ++u)
        if (!(used & (1u << u)) && twin[u][v]) skip = true;
      if (skip) continue;
      order[level] = v;
      dfs(level + 1, used | (1u << v), acc2, filled + level);
    }
  }
};

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
  int n = g.order();
  if (n > kCanonicalMaxOrder)
    throw std::invalid_argument("canonical labeling supports order <= 11");
  Canonizer c(g);
  return (static_cast<std::uint64_t>(n) << kBitsField) | c.run();
}

Graph graph_from_key(std::uint64_t key) {
  int n = static_cast<int>(key >> kBitsField);
  if (n > kCanonicalMaxOrder) throw std::invalid_argument("bad canonical key");
  Graph g(n);
  int p = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++p)
      if ((key >> (kBitsField - 1 - p)) & 1) g.add_edge(row, col);
  return g;
}

Graph canonical_form(const Graph& g) { return graph_from_key(canonical_key(g)); }

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

}  // namespace circlab
