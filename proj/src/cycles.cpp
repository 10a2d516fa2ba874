#include "circlab/cycles.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace circlab {

namespace {

// Longest-cycle branch and bound. Each cycle is searched from its minimum
// vertex (root); only vertices >= root are allowed on the path, and the two
// traversal directions are collapsed by requiring the second path vertex to
// be smaller than the closing one.
struct CycleSearch {
  const Graph& g;
  int root;
  vword allowed;
  int best;
  int target;

  bool done() const { return best >= target; }

  void dfs(int v, int second, int len, vword visited) {
    if (len >= 3 && len > best && second < v && g.adjacent(v, root)) {
      best = len;
      if (done()) return;
    }
    vword cand = g.neighbors(v) & allowed & ~visited;
    if (!cand) return;
    vword reach = 0, frontier = cand;
    while (frontier) {
      reach |= frontier;
      vword next = 0;
      for_each_bit(frontier, [&](int w) { next |= g.neighbors(w); });
      frontier = next & allowed & ~visited & ~reach;
    }
    if (len + popcount(reach) <= best) return;
    if (!((reach | vbit(v)) & g.neighbors(root))) return;
    for_each_bit(cand, [&](int u) {
      if (done()) return;
      dfs(u, len == 1 ? u : second, len + 1, visited | vbit(u));
    });
  }
};

int longest_cycle(const Graph& g, int target) {
  int n = g.order();
  int best = 0;
  for (int r = 0; r + 3 <= n; ++r) {
    if (best >= target || n - r <= best) break;
    CycleSearch s{g, r, low_mask(n) & ~low_mask(r), best, target};
    s.dfs(r, n, 1, vbit(r));
    best = std::max(best, s.best);
  }
  return best;
}

}  // namespace

int circumference(const Graph& g) { return longest_cycle(g, g.order()); }

bool has_cycle_at_least(const Graph& g, int len) {
  if (len < 3) throw std::invalid_argument("cycles have length >= 3");
  if (len > g.order()) return false;
  return longest_cycle(g, len) >= len;
}

namespace {

// Exact-length cycle counter, rooted at the cycle's minimum vertex.
struct CycleCounter {
  const Graph& g;
  int root;
  int len;
  vword allowed;  // vertices permitted beyond the root
  Count total{0};

  void dfs(int v, int second, int at, vword visited) {
    if (at == len) {
      if (second < v && g.adjacent(v, root)) total += Count{1};
      return;
    }
    if (popcount(allowed & ~visited) < len - at) return;
    for_each_bit(g.neighbors(v) & allowed & ~visited, [&](int u) {
      dfs(u, at == 1 ? u : second, at + 1, visited | vbit(u));
    });
  }
};

}  // namespace

Count count_cycles(const Graph& g, int len) {
  if (len < 3) throw std::invalid_argument("cycles have length >= 3");
  int n = g.order();
  Count total{0};
  for (int r = 0; r + len <= n; ++r) {
    CycleCounter c{g, r, len, low_mask(n) & ~low_mask(r + 1)};
    c.dfs(r, n, 1, vbit(r));
    total += c.total;
  }
  return total;
}

Count count_cycles_through(const Graph& g, int v, int len) {
  if (len < 3) throw std::invalid_argument("cycles have length >= 3");
  int n = g.order();
  if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
  CycleCounter c{g, v, len, low_mask(n) & ~vbit(v)};
  c.dfs(v, n, 1, vbit(v));
  return c.total;
}

namespace {

Count cliques_rec(const Graph& g, vword cand, int need) {
  if (need == 1) return Count{static_cast<unsigned long long>(popcount(cand))};
  Count s{0};
  for_each_bit(cand, [&](int v) {
    s += cliques_rec(g, g.neighbors(v) & cand & ~low_mask(v + 1), need - 1);
  });
  return s;
}

}  // namespace

Count count_cliques(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("clique order must be nonnegative");
  if (k == 0) return Count{1};
  if (k > g.order()) return Count{0};
  return cliques_rec(g, low_mask(g.order()), k);
}

namespace {

// Counts injective closed walks of the given length, every cycle 2*len times.
struct WalkCounter {
  const Graph& g;
  int len;
  Count total{0};

  void dfs(int start, int v, int at, vword visited) {
    if (at == len) {
      if (g.adjacent(v, start)) total += Count{1};
      return;
    }
    for_each_bit(g.neighbors(v) & ~visited, [&](int u) {
      dfs(start, u, at + 1, visited | vbit(u));
    });
  }
};

}  // namespace

Count oracle_count_cycles(const Graph& g, int len) {
  if (len < 3) throw std::invalid_argument("cycles have length >= 3");
  if (len > g.order()) return Count{0};
  WalkCounter w{g, len};
  for (int v = 0; v < g.order(); ++v) w.dfs(v, v, 1, vbit(v));
  unsigned __int128 denom = 2u * static_cast<unsigned>(len);
  if (w.total.value() % denom != 0) throw std::logic_error("walk count not divisible");
  return Count::raw(w.total.value() / denom);
}

namespace {

struct Embedder {
  const Graph& sub;
  const Graph& host;
  std::vector<int> order;  // sub vertices, highest degree first
  std::vector<int> image;
  vword used = 0;

  bool rec(size_t at) {
    if (at == order.size()) return true;
    int v = order[at];
    for (int h = 0; h < host.order(); ++h) {
      if ((used >> h) & 1) continue;
      if (host.degree(h) < sub.degree(v)) continue;
      bool ok = true;
      for (size_t j = 0; j < at && ok; ++j)
        if (sub.adjacent(order[j], v) && !host.adjacent(image[order[j]], h)) ok = false;
      if (!ok) continue;
      image[v] = h;
      used |= vbit(h);
      if (rec(at + 1)) return true;
      used &= ~vbit(h);
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> is_spanning_subgraph(const Graph& sub, const Graph& host) {
  int n = sub.order();
  if (n != host.order()) throw std::invalid_argument("spanning embedding needs equal orders");
  if (sub.edge_count() > host.edge_count()) return std::nullopt;
  std::vector<int> sd(n), hd(n);
  for (int v = 0; v < n; ++v) sd[v] = sub.degree(v), hd[v] = host.degree(v);
  std::sort(sd.rbegin(), sd.rend());
  std::sort(hd.rbegin(), hd.rend());
  for (int i = 0; i < n; ++i)
    if (sd[i] > hd[i]) return std::nullopt;
  Embedder e{sub, host, {}, std::vector<int>(static_cast<size_t>(n), -1)};
  e.order.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) e.order[static_cast<size_t>(v)] = v;
  std::stable_sort(e.order.begin(), e.order.end(),
                   [&](int a, int b) { return sub.degree(a) > sub.degree(b); });
  if (!e.rec(0)) return std::nullopt;
  return e.image;
}

}  // namespace circlab
