#include "circlab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "circlab/canonical.hpp"
#include "circlab/cycles.hpp"
#include "circlab/graph6.hpp"

namespace circlab {

bool passes_filter(const Graph& g, const EnumerationFilter& f) {
  if (f.min_degree && (g.order() == 0 || g.min_degree() != *f.min_degree))
    return false;
  if (f.min_degree_at_least &&
      (g.order() == 0 || g.min_degree() < *f.min_degree_at_least))
    return false;
  if (f.require_two_connected && !is_two_connected(g)) return false;
  if (f.connected_only && !is_connected(g)) return false;
  if (f.max_circumference && has_cycle_at_least(g, *f.max_circumference + 1))
    return false;
  return true;
}

namespace {

Graph extend(const Graph& parent, unsigned mask) {
  const int m = parent.order();
  Graph g(m + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j)
      if (parent.adjacent(i, j)) g.add_edge(i, j);
    if (mask & (1u << i)) g.add_edge(i, m);
  }
  return g;
}

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Children of one level: sharded over parents, merged and deduped in sorted
// order, so the result is independent of the worker count.
std::vector<std::uint64_t> next_level(const std::vector<std::uint64_t>& parents,
                                      int m, int workers,
                                      const Budget* budget) {
  const unsigned masks = 1u << m;
  std::vector<std::uint64_t> pool;   // sorted, deduped
  std::vector<std::uint64_t> raw;    // unmerged buffer
  const std::size_t flush_at = std::size_t(1) << 23;
  auto flush = [&] {
    sort_unique(raw);
    std::vector<std::uint64_t> merged;
    merged.reserve(pool.size() + raw.size());
    std::set_union(pool.begin(), pool.end(), raw.begin(), raw.end(),
                   std::back_inserter(merged));
    pool.swap(merged);
    raw.clear();
  };

  std::atomic<bool> out_of_time{false};
  const std::size_t chunk = 512;
  for (std::size_t base = 0; base < parents.size(); base += chunk) {
    const std::size_t end = std::min(parents.size(), base + chunk);
    if (budget && budget->expired()) out_of_time = true;
    if (out_of_time.load(std::memory_order_relaxed)) break;
#pragma omp parallel num_threads(workers)
    {
      std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 4)
      for (long long i = static_cast<long long>(base);
           i < static_cast<long long>(end); ++i) {
        if (out_of_time.load(std::memory_order_relaxed)) continue;
        const Graph parent = graph_from_key(parents[i]);
        for (unsigned mask = 0; mask < masks; ++mask)
          local.push_back(canonical_key(extend(parent, mask)));
      }
#pragma omp critical
      raw.insert(raw.end(), local.begin(), local.end());
    }
    if (raw.size() >= flush_at) flush();
  }
  if (out_of_time) throw budget_exhausted();
  flush();
  return pool;
}

}  // namespace

const std::vector<std::uint64_t>& all_graph_keys(int n, int cap, int workers,
                                                 const Budget* budget) {
  if (n < 0) throw std::invalid_argument("enumeration: order must be >= 0");
  if (n > cap)
    throw std::invalid_argument("enumeration: order " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  if (n > kCanonicalMaxOrder)
    throw std::invalid_argument("enumeration: order " + std::to_string(n) +
                                " exceeds canonical-form limit " +
                                std::to_string(kCanonicalMaxOrder));
  static std::mutex mu;
  static std::map<int, std::vector<std::uint64_t>> memo;
  std::scoped_lock lock(mu);
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  int have = -1;
  for (int i = n; i >= 0; --i)
    if (memo.count(i)) {
      have = i;
      break;
    }
  if (have < 0) {
    memo[0] = {canonical_key(Graph(0))};
    have = 0;
  }
  for (int m = have; m < n; ++m) {
    // Completed levels are cached even when a later level runs out of time.
    memo[m + 1] = next_level(memo[m], m, workers, budget);
  }
  return memo[n];
}

std::vector<std::uint64_t> naive_all_graph_keys(int n) {
  if (n < 0 || n > 7)
    throw std::invalid_argument(
        "naive enumeration: order must be between 0 and 7");
  const int pairs = n * (n - 1) / 2;
  std::vector<std::uint64_t> keys;
  keys.reserve(std::size_t(1) << pairs);
  for (unsigned long long mask = 0; mask < (1ull << pairs); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (mask >> bit & 1) g.add_edge(i, j);
    keys.push_back(canonical_key(g));
  }
  sort_unique(keys);
  return keys;
}

std::vector<Graph> enumerate_graphs(int n, const EnumerationFilter& f, int cap,
                                    int workers, const Budget* budget) {
  const auto& keys = all_graph_keys(n, cap, workers, budget);
  std::vector<Graph> out;
  for (std::uint64_t key : keys) {
    if (budget) budget->check();
    Graph g = graph_from_key(key);
    if (passes_filter(g, f)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open graph6 file '" + path + "'");
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " +
                               e.what());
    }
  }
  return out;
}

}  // namespace circlab
