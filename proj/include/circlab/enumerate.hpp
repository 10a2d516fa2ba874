#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circlab/budget.hpp"
#include "circlab/graph.hpp"

namespace circlab {

inline constexpr int kDefaultEnumerationCap = 10;

struct EnumerationFilter {
  std::optional<int> min_degree;          // delta == value
  std::optional<int> min_degree_at_least; // delta >= value
  bool require_two_connected = false;
  bool connected_only = false;
  std::optional<int> max_circumference;   // c(G) <= value
};

bool passes_filter(const Graph& g, const EnumerationFilter& f);

// Every graph of order n up to isomorphism, as sorted canonical keys.
// Computed by vertex extension with canonical-key dedup at each level and
// memoized per order. Throws std::invalid_argument past the cap and
// budget_exhausted if the budget expires mid-generation.
const std::vector<std::uint64_t>& all_graph_keys(
    int n, int cap = kDefaultEnumerationCap, int workers = 1,
    const Budget* budget = nullptr);

// Reference enumerator sweeping all 2^C(n,2) labelled graphs; n <= 7.
std::vector<std::uint64_t> naive_all_graph_keys(int n);

// Materialized filtered enumeration in canonical-key order.
std::vector<Graph> enumerate_graphs(int n, const EnumerationFilter& f,
                                    int cap = kDefaultEnumerationCap,
                                    int workers = 1,
                                    const Budget* budget = nullptr);

// One graph per non-empty line; errors mention the offending line number.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace circlab
