#pragma once

#include <optional>
#include <vector>

#include "circlab/count.hpp"
#include "circlab/graph.hpp"

namespace circlab {

// Embedding[v] = image of vertex v under an injective, edge-preserving map.
using Embedding = std::vector<int>;

// Length of a longest cycle; 0 when the graph is acyclic.
int circumference(const Graph& g);

// True iff the graph has a cycle of length >= len (len >= 3). Stops as soon
// as one is found, so this is much cheaper than full circumference.
bool has_cycle_at_least(const Graph& g, int len);

// Number of cycles of length exactly len, each cycle subgraph counted once.
Count count_cycles(const Graph& g, int len);

// Cycles of length exactly len that pass through vertex v.
Count count_cycles_through(const Graph& g, int v, int len);

// Number of complete subgraphs on k vertices.
Count count_cliques(const Graph& g, int k);

// Reference cycle counter: enumerates injective closed walks and divides by
// 2*len. Exponential in len; kept as the independent check for count_cycles.
Count oracle_count_cycles(const Graph& g, int len);

// Witness that host contains a spanning subgraph isomorphic to sub: an
// injective map of all of V(sub) onto V(host) carrying edges to edges.
// Deterministic (lowest-index branch order). Orders must match.
std::optional<Embedding> is_spanning_subgraph(const Graph& sub, const Graph& host);

}  // namespace circlab
