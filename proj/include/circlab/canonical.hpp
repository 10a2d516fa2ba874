#pragma once

#include <cstdint>
#include <string>

#include "circlab/graph.hpp"

namespace circlab {

// Canonical labeling works on packed 64-bit keys: order in the top bits,
// the lexicographically minimal upper-triangle bitstring below. T(11) = 55
// bits is the largest triangle that fits, hence the order cap.
constexpr int kCanonicalMaxOrder = 11;

// (n << 55) | bits, where bit p of the column-major upper-triangle stream
// of the minimal labeling sits at key bit 54 - p.
std::uint64_t canonical_key(const Graph& g);

Graph graph_from_key(std::uint64_t key);

Graph canonical_form(const Graph& g);

// graph6 string of the canonical form; stable id for reports and dedup.
std::string canonical_graph6(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace circlab
