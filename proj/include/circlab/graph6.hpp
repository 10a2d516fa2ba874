#pragma once

#include <string>

#include "circlab/graph.hpp"

namespace circlab {

// Canonical ASCII graph interchange format (graph6). Upper-triangle bits in
// column-major order, six bits per printable byte, offset 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

}  // namespace circlab
