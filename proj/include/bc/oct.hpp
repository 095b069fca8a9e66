#pragma once

#include <optional>

#include "bc/graph.hpp"

namespace bc {

struct OctResult {
  VertexSet removed;
  // Coloring of G \ removed; removed vertices carry 0.
  TwoColoring coloring;
};

// Odd cycle transversal of size at most budget, or nullopt if none exists.
// Exact. Returns a minimum-size transversal.
std::optional<OctResult> find_oct(const Graph& g, int budget);

}  // namespace bc
