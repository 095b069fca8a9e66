#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>

#include "bc/graph.hpp"

namespace bc {

inline constexpr std::int64_t kUncuttable = std::numeric_limits<std::int64_t>::max() / 4;
inline constexpr std::int64_t kRemovedVertex = -1;

// Which minimum separator to extract when several exist.
enum class CutSide {
  kNearSources,  // smallest source-side reach
  kNearSinks,    // largest source-side reach
};

struct VertexCut {
  std::int64_t value = 0;
  VertexSet separator;
};

// Minimum-weight vertex separator between sources and sinks, by augmenting
// paths on the split-vertex network. capacity[v] is the weight of v, or
// kUncuttable / kRemovedVertex; an empty span means unit weights. Sources and
// sinks are never cut. Stops as soon as the flow exceeds limit and returns
// nullopt, which also covers the case where no separator exists.
std::optional<VertexCut> min_vertex_cut(const Graph& g, std::span<const std::int64_t> capacity,
                                        const VertexSet& sources, const VertexSet& sinks,
                                        std::int64_t limit, CutSide side);

}  // namespace bc
