#pragma once

#include <optional>
#include <vector>

#include "bc/graph.hpp"

namespace bc {

// Partition of V(G) into connected blocks with every merge edge inside a
// block. weight[i] is the M-rank of the edges induced by block i.
struct BlockPartition {
  std::vector<int> block_of;
  std::vector<VertexSet> blocks;
  std::vector<EdgeSet> block_edges;
  std::vector<int> weight;
};

// Builds the partition from per-vertex labels (any integers; blocks are
// numbered by first appearance). Throws std::invalid_argument when a block is
// disconnected or a merge edge crosses two blocks.
BlockPartition make_block_partition(const Graph& g, const EdgeSet& merged,
                                    const std::vector<int>& labels);

// Components of (V, edges).
BlockPartition partition_from_edges(const Graph& g, const EdgeSet& merged, const EdgeSet& edges);

struct ConstrainedSolution {
  std::vector<int> chosen;  // block indices Z
  EdgeSet cut;              // union of the edges induced by the chosen blocks
  int weight = 0;           // equals m_rank(cut, M)
};

// Chooses whole blocks whose induced edges form an X-Y cut of M-rank <= k.
// Reduces to a minimum weighted vertex separator in the graph where each
// block is replaced by a hub vertex carrying the block weight.
std::optional<ConstrainedSolution> solve_constrained(const Graph& g, int k, const VertexSet& x,
                                                     const VertexSet& y, const EdgeSet& merged,
                                                     const BlockPartition& partition);

// The auxiliary graph used above: original vertices 0..n-1, hub of block i
// at n+i. Exposed so callers can check separator/cut correspondence.
Graph constrained_auxiliary_graph(const Graph& g, const BlockPartition& partition);

}  // namespace bc
