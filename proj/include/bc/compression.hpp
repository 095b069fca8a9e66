#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bc/graph.hpp"
#include "bc/rank_cut.hpp"

namespace bc {

// The bipartite graph G' obtained by splitting every x in X into x_1, x_2,
// and H = G' plus the merge edges x_1 x_2.
//
// Vertex ids: v keeps its id for v not in X, x_1 reuses the id of x, and x_2
// is n + (index of x in X). Edge ids: Phi is the identity on 0..m-1; the merge
// edge of the i-th vertex of X is m + i in H.
struct PrimeGraph {
  Graph prime;
  Graph augmented;
  VertexSet transversal;
  std::vector<Vertex> first_copy;
  std::vector<Vertex> second_copy;
  std::vector<int> side;  // per vertex of G': 1 or 2
  EdgeSet merged;
  int host_vertices = 0;
  int host_edges = 0;
};

// sides: proper 2-coloring of G \ X with 0 on X. Edge u-x with u on side i
// becomes u - x_{3-i}; edge x-y inside X with x < y becomes x_1 - y_2.
// Throws std::invalid_argument when sides is not a proper coloring of G \ X.
PrimeGraph build_prime(const Graph& g, const VertexSet& x, const TwoColoring& sides);

struct ValidPartition {
  VertexSet a;
  VertexSet b;
};

std::uint64_t valid_partition_count(const PrimeGraph& pg);
// Bit i of index set: the i-th vertex of X has x_2 in A, otherwise x_1 in A.
ValidPartition valid_partition(const PrimeGraph& pg, std::uint64_t index);
std::vector<ValidPartition> valid_partitions(const PrimeGraph& pg);

using RankCutBackend = std::function<RankCutOutcome(const RankCutInstance&, std::uint64_t index)>;

struct BccOutcome {
  std::optional<EdgeSet> modulator;  // F with r(F) <= k and G \ F bipartite
  std::int64_t partition = -1;       // index of the succeeding valid partition
  std::int64_t partitions_tried = 0;
  std::int64_t iterations = 0;
  std::int64_t span_checks = 0;
  bool exhaustive = true;
};

// Runs the backend on (H, k, A, B, M) for the valid partitions. A partition
// and its mirror image pose the same cut problem, so only those with x_1 of
// the first vertex of X in A are tried. The first success (lowest index) wins,
// also with several threads.
// Throws std::invalid_argument when |X| > 2k or G \ X is not bipartite.
BccOutcome solve_bcc(const Graph& g, int k, const VertexSet& x, const RankCutBackend& backend,
                     int threads = 1);

}  // namespace bc
