#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "bc/constrained_cut.hpp"
#include "bc/graph.hpp"
#include "bc/random.hpp"

namespace bc {

// Is there an X-Y cut C with m_rank(C, M) <= k?  |M| <= 2k.
struct RankCutInstance {
  Graph graph;
  int k = 0;
  VertexSet x;
  VertexSet y;
  EdgeSet merged;
};

// Throws std::invalid_argument on X n Y != {} or |M| > 2k.
void validate(const RankCutInstance& inst);

// G \ C has no X-Y path and m_rank(C, M) <= k.
bool verify_cut(const RankCutInstance& inst, const EdgeSet& cut);

// With |M| <= 2k and m_rank(C, M) <= k, C u M spans at most 6k vertices.
// Returns true when the premise fails.
bool solution_span_holds(const Graph& g, const EdgeSet& cut, const EdgeSet& merged, int k);

struct RelevantEdges {
  EdgeSet edges;                    // E_rel
  std::vector<EdgeSet> per_vertex;  // E_rel(u)
  int max_degree = 0;               // realized maximum degree of G[E_rel]
};

// Edges e = uv such that the subdivision vertex of e lies on an important
// separator of size <= 6k from X to u or from Y to u, and likewise for v.
RelevantEdges relevant_edges(const RankCutInstance& inst);

// 1 / (6 k d), or 1 in the degenerate cases k = 0 or d = 0.
double black_probability(int k, int max_degree);

struct Coloring {
  EdgeSet black;  // black edges of E_rel \ M
  BlockPartition partition;
};

// Blocks are the components of (V, black u M).
Coloring make_coloring(const RankCutInstance& inst, EdgeSet black);

// Each edge of `candidates` independently black with probability p.
template <class Rng>
EdgeSet sample_black(const EdgeSet& candidates, double p, Rng& rng);

// One reduction round: solve the constrained problem on the blocks and gate
// the result through verify_cut. Throws std::logic_error if a returned cut
// misses the span bound.
std::optional<EdgeSet> try_coloring(const RankCutInstance& inst, const Coloring& coloring);

struct RankCutOutcome {
  std::optional<EdgeSet> cut;
  std::int64_t iterations = 0;
  std::int64_t budget = 0;
  double probability = 1.0;
  int max_degree = 0;
  std::int64_t span_checks = 0;
  bool exhaustive = true;  // false when an iteration or enumeration cap stopped the search
};

struct RandomizedOptions {
  std::optional<std::int64_t> max_iters;
  std::int64_t iteration_cap = 1'000'000;
};

// Default number of rounds: min(ceil(4 / p^k), cap).
std::int64_t default_iteration_budget(double p, int k, std::int64_t cap);

// Repeats random colorings until the constrained problem succeeds. A returned
// cut is always valid; absence only means the budget ran out.
RankCutOutcome solve_randomized(const RankCutInstance& inst, std::uint64_t seed,
                                const RandomizedOptions& options = {});

// Same instance with degree-0 vertices dropped; edge ids are unchanged.
RankCutInstance without_isolated(const RankCutInstance& inst);

// --- implementation of the template ---

template <class Rng>
EdgeSet sample_black(const EdgeSet& candidates, double p, Rng& rng) {
  EdgeSet black;
  if (p >= 1.0) return candidates;
  if (p <= 0.0) return black;
  // Geometric gaps between black positions; same law as independent coins.
  const double log_q = std::log1p(-p);
  std::int64_t pos = -1;
  const auto size = static_cast<std::int64_t>(candidates.size());
  while (true) {
    double u = 1.0 - uniform01(rng);  // (0, 1]
    double gap = std::floor(std::log(u) / log_q);
    if (gap >= static_cast<double>(size)) break;
    pos += static_cast<std::int64_t>(gap) + 1;
    if (pos >= size) break;
    black.push_back(candidates[pos]);
  }
  return black;
}

}  // namespace bc

