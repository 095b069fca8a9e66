#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bc/constrained_cut.hpp"
#include "bc/graph.hpp"
#include "bc/impsep.hpp"
#include "bc/rank_cut.hpp"

// Exhaustive reference solvers. Each is a direct transcription of the problem
// definition and is only meant for tiny inputs.
namespace bc::oracle {

struct OracleBudget {
  int max_vertices = 16;
  int max_k = 8;
  std::uint64_t max_subsets = std::uint64_t{1} << 26;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rank of G[F u M] / M, by building the contracted graph.
int m_rank_by_contraction(const Graph& g, const EdgeSet& edges, const EdgeSet& merged);

// Some F with |F| <= k and G/F bipartite.
std::optional<EdgeSet> brute_bc(const Graph& g, int k, const OracleBudget& budget = {});

// Some F with r(F) <= k and G \ F bipartite, over all subsets of E.
std::optional<EdgeSet> brute_modulator(const Graph& g, int k, const OracleBudget& budget = {});

// Some X-Y cut of M-rank <= k. Enumerates sides U with X in U, U disjoint
// from Y, and tests the boundary of U.
std::optional<EdgeSet> brute_rank_cut(const RankCutInstance& inst, const OracleBudget& budget = {});

// Every inclusion-minimal X-Y cut with M-rank <= k.
std::vector<EdgeSet> brute_minimal_solutions(const RankCutInstance& inst,
                                             const OracleBudget& budget = {});

// Important separators of size <= k by filtering all vertex subsets.
std::vector<SeparatorRecord> brute_important(const Graph& g, const VertexSet& x, const VertexSet& y,
                                             int k, const OracleBudget& budget = {});

// Some block set Z, over all 2^l choices, whose induced edges cut X from Y
// with M-rank <= k.
std::optional<std::vector<int>> brute_constrained(const Graph& g, int k, const VertexSet& x,
                                                  const VertexSet& y, const EdgeSet& merged,
                                                  const BlockPartition& partition,
                                                  const OracleBudget& budget = {});

}  // namespace bc::oracle
