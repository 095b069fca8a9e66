#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bc/graph.hpp"

namespace bc {

enum class Algorithm { kRandomized, kDeterministic, kOracle };

std::string to_string(Algorithm algo);
// Accepts rand|randomized, derand|deterministic, oracle. Throws std::invalid_argument.
Algorithm parse_algorithm(const std::string& name);

struct SolveOptions {
  Algorithm algorithm = Algorithm::kDeterministic;
  std::uint64_t seed = 1;
  std::optional<std::int64_t> max_iters;      // per Rank-Cut instance
  std::int64_t iteration_cap = 1'000'000;     // cap on the default budget
  std::optional<std::int64_t> derand_pair_cap;
  int threads = 1;
};

struct SolveStats {
  std::int64_t iterations = 0;
  std::int64_t partitions_tried = 0;
  std::int64_t span_checks = 0;
  int oct_size = -1;
  double wall_ms = 0.0;
};

struct Witness {
  EdgeSet contract_edges;
  // Coloring of G / contract_edges, indexed by contracted vertex id.
  TwoColoring coloring;
  std::int64_t partition = -1;
};

struct SolveResult {
  std::optional<Witness> witness;
  // Empty on success. One of: not_bipartite, oct_exceeds_2k, no_cut,
  // iteration_budget_exhausted, pair_cap_reached, oracle_no.
  std::string reason;
  // False when a "no" came from a capped or probabilistic search.
  bool exact = true;
  SolveStats stats;
};

// Can G be made bipartite by at most k contractions?
SolveResult solve_bc(const Graph& g, int k, const SolveOptions& options = {});

// |F| <= k, every id valid, and coloring properly colors G / F.
bool verify_witness(const Graph& g, int k, const EdgeSet& contract_edges, const TwoColoring& coloring);

}  // namespace bc
