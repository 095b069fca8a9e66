#include "bc/pipeline.hpp"

#include <chrono>
#include <stdexcept>

#include "bc/compression.hpp"
#include "bc/derand.hpp"
#include "bc/oct.hpp"
#include "bc/oracle.hpp"
#include "bc/random.hpp"
#include "bc/rank_cut.hpp"

namespace bc {

std::string to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::kRandomized: return "rand";
    case Algorithm::kDeterministic: return "derand";
    case Algorithm::kOracle: return "oracle";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "rand" || name == "randomized") return Algorithm::kRandomized;
  if (name == "derand" || name == "deterministic") return Algorithm::kDeterministic;
  if (name == "oracle") return Algorithm::kOracle;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

bool verify_witness(const Graph& g, int k, const EdgeSet& contract_edges, const TwoColoring& coloring) {
  if (static_cast<int>(contract_edges.size()) > k) return false;
  for (EdgeId e : contract_edges)
    if (e < 0 || e >= g.num_edges()) return false;
  if (make_set(contract_edges).size() != contract_edges.size()) return false;
  return is_proper_coloring(contract(g, contract_edges).graph, coloring);
}

namespace {

Witness finish(const Graph& g, int k, EdgeSet contraction, std::int64_t partition) {
  Witness w;
  auto coloring = two_color(contract(g, contraction).graph);
  if (!coloring) throw std::logic_error("contraction set does not yield a bipartite graph");
  w.contract_edges = std::move(contraction);
  w.coloring = std::move(*coloring);
  w.partition = partition;
  if (!verify_witness(g, k, w.contract_edges, w.coloring)) throw std::logic_error("witness failed verification");
  return w;
}

SolveResult solve_untimed(const Graph& g, int k, const SolveOptions& options) {
  SolveResult result;
  if (k < 0) {
    result.reason = "not_bipartite";
    return result;
  }
  if (k == 0) {
    if (two_color(g)) result.witness = finish(g, k, {}, -1);
    else result.reason = "not_bipartite";
    return result;
  }

  if (options.algorithm == Algorithm::kOracle) {
    if (auto f = oracle::brute_bc(g, k)) result.witness = finish(g, k, *f, -1);
    else result.reason = "oracle_no";
    return result;
  }

  // Isolated vertices play no role; edge ids survive the removal.
  IsolatedRemoval core = drop_isolated(g);
  auto oct = find_oct(core.graph, 2 * k);
  if (!oct) {
    result.reason = "oct_exceeds_2k";
    return result;
  }
  result.stats.oct_size = static_cast<int>(oct->removed.size());

  RankCutBackend backend;
  if (options.algorithm == Algorithm::kRandomized) {
    RandomizedOptions ro{options.max_iters, options.iteration_cap};
    backend = [ro, seed = options.seed](const RankCutInstance& inst, std::uint64_t index) {
      return solve_randomized(inst, derive_seed(seed, index), ro);
    };
  } else {
    DeterministicOptions dopt{options.derand_pair_cap};
    backend = [dopt](const RankCutInstance& inst, std::uint64_t) { return solve_deterministic(inst, dopt); };
  }

  BccOutcome bcc = solve_bcc(core.graph, k, oct->removed, backend, options.threads);
  result.stats.iterations = bcc.iterations;
  result.stats.partitions_tried = bcc.partitions_tried;
  result.stats.span_checks = bcc.span_checks;
  if (!bcc.modulator) {
    result.exact = bcc.exhaustive;
    if (bcc.exhaustive) result.reason = "no_cut";
    else if (options.algorithm == Algorithm::kRandomized) result.reason = "iteration_budget_exhausted";
    else result.reason = "pair_cap_reached";
    return result;
  }
  EdgeSet contraction = modulator_to_contraction(core.graph, *bcc.modulator, k);
  result.witness = finish(g, k, std::move(contraction), bcc.partition);
  return result;
}

}  // namespace

SolveResult solve_bc(const Graph& g, int k, const SolveOptions& options) {
  auto start = std::chrono::steady_clock::now();
  SolveResult result = solve_untimed(g, k, options);
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace bc
