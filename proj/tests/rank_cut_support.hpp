#pragma once

// Random Rank-Cut instances: either plain (random X, Y, M) or taken from the
// compression step of a random graph, which is where the solver meets them.

#include <vector>

#include "bc/compression.hpp"
#include "bc/oct.hpp"
#include "bc/rank_cut.hpp"
#include "support.hpp"

namespace bc::test {

inline RankCutInstance random_rank_cut(std::uint64_t seed, int max_n, int k) {
  SplitMix64 rng(seed);
  const int n = 3 + static_cast<int>(uniform_below(rng, max_n - 2));
  RankCutInstance inst;
  inst.graph = random_graph(n, 0.3 + 0.4 * uniform01(rng), seed);
  inst.k = k;
  for (Vertex v = 0; v < n; ++v) {
    double r = uniform01(rng);
    if (r < 0.2) inst.x.push_back(v);
    else if (r < 0.4) inst.y.push_back(v);
  }
  if (inst.x.empty() && inst.y.empty()) inst.x = {0}, inst.y = {n - 1};
  if (inst.x.empty()) inst.x = {inst.y.back() == 0 ? n - 1 : 0};
  if (inst.y.empty()) inst.y = {inst.x.back() == n - 1 ? 0 : n - 1};
  std::erase_if(inst.y, [&](Vertex v) { return set_contains(inst.x, v); });
  inst.x = make_set(std::move(inst.x));
  const int m = inst.graph.num_edges();
  if (m > 0) {
    const int want = static_cast<int>(uniform_below(rng, 2 * k + 1));
    for (int i = 0; i < want; ++i) inst.merged.push_back(static_cast<EdgeId>(uniform_below(rng, m)));
    inst.merged = make_set(std::move(inst.merged));
  }
  return inst;
}

// The valid-partition instances of a random graph with an OCT of size <= 2k.
inline std::vector<RankCutInstance> compression_instances(std::uint64_t seed, int n, int k) {
  Graph g = random_graph(n, 0.5, seed);
  auto oct = find_oct(g, 2 * k);
  if (!oct) return {};
  PrimeGraph pg = build_prime(g, oct->removed, oct->coloring);
  std::vector<RankCutInstance> out;
  for (const auto& p : valid_partitions(pg)) out.push_back({pg.augmented, k, p.a, p.b, pg.merged});
  return out;
}

}  // namespace bc::test
