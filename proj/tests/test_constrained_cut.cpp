#include <doctest.h>

#include "bc/constrained_cut.hpp"
#include "bc/impsep.hpp"
#include "bc/oracle.hpp"
#include "support.hpp"

using namespace bc;
using namespace bc::test;

namespace {

struct Instance {
  Graph g;
  VertexSet x, y;
  EdgeSet merged;
  BlockPartition partition;
};

// Blocks are the components of a random edge subset; merge edges come from
// that subset so none crosses blocks.
Instance random_instance(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int n = 5 + static_cast<int>(uniform_below(rng, 5));
  Instance inst{random_graph(n, 0.45, seed), {}, {}, {}, {}};
  EdgeSet inside;
  for (EdgeId e = 0; e < inst.g.num_edges(); ++e)
    if (uniform01(rng) < 0.45) inside.push_back(e);
  for (EdgeId e : inside)
    if (uniform01(rng) < 0.3) inst.merged.push_back(e);
  inst.partition = partition_from_edges(inst.g, inst.merged, inside);
  for (Vertex v = 0; v < n; ++v) {
    double r = uniform01(rng);
    if (r < 0.2) inst.x.push_back(v);
    else if (r < 0.4) inst.y.push_back(v);
  }
  if (inst.x.empty()) inst.x.push_back(0);
  inst.y.erase(std::remove(inst.y.begin(), inst.y.end(), inst.x[0]), inst.y.end());
  return inst;
}

EdgeSet induced_union(const BlockPartition& p, const std::vector<int>& chosen) {
  EdgeSet out;
  for (int b : chosen) out.insert(out.end(), p.block_edges[b].begin(), p.block_edges[b].end());
  return make_set(std::move(out));
}

VertexSet hubs(int n, const std::vector<int>& chosen) {
  VertexSet out;
  for (int b : chosen) out.push_back(n + b);
  return make_set(std::move(out));
}

}  // namespace

TEST_CASE("block partition validation") {
  Graph p = path_graph(4);
  CHECK_THROWS_AS(make_block_partition(p, {}, {0, 1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_block_partition(p, {*p.find_edge(1, 2)}, {0, 1, 2, 3}), std::invalid_argument);
  BlockPartition bp = make_block_partition(p, {}, {7, 3, 3, 9});
  CHECK(bp.blocks.size() == 3);
  CHECK(bp.blocks[1] == VertexSet{1, 2});
  CHECK(bp.weight == std::vector<int>{0, 1, 0});

  Graph k3 = complete_graph(3);
  BlockPartition whole = make_block_partition(k3, {*k3.find_edge(0, 1)}, {0, 0, 0});
  CHECK(whole.weight == std::vector<int>{1});
}

TEST_CASE("solve_constrained examples") {
  Graph apart = make_graph(4, {{0, 1}, {2, 3}});
  BlockPartition singles = make_block_partition(apart, {}, {0, 1, 2, 3});
  auto empty = solve_constrained(apart, 0, {0}, {3}, {}, singles);
  REQUIRE(empty);
  CHECK(empty->chosen.empty());
  CHECK(empty->cut.empty());
  CHECK(empty->weight == 0);

  Graph p = path_graph(4);
  BlockPartition bp = make_block_partition(p, {}, {0, 1, 1, 2});
  auto one = solve_constrained(p, 1, {0}, {3}, {}, bp);
  REQUIRE(one);
  CHECK(one->chosen == std::vector<int>{1});
  CHECK(one->cut == ids_of(p, {{1, 2}}));
  CHECK(one->weight == 1);
  CHECK_FALSE(solve_constrained(p, 0, {0}, {3}, {}, bp));
}

TEST_CASE("solve_constrained matches enumeration of block sets") {
  int yes = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Instance inst = random_instance(4000 + seed);
    if (inst.partition.blocks.size() > 12) continue;
    for (int k = 0; k <= 3; ++k) {
      auto got = solve_constrained(inst.g, k, inst.x, inst.y, inst.merged, inst.partition);
      auto want = oracle::brute_constrained(inst.g, k, inst.x, inst.y, inst.merged, inst.partition);
      ++total;
      CHECK(got.has_value() == want.has_value());
      if (!got) continue;
      ++yes;
      CHECK(got->cut == induced_union(inst.partition, got->chosen));
      CHECK(is_cut(inst.g, got->cut, inst.x, inst.y));
      CHECK(got->weight <= k);
      CHECK(got->weight == m_rank(inst.g, got->cut, inst.merged));
    }
  }
  CHECK(total > 500);
  CHECK(yes > 100);
  CHECK(yes < total);
}

TEST_CASE("weights and separators of the auxiliary graph track M-rank and cuts") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Instance inst = random_instance(4500 + seed);
    const auto& bp = inst.partition;
    const int l = static_cast<int>(bp.blocks.size());
    if (l > 10) continue;
    Graph aux = constrained_auxiliary_graph(inst.g, bp);
    const int n = inst.g.num_vertices();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
      std::vector<int> z;
      int weight = 0;
      for (int b = 0; b < l; ++b)
        if ((mask >> b) & 1) z.push_back(b), weight += bp.weight[b];
      EdgeSet cz = induced_union(bp, z);
      CHECK(oracle::m_rank_by_contraction(inst.g, cz, inst.merged) == weight);
      CHECK(is_cut(inst.g, cz, inst.x, inst.y) == is_separator(aux, inst.x, inst.y, hubs(n, z)));
    }
  }
}
