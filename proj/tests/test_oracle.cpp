#include <doctest.h>

#include "bc/oracle.hpp"
#include "support.hpp"

using namespace bc;
using namespace bc::test;

TEST_CASE("brute_bc examples") {
  auto c4 = oracle::brute_bc(cycle_graph(4), 0);
  REQUIRE(c4);
  CHECK(c4->empty());
  auto c5 = oracle::brute_bc(cycle_graph(5), 1);
  REQUIRE(c5);
  CHECK(c5->size() == 1);
  CHECK_FALSE(oracle::brute_bc(cycle_graph(5), 0));

  Graph k4 = complete_graph(4);
  CHECK_FALSE(oracle::brute_bc(k4, 1));
  auto two = oracle::brute_bc(k4, 2);
  REQUIRE(two);
  CHECK(two->size() == 2);
  Graph contracted = contract(k4, *two).graph;
  CHECK(contracted.num_vertices() == 2);
  CHECK(contracted.num_edges() == 1);
}

TEST_CASE("brute_bc and brute_modulator agree") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = random_graph(4 + seed % 4, 0.5, 10000 + seed);
    for (int k = 0; k <= 3; ++k) {
      auto c = oracle::brute_bc(g, k);
      auto f = oracle::brute_modulator(g, k);
      CHECK(c.has_value() == f.has_value());
      if (c) CHECK(brute_bipartite(contract(g, *c).graph));
      if (f) {
        CHECK(brute_rank(g, *f) <= k);
        CHECK(brute_bipartite(without_edges(g, *f)));
      }
    }
  }
}

TEST_CASE("brute_rank_cut examples") {
  RankCutInstance apart{make_graph(4, {{0, 1}, {2, 3}}), 0, {0}, {3}, {}};
  auto empty = oracle::brute_rank_cut(apart);
  REQUIRE(empty);
  CHECK(empty->empty());

  RankCutInstance path{path_graph(3), 1, {0}, {2}, {}};
  CHECK(oracle::brute_rank_cut(path));
  path.k = 0;
  CHECK_FALSE(oracle::brute_rank_cut(path));

  path.k = 1;
  auto minimal = oracle::brute_minimal_solutions(path);
  CHECK(minimal == std::vector<EdgeSet>{{0}, {1}});
}

TEST_CASE("brute_important examples") {
  auto p = oracle::brute_important(path_graph(4), {0}, {3}, 1);
  REQUIRE(p.size() == 1);
  CHECK(p[0].separator == VertexSet{2});
  Graph diamond = make_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto d = oracle::brute_important(diamond, {0}, {3}, 2);
  REQUIRE(d.size() == 1);
  CHECK(d[0].separator == VertexSet{1, 2});
  CHECK(oracle::brute_important(diamond, {0}, {3}, 1).empty());
  CHECK(oracle::brute_important(make_graph(2, {{0, 1}}), {0}, {1}, 2).empty());
}

TEST_CASE("budgets are enforced") {
  oracle::OracleBudget tight;
  tight.max_vertices = 4;
  CHECK_THROWS_AS(oracle::brute_bc(cycle_graph(5), 1, tight), oracle::BudgetExceeded);
  tight = {};
  tight.max_k = 1;
  CHECK_THROWS_AS(oracle::brute_bc(cycle_graph(5), 2, tight), oracle::BudgetExceeded);
}
