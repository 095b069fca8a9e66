#include <doctest.h>

#include "bc/graph.hpp"
#include "bc/oracle.hpp"
#include "support.hpp"

using namespace bc;
using namespace bc::test;

TEST_CASE("graph construction rejects loops, parallels and bad ids") {
  CHECK_THROWS_AS(make_graph(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(make_graph(3, {{-1, 2}}), GraphError);

  Graph g = make_graph(4, {{2, 1}, {0, 3}});
  CHECK(g.edge(0).u == 1);
  CHECK(g.edge(0).v == 2);
  CHECK(g.degree(1) == 1);
  CHECK(g.degree(3) == 1);
  CHECK(g.opposite(0, 2) == 1);
  CHECK(g.find_edge(3, 0) == 1);
  CHECK_FALSE(g.find_edge(0, 1).has_value());
}

TEST_CASE("two_color") {
  auto c4 = two_color(cycle_graph(4));
  REQUIRE(c4);
  CHECK(*c4 == TwoColoring{1, 2, 1, 2});
  CHECK_FALSE(two_color(cycle_graph(5)));
  CHECK(*two_color(Graph(3, {})) == TwoColoring{1, 1, 1});

  Graph c5 = cycle_graph(5);
  auto cut = two_color_without_vertices(c5, {0});
  REQUIRE(cut);
  CHECK((*cut)[0] == 0);
  for (Vertex v = 1; v < 4; ++v) CHECK((*cut)[v] + (*cut)[v + 1] == 3);
  CHECK(two_color_without_edges(c5, ids_of(c5, {{0, 1}})));
}

TEST_CASE("two_color agrees with brute force on random graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = random_graph(2 + seed % 8, 0.35, seed);
    auto col = two_color(g);
    CHECK(col.has_value() == brute_bipartite(g));
    if (col) CHECK(is_proper_coloring(g, *col));
  }
}

TEST_CASE("rank and m_rank examples") {
  Graph k3 = complete_graph(3);
  CHECK(rank(k3, {}) == 0);
  CHECK(rank(k3, {0, 1, 2}) == 2);
  Graph two = make_graph(4, {{0, 1}, {2, 3}});
  CHECK(rank(two, {0, 1}) == 2);

  Graph p = path_graph(3);
  CHECK(m_rank(p, ids_of(p, {{0, 1}, {1, 2}}), ids_of(p, {{0, 1}})) == 1);
  CHECK(m_rank(k3, {0, 1, 2}, ids_of(k3, {{0, 1}})) == 1);
  CHECK(m_rank(k3, {0, 1, 2}, {}) == rank(k3, {0, 1, 2}));
}

TEST_CASE("rank and m_rank match independent computations") {
  SplitMix64 rng(7);
  for (int round = 0; round < 300; ++round) {
    Graph g = random_graph(3 + round % 6, 0.5, 100 + round);
    const int m = g.num_edges();
    if (m == 0) continue;
    EdgeSet f, merged;
    for (int e = 0; e < m; ++e) {
      if (uniform01(rng) < 0.4) f.push_back(e);
      if (uniform01(rng) < 0.2) merged.push_back(e);
    }
    CHECK(rank(g, f) == brute_rank(g, f));
    CHECK(m_rank(g, f, merged) == oracle::m_rank_by_contraction(g, f, merged));
  }
}

TEST_CASE("contract") {
  Graph k4 = complete_graph(4);
  Contraction c = contract(k4, {0});
  CHECK(c.graph.num_vertices() == 3);
  CHECK(c.graph.num_edges() == 3);
  CHECK(c.map == std::vector<Vertex>{0, 0, 1, 2});

  Contraction c5 = contract(cycle_graph(5), {0});
  CHECK(c5.graph.num_vertices() == 4);
  CHECK(c5.graph.num_edges() == 4);
  CHECK(two_color(c5.graph));

  Graph p = path_graph(5);
  Contraction all = contract(p, {0, 1, 2, 3});
  CHECK(all.graph.num_vertices() == 1);
  CHECK(all.graph.num_edges() == 0);
}

TEST_CASE("subdivide") {
  Subdivision s = subdivide(make_graph(2, {{0, 1}}));
  CHECK(s.graph.num_vertices() == 3);
  CHECK(s.edge_vertex == std::vector<Vertex>{2});
  CHECK(s.graph.find_edge(0, 2).has_value());
  CHECK(s.graph.find_edge(2, 1).has_value());

  Subdivision t = subdivide(complete_graph(3));
  CHECK(t.graph.num_vertices() == 6);
  CHECK(t.graph.num_edges() == 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(t.graph.degree(v) == 2);
  CHECK(two_color(t.graph));

  Subdivision e = subdivide(Graph(3, {}));
  CHECK(e.graph.num_vertices() == 3);
  CHECK(e.edge_vertex.empty());
}

TEST_CASE("drop_isolated keeps edge ids") {
  Graph g = make_graph(6, {{1, 3}, {3, 5}});
  IsolatedRemoval r = drop_isolated(g);
  CHECK(r.graph.num_vertices() == 3);
  CHECK(r.to_sub == std::vector<Vertex>{-1, 0, -1, 1, -1, 2});
  CHECK(r.to_host == std::vector<Vertex>{1, 3, 5});
  for (EdgeId e = 0; e < 2; ++e) {
    CHECK(r.to_host[r.graph.edge(e).u] == g.edge(e).u);
    CHECK(r.to_host[r.graph.edge(e).v] == g.edge(e).v);
  }
}

TEST_CASE("is_cut") {
  Graph p = path_graph(4);
  CHECK(is_cut(p, {1}, {0}, {3}));
  CHECK_FALSE(is_cut(p, {}, {0}, {3}));
  CHECK(is_cut(make_graph(4, {{0, 1}, {2, 3}}), {}, {0}, {3}));
}

TEST_CASE("modulator_to_contraction examples") {
  Graph c5 = cycle_graph(5);
  EdgeSet f = ids_of(c5, {{0, 1}});
  CHECK(modulator_to_contraction(c5, f, 1) == f);
  CHECK(modulator_to_contraction(cycle_graph(4), {}, 0).empty());
  CHECK_THROWS_AS(modulator_to_contraction(c5, {}, 1), std::invalid_argument);
  CHECK_THROWS_AS(modulator_to_contraction(complete_graph(4), {0, 1, 2, 3, 4, 5}, 2), std::invalid_argument);
}

TEST_CASE("modulator_to_contraction yields a valid contraction set") {
  // Every modulator of rank <= k on small graphs, checked by brute force.
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(5 + seed % 2, 0.6, 500 + seed);
    const int m = g.num_edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      EdgeSet f = edges_of_mask(mask, m);
      int r = brute_rank(g, f);
      if (r > 3 || !brute_bipartite(without_edges(g, f))) continue;
      EdgeSet fc = modulator_to_contraction(g, f, r);
      CHECK(static_cast<int>(fc.size()) <= r);
      CHECK(brute_bipartite(contract(g, fc).graph));
      ++checked;
    }
  }
  CHECK(checked > 1000);
}
