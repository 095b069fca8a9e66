#include <doctest.h>

#include "bc/generate.hpp"
#include "bc/io.hpp"
#include "bc/oracle.hpp"
#include "support.hpp"

using namespace bc;
using namespace bc::test;

TEST_CASE("fixed families") {
  CHECK(cycle_graph(5).num_edges() == 5);
  CHECK(complete_graph(5).num_edges() == 10);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("random graphs are deterministic and respect p") {
  CHECK(format_graph(random_graph(12, 0.3, 5)) == format_graph(random_graph(12, 0.3, 5)));
  CHECK(format_graph(random_graph(12, 0.3, 5)) != format_graph(random_graph(12, 0.3, 6)));
  CHECK(random_graph(6, 0.0, 1).num_edges() == 0);
  CHECK(random_graph(6, 1.0, 1).num_edges() == 15);
  CHECK_THROWS_AS(random_graph(5, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_graph(-1, 0.5, 1), std::invalid_argument);

  Graph big = random_graph(200, 0.1, 3);
  const double expected = 0.1 * 200 * 199 / 2;
  CHECK(std::abs(big.num_edges() - expected) < 4 * std::sqrt(expected));

  for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK(two_color(random_bipartite(10, 0.5, seed)));
}

TEST_CASE("planted instances") {
  PlantedInstance c4 = plant_contractions(cycle_graph(4), 1, 3);
  CHECK(c4.planted.size() == 1);
  CHECK(oracle::brute_bc(c4.graph, 1).has_value());

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int k = static_cast<int>(seed % 4);
    Graph base = random_bipartite(6, 0.5, seed);
    PlantedInstance p = plant_contractions(base, k, seed);
    CHECK(p.graph.num_vertices() == 6 + k);
    CHECK(static_cast<int>(p.planted.size()) == k);
    CHECK(two_color(contract(p.graph, p.planted).graph));
    Graph restored = contract(p.graph, p.planted).graph;
    CHECK(restored.num_edges() == base.num_edges());
  }
  CHECK_THROWS_AS(plant_contractions(cycle_graph(5), 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(plant_contractions(cycle_graph(4), 5, 0), std::invalid_argument);
}
