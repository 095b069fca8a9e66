#pragma once

#include <cstdint>

#include "bc/graph.hpp"

namespace bc {

Graph cycle_graph(int n);
Graph complete_graph(int n);

// G(n, p). Deterministic in (n, p, seed).
Graph random_graph(int n, double p, std::uint64_t seed);

// Random side per vertex, then each cross pair an edge with probability p.
Graph random_bipartite(int n, double p, std::uint64_t seed);

struct PlantedInstance {
  Graph graph;
  EdgeSet planted;  // contracting these gives back the base graph
};

// Splits k distinct vertices w of a bipartite base into w - w' and hands
// w' a random part of w's neighborhood plus one shared neighbor, which closes
// a triangle. Contracting the k new edges restores the base, so the result is
// a yes-instance at k. Throws std::invalid_argument if the base is not
// bipartite or has fewer than k vertices.
PlantedInstance plant_contractions(const Graph& base, int k, std::uint64_t seed);

}  // namespace bc
