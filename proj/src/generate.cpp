#include "bc/generate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bc/random.hpp"

namespace bc {

namespace {

Graph from_pairs(int n, const std::set<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

std::pair<Vertex, Vertex> ordered(Vertex a, Vertex b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

void check_params(int n, double p) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
}

}  // namespace

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v < n; ++v) pairs.insert(ordered(v, (v + 1) % n));
  return from_pairs(n, pairs);
}

Graph complete_graph(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.insert({u, v});
  return from_pairs(n, pairs);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  check_params(n, p);
  SplitMix64 rng(derive_seed(seed, 0x67));
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (uniform01(rng) < p) pairs.insert({u, v});
  return from_pairs(n, pairs);
}

Graph random_bipartite(int n, double p, std::uint64_t seed) {
  check_params(n, p);
  SplitMix64 rng(derive_seed(seed, 0x62));
  std::vector<int> side(n);
  for (int& s : side) s = static_cast<int>(rng() & 1);
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (side[u] != side[v] && uniform01(rng) < p) pairs.insert({u, v});
  return from_pairs(n, pairs);
}

PlantedInstance plant_contractions(const Graph& base, int k, std::uint64_t seed) {
  const int n = base.num_vertices();
  if (k < 0 || k > n) throw std::invalid_argument("planted count must lie in [0, n]");
  if (!two_color(base)) throw std::invalid_argument("planting needs a bipartite base graph");

  SplitMix64 rng(derive_seed(seed, 0x70));
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::set<Vertex>> adj(n + k);
  for (const Edge& e : base.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  auto link = [&](Vertex a, Vertex b) { adj[a].insert(b), adj[b].insert(a); };
  auto unlink = [&](Vertex a, Vertex b) { adj[a].erase(b), adj[b].erase(a); };

  std::vector<std::pair<Vertex, Vertex>> planted;
  for (int i = 0; i < k; ++i) {
    const Vertex w = order[i];
    const Vertex twin = n + i;
    std::vector<Vertex> nbrs(adj[w].begin(), adj[w].end());
    std::shuffle(nbrs.begin(), nbrs.end(), rng);
    // nbrs[0] stays shared; the rest move to the twin with probability 1/2.
    for (std::size_t j = 1; j < nbrs.size(); ++j) {
      if (rng() & 1) {
        unlink(w, nbrs[j]);
        link(twin, nbrs[j]);
      }
    }
    if (!nbrs.empty()) link(twin, nbrs[0]);
    link(w, twin);
    planted.push_back({w, twin});
  }

  std::set<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n + k; ++u)
    for (Vertex v : adj[u])
      if (u < v) pairs.insert({u, v});
  PlantedInstance out{from_pairs(n + k, pairs), {}};
  for (auto [a, b] : planted) out.planted.push_back(*out.graph.find_edge(a, b));
  out.planted = make_set(std::move(out.planted));
  return out;
}

}  // namespace bc
