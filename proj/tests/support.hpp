#pragma once

// Small helpers shared by the test binaries: literal graphs, random
// instances, and brute-force checks that avoid the library's own routines.

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bc/generate.hpp"
#include "bc/graph.hpp"
#include "bc/random.hpp"

namespace bc::test {

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline EdgeSet ids_of(const Graph& g, std::initializer_list<std::pair<int, int>> pairs) {
  EdgeSet out;
  for (auto [u, v] : pairs) out.push_back(*g.find_edge(u, v));
  return make_set(std::move(out));
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

// Bipartite by trying all 2^n sides.
inline bool brute_bipartite(const Graph& g) {
  const int n = g.num_vertices();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (const Edge& e : g.edges())
      if (((mask >> e.u) & 1) == ((mask >> e.v) & 1)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

inline Graph without_edges(const Graph& g, const EdgeSet& f) {
  std::vector<Edge> kept;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!set_contains(f, e)) kept.push_back(g.edge(e));
  return Graph(g.num_vertices(), std::move(kept));
}

// Vertices touched by F minus components of (V(F), F), by plain DFS.
inline int brute_rank(const Graph& g, const EdgeSet& f) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> adj(n);
  std::vector<char> touched(n, 0);
  for (EdgeId e : f) {
    adj[g.edge(e).u].push_back(g.edge(e).v);
    adj[g.edge(e).v].push_back(g.edge(e).u);
    touched[g.edge(e).u] = touched[g.edge(e).v] = 1;
  }
  std::vector<char> seen(n, 0);
  int vertices = 0, components = 0;
  for (int s = 0; s < n; ++s) {
    if (!touched[s] || seen[s]) continue;
    ++components;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++vertices;
      for (int w : adj[v])
        if (!seen[w]) seen[w] = 1, stack.push_back(w);
    }
  }
  return vertices - components;
}

inline EdgeSet edges_of_mask(std::uint64_t mask, int m) {
  EdgeSet out;
  for (int e = 0; e < m; ++e)
    if ((mask >> e) & 1) out.push_back(e);
  return out;
}

inline VertexSet random_subset(SplitMix64& rng, int n, double p) {
  VertexSet out;
  for (int v = 0; v < n; ++v)
    if (uniform01(rng) < p) out.push_back(v);
  return out;
}

}  // namespace bc::test
