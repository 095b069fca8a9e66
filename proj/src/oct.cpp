#include "bc/oct.hpp"

#include <cassert>

#include "bc/flow.hpp"

namespace bc {

namespace {

// Given an odd cycle transversal `z` of G[active] with |z| = budget + 1, look
// for one of size <= budget. Each vertex of z is either deleted or kept on a
// fixed side; the remaining bipartite part is then fixed by a vertex cut that
// separates vertices forced to keep their side from vertices forced to flip.
std::optional<VertexSet> compress(const Graph& g, const std::vector<char>& active,
                                  const VertexSet& z, int budget) {
  const int n = g.num_vertices();
  std::vector<char> in_z(n, 0);
  for (Vertex v : z) in_z[v] = 1;

  std::vector<char> outside(n, 1);  // inactive or in z
  for (Vertex v = 0; v < n; ++v) outside[v] = !active[v] || in_z[v];
  VertexSet outside_set;
  for (Vertex v = 0; v < n; ++v)
    if (outside[v]) outside_set.push_back(v);
  auto rest_coloring = two_color_without_vertices(g, outside_set);
  assert(rest_coloring);

  // Local ids for the rest, plus two super terminals.
  std::vector<Vertex> local(n, -1);
  std::vector<Vertex> host;
  for (Vertex v = 0; v < n; ++v)
    if (!outside[v]) {
      local[v] = static_cast<Vertex>(host.size());
      host.push_back(v);
    }
  const int rest = static_cast<int>(host.size());
  std::vector<Edge> rest_edges;
  for (const Edge& e : g.edges())
    if (!outside[e.u] && !outside[e.v]) rest_edges.push_back({local[e.u], local[e.v]});

  const int zs = static_cast<int>(z.size());
  int total = 1;
  for (int i = 0; i < zs; ++i) total *= 3;

  std::vector<int> state(n, 0);  // for z vertices: 0 deleted, 1/2 kept color
  for (int code = 0; code < total; ++code) {
    int c = code, deleted = 0;
    for (int i = 0; i < zs; ++i) {
      state[z[i]] = c % 3;
      c /= 3;
      deleted += state[z[i]] == 0;
    }
    if (deleted > budget) continue;

    bool consistent = true;
    for (const Edge& e : g.edges()) {
      if (!in_z[e.u] || !in_z[e.v]) continue;
      if (state[e.u] != 0 && state[e.u] == state[e.v]) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;

    // keep: the rest vertex must have its own rest color; flip: the opposite.
    std::vector<char> want_keep(rest, 0), want_flip(rest, 0);
    for (const Edge& e : g.edges()) {
      Vertex a = e.u, b = e.v;
      if (in_z[b] && !outside[a]) std::swap(a, b);
      if (!in_z[a] || outside[b] || !active[a]) continue;
      if (state[a] == 0) continue;
      int needed = 3 - state[a];
      if ((*rest_coloring)[b] == needed)
        want_keep[local[b]] = 1;
      else
        want_flip[local[b]] = 1;
    }

    std::vector<Edge> aux = rest_edges;
    const Vertex s = rest, t = rest + 1;
    for (Vertex v = 0; v < rest; ++v) {
      if (want_keep[v]) aux.push_back({s, v});
      if (want_flip[v]) aux.push_back({v, t});
    }
    Graph aux_graph(rest + 2, std::move(aux));
    auto cut = min_vertex_cut(aux_graph, {}, {s}, {t}, budget - deleted, CutSide::kNearSources);
    if (!cut) continue;

    VertexSet solution;
    for (Vertex v : z)
      if (state[v] == 0) solution.push_back(v);
    for (Vertex v : cut->separator) solution.push_back(host[v]);
    return make_set(std::move(solution));
  }
  return std::nullopt;
}

std::optional<VertexSet> oct_with_budget(const Graph& g, int budget) {
  const int n = g.num_vertices();
  std::vector<char> active(n, 0);
  VertexSet x;
  for (Vertex v = 0; v < n; ++v) {
    active[v] = 1;
    std::vector<char> removed(n, 0);
    for (Vertex u = 0; u < n; ++u) removed[u] = !active[u];
    for (Vertex u : x) removed[u] = 1;
    VertexSet removed_set;
    for (Vertex u = 0; u < n; ++u)
      if (removed[u]) removed_set.push_back(u);
    if (two_color_without_vertices(g, removed_set)) continue;

    VertexSet z = x;
    z.push_back(v);
    z = make_set(std::move(z));
    if (static_cast<int>(z.size()) <= budget) {
      x = std::move(z);
      continue;
    }
    auto smaller = compress(g, active, z, budget);
    if (!smaller) return std::nullopt;
    x = std::move(*smaller);
  }
  return x;
}

}  // namespace

std::optional<OctResult> find_oct(const Graph& g, int budget) {
  if (budget < 0) return std::nullopt;
  for (int b = 0; b <= budget; ++b) {
    std::optional<VertexSet> x;
    if (b == 0) {
      if (two_color(g)) x = VertexSet{};
    } else {
      x = oct_with_budget(g, b);
    }
    if (!x) continue;
    auto coloring = two_color_without_vertices(g, *x);
    assert(coloring);
    return OctResult{std::move(*x), std::move(*coloring)};
  }
  return std::nullopt;
}

}  // namespace bc
