#include "bc/graph.hpp"

#include <unordered_set>

namespace bc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw GraphError("negative vertex count");
  std::unordered_set<std::int64_t> seen;
  seen.reserve(edges_.size() * 2);
  std::vector<int> degree(n, 0);
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.insert(static_cast<std::int64_t>(e.u) * n + e.v).second)
      throw GraphError("parallel edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  incidence_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < num_edges(); ++id) {
    incidence_[fill[edges_[id].u]++] = id;
    incidence_[fill[edges_[id].v]++] = id;
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (degree(b) < degree(a)) std::swap(a, b);
  for (EdgeId e : incident(a))
    if (opposite(e, a) == b) return e;
  return std::nullopt;
}

std::vector<char> vertex_mask(int n, const VertexSet& set) {
  std::vector<char> mask(n, 0);
  for (Vertex v : set) mask[v] = 1;
  return mask;
}

std::vector<char> edge_mask(const Graph& g, const EdgeSet& set) {
  std::vector<char> mask(g.num_edges(), 0);
  for (EdgeId e : set) mask[e] = 1;
  return mask;
}

VertexSet spanned_vertices(const Graph& g, const EdgeSet& edges) {
  VertexSet out;
  out.reserve(edges.size() * 2);
  for (EdgeId e : edges) {
    out.push_back(g.edge(e).u);
    out.push_back(g.edge(e).v);
  }
  return make_set(std::move(out));
}

namespace {

std::optional<TwoColoring> two_color_masked(const Graph& g, const std::vector<char>& removed_edges,
                                            const std::vector<char>& removed_vertices) {
  const int n = g.num_vertices();
  TwoColoring color(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != 0 || (!removed_vertices.empty() && removed_vertices[root])) continue;
    color[root] = 1;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (EdgeId e : g.incident(v)) {
        if (!removed_edges.empty() && removed_edges[e]) continue;
        Vertex w = g.opposite(e, v);
        if (!removed_vertices.empty() && removed_vertices[w]) continue;
        if (color[w] == 0) {
          color[w] = 3 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace

std::optional<TwoColoring> two_color(const Graph& g) { return two_color_masked(g, {}, {}); }

std::optional<TwoColoring> two_color_without_edges(const Graph& g, const EdgeSet& removed) {
  return two_color_masked(g, edge_mask(g, removed), {});
}

std::optional<TwoColoring> two_color_without_vertices(const Graph& g, const VertexSet& removed) {
  return two_color_masked(g, {}, vertex_mask(g.num_vertices(), removed));
}

bool is_proper_coloring(const Graph& g, const TwoColoring& coloring) {
  if (static_cast<int>(coloring.size()) != g.num_vertices()) return false;
  for (int c : coloring)
    if (c != 1 && c != 2) return false;
  for (const Edge& e : g.edges())
    if (coloring[e.u] == coloring[e.v]) return false;
  return true;
}

int rank(const Graph& g, const EdgeSet& edges) {
  UnionFind uf(g.num_vertices());
  int r = 0;
  for (EdgeId e : edges) r += uf.unite(g.edge(e).u, g.edge(e).v);
  return r;
}

int m_rank(const Graph& g, const EdgeSet& edges, const EdgeSet& merged) {
  UnionFind uf(g.num_vertices());
  for (EdgeId e : merged) uf.unite(g.edge(e).u, g.edge(e).v);
  // Unions that still succeed after M is in place are exactly r(F u M) - r(M).
  int extra = 0;
  for (EdgeId e : edges) extra += uf.unite(g.edge(e).u, g.edge(e).v);
  return extra;
}

Contraction contract(const Graph& g, const EdgeSet& edges) {
  const int n = g.num_vertices();
  UnionFind uf(n);
  for (EdgeId e : edges) uf.unite(g.edge(e).u, g.edge(e).v);
  std::vector<Vertex> root_id(n, -1);
  std::vector<Vertex> map(n);
  int count = 0;
  for (Vertex v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (root_id[r] < 0) root_id[r] = count++;
    map[v] = root_id[r];
  }
  std::unordered_set<std::int64_t> seen;
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    Vertex a = map[e.u], b = map[e.v];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (seen.insert(static_cast<std::int64_t>(a) * count + b).second) out.push_back({a, b});
  }
  return {Graph(count, std::move(out)), std::move(map)};
}

Subdivision subdivide(const Graph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  std::vector<Edge> out;
  out.reserve(2 * m);
  std::vector<Vertex> edge_vertex(m);
  for (EdgeId e = 0; e < m; ++e) {
    edge_vertex[e] = n + e;
    out.push_back({g.edge(e).u, n + e});
    out.push_back({n + e, g.edge(e).v});
  }
  return {Graph(n + m, std::move(out)), std::move(edge_vertex)};
}

IsolatedRemoval drop_isolated(const Graph& g) {
  IsolatedRemoval out;
  out.to_sub.assign(g.num_vertices(), -1);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) continue;
    out.to_sub[v] = static_cast<Vertex>(out.to_host.size());
    out.to_host.push_back(v);
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({out.to_sub[e.u], out.to_sub[e.v]});
  out.graph = Graph(static_cast<int>(out.to_host.size()), std::move(edges));
  return out;
}

std::vector<char> reachable(const Graph& g, const VertexSet& sources,
                            const std::vector<char>& removed_edges,
                            const std::vector<char>& removed_vertices) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack;
  for (Vertex s : sources) {
    if (!removed_vertices.empty() && removed_vertices[s]) continue;
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      if (!removed_edges.empty() && removed_edges[e]) continue;
      Vertex w = g.opposite(e, v);
      if (seen[w] || (!removed_vertices.empty() && removed_vertices[w])) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return seen;
}

bool is_cut(const Graph& g, const EdgeSet& cut, const VertexSet& sources, const VertexSet& sinks) {
  auto seen = reachable(g, sources, edge_mask(g, cut), {});
  for (Vertex t : sinks)
    if (seen[t]) return false;
  return true;
}

EdgeSet modulator_to_contraction(const Graph& g, const EdgeSet& modulator, int k) {
  auto coloring = two_color_without_edges(g, modulator);
  if (!coloring) throw std::invalid_argument("modulator does not leave a bipartite graph");
  if (rank(g, modulator) > k) throw std::invalid_argument("modulator rank exceeds k");

  // Bichromatic edges of F can be put back; what remains is monochromatic, so
  // every component of it is one color class and contracts cleanly.
  UnionFind uf(g.num_vertices());
  EdgeSet forest;
  for (EdgeId e : modulator) {
    const Edge& ed = g.edge(e);
    if ((*coloring)[ed.u] != (*coloring)[ed.v]) continue;
    if (uf.unite(ed.u, ed.v)) forest.push_back(e);
  }
  return forest;
}

}  // namespace bc
