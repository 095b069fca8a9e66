#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bc {

using Vertex = int;
using EdgeId = int;

// Sets are kept as sorted, duplicate-free vectors.
using VertexSet = std::vector<Vertex>;
using EdgeSet = std::vector<EdgeId>;

// Color per vertex, 1 or 2. Vertices outside the colored subgraph carry 0.
using TwoColoring = std::vector<int>;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Undirected simple graph. Edge ids are positions in the construction list
// and are stable across every derived graph that preserves edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  Vertex opposite(EdgeId e, Vertex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<EdgeId> incidence_;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns false when a and b were already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

template <class T>
std::vector<T> make_set(std::vector<T> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

template <class T>
bool set_contains(const std::vector<T>& set, const T& x) {
  return std::binary_search(set.begin(), set.end(), x);
}

std::vector<char> vertex_mask(int n, const VertexSet& set);
std::vector<char> edge_mask(const Graph& g, const EdgeSet& set);

// Vertices spanned by F, i.e. V(F).
VertexSet spanned_vertices(const Graph& g, const EdgeSet& edges);

// Proper 2-coloring of the whole graph if one exists. The lowest-id vertex of
// every component gets color 1.
std::optional<TwoColoring> two_color(const Graph& g);
// Same, for G minus an edge set.
std::optional<TwoColoring> two_color_without_edges(const Graph& g, const EdgeSet& removed);
// Same, for G minus a vertex set; removed vertices are colored 0.
std::optional<TwoColoring> two_color_without_vertices(const Graph& g, const VertexSet& removed);

bool is_proper_coloring(const Graph& g, const TwoColoring& coloring);

// Number of edges in a spanning forest of G[F].
int rank(const Graph& g, const EdgeSet& edges);
// Rank of G[F u M] / M, computed as r(F u M) - r(M).
int m_rank(const Graph& g, const EdgeSet& edges, const EdgeSet& merged);

struct Contraction {
  Graph graph;
  // Host vertex -> contracted vertex. Contracted ids are assigned in order of
  // first appearance while scanning host vertices by id.
  std::vector<Vertex> map;
};

// G/F as a simple graph: loops dropped, parallel edges merged.
Contraction contract(const Graph& g, const EdgeSet& edges);

struct Subdivision {
  Graph graph;
  // Edge e of the host is replaced by (u, z_e) with id 2e and (z_e, v) with
  // id 2e+1, where z_e = edge_vertex[e] = n + e.
  std::vector<Vertex> edge_vertex;
};

Subdivision subdivide(const Graph& g);

struct IsolatedRemoval {
  Graph graph;
  std::vector<Vertex> to_sub;   // -1 for dropped vertices
  std::vector<Vertex> to_host;
};

// Drops degree-0 vertices. Edge ids are unchanged.
IsolatedRemoval drop_isolated(const Graph& g);

// Vertices reachable from sources in G minus the given edges and vertices.
// Removed sources are not expanded.
std::vector<char> reachable(const Graph& g, const VertexSet& sources,
                            const std::vector<char>& removed_edges,
                            const std::vector<char>& removed_vertices);

// True iff G \ C has no path between sources and sinks.
bool is_cut(const Graph& g, const EdgeSet& cut, const VertexSet& sources, const VertexSet& sinks);

// Turns a bipartite modulator F with r(F) <= k into a contraction set F' with
// |F'| <= k and G/F' bipartite: keep only the edges of F that are monochromatic
// under a coloring of G \ F and take a spanning forest of them.
// Throws std::invalid_argument if G \ F is not bipartite or r(F) > k.
EdgeSet modulator_to_contraction(const Graph& g, const EdgeSet& modulator, int k);

}  // namespace bc
