#include "bc/constrained_cut.hpp"

#include <stdexcept>
#include <unordered_map>

#include "bc/flow.hpp"

namespace bc {

BlockPartition make_block_partition(const Graph& g, const EdgeSet& merged,
                                    const std::vector<int>& labels) {
  const int n = g.num_vertices();
  if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("partition label count mismatch");
  BlockPartition p;
  p.block_of.assign(n, -1);
  std::unordered_map<int, int> index;
  for (Vertex v = 0; v < n; ++v) {
    auto [it, fresh] = index.emplace(labels[v], static_cast<int>(p.blocks.size()));
    if (fresh) p.blocks.emplace_back();
    p.block_of[v] = it->second;
    p.blocks[it->second].push_back(v);
  }
  const int blocks = static_cast<int>(p.blocks.size());
  p.block_edges.assign(blocks, {});
  p.weight.assign(blocks, 0);

  UnionFind merged_uf(n);
  for (EdgeId e : merged) {
    const Edge& ed = g.edge(e);
    if (p.block_of[ed.u] != p.block_of[ed.v])
      throw std::invalid_argument("merge edge " + std::to_string(e) + " crosses blocks");
    merged_uf.unite(ed.u, ed.v);
  }
  UnionFind connectivity(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    int b = p.block_of[ed.u];
    if (b != p.block_of[ed.v]) continue;
    p.block_edges[b].push_back(e);
    connectivity.unite(ed.u, ed.v);
    // Blocks are vertex-disjoint, so the M-rank splits over blocks.
    p.weight[b] += merged_uf.unite(ed.u, ed.v);
  }
  for (const VertexSet& block : p.blocks) {
    int root = connectivity.find(block.front());
    for (Vertex v : block)
      if (connectivity.find(v) != root) throw std::invalid_argument("block is not connected");
  }
  return p;
}

BlockPartition partition_from_edges(const Graph& g, const EdgeSet& merged, const EdgeSet& edges) {
  UnionFind uf(g.num_vertices());
  for (EdgeId e : merged) uf.unite(g.edge(e).u, g.edge(e).v);
  for (EdgeId e : edges) uf.unite(g.edge(e).u, g.edge(e).v);
  std::vector<int> labels(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) labels[v] = uf.find(v);
  return make_block_partition(g, merged, labels);
}

Graph constrained_auxiliary_graph(const Graph& g, const BlockPartition& partition) {
  const int n = g.num_vertices();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (partition.block_of[e.u] != partition.block_of[e.v]) edges.push_back(e);
  for (int b = 0; b < static_cast<int>(partition.blocks.size()); ++b)
    for (Vertex v : partition.blocks[b]) edges.push_back({n + b, v});
  return Graph(n + static_cast<int>(partition.blocks.size()), std::move(edges));
}

std::optional<ConstrainedSolution> solve_constrained(const Graph& g, int k, const VertexSet& x,
                                                     const VertexSet& y, const EdgeSet& merged,
                                                     const BlockPartition& partition) {
  for (Vertex v : x)
    if (set_contains(y, v)) throw std::invalid_argument("X and Y intersect");
  if (k < 0) return std::nullopt;
  // Re-derive the partition from its labels to reject malformed input.
  BlockPartition checked = make_block_partition(g, merged, partition.block_of);
  if (checked.weight != partition.weight) throw std::invalid_argument("block weights are inconsistent");

  const int n = g.num_vertices();
  const int blocks = static_cast<int>(partition.blocks.size());
  Graph aux = constrained_auxiliary_graph(g, partition);
  // k + 1 already exceeds any admissible separator, so it acts as infinity.
  std::vector<std::int64_t> capacity(n + blocks, k + 1);
  for (int b = 0; b < blocks; ++b) capacity[n + b] = partition.weight[b];

  auto cut = min_vertex_cut(aux, capacity, x, y, k, CutSide::kNearSources);
  if (!cut) return std::nullopt;

  ConstrainedSolution sol;
  sol.weight = static_cast<int>(cut->value);
  for (Vertex v : cut->separator) {
    if (v < n) throw std::logic_error("original vertex in constrained separator");
    // Edgeless blocks weigh nothing and cut nothing.
    if (!partition.block_edges[v - n].empty()) sol.chosen.push_back(v - n);
  }
  for (int b : sol.chosen)
    sol.cut.insert(sol.cut.end(), partition.block_edges[b].begin(), partition.block_edges[b].end());
  sol.cut = make_set(std::move(sol.cut));
  return sol;
}

}  // namespace bc
