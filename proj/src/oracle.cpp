#include "bc/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bc::oracle {

namespace {

std::uint64_t binomial_prefix(int n, int k) {
  std::uint64_t total = 0, term = 1;
  for (int i = 0; i <= std::min(n, k); ++i) {
    total += term;
    term = term * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return total;
}

void check_vertices(const Graph& g, const OracleBudget& budget) {
  if (g.num_vertices() > budget.max_vertices)
    throw BudgetExceeded("oracle refuses graphs with more than " + std::to_string(budget.max_vertices) +
                         " vertices");
}

void check_count(std::uint64_t count, const OracleBudget& budget) {
  if (count > budget.max_subsets)
    throw BudgetExceeded("oracle would enumerate " + std::to_string(count) + " subsets");
}

void check_exponent(int bits, const OracleBudget& budget) {
  if (bits >= 63) throw BudgetExceeded("oracle enumeration too large");
  check_count(std::uint64_t{1} << bits, budget);
}

// Visits every subset of {0..n-1} with at most k elements, smallest first.
template <class Visit>
bool for_each_subset_up_to(int n, int k, Visit&& visit) {
  std::vector<int> pick;
  for (int size = 0; size <= std::min(n, k); ++size) {
    pick.resize(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      if (visit(pick)) return true;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

bool is_bipartite_graph(const Graph& g) { return two_color(g).has_value(); }

EdgeSet boundary(const Graph& g, const std::vector<char>& side) {
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (side[g.edge(e).u] != side[g.edge(e).v]) out.push_back(e);
  return out;
}

VertexSet free_vertices(const Graph& g, const VertexSet& x, const VertexSet& y) {
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!set_contains(x, v) && !set_contains(y, v)) out.push_back(v);
  return out;
}

bool proper_superset(const VertexSet& big, const VertexSet& small) {
  return big.size() > small.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

int m_rank_by_contraction(const Graph& g, const EdgeSet& edges, const EdgeSet& merged) {
  EdgeSet all = edges;
  all.insert(all.end(), merged.begin(), merged.end());
  all = make_set(std::move(all));
  std::vector<Edge> sub_edges;
  EdgeSet merged_in_sub;
  for (EdgeId e : all) {
    if (set_contains(merged, e)) merged_in_sub.push_back(static_cast<EdgeId>(sub_edges.size()));
    sub_edges.push_back(g.edge(e));
  }
  Graph sub(g.num_vertices(), std::move(sub_edges));
  Contraction c = contract(sub, merged_in_sub);
  // Rank of a graph: vertices minus components.
  UnionFind uf(c.graph.num_vertices());
  int components = c.graph.num_vertices();
  for (const Edge& e : c.graph.edges()) components -= uf.unite(e.u, e.v);
  return c.graph.num_vertices() - components;
}

std::optional<EdgeSet> brute_bc(const Graph& g, int k, const OracleBudget& budget) {
  check_vertices(g, budget);
  const int m = g.num_edges();
  if (std::min(k, m) > budget.max_k) throw BudgetExceeded("oracle k too large");
  check_count(binomial_prefix(m, k), budget);
  std::optional<EdgeSet> found;
  for_each_subset_up_to(m, k, [&](const std::vector<int>& pick) {
    EdgeSet f(pick.begin(), pick.end());
    if (!is_bipartite_graph(contract(g, f).graph)) return false;
    found = std::move(f);
    return true;
  });
  return found;
}

std::optional<EdgeSet> brute_modulator(const Graph& g, int k, const OracleBudget& budget) {
  check_vertices(g, budget);
  const int m = g.num_edges();
  check_exponent(m, budget);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    EdgeSet f;
    for (int e = 0; e < m; ++e)
      if ((mask >> e) & 1) f.push_back(e);
    if (rank(g, f) > k) continue;
    if (two_color_without_edges(g, f)) return f;
  }
  return std::nullopt;
}

std::optional<EdgeSet> brute_rank_cut(const RankCutInstance& inst, const OracleBudget& budget) {
  const Graph& g = inst.graph;
  check_vertices(g, budget);
  for (Vertex v : inst.x)
    if (set_contains(inst.y, v)) return std::nullopt;
  VertexSet free = free_vertices(g, inst.x, inst.y);
  check_exponent(static_cast<int>(free.size()), budget);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    std::vector<char> side = vertex_mask(g.num_vertices(), inst.x);
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((mask >> i) & 1) side[free[i]] = 1;
    EdgeSet cut = boundary(g, side);
    if (m_rank_by_contraction(g, cut, inst.merged) <= inst.k) return cut;
  }
  return std::nullopt;
}

std::vector<EdgeSet> brute_minimal_solutions(const RankCutInstance& inst, const OracleBudget& budget) {
  const Graph& g = inst.graph;
  check_vertices(g, budget);
  VertexSet free = free_vertices(g, inst.x, inst.y);
  check_exponent(static_cast<int>(free.size()), budget);
  std::set<EdgeSet> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    std::vector<char> side = vertex_mask(g.num_vertices(), inst.x);
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((mask >> i) & 1) side[free[i]] = 1;
    EdgeSet cut = boundary(g, side);
    if (found.count(cut)) continue;
    if (!is_cut(g, cut, inst.x, inst.y)) continue;
    bool minimal = true;
    for (EdgeId e : cut) {
      EdgeSet smaller;
      for (EdgeId f : cut)
        if (f != e) smaller.push_back(f);
      if (is_cut(g, smaller, inst.x, inst.y)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    if (m_rank_by_contraction(g, cut, inst.merged) > inst.k) continue;
    found.insert(std::move(cut));
  }
  return {found.begin(), found.end()};
}

std::vector<SeparatorRecord> brute_important(const Graph& g, const VertexSet& x, const VertexSet& y,
                                             int k, const OracleBudget& budget) {
  check_vertices(g, budget);
  for (Vertex v : x)
    if (set_contains(y, v)) throw std::invalid_argument("X and Y intersect");
  VertexSet free = free_vertices(g, x, y);
  check_count(binomial_prefix(static_cast<int>(free.size()), k), budget);

  std::vector<SeparatorRecord> separators;
  for_each_subset_up_to(static_cast<int>(free.size()), k, [&](const std::vector<int>& pick) {
    VertexSet s;
    for (int i : pick) s.push_back(free[i]);
    if (is_separator(g, x, y, s)) separators.push_back({s, reach_set(g, x, s)});
    return false;
  });

  std::vector<SeparatorRecord> out;
  for (const SeparatorRecord& cand : separators) {
    bool minimal = true;
    for (Vertex v : cand.separator) {
      VertexSet smaller;
      for (Vertex w : cand.separator)
        if (w != v) smaller.push_back(w);
      if (is_separator(g, x, y, smaller)) minimal = false;
    }
    if (!minimal) continue;
    bool dominated = false;
    for (const SeparatorRecord& other : separators)
      if (other.separator.size() <= cand.separator.size() && proper_superset(other.reach, cand.reach))
        dominated = true;
    if (!dominated) out.push_back(cand);
  }
  std::sort(out.begin(), out.end(),
            [](const SeparatorRecord& a, const SeparatorRecord& b) { return a.separator < b.separator; });
  return out;
}

std::optional<std::vector<int>> brute_constrained(const Graph& g, int k, const VertexSet& x,
                                                  const VertexSet& y, const EdgeSet& merged,
                                                  const BlockPartition& partition,
                                                  const OracleBudget& budget) {
  const int blocks = static_cast<int>(partition.blocks.size());
  check_exponent(blocks, budget);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks); ++mask) {
    std::vector<int> chosen;
    EdgeSet cut;
    for (int b = 0; b < blocks; ++b) {
      if (!((mask >> b) & 1)) continue;
      chosen.push_back(b);
      for (Vertex u : partition.blocks[b])
        for (Vertex v : partition.blocks[b])
          if (u < v)
            if (auto e = g.find_edge(u, v)) cut.push_back(*e);
    }
    cut = make_set(std::move(cut));
    if (is_cut(g, cut, x, y) && m_rank_by_contraction(g, cut, merged) <= k) return chosen;
  }
  return std::nullopt;
}

}  // namespace bc::oracle
