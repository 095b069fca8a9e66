#include "bc/rank_cut.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "bc/impsep.hpp"

namespace bc {

void validate(const RankCutInstance& inst) {
  const int n = inst.graph.num_vertices();
  for (Vertex v : inst.x)
    if (v < 0 || v >= n) throw std::invalid_argument("X vertex out of range");
  for (Vertex v : inst.y)
    if (v < 0 || v >= n) throw std::invalid_argument("Y vertex out of range");
  for (EdgeId e : inst.merged)
    if (e < 0 || e >= inst.graph.num_edges()) throw std::invalid_argument("merge edge out of range");
  for (Vertex v : inst.x)
    if (set_contains(inst.y, v)) throw std::invalid_argument("X and Y intersect");
  if (inst.k < 0) throw std::invalid_argument("negative k");
  if (static_cast<int>(inst.merged.size()) > 2 * inst.k)
    throw std::invalid_argument("more than 2k merge edges");
}

bool verify_cut(const RankCutInstance& inst, const EdgeSet& cut) {
  for (EdgeId e : cut)
    if (e < 0 || e >= inst.graph.num_edges()) return false;
  return is_cut(inst.graph, cut, inst.x, inst.y) && m_rank(inst.graph, cut, inst.merged) <= inst.k;
}

bool solution_span_holds(const Graph& g, const EdgeSet& cut, const EdgeSet& merged, int k) {
  if (static_cast<int>(merged.size()) > 2 * k || m_rank(g, cut, merged) > k) return true;
  EdgeSet all = cut;
  all.insert(all.end(), merged.begin(), merged.end());
  return static_cast<int>(spanned_vertices(g, make_set(std::move(all))).size()) <= 6 * k;
}

RankCutInstance without_isolated(const RankCutInstance& inst) {
  IsolatedRemoval removal = drop_isolated(inst.graph);
  RankCutInstance out;
  out.graph = std::move(removal.graph);
  out.k = inst.k;
  out.merged = inst.merged;
  for (Vertex v : inst.x)
    if (removal.to_sub[v] >= 0) out.x.push_back(removal.to_sub[v]);
  for (Vertex v : inst.y)
    if (removal.to_sub[v] >= 0) out.y.push_back(removal.to_sub[v]);
  out.x = make_set(std::move(out.x));
  out.y = make_set(std::move(out.y));
  return out;
}

RelevantEdges relevant_edges(const RankCutInstance& inst) {
  const Graph& g = inst.graph;
  const int n = g.num_vertices();
  Subdivision sub = subdivide(g);
  RelevantEdges rel;
  rel.per_vertex.assign(n, {});

  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) == 0) continue;
    std::vector<char> hit(sub.graph.num_vertices(), 0);
    // The subdivision vertices around u form a separator with the largest
    // possible reach, so no important separator is larger than deg(u).
    const int budget = std::min(6 * inst.k, g.degree(u));
    for (const VertexSet* side : {&inst.x, &inst.y}) {
      if (set_contains(*side, u)) continue;
      for (const SeparatorRecord& rec : enumerate_important(sub.graph, *side, {u}, budget))
        for (Vertex v : rec.separator) hit[v] = 1;
    }
    for (EdgeId e : g.incident(u))
      if (hit[sub.edge_vertex[e]]) rel.per_vertex[u].push_back(e);
    std::sort(rel.per_vertex[u].begin(), rel.per_vertex[u].end());
  }

  std::vector<int> degree(n, 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (set_contains(rel.per_vertex[ed.u], e) && set_contains(rel.per_vertex[ed.v], e)) {
      rel.edges.push_back(e);
      rel.max_degree = std::max({rel.max_degree, ++degree[ed.u], ++degree[ed.v]});
    }
  }
  return rel;
}

double black_probability(int k, int max_degree) {
  if (k <= 0 || max_degree <= 0) return 1.0;
  return 1.0 / (6.0 * k * max_degree);
}

Coloring make_coloring(const RankCutInstance& inst, EdgeSet black) {
  Coloring c;
  c.partition = partition_from_edges(inst.graph, inst.merged, black);
  c.black = std::move(black);
  return c;
}

std::optional<EdgeSet> try_coloring(const RankCutInstance& inst, const Coloring& coloring) {
  auto sol = solve_constrained(inst.graph, inst.k, inst.x, inst.y, inst.merged, coloring.partition);
  if (!sol) return std::nullopt;
  if (!verify_cut(inst, sol->cut)) throw std::logic_error("constrained solution failed verification");
  if (!solution_span_holds(inst.graph, sol->cut, inst.merged, inst.k))
    throw std::logic_error("solution spans more than 6k vertices");
  return std::move(sol->cut);
}

std::int64_t default_iteration_budget(double p, int k, std::int64_t cap) {
  if (k <= 0 || p >= 1.0) return 1;
  double rounds = std::ceil(4.0 / std::pow(p, k));
  if (!(rounds < static_cast<double>(cap))) return cap;
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(rounds));
}

namespace {

EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

RankCutOutcome single_round(const RankCutInstance& inst) {
  RankCutOutcome out;
  out.iterations = 1;
  out.budget = 1;
  out.cut = try_coloring(inst, make_coloring(inst, {}));
  out.span_checks = out.cut ? 1 : 0;
  return out;
}

}  // namespace

RankCutOutcome solve_randomized(const RankCutInstance& original, std::uint64_t seed,
                                const RandomizedOptions& options) {
  validate(original);
  RankCutInstance inst = without_isolated(original);
  if (inst.k == 0) return single_round(inst);

  RelevantEdges rel = relevant_edges(inst);
  EdgeSet merged = make_set(inst.merged);
  EdgeSet candidates = set_difference(rel.edges, merged);
  if (candidates.empty()) {
    RankCutOutcome out = single_round(inst);
    out.max_degree = rel.max_degree;
    return out;
  }

  RankCutOutcome out;
  out.max_degree = rel.max_degree;
  out.probability = black_probability(inst.k, rel.max_degree);
  out.budget = options.max_iters ? *options.max_iters
                                 : default_iteration_budget(out.probability, inst.k, options.iteration_cap);
  out.exhaustive = false;

  // A round's outcome depends only on the black set; failures are remembered.
  constexpr std::size_t kMaxRemembered = 1 << 20;
  std::set<EdgeSet> failed;
  for (std::int64_t it = 0; it < out.budget; ++it) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(it)));
    EdgeSet black = sample_black(candidates, out.probability, rng);
    out.iterations = it + 1;
    if (failed.count(black)) continue;
    Coloring coloring = make_coloring(inst, black);
    if (auto cut = try_coloring(inst, coloring)) {
      out.cut = std::move(cut);
      ++out.span_checks;
      return out;
    }
    if (failed.size() < kMaxRemembered) failed.insert(std::move(coloring.black));
  }
  return out;
}

}  // namespace bc
