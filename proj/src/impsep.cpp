#include "bc/impsep.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "bc/flow.hpp"

namespace bc {

namespace {

void require_disjoint(const VertexSet& x, const VertexSet& y) {
  for (Vertex v : x)
    if (set_contains(y, v)) throw std::invalid_argument("X and Y intersect at vertex " + std::to_string(v));
}

bool terminals_adjacent(const Graph& g, const VertexSet& x, const VertexSet& y) {
  auto in_y = vertex_mask(g.num_vertices(), y);
  for (Vertex v : x)
    for (EdgeId e : g.incident(v))
      if (in_y[g.opposite(e, v)]) return true;
  return false;
}

VertexSet mask_to_set(const std::vector<char>& mask) {
  VertexSet out;
  for (Vertex v = 0; v < static_cast<Vertex>(mask.size()); ++v)
    if (mask[v]) out.push_back(v);
  return out;
}

class ImportantEnumerator {
 public:
  ImportantEnumerator(const Graph& g, const VertexSet& y) : g_(g), y_(y) {}

  // Candidates are a superset of the important separators; the caller filters.
  void branch(std::vector<char> x, std::vector<char> removed, int budget) {
    std::string key(x.begin(), x.end());
    key.append(removed.begin(), removed.end());
    if (!visited_.insert(std::move(key)).second) return;

    const int n = g_.num_vertices();
    std::vector<std::int64_t> cap(n, 1);
    for (Vertex v = 0; v < n; ++v)
      if (removed[v]) cap[v] = kRemovedVertex;
    VertexSet sources = mask_to_set(x);
    auto cut = min_vertex_cut(g_, cap, sources, y_, budget, CutSide::kNearSinks);
    if (!cut) return;
    if (cut->value == 0) {
      candidates_.insert(mask_to_set(removed));
      return;
    }

    // Every important separator reaches at least as far as the farthest
    // minimum one, so the source side can be grown to its reach.
    std::vector<char> blocked = removed;
    for (Vertex v : cut->separator) blocked[v] = 1;
    std::vector<char> grown = reachable(g_, sources, {}, blocked);
    Vertex pivot = cut->separator.front();

    std::vector<char> with_pivot = grown;
    with_pivot[pivot] = 1;
    branch(std::move(with_pivot), removed, budget);

    removed[pivot] = 1;
    branch(std::move(grown), std::move(removed), budget - 1);
  }

  const std::set<VertexSet>& candidates() const { return candidates_; }

 private:
  const Graph& g_;
  const VertexSet& y_;
  std::set<std::string> visited_;
  std::set<VertexSet> candidates_;
};

}  // namespace

VertexSet reach_set(const Graph& g, const VertexSet& sources, const VertexSet& removed) {
  return mask_to_set(reachable(g, sources, {}, vertex_mask(g.num_vertices(), removed)));
}

bool is_separator(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& s) {
  for (Vertex v : s)
    if (set_contains(x, v) || set_contains(y, v)) return false;
  auto seen = reachable(g, x, {}, vertex_mask(g.num_vertices(), s));
  for (Vertex v : y)
    if (seen[v]) return false;
  return true;
}

std::optional<MinSeparator> min_separator(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_disjoint(x, y);
  if (terminals_adjacent(g, x, y)) return std::nullopt;
  auto cut = min_vertex_cut(g, {}, x, y, g.num_vertices(), CutSide::kNearSources);
  if (!cut) return std::nullopt;
  MinSeparator out;
  out.size = static_cast<int>(cut->value);
  out.record.separator = std::move(cut->separator);
  out.record.reach = reach_set(g, x, out.record.separator);
  return out;
}

bool is_important(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& s) {
  if (!is_separator(g, x, y, s)) return false;
  for (Vertex v : s) {
    VertexSet smaller;
    for (Vertex w : s)
      if (w != v) smaller.push_back(w);
    if (is_separator(g, x, y, smaller)) return false;
  }
  // Any dominating separator must reach some vertex of S; try each one.
  VertexSet reach = reach_set(g, x, s);
  for (Vertex v : s) {
    VertexSet grown = reach;
    grown.push_back(v);
    grown = make_set(std::move(grown));
    if (min_vertex_cut(g, {}, grown, y, static_cast<std::int64_t>(s.size()), CutSide::kNearSources))
      return false;
  }
  return true;
}

std::vector<SeparatorRecord> enumerate_important(const Graph& g, const VertexSet& x,
                                                 const VertexSet& y, int k) {
  require_disjoint(x, y);
  if (k < 0 || terminals_adjacent(g, x, y)) return {};
  const int n = g.num_vertices();
  ImportantEnumerator enumerator(g, y);
  enumerator.branch(vertex_mask(n, x), std::vector<char>(n, 0), k);

  std::vector<SeparatorRecord> out;
  for (const VertexSet& s : enumerator.candidates()) {
    if (!is_important(g, x, y, s)) continue;
    out.push_back({s, reach_set(g, x, s)});
  }
  return out;
}

}  // namespace bc
