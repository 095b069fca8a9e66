#include "bc/flow.hpp"

#include <algorithm>
#include <vector>

namespace bc {

namespace {

struct Arc {
  int to;
  int rev;
  std::int64_t residual;
};

class Network {
 public:
  explicit Network(int nodes) : adj_(nodes) {}

  void add_arc(int from, int to, std::int64_t cap) {
    adj_[from].push_back({to, static_cast<int>(adj_[to].size()), cap});
    adj_[to].push_back({from, static_cast<int>(adj_[from].size()) - 1, 0});
  }

  // One BFS augmentation; returns the amount pushed (0 if no path).
  std::int64_t augment(int s, int t) {
    const int n = static_cast<int>(adj_.size());
    std::vector<int> prev_node(n, -1), prev_arc(n, -1);
    std::vector<int> queue{s};
    prev_node[s] = s;
    for (std::size_t head = 0; head < queue.size() && prev_node[t] < 0; ++head) {
      int v = queue[head];
      for (int i = 0; i < static_cast<int>(adj_[v].size()); ++i) {
        const Arc& a = adj_[v][i];
        if (a.residual <= 0 || prev_node[a.to] >= 0) continue;
        prev_node[a.to] = v;
        prev_arc[a.to] = i;
        queue.push_back(a.to);
      }
    }
    if (prev_node[t] < 0) return 0;
    std::int64_t bottleneck = kUncuttable;
    for (int v = t; v != s; v = prev_node[v])
      bottleneck = std::min(bottleneck, adj_[prev_node[v]][prev_arc[v]].residual);
    for (int v = t; v != s; v = prev_node[v]) {
      Arc& a = adj_[prev_node[v]][prev_arc[v]];
      a.residual -= bottleneck;
      adj_[v][a.rev].residual += bottleneck;
    }
    return bottleneck;
  }

  std::vector<char> forward_reach(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arc& a : adj_[v])
        if (a.residual > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
    }
    return seen;
  }

  // Nodes that can still reach t in the residual network.
  std::vector<char> backward_reach(int t) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{t};
    seen[t] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arc& a : adj_[v]) {
        // a is v->w; the paired arc w->v has residual adj_[w][a.rev].
        if (seen[a.to] || adj_[a.to][a.rev].residual <= 0) continue;
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
    }
    return seen;
  }

 private:
  std::vector<std::vector<Arc>> adj_;
};

}  // namespace

std::optional<VertexCut> min_vertex_cut(const Graph& g, std::span<const std::int64_t> capacity,
                                        const VertexSet& sources, const VertexSet& sinks,
                                        std::int64_t limit, CutSide side) {
  const int n = g.num_vertices();
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };
  const int s = 2 * n, t = 2 * n + 1;

  std::vector<char> terminal(n, 0);
  for (Vertex v : sources) terminal[v] = 1;
  for (Vertex v : sinks) terminal[v] = 1;
  auto cap_of = [&](Vertex v) -> std::int64_t {
    std::int64_t c = capacity.empty() ? 1 : capacity[v];
    if (c == kRemovedVertex) return kRemovedVertex;
    return terminal[v] ? kUncuttable : c;
  };

  Network net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) {
    std::int64_t c = cap_of(v);
    if (c == kRemovedVertex) continue;
    net.add_arc(in(v), out(v), c);
  }
  for (const Edge& e : g.edges()) {
    if (cap_of(e.u) == kRemovedVertex || cap_of(e.v) == kRemovedVertex) continue;
    net.add_arc(out(e.u), in(e.v), kUncuttable);
    net.add_arc(out(e.v), in(e.u), kUncuttable);
  }
  for (Vertex v : sources)
    if (cap_of(v) != kRemovedVertex) net.add_arc(s, in(v), kUncuttable);
  for (Vertex v : sinks)
    if (cap_of(v) != kRemovedVertex) net.add_arc(out(v), t, kUncuttable);

  std::int64_t flow = 0;
  while (std::int64_t pushed = net.augment(s, t)) {
    flow += pushed;
    if (flow > limit) return std::nullopt;
  }

  VertexCut cut;
  cut.value = flow;
  if (side == CutSide::kNearSources) {
    auto seen = net.forward_reach(s);
    for (Vertex v = 0; v < n; ++v)
      if (seen[in(v)] && !seen[out(v)]) cut.separator.push_back(v);
  } else {
    auto seen = net.backward_reach(t);
    for (Vertex v = 0; v < n; ++v)
      if (seen[out(v)] && !seen[in(v)]) cut.separator.push_back(v);
  }
  return cut;
}

}  // namespace bc
