#include "bc/compression.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace bc {

PrimeGraph build_prime(const Graph& g, const VertexSet& x, const TwoColoring& sides) {
  const int n = g.num_vertices();
  if (static_cast<int>(sides.size()) != n) throw std::invalid_argument("side map size mismatch");
  std::vector<int> x_index(n, -1);
  for (int i = 0; i < static_cast<int>(x.size()); ++i) x_index[x[i]] = i;
  for (Vertex v = 0; v < n; ++v)
    if (x_index[v] < 0 && sides[v] != 1 && sides[v] != 2)
      throw std::invalid_argument("vertex outside X without a side");

  PrimeGraph pg;
  pg.transversal = x;
  pg.host_vertices = n;
  pg.host_edges = g.num_edges();
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    pg.first_copy.push_back(x[i]);
    pg.second_copy.push_back(n + i);
  }
  auto copy = [&](Vertex v, int which) { return which == 1 ? v : n + x_index[v]; };

  std::vector<Edge> edges;
  edges.reserve(g.num_edges() + x.size());
  for (const Edge& e : g.edges()) {
    const bool u_in = x_index[e.u] >= 0, v_in = x_index[e.v] >= 0;
    if (!u_in && !v_in) {
      if (sides[e.u] == sides[e.v]) throw std::invalid_argument("sides are not a bipartition of G \\ X");
      edges.push_back(e);
    } else if (u_in && v_in) {
      edges.push_back({copy(e.u, 1), copy(e.v, 2)});  // e.u < e.v
    } else {
      Vertex outside = u_in ? e.v : e.u;
      Vertex inside = u_in ? e.u : e.v;
      edges.push_back({outside, copy(inside, 3 - sides[outside])});
    }
  }
  const int vertices = n + static_cast<int>(x.size());
  pg.prime = Graph(vertices, edges);
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    pg.merged.push_back(g.num_edges() + i);
    edges.push_back({pg.first_copy[i], pg.second_copy[i]});
  }
  pg.augmented = Graph(vertices, std::move(edges));

  pg.side.assign(vertices, 0);
  for (Vertex v = 0; v < n; ++v) pg.side[v] = x_index[v] >= 0 ? 1 : sides[v];
  for (Vertex v : pg.second_copy) pg.side[v] = 2;
  return pg;
}

std::uint64_t valid_partition_count(const PrimeGraph& pg) {
  return std::uint64_t{1} << pg.transversal.size();
}

ValidPartition valid_partition(const PrimeGraph& pg, std::uint64_t index) {
  ValidPartition p;
  for (std::size_t i = 0; i < pg.transversal.size(); ++i) {
    const bool flipped = (index >> i) & 1;
    p.a.push_back(flipped ? pg.second_copy[i] : pg.first_copy[i]);
    p.b.push_back(flipped ? pg.first_copy[i] : pg.second_copy[i]);
  }
  p.a = make_set(std::move(p.a));
  p.b = make_set(std::move(p.b));
  return p;
}

std::vector<ValidPartition> valid_partitions(const PrimeGraph& pg) {
  std::vector<ValidPartition> out;
  for (std::uint64_t i = 0; i < valid_partition_count(pg); ++i) out.push_back(valid_partition(pg, i));
  return out;
}

namespace {

EdgeSet modulator_from_cut(const Graph& g, int k, const PrimeGraph& pg, const EdgeSet& cut) {
  for (EdgeId e : pg.merged)
    if (!set_contains(cut, e)) throw std::logic_error("rank-cut solution misses a merge edge");
  EdgeSet f;
  for (EdgeId e : cut)
    if (e < pg.host_edges) f.push_back(e);
  if (rank(g, f) > k || !two_color_without_edges(g, f))
    throw std::logic_error("translated modulator failed verification");
  return f;
}

}  // namespace

BccOutcome solve_bcc(const Graph& g, int k, const VertexSet& x_in, const RankCutBackend& backend,
                     int threads) {
  VertexSet x = make_set(x_in);
  if (k < 0 || static_cast<int>(x.size()) > 2 * k) throw std::invalid_argument("|X| exceeds 2k");
  auto sides = two_color_without_vertices(g, x);
  if (!sides) throw std::invalid_argument("G \\ X is not bipartite");
  PrimeGraph pg = build_prime(g, x, *sides);

  // Mirror images are skipped: with X nonempty only even indices are tried.
  const std::uint64_t total = valid_partition_count(pg);
  const std::uint64_t step = x.empty() ? 1 : 2;
  std::vector<std::uint64_t> indices;
  for (std::uint64_t i = 0; i < total; i += step) indices.push_back(i);

  auto run = [&](std::uint64_t index) {
    ValidPartition part = valid_partition(pg, index);
    RankCutInstance inst{pg.augmented, k, part.a, part.b, pg.merged};
    return backend(inst, index);
  };

  BccOutcome out;
  std::vector<std::optional<RankCutOutcome>> results(indices.size());
  if (threads <= 1 || indices.size() <= 1) {
    for (std::size_t i = 0; i < indices.size(); ++i) {
      results[i] = run(indices[i]);
      if (results[i]->cut) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{indices.size()};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= indices.size() || i > best.load()) return;
        try {
          results[i] = run(indices[i]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
        if (results[i]->cut) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    const int workers = std::min<int>(threads, static_cast<int>(indices.size()));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (!results[i]) continue;
    ++out.partitions_tried;
    out.iterations += results[i]->iterations;
    out.span_checks += results[i]->span_checks;
    out.exhaustive = out.exhaustive && results[i]->exhaustive;
    if (results[i]->cut && !out.modulator) {
      out.modulator = modulator_from_cut(g, k, pg, *results[i]->cut);
      out.partition = static_cast<std::int64_t>(indices[i]);
    }
  }
  return out;
}

}  // namespace bc
