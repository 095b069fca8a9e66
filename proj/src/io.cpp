#include "bc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace bc {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

long long parse_nonneg(const std::string& tok, int line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" + tok + "'");
  return value;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line)) throw ParseError("empty input");
  auto header = split_ws(line);
  if (header.size() != 3 || header[0] != "p") throw ParseError("line 1: expected 'p <n> <m>'");
  const long long n = parse_nonneg(header[1], 1);
  const long long m = parse_nonneg(header[2], 1);
  if (n > (1 << 28) || m > (1LL << 30)) throw ParseError("line 1: graph too large");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::unordered_set<long long> seen;
  while (static_cast<long long>(edges.size()) < m) {
    if (!std::getline(in, line)) throw ParseError("expected " + std::to_string(m) + " edge lines");
    ++line_no;
    auto tok = split_ws(line);
    if (tok.size() != 3 || tok[0] != "e") throw ParseError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
    const long long u = parse_nonneg(tok[1], line_no);
    const long long v = parse_nonneg(tok[2], line_no);
    if (!(u < v && v < n))
      throw ParseError("line " + std::to_string(line_no) + ": need 0 <= u < v < n");
    if (!seen.insert(u * n + v).second)
      throw ParseError("line " + std::to_string(line_no) + ": duplicate edge");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) throw ParseError("line " + std::to_string(line_no) + ": trailing content");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

nlohmann::json witness_to_json(const Graph& g, int k, const Witness& w) {
  nlohmann::json edges = nlohmann::json::array();
  for (EdgeId e : w.contract_edges) edges.push_back({g.edge(e).u, g.edge(e).v});
  return {{"k", k}, {"contract_edges", edges}, {"coloring", w.coloring}};
}

WitnessFile witness_from_json(const nlohmann::json& j) {
  try {
    const nlohmann::json& body = j.contains("witness") ? j.at("witness") : j;
    if (body.is_null()) throw ParseError("report carries no witness");
    WitnessFile w;
    w.k = j.at("k").get<int>();
    for (const auto& pair : body.at("contract_edges")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("contract edge must be a pair");
      w.contract_edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    w.coloring = body.at("coloring").get<TwoColoring>();
    return w;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed witness: ") + ex.what());
  }
}

bool verify_witness_file(const Graph& g, const WitnessFile& w) {
  EdgeSet ids;
  for (const Edge& e : w.contract_edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.num_vertices() || e.v >= g.num_vertices()) return false;
    auto id = g.find_edge(e.u, e.v);
    if (!id) return false;
    ids.push_back(*id);
  }
  return verify_witness(g, w.k, ids, w.coloring);
}

RunReport make_report(const Graph& g, int k, const SolveOptions& options, const SolveResult& result) {
  RunReport r;
  r.answer = result.witness.has_value();
  r.k = k;
  if (result.witness) r.witness = witness_from_json(witness_to_json(g, k, *result.witness));
  r.reason = result.reason;
  r.exact = result.exact;
  r.stats = result.stats;
  r.algorithm = to_string(options.algorithm);
  r.seed = options.seed;
  r.max_iters = options.max_iters;
  r.iteration_cap = options.iteration_cap;
  r.threads = options.threads;
  return r;
}

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["answer"] = r.answer ? "yes" : "no";
  j["k"] = r.k;
  if (r.witness) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : r.witness->contract_edges) edges.push_back({e.u, e.v});
    j["witness"] = {{"contract_edges", edges}, {"coloring", r.witness->coloring}};
  } else {
    j["witness"] = nullptr;
  }
  j["reason"] = r.reason;
  j["exact"] = r.exact;
  j["stats"] = {{"iterations", r.stats.iterations},
                {"partitions_tried", r.stats.partitions_tried},
                {"span_checks", r.stats.span_checks},
                {"oct_size", r.stats.oct_size},
                {"wall_ms", r.stats.wall_ms}};
  j["config"] = {{"algo", r.algorithm},
                 {"seed", r.seed},
                 {"max_iters", r.max_iters ? nlohmann::json(*r.max_iters) : nlohmann::json(nullptr)},
                 {"iteration_cap", r.iteration_cap},
                 {"threads", r.threads}};
  return j;
}

RunReport report_from_json(const nlohmann::json& j) {
  try {
    RunReport r;
    r.answer = j.at("answer").get<std::string>() == "yes";
    r.k = j.at("k").get<int>();
    if (!j.at("witness").is_null()) r.witness = witness_from_json(j);
    r.reason = j.at("reason").get<std::string>();
    r.exact = j.at("exact").get<bool>();
    const auto& s = j.at("stats");
    r.stats.iterations = s.at("iterations").get<std::int64_t>();
    r.stats.partitions_tried = s.at("partitions_tried").get<std::int64_t>();
    r.stats.span_checks = s.at("span_checks").get<std::int64_t>();
    r.stats.oct_size = s.at("oct_size").get<int>();
    r.stats.wall_ms = s.at("wall_ms").get<double>();
    const auto& c = j.at("config");
    r.algorithm = c.at("algo").get<std::string>();
    r.seed = c.at("seed").get<std::uint64_t>();
    if (!c.at("max_iters").is_null()) r.max_iters = c.at("max_iters").get<std::int64_t>();
    r.iteration_cap = c.at("iteration_cap").get<std::int64_t>();
    r.threads = c.at("threads").get<int>();
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed report: ") + ex.what());
  }
}

std::string format_report_text(const RunReport& r) {
  std::ostringstream out;
  out << "answer: " << (r.answer ? "yes" : "no") << "  (k = " << r.k << ")\n";
  if (r.witness) {
    out << "contract edges:";
    if (r.witness->contract_edges.empty()) out << " (none)";
    for (const Edge& e : r.witness->contract_edges) out << ' ' << e.u << '-' << e.v;
    out << "\ncoloring:";
    for (int c : r.witness->coloring) out << ' ' << c;
    out << '\n';
  } else {
    out << "reason: " << r.reason << (r.exact ? "" : " (search was capped or probabilistic)") << '\n';
  }
  out << "stats: iterations=" << r.stats.iterations << " partitions=" << r.stats.partitions_tried
      << " oct_size=" << r.stats.oct_size << " wall_ms=" << r.stats.wall_ms << '\n';
  out << "config: algo=" << r.algorithm << " seed=" << r.seed
      << " max_iters=" << (r.max_iters ? std::to_string(*r.max_iters) : "default")
      << " iteration_cap=" << r.iteration_cap << " threads=" << r.threads << '\n';
  return out.str();
}

}  // namespace bc
