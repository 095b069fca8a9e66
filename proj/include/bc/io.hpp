#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bc/graph.hpp"
#include "bc/pipeline.hpp"

namespace bc {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format:
//   p <n> <m>
//   e <u> <v>      (m lines, 0 <= u < v < n, no repeats)
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

// {"k":1,"contract_edges":[[0,1]],"coloring":[1,2,1,2]}
struct WitnessFile {
  int k = 0;
  std::vector<Edge> contract_edges;
  TwoColoring coloring;
};

nlohmann::json witness_to_json(const Graph& g, int k, const Witness& w);
// Accepts a bare witness object or a solve report carrying one.
WitnessFile witness_from_json(const nlohmann::json& j);

// Every listed edge exists in G, |F| <= k, and the coloring is proper on G/F.
bool verify_witness_file(const Graph& g, const WitnessFile& w);

struct RunReport {
  bool answer = false;
  int k = 0;
  std::optional<WitnessFile> witness;
  std::string reason;
  bool exact = true;
  SolveStats stats;
  // Config echo.
  std::string algorithm;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> max_iters;
  std::int64_t iteration_cap = 0;
  int threads = 1;
};

RunReport make_report(const Graph& g, int k, const SolveOptions& options, const SolveResult& result);
nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);
std::string format_report_text(const RunReport& report);

}  // namespace bc
