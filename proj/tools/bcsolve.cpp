// bcsolve: command-line front end for the bipartite contraction solver.
//
//   bcsolve solve  --input g.txt --k 2 --algo derand [--json]
//   bcsolve verify --input g.txt --witness w.json
//   bcsolve gen    --n 20 --p 0.3 --seed 7
//   bcsolve gen    --n 20 --p 0.3 --planted 2 --seed 7
//   bcsolve bench  --corpus dir/ --algos rand,derand --k 1
//   bcsolve impsep --input g.txt --x 0 --y 5 --k 2
//   bcsolve selftest
//
// Exit codes: solve 0 yes / 1 no, verify 0 valid / 1 invalid, 2 on any error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bc/generate.hpp"
#include "bc/impsep.hpp"
#include "bc/io.hpp"
#include "bc/oracle.hpp"
#include "bc/pipeline.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

int default_threads() {
  if (const char* env = std::getenv("BCSOLVE_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    std::cerr << "bcsolve: ignoring BCSOLVE_THREADS='" << env << "'\n";
  }
  return 1;
}

struct SolveArgs {
  std::string input;
  int k = 0;
  std::string algo = "derand";
  std::uint64_t seed = 1;
  std::int64_t max_iters = 0;
  std::int64_t iteration_cap = 1'000'000;
  std::int64_t pair_cap = 0;
  int threads = 0;
  bool json = false;
};

bc::SolveOptions to_options(const SolveArgs& a) {
  bc::SolveOptions o;
  o.algorithm = bc::parse_algorithm(a.algo);
  o.seed = a.seed;
  if (a.max_iters > 0) o.max_iters = a.max_iters;
  o.iteration_cap = a.iteration_cap;
  if (a.pair_cap > 0) o.derand_pair_cap = a.pair_cap;
  o.threads = a.threads > 0 ? a.threads : default_threads();
  return o;
}

int run_solve(const SolveArgs& a) {
  bc::Graph g = bc::read_graph_file(a.input);
  if (a.k < 0) throw std::invalid_argument("--k must be non-negative");
  bc::SolveOptions options = to_options(a);
  bc::SolveResult result = bc::solve_bc(g, a.k, options);
  bc::RunReport report = bc::make_report(g, a.k, options, result);
  if (a.json) std::cout << bc::to_json(report).dump(2) << '\n';
  else std::cout << bc::format_report_text(report);
  return report.answer ? kExitYes : kExitNo;
}

int run_verify(const std::string& input, const std::string& witness_path) {
  bc::Graph g = bc::read_graph_file(input);
  std::ifstream in(witness_path);
  if (!in) throw bc::ParseError("cannot open " + witness_path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw bc::ParseError(std::string("witness is not JSON: ") + ex.what());
  }
  bc::WitnessFile w = bc::witness_from_json(j);
  bool ok = bc::verify_witness_file(g, w);
  std::cout << (ok ? "valid" : "invalid") << '\n';
  return ok ? kExitYes : kExitNo;
}

struct GenArgs {
  int n = 0;
  double p = 0.0;
  int planted = -1;
  std::string base;
  std::uint64_t seed = 1;
};

int run_gen(const GenArgs& a) {
  if (a.planted < 0) {
    std::cout << bc::format_graph(bc::random_graph(a.n, a.p, a.seed));
    return kExitYes;
  }
  bc::Graph base = a.base.empty() ? bc::random_bipartite(a.n, a.p, a.seed) : bc::read_graph_file(a.base);
  std::cout << bc::format_graph(bc::plant_contractions(base, a.planted, a.seed).graph);
  return kExitYes;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

struct BenchArgs {
  std::string corpus;
  std::string algos = "rand,derand";
  int k = 1;
  std::uint64_t seed = 1;
  bool scaling = false;
  int scaling_max_n = 256;
};

void bench_row(const std::string& name, const bc::Graph& g, int k, const std::string& algo,
               const BenchArgs& a) {
  bc::SolveOptions o;
  o.algorithm = bc::parse_algorithm(algo);
  o.seed = a.seed;
  o.threads = default_threads();
  auto start = std::chrono::steady_clock::now();
  bc::SolveResult r = bc::solve_bc(g, k, o);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << name << ',' << g.num_vertices() << ',' << g.num_edges() << ',' << k << ',' << algo << ','
            << (r.witness ? "yes" : "no") << ',' << ms << ',' << r.stats.iterations << '\n';
}

int run_bench(const BenchArgs& a) {
  if (!fs::is_directory(a.corpus)) throw bc::ParseError("corpus directory not found: " + a.corpus);
  std::vector<std::string> algos = split_list(a.algos);
  for (const auto& algo : algos) bc::parse_algorithm(algo);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.corpus))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  // Parse everything up front so a bad file fails before any output.
  std::vector<bc::Graph> graphs;
  for (const auto& f : files) graphs.push_back(bc::read_graph_file(f.string()));

  std::cout << "instance,n,m,k,algo,answer,ms,iterations\n";
  for (std::size_t i = 0; i < files.size(); ++i)
    for (const auto& algo : algos) bench_row(files[i].filename().string(), graphs[i], a.k, algo, a);

  if (a.scaling) {
    // Fixed k, n doubling; planted yes-instances on sparse bipartite bases.
    for (int n = 16; n <= a.scaling_max_n; n *= 2) {
      bc::Graph base = bc::random_bipartite(n, 3.0 / n, a.seed + n);
      bc::Graph g = bc::plant_contractions(base, a.k, a.seed + n).graph;
      for (const auto& algo : algos)
        if (algo != "oracle") bench_row("scaling_n" + std::to_string(n), g, a.k, algo, a);
    }
  }
  return kExitYes;
}

bc::VertexSet parse_vertex_list(const std::string& s) {
  bc::VertexSet out;
  for (const auto& item : split_list(s)) out.push_back(std::stoi(item));
  return bc::make_set(std::move(out));
}

int run_impsep(const std::string& input, const std::string& xs, const std::string& ys, int k) {
  bc::Graph g = bc::read_graph_file(input);
  auto x = parse_vertex_list(xs);
  auto y = parse_vertex_list(ys);
  for (bc::Vertex v : x)
    if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("--x vertex out of range");
  for (bc::Vertex v : y)
    if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("--y vertex out of range");
  auto seps = bc::enumerate_important(g, x, y, k);
  for (const auto& rec : seps) {
    std::cout << '{';
    for (std::size_t i = 0; i < rec.separator.size(); ++i) std::cout << (i ? "," : "") << rec.separator[i];
    std::cout << "}\n";
  }
  std::cout << seps.size() << " important separator(s) of size <= " << k << '\n';
  return kExitYes;
}

// Quick end-to-end smoke test against the exhaustive oracle.
int run_selftest() {
  int failures = 0;
  auto expect = [&](bool cond, const std::string& what) {
    std::cout << (cond ? "ok   " : "FAIL ") << what << '\n';
    if (!cond) ++failures;
  };
  expect(bc::solve_bc(bc::cycle_graph(4), 0).witness.has_value(), "C4 bipartite at k=0");
  expect(!bc::solve_bc(bc::cycle_graph(5), 0).witness.has_value(), "C5 no at k=0");
  expect(bc::solve_bc(bc::cycle_graph(5), 1).witness.has_value(), "C5 yes at k=1");
  expect(!bc::solve_bc(bc::complete_graph(4), 1).witness.has_value(), "K4 no at k=1");
  expect(bc::solve_bc(bc::complete_graph(4), 2).witness.has_value(), "K4 yes at k=2");

  int agree = 0, total = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    bc::Graph g = bc::random_graph(7, 0.45, seed);
    for (int k = 0; k <= 2; ++k) {
      bool truth = bc::oracle::brute_bc(g, k).has_value();
      bool got = bc::solve_bc(g, k).witness.has_value();
      ++total;
      if (truth == got) ++agree;
    }
  }
  expect(agree == total, "deterministic solver matches oracle on " + std::to_string(total) + " random cases");
  return failures == 0 ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite contraction solver"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide whether <= k contractions make the graph bipartite");
  solve_cmd->add_option("--input", solve.input, "Graph file")->required();
  solve_cmd->add_option("--k", solve.k, "Contraction budget")->required();
  solve_cmd->add_option("--algo", solve.algo, "rand | derand | oracle")
      ->check(CLI::IsMember({"rand", "derand", "oracle"}));
  solve_cmd->add_option("--seed", solve.seed, "Seed for the randomized backend");
  solve_cmd->add_option("--max-iters", solve.max_iters, "Colorings per Rank-Cut instance (rand)");
  solve_cmd->add_option("--iteration-cap", solve.iteration_cap, "Cap on the default iteration budget (rand)");
  solve_cmd->add_option("--pair-cap", solve.pair_cap, "Cap on (splitter member, subset) pairs (derand)");
  solve_cmd->add_option("--threads", solve.threads, "Worker threads (default: BCSOLVE_THREADS or 1)");
  solve_cmd->add_flag("--json", solve.json, "Emit a JSON report");

  std::string verify_input, verify_witness;
  auto* verify_cmd = app.add_subcommand("verify", "Check a witness against a graph");
  verify_cmd->add_option("--input", verify_input, "Graph file")->required();
  verify_cmd->add_option("--witness", verify_witness, "Witness or solve report JSON")->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random or planted instance");
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--p", gen.p, "Edge probability");
  gen_cmd->add_option("--planted", gen.planted, "Plant this many contractions into a bipartite base");
  gen_cmd->add_option("--base", gen.base, "Bipartite base graph file for --planted");
  gen_cmd->add_option("--seed", gen.seed, "Seed");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the solvers over a corpus directory");
  bench_cmd->add_option("--corpus", bench.corpus, "Directory of graph files")->required();
  bench_cmd->add_option("--algos", bench.algos, "Comma-separated algorithm list");
  bench_cmd->add_option("--k", bench.k, "Contraction budget");
  bench_cmd->add_option("--seed", bench.seed, "Seed");
  bench_cmd->add_flag("--scaling", bench.scaling, "Append a fixed-k, n-doubling series");
  bench_cmd->add_option("--scaling-max-n", bench.scaling_max_n, "Largest n in the scaling series");

  std::string imp_input, imp_x, imp_y;
  int imp_k = 0;
  auto* imp_cmd = app.add_subcommand("impsep", "List important X-Y separators");
  imp_cmd->add_option("--input", imp_input, "Graph file")->required();
  imp_cmd->add_option("--x", imp_x, "Comma-separated X")->required();
  imp_cmd->add_option("--y", imp_y, "Comma-separated Y")->required();
  imp_cmd->add_option("--k", imp_k, "Size bound")->required();

  auto* self_cmd = app.add_subcommand("selftest", "Run a quick check against the oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*verify_cmd) return run_verify(verify_input, verify_witness);
    if (*gen_cmd) return run_gen(gen);
    if (*bench_cmd) return run_bench(bench);
    if (*imp_cmd) return run_impsep(imp_input, imp_x, imp_y, imp_k);
    if (*self_cmd) return run_selftest();
  } catch (const std::exception& e) {
    std::cerr << "bcsolve: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
