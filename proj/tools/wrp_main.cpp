#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wrp/classify.hpp"
#include "wrp/engine.hpp"
#include "wrp/gadgets.hpp"
#include "wrp/io.hpp"
#include "wrp/random_instances.hpp"

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

int status_exit_code(wrp::SolveStatus status) {
  switch (status) {
    case wrp::SolveStatus::kOptimal: return kExitFeasible;
    case wrp::SolveStatus::kInfeasible: return kExitInfeasible;
    case wrp::SolveStatus::kBudgetExceeded: return kExitBudget;
  }
  return kExitError;
}

void print_plain(const wrp::SolveReport& report, const wrp::WaypointInstance& instance) {
  const wrp::Network& net = instance.network;
  switch (report.status) {
    case wrp::SolveStatus::kOptimal: std::cout << "status: optimal\n"; break;
    case wrp::SolveStatus::kInfeasible: std::cout << "status: infeasible\n"; break;
    case wrp::SolveStatus::kBudgetExceeded:
      std::cout << "status: budget exceeded\n";
      break;
  }
  std::cout << "solver: " << report.solver_used << "\n";
  for (const std::string& warning : report.warnings)
    std::cout << "warning: " << warning << "\n";
  if (report.solution) {
    std::cout << "cost: " << report.solution->total_cost.str() << " (~"
              << report.solution->total_cost.to_double() << ")\n";
    for (size_t i = 0; i < report.solution->segments.size(); ++i) {
      const wrp::WalkSegment& segment = report.solution->segments[i];
      std::cout << "segment " << i << ": " << net.node_name(segment.start);
      for (const wrp::WalkStep& step : segment.steps)
        std::cout << " -> " << net.node_name(step.to);
      std::cout << "\n";
    }
  }
}

int run_solve(const std::string& input, const std::string& algo,
              long long oracle_budget, bool as_json) {
  wrp::WaypointInstance instance = wrp::parse_instance(read_file(input));
  wrp::SolvePolicy policy;
  if (algo != "auto") policy.force = algo;
  if (oracle_budget > 0) policy.oracle_budget.max_total_steps = oracle_budget;
  wrp::SolveReport report = wrp::solve(instance, policy);
  if (as_json)
    std::cout << wrp::emit_result(report, instance);
  else
    print_plain(report, instance);
  return status_exit_code(report.status);
}

int run_verify(const std::string& input, const std::string& solution_path) {
  wrp::WaypointInstance instance = wrp::parse_instance(read_file(input));
  std::optional<wrp::WalkSolution> walk =
      wrp::parse_result_walk(read_file(solution_path), instance);
  if (!walk) throw std::runtime_error("the record carries no walk to verify");
  wrp::ValidationReport report = wrp::validate_walk(instance, *walk);
  if (report.ok) {
    std::cout << "valid walk, cost " << walk->total_cost.str() << "\n";
    return kExitFeasible;
  }
  for (const std::string& violation : report.violations)
    std::cout << "violation: " << violation << "\n";
  return kExitInfeasible;
}

int run_classify(const std::string& input) {
  wrp::WaypointInstance instance = wrp::parse_instance(read_file(input));
  const wrp::Network& net = instance.network;
  wrp::StructureClass structure = wrp::classify(net);
  std::cout << "nodes: " << net.node_count() << "\n";
  std::cout << "edges: " << net.edge_count() << "\n";
  std::cout << "directed: " << (net.directed() ? "yes" : "no") << "\n";
  std::cout << "structure: " << wrp::to_string(structure.tag) << "\n";
  if (structure.treewidth_upper_bound)
    std::cout << "treewidth at most: " << *structure.treewidth_upper_bound << "\n";
  std::cout << "waypoints: " << instance.waypoints.size() << "\n";
  bool all_unit = true, uniform = true;
  for (const wrp::Rational& d : instance.demands) {
    all_unit = all_unit && d == wrp::Rational(1);
    uniform = uniform && d == instance.demands[0];
  }
  std::cout << "demands: "
            << (all_unit ? "unit" : uniform ? "uniform" : "changing") << "\n";
  std::cout << "bounds: " << (instance.bounds ? "yes" : "no") << "\n";
  return kExitFeasible;
}

// Deterministic source problems for the gadget generators.
wrp::Network random_digraph(std::mt19937_64& rng, int nodes, int arcs) {
  wrp::Network net(wrp::Directedness::kDirected);
  for (int v = 0; v < nodes; ++v) net.add_node("n" + std::to_string(v));
  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < nodes; ++u)
    for (int v = 0; v < nodes; ++v)
      if (u != v) candidates.emplace_back(u, v);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  arcs = std::min<int>(arcs, static_cast<int>(candidates.size()));
  for (int i = 0; i < arcs; ++i)
    net.add_edge(candidates[i].first, candidates[i].second);
  return net;
}

wrp::Network random_undirected(std::mt19937_64& rng, int nodes, int edges) {
  wrp::Network net(wrp::Directedness::kUndirected);
  for (int v = 0; v < nodes; ++v) net.add_node("n" + std::to_string(v));
  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < nodes; ++u)
    for (int v = u + 1; v < nodes; ++v) candidates.emplace_back(u, v);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  edges = std::min<int>(edges, static_cast<int>(candidates.size()));
  for (int i = 0; i < edges; ++i)
    net.add_edge(candidates[i].first, candidates[i].second);
  return net;
}

struct GenOptions {
  std::string gadget;
  std::uint64_t seed = 1;
  std::string out;
  int nodes = 6;
  int edges = 8;
  int pairs = 2;
  std::string integers;
  bool bounded = false;
  // random-instance knobs
  int extra_edges = 4;
  int waypoints = 1;
  bool directed = false;
  bool acyclic = false;
  bool tree = false;
  long long max_capacity = 1;
  long long max_weight = 1;
  long long max_demand = 1;
  int max_width = 0;
};

int run_gen(const GenOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::string header;
  wrp::WaypointInstance instance = [&]() -> wrp::WaypointInstance {
    if (options.gadget == "random") {
      wrp::RandomInstanceSpec spec;
      spec.seed = options.seed;
      spec.nodes = options.nodes;
      spec.extra_edges = options.extra_edges;
      spec.waypoint_count = options.waypoints;
      spec.directedness = options.directed ? wrp::Directedness::kDirected
                                           : wrp::Directedness::kUndirected;
      spec.acyclic = options.acyclic;
      spec.tree = options.tree;
      spec.max_capacity = options.max_capacity;
      spec.max_weight = options.max_weight;
      spec.max_demand = options.max_demand;
      if (options.max_width > 0) spec.max_width = options.max_width;
      header = "# seeded random instance";
      return wrp::random_instance(spec);
    }
    if (options.gadget == "partition") {
      std::vector<long long> integers;
      std::istringstream in(options.integers);
      std::string token;
      while (std::getline(in, token, ','))
        integers.push_back(std::stoll(token));
      wrp::GadgetOutput gadget = wrp::gadget_partition(
          integers, options.bounded ? wrp::PartitionFlavor::kBoundedChange
                                    : wrp::PartitionFlavor::kArbitraryChange);
      header = "# " + gadget.witness_map.notes;
      return std::move(gadget.instance);
    }
    if (options.gadget == "2dp") {
      wrp::Network net = random_digraph(rng, options.nodes, options.edges);
      int n = net.node_count();
      std::pair<wrp::NodeId, wrp::NodeId> first{
          static_cast<wrp::NodeId>(rng() % n), static_cast<wrp::NodeId>(rng() % n)};
      std::pair<wrp::NodeId, wrp::NodeId> second{
          static_cast<wrp::NodeId>(rng() % n), static_cast<wrp::NodeId>(rng() % n)};
      wrp::GadgetOutput gadget = wrp::gadget_two_disjoint_paths(net, first, second);
      header = "# " + gadget.witness_map.notes;
      return std::move(gadget.instance);
    }
    if (options.gadget == "tw3" || options.gadget == "eulerian") {
      wrp::Network net = random_undirected(rng, options.nodes, options.edges);
      int n = net.node_count();
      std::vector<std::pair<wrp::NodeId, wrp::NodeId>> pairs;
      if (options.gadget == "tw3") {
        if (2 * options.pairs > n)
          throw std::runtime_error("tw3 needs 2*pairs distinct terminals");
        std::vector<wrp::NodeId> ids(n);
        for (int v = 0; v < n; ++v) ids[v] = v;
        std::shuffle(ids.begin(), ids.end(), rng);
        for (int i = 0; i < options.pairs; ++i)
          pairs.emplace_back(ids[2 * i], ids[2 * i + 1]);
        wrp::GadgetOutput gadget = wrp::gadget_tw3(net, pairs);
        header = "# " + gadget.witness_map.notes;
        return std::move(gadget.instance);
      }
      for (int i = 0; i < options.pairs; ++i) {
        wrp::NodeId s = static_cast<wrp::NodeId>(rng() % n);
        wrp::NodeId t = static_cast<wrp::NodeId>((s + 1 + rng() % (n - 1)) % n);
        pairs.emplace_back(s, t);
      }
      wrp::GadgetOutput gadget = wrp::gadget_eulerian(net, pairs);
      header = "# " + gadget.witness_map.notes;
      if (gadget.eulerian)
        header += *gadget.eulerian ? "\n# all degrees even" : "\n# odd degrees present";
      return std::move(gadget.instance);
    }
    throw std::runtime_error("unknown gadget '" + options.gadget + "'");
  }();

  write_file(options.out, header + "\n" + wrp::serialize_instance(instance));
  std::cout << "wrote " << options.out << "\n";
  return kExitFeasible;
}

int run_bench(const std::string& dir, const std::string& report_path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".wrp")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  bool any_error = false;
  for (const fs::path& file : files) {
    nlohmann::ordered_json row;
    row["file"] = file.filename().string();
    try {
      wrp::WaypointInstance instance = wrp::parse_instance(read_file(file.string()));
      auto start = std::chrono::steady_clock::now();
      wrp::SolveReport report = wrp::solve(instance);
      auto stop = std::chrono::steady_clock::now();
      switch (report.status) {
        case wrp::SolveStatus::kOptimal: row["status"] = "optimal"; break;
        case wrp::SolveStatus::kInfeasible: row["status"] = "infeasible"; break;
        case wrp::SolveStatus::kBudgetExceeded:
          row["status"] = "budget_exceeded";
          break;
      }
      row["cost"] = report.solution ? report.solution->total_cost.str() : "";
      row["solver"] = report.solver_used;
      row["micros"] = std::chrono::duration_cast<std::chrono::microseconds>(
                          stop - start)
                          .count();
    } catch (const std::exception& error) {
      row["error"] = error.what();
      any_error = true;
    }
    std::cout << row.dump() << "\n";
    rows.push_back(std::move(row));
  }
  write_file(report_path, rows.dump(2) + "\n");
  return any_error ? kExitError : kExitFeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"waypoint routing toolkit"};
  app.require_subcommand(1);

  std::string input, algo = "auto", solution, dir, report;
  long long oracle_budget = 0;
  bool as_json = false;

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("--input", input, "instance file")->required();
  solve_cmd->add_option("--algo", algo, "solver to force")
      ->check(CLI::IsMember(
          {"auto", "direct", "tree", "dag", "suurballe", "flow", "twdp", "oracle"}));
  solve_cmd->add_option("--oracle-budget", oracle_budget, "oracle step budget");
  solve_cmd->add_flag("--json", as_json, "emit the canonical record");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a solution record");
  verify_cmd->add_option("--input", input, "instance file")->required();
  verify_cmd->add_option("--solution", solution, "solution record file")->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "describe an instance");
  classify_cmd->add_option("--input", input, "instance file")->required();

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  gen_cmd->add_option("--gadget", gen.gadget, "2dp|partition|tw3|eulerian|random")
      ->required()
      ->check(CLI::IsMember({"2dp", "partition", "tw3", "eulerian", "random"}));
  gen_cmd->add_option("--seed", gen.seed, "rng seed");
  gen_cmd->add_option("--out", gen.out, "output file")->required();
  gen_cmd->add_option("--nodes", gen.nodes, "source nodes");
  gen_cmd->add_option("--edges", gen.edges, "source edges/arcs");
  gen_cmd->add_option("--pairs", gen.pairs, "terminal pairs");
  gen_cmd->add_option("--integers", gen.integers, "comma-separated partition input");
  gen_cmd->add_flag("--bounded", gen.bounded, "bounded demand-change flavor");
  gen_cmd->add_option("--extra-edges", gen.extra_edges, "edges beyond the tree");
  gen_cmd->add_option("--waypoints", gen.waypoints, "waypoint count");
  gen_cmd->add_flag("--directed", gen.directed, "directed network");
  gen_cmd->add_flag("--acyclic", gen.acyclic, "acyclic orientation");
  gen_cmd->add_flag("--tree", gen.tree, "spanning tree only");
  gen_cmd->add_option("--max-capacity", gen.max_capacity, "capacity draw ceiling");
  gen_cmd->add_option("--max-weight", gen.max_weight, "weight draw ceiling");
  gen_cmd->add_option("--max-demand", gen.max_demand, "demand draw ceiling");
  gen_cmd->add_option("--max-width", gen.max_width, "resample to this width");

  CLI::App* bench_cmd = app.add_subcommand("bench", "solve every .wrp file in a directory");
  bench_cmd->add_option("--dir", dir, "instance directory")->required();
  bench_cmd->add_option("--report", report, "report file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(input, algo, oracle_budget, as_json);
    if (verify_cmd->parsed()) return run_verify(input, solution);
    if (classify_cmd->parsed()) return run_classify(input);
    if (gen_cmd->parsed()) return run_gen(gen);
    if (bench_cmd->parsed()) return run_bench(dir, report);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
