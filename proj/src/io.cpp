#include "wrp/io.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "json.hpp"

namespace wrp {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

[[noreturn]] void fail_line(int line_no, const std::string& message) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + message);
}

Rational parse_rational_or_fail(int line_no, const std::string& text,
                                const std::string& what) {
  std::optional<Rational> value = Rational::parse(text);
  if (!value) fail_line(line_no, "bad rational '" + text + "' for " + what);
  return *value;
}

std::vector<Rational> parse_rational_list(int line_no,
                                          const std::vector<std::string>& tokens,
                                          const std::string& what) {
  std::vector<Rational> values;
  for (size_t i = 1; i < tokens.size(); ++i)
    values.push_back(parse_rational_or_fail(line_no, tokens[i], what));
  return values;
}

}  // namespace

WaypointInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  std::optional<Network> net;
  std::optional<std::pair<std::string, std::string>> route;
  std::optional<std::vector<std::string>> waypoint_names;
  std::optional<std::vector<Rational>> demands;
  std::optional<std::vector<Rational>> bounds;

  while (std::getline(in, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::vector<std::string> tokens = tokens_of(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];

    if (head == "graph") {
      if (net) fail_line(line_no, "second 'graph' directive");
      if (tokens.size() != 2 ||
          (tokens[1] != "undirected" && tokens[1] != "directed"))
        fail_line(line_no, "expected 'graph undirected' or 'graph directed'");
      net.emplace(tokens[1] == "directed" ? Directedness::kDirected
                                          : Directedness::kUndirected);
      continue;
    }
    if (!net)
      fail_line(line_no, "the first directive must be 'graph undirected|directed'");

    if (head == "edge") {
      if (tokens.size() < 3) fail_line(line_no, "edge needs two endpoints");
      Rational capacity(1), weight(1);
      for (size_t i = 3; i < tokens.size(); ++i) {
        size_t eq = tokens[i].find('=');
        if (eq == std::string::npos)
          fail_line(line_no, "expected cap=<rational> or w=<rational>, got '" +
                                 tokens[i] + "'");
        std::string key = tokens[i].substr(0, eq);
        std::string value = tokens[i].substr(eq + 1);
        if (key == "cap")
          capacity = parse_rational_or_fail(line_no, value, "cap");
        else if (key == "w")
          weight = parse_rational_or_fail(line_no, value, "w");
        else
          fail_line(line_no, "unknown edge option '" + key + "'");
      }
      NodeId u = net->add_node(tokens[1]);
      NodeId v = net->add_node(tokens[2]);
      try {
        net->add_edge(u, v, capacity, weight);
      } catch (const std::invalid_argument& error) {
        fail_line(line_no, error.what());
      }
    } else if (head == "route") {
      if (route) fail_line(line_no, "second 'route' directive");
      if (tokens.size() != 3) fail_line(line_no, "route needs exactly two nodes");
      net->add_node(tokens[1]);
      net->add_node(tokens[2]);
      route = {tokens[1], tokens[2]};
    } else if (head == "waypoints") {
      if (waypoint_names) fail_line(line_no, "second 'waypoints' directive");
      waypoint_names.emplace(tokens.begin() + 1, tokens.end());
      for (const std::string& name : *waypoint_names) net->add_node(name);
    } else if (head == "demands") {
      if (demands) fail_line(line_no, "second 'demands' directive");
      demands = parse_rational_list(line_no, tokens, "demands");
    } else if (head == "bounds") {
      if (bounds) fail_line(line_no, "second 'bounds' directive");
      bounds = parse_rational_list(line_no, tokens, "bounds");
    } else {
      fail_line(line_no, "unknown directive '" + head + "'");
    }
  }

  if (!net) throw std::runtime_error("missing 'graph' directive");
  if (!route) throw std::runtime_error("missing 'route' directive");

  std::vector<NodeId> waypoints;
  if (waypoint_names)
    for (const std::string& name : *waypoint_names)
      waypoints.push_back(*net->find_node(name));
  const size_t segment_count = waypoints.size() + 1;
  if (demands && demands->size() != segment_count)
    throw std::runtime_error(
        "demands: expected " + std::to_string(segment_count) +
        " values (one per segment), got " + std::to_string(demands->size()));
  if (bounds && bounds->size() != segment_count)
    throw std::runtime_error(
        "bounds: expected " + std::to_string(segment_count) +
        " values (one per segment), got " + std::to_string(bounds->size()));

  NodeId source = *net->find_node(route->first);
  NodeId target = *net->find_node(route->second);
  try {
    return make_instance(std::move(*net), source, target, std::move(waypoints),
                         demands.value_or(std::vector<Rational>{}),
                         std::move(bounds));
  } catch (const std::invalid_argument& error) {
    throw std::runtime_error(error.what());
  }
}

std::string serialize_instance(const WaypointInstance& instance) {
  const Network& net = instance.network;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    const std::string& name = net.node_name(v);
    if (name.empty() || name.find_first_of(" \t#=") != std::string::npos)
      throw std::invalid_argument("node name '" + name +
                                  "' cannot ride the line format");
  }

  std::ostringstream out;
  out << "graph " << (net.directed() ? "directed" : "undirected") << "\n";
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& edge = net.edge(e);
    out << "edge " << net.node_name(edge.from) << " " << net.node_name(edge.to);
    if (edge.capacity != Rational(1)) out << " cap=" << edge.capacity.str();
    if (edge.weight != Rational(1)) out << " w=" << edge.weight.str();
    out << "\n";
  }
  out << "route " << net.node_name(instance.source) << " "
      << net.node_name(instance.target) << "\n";
  out << "waypoints";
  for (NodeId w : instance.waypoints) out << " " << net.node_name(w);
  out << "\n";
  bool all_unit = true;
  for (const Rational& d : instance.demands) all_unit = all_unit && d == Rational(1);
  if (!all_unit) {
    out << "demands";
    for (const Rational& d : instance.demands) out << " " << d.str();
    out << "\n";
  }
  if (instance.bounds) {
    out << "bounds";
    for (const Rational& b : *instance.bounds) out << " " << b.str();
    out << "\n";
  }
  return out.str();
}

Network parse_graphml_topology(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::read_xml(in, tree);
  } catch (const pt::ptree_error& error) {
    throw std::runtime_error(std::string("malformed graphml: ") + error.what());
  }

  const pt::ptree* graphml = tree.get_child_optional("graphml")
                                 ? &tree.get_child("graphml")
                                 : nullptr;
  if (!graphml) throw std::runtime_error("malformed graphml: no <graphml> root");

  // Key declarations: remember which data keys carry capacity and weight.
  std::map<std::string, std::string> key_roles;
  for (const auto& [tag, child] : *graphml) {
    if (tag != "key") continue;
    std::string id = child.get<std::string>("<xmlattr>.id", "");
    // The attribute is literally named "attr.name"; keep '.' out of path parsing.
    std::string name = child.get<std::string>(
        pt::ptree::path_type("<xmlattr>/attr.name", '/'), "");
    if (name == "capacity" || name == "weight") key_roles[id] = name;
  }

  const auto graph = graphml->get_child_optional("graph");
  if (!graph) throw std::runtime_error("malformed graphml: no <graph> element");

  Network net(Directedness::kUndirected);
  for (const auto& [tag, child] : *graph) {
    if (tag == "node") {
      std::string id = child.get<std::string>("<xmlattr>.id", "");
      if (id.empty()) throw std::runtime_error("node without an id");
      if (net.find_node(id))
        throw std::runtime_error("duplicate node id '" + id + "'");
      net.add_node(id);
    } else if (tag == "edge") {
      std::string source = child.get<std::string>("<xmlattr>.source", "");
      std::string target = child.get<std::string>("<xmlattr>.target", "");
      std::optional<NodeId> u = net.find_node(source);
      std::optional<NodeId> v = net.find_node(target);
      if (!u || !v)
        throw std::runtime_error("edge endpoint '" + (u ? target : source) +
                                 "' is not a declared node");
      Rational capacity(1), weight(1);
      for (const auto& [data_tag, data] : child) {
        if (data_tag != "data") continue;
        std::string key = data.get<std::string>("<xmlattr>.key", "");
        auto role = key_roles.find(key);
        if (role == key_roles.end()) continue;
        std::string value = data.get_value<std::string>();
        std::optional<Rational> parsed = Rational::parse(value);
        if (!parsed)
          throw std::runtime_error("non-numeric value '" + value + "' for key '" +
                                   role->second + "'");
        (role->second == "capacity" ? capacity : weight) = *parsed;
      }
      try {
        net.add_edge(*u, *v, capacity, weight);
      } catch (const std::invalid_argument& error) {
        throw std::runtime_error(error.what());
      }
    }
  }
  return net;
}

std::string emit_result(const SolveReport& report, const WaypointInstance& instance) {
  const Network& net = instance.network;
  ordered_json out;
  switch (report.status) {
    case SolveStatus::kOptimal: out["status"] = "optimal"; break;
    case SolveStatus::kInfeasible: out["status"] = "infeasible"; break;
    case SolveStatus::kBudgetExceeded: out["status"] = "budget_exceeded"; break;
  }
  if (report.solution) {
    out["cost"] = {{"exact", report.solution->total_cost.str()},
                   {"approx", report.solution->total_cost.to_double()}};
    ordered_json segments = ordered_json::array();
    for (const WalkSegment& segment : report.solution->segments) {
      ordered_json nodes = ordered_json::array();
      ordered_json edges = ordered_json::array();
      nodes.push_back(net.node_name(segment.start));
      for (const WalkStep& step : segment.steps) {
        nodes.push_back(net.node_name(step.to));
        edges.push_back(step.edge);
      }
      segments.push_back({{"nodes", nodes}, {"edges", edges}});
    }
    out["segments"] = std::move(segments);
    ordered_json usage = ordered_json::object();
    for (const auto& [edge, amount] : report.solution->usage)
      usage[std::to_string(edge)] = amount.str();
    out["usage"] = std::move(usage);
  } else {
    out["cost"] = nullptr;
    out["segments"] = ordered_json::array();
    out["usage"] = ordered_json::object();
  }
  out["solver"] = report.solver_used;
  out["warnings"] = report.warnings;
  return out.dump(2) + "\n";
}

std::optional<WalkSolution> parse_result_walk(const std::string& text,
                                              const WaypointInstance& instance) {
  ordered_json record;
  try {
    record = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& error) {
    throw std::runtime_error(std::string("malformed result record: ") + error.what());
  }
  if (!record.contains("cost") || record["cost"].is_null()) return std::nullopt;

  const Network& net = instance.network;
  auto node_of = [&](const std::string& name) {
    std::optional<NodeId> id = net.find_node(name);
    if (!id) throw std::runtime_error("unknown node '" + name + "' in result record");
    return *id;
  };

  try {
    WalkSolution solution;
    for (const auto& segment : record.at("segments")) {
      const auto& nodes = segment.at("nodes");
      const auto& edges = segment.at("edges");
      if (nodes.size() != edges.size() + 1)
        throw std::runtime_error("segment nodes and edges do not line up");
      WalkSegment walk{node_of(nodes.at(0).get<std::string>()), {}};
      for (size_t i = 0; i < edges.size(); ++i)
        walk.steps.push_back(WalkStep{edges.at(i).get<EdgeId>(),
                                      node_of(nodes.at(i + 1).get<std::string>())});
      solution.segments.push_back(std::move(walk));
    }
    for (const auto& [key, value] : record.at("usage").items()) {
      std::optional<Rational> amount = Rational::parse(value.get<std::string>());
      if (!amount) throw std::runtime_error("bad usage amount for edge " + key);
      solution.usage[std::stoi(key)] = *amount;
    }
    std::optional<Rational> cost =
        Rational::parse(record.at("cost").at("exact").get<std::string>());
    if (!cost) throw std::runtime_error("bad exact cost");
    solution.total_cost = *cost;
    return solution;
  } catch (const nlohmann::json::exception& error) {
    throw std::runtime_error(std::string("malformed result record: ") + error.what());
  }
}

}  // namespace wrp
