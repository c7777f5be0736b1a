#include "wrp/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

namespace wrp {

namespace {

std::string fresh_name(const Network& net, const std::string& base) {
  if (!net.find_node(base)) return base;
  for (int i = 2;; ++i) {
    std::string candidate = base + "#" + std::to_string(i);
    if (!net.find_node(candidate)) return candidate;
  }
}

//! Copies the network with every capacity forced to one: the source
//! problems treat each link instance as single-use.
Network unit_cap_copy(const Network& source) {
  Network out(source.directedness());
  for (NodeId v = 0; v < source.node_count(); ++v) out.add_node(source.node_name(v));
  for (EdgeId e = 0; e < source.edge_count(); ++e) {
    const Edge& ed = source.edge(e);
    out.add_edge(ed.from, ed.to, Rational(1), ed.weight);
  }
  return out;
}

void check_node(const Network& net, NodeId v, const char* what) {
  if (v < 0 || v >= net.node_count())
    throw std::invalid_argument(std::string(what) + " missing from the network");
}

//! Attaches a four-cycle at `anchor` and returns the far corner, the
//! waypoint host: an excursion from the anchor crosses all four links and
//! comes straight back.
NodeId attach_four_cycle(Network& net, NodeId anchor, const std::string& tag,
                         std::vector<NodeId>& added_nodes,
                         std::vector<EdgeId>& added_edges) {
  NodeId a = net.add_node(fresh_name(net, tag + "a"));
  NodeId b = net.add_node(fresh_name(net, tag + "b"));
  NodeId c = net.add_node(fresh_name(net, tag + "c"));
  added_nodes.insert(added_nodes.end(), {a, b, c});
  added_edges.push_back(net.add_edge(anchor, a));
  added_edges.push_back(net.add_edge(a, b));
  added_edges.push_back(net.add_edge(b, c));
  added_edges.push_back(net.add_edge(c, anchor));
  return b;
}

}  // namespace

GadgetOutput gadget_two_disjoint_paths(const Network& network,
                                       std::pair<NodeId, NodeId> first,
                                       std::pair<NodeId, NodeId> second) {
  if (!network.directed())
    throw std::invalid_argument(
        "two-disjoint-paths gadget needs a directed source network");
  check_node(network, first.first, "terminal s1");
  check_node(network, first.second, "terminal t1");
  check_node(network, second.first, "terminal s2");
  check_node(network, second.second, "terminal t2");

  GadgetOutput out;
  Network net = unit_cap_copy(network);
  out.witness_map.source_edge_count = network.edge_count();

  NodeId w = net.add_node(fresh_name(net, "via"));
  out.witness_map.added_nodes.push_back(w);
  out.witness_map.added_edges.push_back(net.add_edge(first.second, w));
  out.witness_map.added_edges.push_back(net.add_edge(w, second.first));
  out.witness_map.path_segments = {0, 1};
  out.witness_map.notes =
      "a walk s1..t1,via,s2..t2 exists exactly when the two pairs have "
      "link-disjoint paths; drop the two added arcs to recover them";

  out.instance = make_instance(std::move(net), first.first, second.second, {w});
  out.source_problem =
      DisjointPairs{first.first, first.second, second.first, second.second};
  return out;
}

GadgetOutput gadget_partition(const std::vector<long long>& integers,
                              PartitionFlavor flavor) {
  if (integers.empty())
    throw std::invalid_argument("partition gadget needs at least one integer");
  for (long long value : integers)
    if (value <= 0)
      throw std::invalid_argument("partition integers must be positive");

  std::vector<long long> ints = integers;
  std::sort(ints.begin(), ints.end());
  long long total = 0;
  for (long long value : ints) total += value;

  GadgetOutput out;
  out.source_problem = PartitionIntegers{ints};

  if (total % 2 != 0) {
    // An odd sum can never split evenly; emit a patently infeasible task.
    Network net(Directedness::kUndirected);
    NodeId s = net.add_node("s");
    NodeId t = net.add_node("t");
    out.instance = make_instance(std::move(net), s, t, {}, {Rational(1)});
    out.witness_map.notes = "odd total: no even split exists, and neither does "
                            "any walk in this edgeless network";
    return out;
  }

  const long long half = total / 2;
  const int count = static_cast<int>(ints.size());
  Network net(Directedness::kUndirected);
  NodeId left = net.add_node("left");
  NodeId right = net.add_node("right");
  out.witness_map.cycle_links = {
      net.add_edge(left, right, Rational(half)),
      net.add_edge(left, right, Rational(half)),
  };

  // Route stop j sits on the left star for even j: every one of the
  // `count` segments then crosses the two-link cut exactly once, so the
  // demands must split into two groups of `half` each.
  std::vector<NodeId> stops;
  std::vector<Rational> demands;
  NodeId source = -1, target = -1;
  std::vector<NodeId> waypoints;

  if (flavor == PartitionFlavor::kArbitraryChange) {
    for (int j = 0; j <= count; ++j) {
      NodeId leaf = net.add_node("stop" + std::to_string(j));
      net.add_edge(j % 2 == 0 ? left : right, leaf, Rational(total));
      stops.push_back(leaf);
    }
    source = stops.front();
    target = stops.back();
    waypoints.assign(stops.begin() + 1, stops.end() - 1);
    for (long long value : ints) demands.push_back(Rational(value));
  } else {
    // Bounded flavor: each interior stop becomes a dangling chain whose
    // waypoints walk the demand from one integer to the next, never more
    // than doubling or halving per step.  The chain's links carry one
    // inbound and one outbound segment, hence the 2*total capacity.
    source = net.add_node("stop0");
    net.add_edge(left, source, Rational(total));
    demands.push_back(Rational(ints[0]));
    for (int j = 1; j < count; ++j) {
      NodeId center = j % 2 == 0 ? left : right;
      std::vector<long long> values;
      long long cur = ints[j - 1];
      while (cur < ints[j]) values.push_back(cur = std::min(cur * 2, ints[j]));
      while (cur > ints[j]) values.push_back(cur = std::max((cur + 1) / 2, ints[j]));
      if (values.empty()) values.push_back(ints[j]);

      NodeId at = center;
      for (size_t i = 0; i < values.size(); ++i) {
        NodeId link_node = net.add_node("stop" + std::to_string(j) + "_" +
                                        std::to_string(i));
        net.add_edge(at, link_node, Rational(2 * total));
        waypoints.push_back(link_node);
        if (i > 0) demands.push_back(Rational(values[i - 1]));
        at = link_node;
      }
      demands.push_back(Rational(ints[j]));
    }
    target = net.add_node("stop" + std::to_string(count));
    net.add_edge(count % 2 == 0 ? left : right, target, Rational(total));
  }

  out.witness_map.notes =
      "each demand crosses between the stars exactly once; the two "
      "half-capacity links between the centers force an even split";
  out.instance = make_instance(std::move(net), source, target,
                               std::move(waypoints), std::move(demands));
  return out;
}

GadgetOutput gadget_tw3(const Network& network,
                        const std::vector<std::pair<NodeId, NodeId>>& pairs) {
  if (network.directed())
    throw std::invalid_argument("hub gadget needs an undirected source network");
  if (pairs.size() < 2)
    throw std::invalid_argument(
        "hub gadget degenerates below two terminal pairs");
  std::vector<NodeId> terminals;
  for (const auto& [s, t] : pairs) {
    check_node(network, s, "pair source");
    check_node(network, t, "pair target");
    terminals.push_back(s);
    terminals.push_back(t);
  }
  std::sort(terminals.begin(), terminals.end());
  if (std::adjacent_find(terminals.begin(), terminals.end()) != terminals.end())
    throw std::invalid_argument(
        "terminals must be pairwise distinct to host one waypoint per node");

  GadgetOutput out;
  Network net = unit_cap_copy(network);
  out.witness_map.source_edge_count = network.edge_count();

  NodeId hub = net.add_node(fresh_name(net, "hub"));
  out.witness_map.added_nodes.push_back(hub);

  const int k = static_cast<int>(pairs.size());
  std::vector<NodeId> waypoints;
  for (int i = 0; i + 1 < k; ++i) {
    out.witness_map.added_edges.push_back(net.add_edge(pairs[i].second, hub));
    out.witness_map.added_edges.push_back(net.add_edge(hub, pairs[i + 1].first));
    NodeId rest = attach_four_cycle(net, hub, "hub" + std::to_string(i + 1),
                                    out.witness_map.added_nodes,
                                    out.witness_map.added_edges);
    waypoints.push_back(pairs[i].second);
    waypoints.push_back(rest);
    waypoints.push_back(pairs[i + 1].first);
    out.witness_map.path_segments.push_back(3 * i);
  }
  out.witness_map.path_segments.push_back(3 * (k - 1));
  out.witness_map.notes =
      "pair paths ride the source links; the hub and its waypoint cycles "
      "only chain them together, and add at most one to the treewidth";

  out.instance = make_instance(std::move(net), pairs.front().first,
                               pairs.back().second, std::move(waypoints));
  DemandGraph demand;
  demand.pairs = pairs;
  out.source_problem = std::move(demand);
  return out;
}

GadgetOutput gadget_eulerian(const Network& supply,
                             const std::vector<std::pair<NodeId, NodeId>>& demand_pairs) {
  if (supply.directed())
    throw std::invalid_argument("eulerian gadget needs an undirected supply network");
  for (const auto& [s, t] : demand_pairs) {
    check_node(supply, s, "demand source");
    check_node(supply, t, "demand target");
    if (s == t)
      throw std::invalid_argument("demand pair endpoints must differ");
  }

  GadgetOutput out;
  Network net = unit_cap_copy(supply);
  out.witness_map.source_edge_count = supply.edge_count();
  auto& added_nodes = out.witness_map.added_nodes;
  auto& added_edges = out.witness_map.added_edges;

  NodeId center = net.add_node(fresh_name(net, "center"));
  added_nodes.push_back(center);

  const int k = static_cast<int>(demand_pairs.size());
  std::vector<NodeId> waypoints;
  for (int i = 0; i < k; ++i) {
    const auto [si, ti] = demand_pairs[i];
    const std::string tag = "dem" + std::to_string(i + 1);
    // The demand link, split twice so both of its waypoint visits sit on
    // nodes of their own.
    NodeId near_s = net.add_node(fresh_name(net, tag + "s"));
    NodeId near_t = net.add_node(fresh_name(net, tag + "t"));
    added_nodes.insert(added_nodes.end(), {near_s, near_t});
    added_edges.push_back(net.add_edge(si, near_s));
    added_edges.push_back(net.add_edge(near_s, near_t));
    added_edges.push_back(net.add_edge(near_t, ti));
    // Two center links to s_i, both subdivided: the inbound midpoint hosts
    // the pair's first waypoint, and no parallel links remain.
    NodeId inbound = net.add_node(fresh_name(net, tag + "in"));
    NodeId outbound = net.add_node(fresh_name(net, tag + "out"));
    added_nodes.insert(added_nodes.end(), {inbound, outbound});
    added_edges.push_back(net.add_edge(center, inbound));
    added_edges.push_back(net.add_edge(inbound, si));
    added_edges.push_back(net.add_edge(si, outbound));
    added_edges.push_back(net.add_edge(outbound, center));

    waypoints.push_back(inbound);  // reach s_i
    waypoints.push_back(near_t);   // reach t_i through the supply links
    waypoints.push_back(near_s);   // walk the demand link back
    out.witness_map.path_segments.push_back(4 * i + 1);
    if (i + 1 < k) {
      NodeId rest = attach_four_cycle(net, center, "ret" + std::to_string(i + 1),
                                      added_nodes, added_edges);
      waypoints.push_back(rest);  // touch base at the center between pairs
    }
  }

  std::vector<int> degree(net.node_count(), 0);
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    ++degree[net.edge(e).from];
    ++degree[net.edge(e).to];
  }
  out.eulerian = std::all_of(degree.begin(), degree.end(),
                             [](int d) { return d % 2 == 0; });

  out.witness_map.notes =
      "pair paths use supply links only: every demand link returns its own "
      "pair, and the center's links are exhausted by the between-pair hops";
  out.instance =
      make_instance(std::move(net), center, center, std::move(waypoints));
  DemandGraph demand;
  demand.pairs = demand_pairs;
  out.source_problem = std::move(demand);
  return out;
}

std::vector<std::vector<WalkStep>> recover_source_paths(const GadgetOutput& gadget,
                                                        const WalkSolution& solution) {
  std::vector<std::vector<WalkStep>> paths;
  for (int index : gadget.witness_map.path_segments) {
    if (index < 0 || index >= static_cast<int>(solution.segments.size()))
      throw std::logic_error("walk is missing a designated path segment");
    std::vector<WalkStep> path;
    for (const WalkStep& step : solution.segments[index].steps)
      if (step.edge < gadget.witness_map.source_edge_count) path.push_back(step);
    paths.push_back(std::move(path));
  }
  return paths;
}

WalkSolution walk_from_disjoint_paths(const GadgetOutput& gadget,
                                      const std::vector<WalkStep>& first,
                                      const std::vector<WalkStep>& second) {
  const auto* pairs = std::get_if<DisjointPairs>(&gadget.source_problem);
  if (!pairs || gadget.witness_map.added_edges.size() != 2)
    throw std::invalid_argument(
        "walk assembly is defined for the two-disjoint-paths gadget");
  const EdgeId into = gadget.witness_map.added_edges[0];
  const EdgeId outof = gadget.witness_map.added_edges[1];
  const NodeId via = gadget.witness_map.added_nodes[0];

  WalkSolution solution;
  WalkSegment lead{pairs->s1, first};
  lead.steps.push_back(WalkStep{into, via});
  WalkSegment tail{via, {WalkStep{outof, pairs->s2}}};
  tail.steps.insert(tail.steps.end(), second.begin(), second.end());
  solution.segments = {std::move(lead), std::move(tail)};
  solution.usage = recompute_usage(gadget.instance, solution);
  solution.total_cost = recompute_cost(gadget.instance.network, solution);
  return solution;
}

std::vector<int> partition_from_walk(const GadgetOutput& gadget,
                                     const WalkSolution& solution) {
  const auto& cycle = gadget.witness_map.cycle_links;
  if (cycle.size() != 2)
    throw std::invalid_argument("this gadget has no crossing links to read");
  std::vector<int> sides;
  for (const WalkSegment& segment : solution.segments) {
    bool used0 = false, used1 = false;
    for (const WalkStep& step : segment.steps) {
      used0 = used0 || step.edge == cycle[0];
      used1 = used1 || step.edge == cycle[1];
    }
    if (used0 && used1)
      throw std::logic_error("one simple segment crossed the cut twice");
    if (used0) sides.push_back(0);
    if (used1) sides.push_back(1);
  }
  const auto& ints = std::get<PartitionIntegers>(gadget.source_problem).integers;
  if (sides.size() != ints.size())
    throw std::logic_error("crossing count differs from the integer count");
  return sides;
}

WalkSolution walk_from_partition(const GadgetOutput& gadget,
                                 const std::vector<int>& sides) {
  const auto* ints = std::get_if<PartitionIntegers>(&gadget.source_problem);
  if (!ints || gadget.witness_map.cycle_links.size() != 2)
    throw std::invalid_argument(
        "walk assembly is defined for the feasible partition gadget");
  if (sides.size() != ints->integers.size())
    throw std::invalid_argument("need one side per routed integer");

  const WaypointInstance& instance = gadget.instance;
  const Network& net = instance.network;
  std::vector<NodeId> stops{instance.source};
  stops.insert(stops.end(), instance.waypoints.begin(), instance.waypoints.end());
  stops.push_back(instance.target);

  // Canonical walks exist only when every stop is a plain leaf.
  for (NodeId stop : stops)
    if (net.out(stop).size() != 1)
      throw std::invalid_argument(
          "walk assembly is defined for the arbitrary-change flavor");

  WalkSolution solution;
  for (size_t j = 0; j + 1 < stops.size(); ++j) {
    const Network::Hop up = net.out(stops[j])[0];      // leaf -> its center
    const Network::Hop down = net.out(stops[j + 1])[0];  // center -> leaf
    const EdgeId cross = gadget.witness_map.cycle_links[sides[j]];
    WalkSegment segment{stops[j], {}};
    segment.steps.push_back(WalkStep{up.edge, up.to});
    segment.steps.push_back(WalkStep{cross, net.other_endpoint(cross, up.to)});
    segment.steps.push_back(WalkStep{down.edge, stops[j + 1]});
    solution.segments.push_back(std::move(segment));
  }
  solution.usage = recompute_usage(instance, solution);
  solution.total_cost = recompute_cost(net, solution);
  return solution;
}

}  // namespace wrp
