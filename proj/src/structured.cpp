#include "wrp/structured.hpp"

#include <queue>
#include <stdexcept>
#include <vector>

#include "wrp/classify.hpp"
#include "wrp/path_kernels.hpp"

namespace wrp {

namespace {

// Dijkstra over edges with residual capacity >= demand, reusing the kernel
// on a filtered view and translating edge ids back.
std::optional<WalkSegment> shortest_over_residual(const Network& net,
                                                  const std::vector<Rational>& residual,
                                                  NodeId from, NodeId to,
                                                  const Rational& demand) {
  Network view(net.directedness());
  for (NodeId v = 0; v < net.node_count(); ++v) view.add_node(net.node_name(v));
  std::vector<EdgeId> back;
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (residual[e] < demand) continue;
    const Edge& ed = net.edge(e);
    view.add_edge(ed.from, ed.to, ed.capacity, ed.weight);
    back.push_back(e);
  }
  auto labels = shortest_path(view, from);
  auto path = extract_path(labels, from, to);
  if (!path) return std::nullopt;
  WalkSegment seg{from, {}};
  for (const WalkStep& step : *path) seg.steps.push_back(WalkStep{back[step.edge], step.to});
  return seg;
}

WalkSolution finish(const WaypointInstance& instance, WalkSolution solution,
                    const char* who) {
  solution.usage = recompute_usage(instance, solution);
  solution.total_cost = recompute_cost(instance.network, solution);
  auto report = validate_walk(instance, solution);
  if (!report.ok)
    throw std::logic_error(std::string(who) + ": assembled walk failed validation: " +
                           report.violations.front());
  return solution;
}

}  // namespace

std::optional<WalkSegment> solve_single_segment(const Network& network, NodeId from,
                                                NodeId to, const Rational& demand) {
  std::vector<Rational> residual(network.edge_count());
  for (EdgeId e = 0; e < network.edge_count(); ++e) residual[e] = network.edge(e).capacity;
  return shortest_over_residual(network, residual, from, to, demand);
}

std::optional<WalkSolution> solve_tree(const WaypointInstance& instance) {
  const Network& net = instance.network;
  if (!underlying_is_tree(net))
    throw std::invalid_argument("solve_tree: the underlying network is not a tree");

  // Undirected adjacency over the tree's edge instances; paths are unique,
  // so plain BFS parent-tracking recovers each one.
  std::vector<std::vector<Network::Hop>> touch(net.node_count());
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    touch[ed.from].push_back({e, ed.to});
    touch[ed.to].push_back({e, ed.from});
  }

  std::vector<Rational> used(net.edge_count(), Rational(0));
  WalkSolution solution;
  for (int i = 0; i < instance.segment_count(); ++i) {
    const NodeId a = instance.route_node(i);
    const NodeId b = instance.route_node(i + 1);
    std::vector<std::pair<NodeId, EdgeId>> via(net.node_count(), {-1, -1});
    std::vector<bool> seen(net.node_count(), false);
    std::queue<NodeId> frontier;
    frontier.push(a);
    seen[a] = true;
    while (!frontier.empty()) {
      NodeId u = frontier.front();
      frontier.pop();
      for (const auto& hop : touch[u]) {
        if (seen[hop.to]) continue;
        seen[hop.to] = true;
        via[hop.to] = {u, hop.edge};
        frontier.push(hop.to);
      }
    }
    if (!seen[b]) return std::nullopt;  // forest, endpoints in different parts

    WalkSegment seg{a, {}};
    std::vector<WalkStep> reversed;
    for (NodeId v = b; v != a; v = via[v].first)
      reversed.push_back(WalkStep{via[v].second, v});
    Rational length(0);
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
      const Edge& ed = net.edge(it->edge);
      // On a directed tree the unique underlying path must agree with
      // every arc's direction.
      if (net.directed() && ed.to != it->to) return std::nullopt;
      used[it->edge] += instance.demands[i];
      length += ed.weight;
      seg.steps.push_back(*it);
    }
    if (instance.bounds && length > (*instance.bounds)[i]) return std::nullopt;
    solution.segments.push_back(std::move(seg));
  }
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (used[e] > net.edge(e).capacity) return std::nullopt;
  }
  return finish(instance, std::move(solution), "solve_tree");
}

std::optional<WalkSolution> solve_dag(const WaypointInstance& instance) {
  const Network& net = instance.network;
  if (!net.directed() || !topological_order(net))
    throw std::invalid_argument("solve_dag: needs a directed acyclic network");

  std::vector<Rational> residual(net.edge_count());
  for (EdgeId e = 0; e < net.edge_count(); ++e) residual[e] = net.edge(e).capacity;

  WalkSolution solution;
  for (int i = 0; i < instance.segment_count(); ++i) {
    auto seg = shortest_over_residual(net, residual, instance.route_node(i),
                                      instance.route_node(i + 1), instance.demands[i]);
    if (!seg) return std::nullopt;
    Rational length(0);
    for (const WalkStep& step : seg->steps) {
      residual[step.edge] -= instance.demands[i];
      length += net.edge(step.edge).weight;
    }
    // The path is weight-minimal, so if it breaks the bound nothing fits.
    if (instance.bounds && length > (*instance.bounds)[i]) return std::nullopt;
    solution.segments.push_back(std::move(*seg));
  }
  return finish(instance, std::move(solution), "solve_dag");
}

}  // namespace wrp
