#include "wrp/single_waypoint.hpp"

#include <algorithm>
#include <stdexcept>

#include "wrp/path_kernels.hpp"
#include "wrp/transforms.hpp"

namespace wrp {

namespace {

void check_regime(const WaypointInstance& instance) {
  const bool fits = instance.waypoint_count() == 1 && !instance.network.directed() &&
                    !instance.bounds &&
                    std::all_of(instance.demands.begin(), instance.demands.end(),
                                [](const Rational& d) { return d == Rational(1); });
  if (!fits)
    throw std::invalid_argument(
        "unsupported by this solver: needs an undirected network, exactly one "
        "waypoint, unit demands, and no length bounds");
}

WalkSegment reverse_segment(const WalkSegment& segment) {
  WalkSegment out;
  out.start = segment.end();
  NodeId before = segment.start;
  for (const WalkStep& step : segment.steps) {
    out.steps.push_back(WalkStep{step.edge, before});
    before = step.to;
  }
  std::reverse(out.steps.begin(), out.steps.end());
  return out;
}

//! Shared tail of both methods: two super-terminal paths, expressed on the
//! subdivided network, become the two walk segments on the original one.
std::optional<WalkSolution> assemble(const WaypointInstance& instance,
                                     const TransformTrace& expand_trace,
                                     const TransformTrace& orient_trace,
                                     const TransformTrace& subdivide_trace,
                                     std::vector<WalkSegment> super_paths,
                                     NodeId super_source) {
  super_paths = map_segments_back(subdivide_trace, super_paths);
  // Strip the super-terminal hops; what remains lives on the oriented
  // gadget graph (the attach step appended its links after the copied
  // arcs, so ids line up).
  for (WalkSegment& seg : super_paths) {
    if (seg.start != super_source || seg.steps.size() < 2)
      throw std::logic_error("single waypoint: malformed super-terminal path");
    seg.start = seg.steps.front().to;
    seg.steps.erase(seg.steps.begin());
    seg.steps.pop_back();
  }

  auto mapped = map_segments_back(orient_trace, super_paths);
  mapped = map_segments_back(expand_trace, mapped);

  const NodeId s = instance.route_node(0);
  const NodeId t = instance.route_node(2);
  // One path leaves from s, the other from t; with s == t either order
  // works.  Both end at the waypoint.
  if (mapped[0].start == t && mapped[0].start != s) std::swap(mapped[0], mapped[1]);
  if (mapped[0].start != s || mapped[1].start != t)
    throw std::logic_error("single waypoint: paths do not start at the terminals");

  WalkSolution solution;
  solution.segments = {std::move(mapped[0]), reverse_segment(mapped[1])};
  solution.usage = recompute_usage(instance, solution);
  solution.total_cost = recompute_cost(instance.network, solution);
  auto report = validate_walk(instance, solution);
  if (!report.ok)
    throw std::logic_error("single waypoint: assembled walk failed validation: " +
                           report.violations.front());
  return solution;
}

}  // namespace

std::optional<WalkSolution> solve_single_waypoint(const WaypointInstance& instance,
                                                  SingleWaypointMethod method) {
  check_regime(instance);
  const NodeId s = instance.route_node(0);
  const NodeId w = instance.route_node(1);
  const NodeId t = instance.route_node(2);

  auto [unit_net, expand_trace] = expand_capacities(instance.network, 2);
  auto [digraph, orient_trace] = orient_undirected(unit_net);
  auto attached = attach_super_terminals(digraph, s, t, w);
  auto [final_net, subdivide_trace] = subdivide_parallel(attached.network);

  std::vector<WalkSegment> super_paths;
  if (method == SingleWaypointMethod::kSuurballe) {
    auto pair = suurballe_pair(final_net, attached.super_source, attached.super_sink);
    if (!pair.feasible) return std::nullopt;
    super_paths.push_back(WalkSegment{attached.super_source, std::move(pair.first)});
    super_paths.push_back(WalkSegment{attached.super_source, std::move(pair.second)});
  } else {
    auto flow = min_cost_flow(final_net, attached.super_source, attached.super_sink, 2);
    if (!flow) return std::nullopt;
    auto paths = decompose_flow(final_net, *flow, attached.super_source, attached.super_sink);
    for (const FlowPath& p : paths) {
      for (long long i = 0; i < p.multiplicity; ++i)
        super_paths.push_back(WalkSegment{attached.super_source, p.steps});
    }
    if (super_paths.size() != 2)
      throw std::logic_error("single waypoint: value-2 flow did not decompose into two paths");
  }
  return assemble(instance, expand_trace, orient_trace, subdivide_trace,
                  std::move(super_paths), attached.super_source);
}

std::optional<WalkSolution> greedy_baseline(const WaypointInstance& instance) {
  check_regime(instance);
  const Network& net = instance.network;
  const NodeId s = instance.route_node(0);
  const NodeId w = instance.route_node(1);
  const NodeId t = instance.route_node(2);

  // Usable means one unit of residual capacity.  Track per-edge residuals
  // and rebuild the filtered view between the two passes.
  std::vector<Rational> residual(net.edge_count());
  for (EdgeId e = 0; e < net.edge_count(); ++e) residual[e] = net.edge(e).capacity;

  auto filtered = [&]() {
    Network view(Directedness::kUndirected);
    for (NodeId v = 0; v < net.node_count(); ++v) view.add_node(net.node_name(v));
    std::vector<EdgeId> back;
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
      if (residual[e] < Rational(1)) continue;
      const Edge& ed = net.edge(e);
      view.add_edge(ed.from, ed.to, ed.capacity, ed.weight);
      back.push_back(e);
    }
    return std::make_pair(std::move(view), std::move(back));
  };

  WalkSolution solution;
  NodeId from = s;
  for (NodeId goal : {w, t}) {
    auto [view, back] = filtered();
    auto labels = shortest_path(view, from);
    auto path = extract_path(labels, from, goal);
    if (!path) return std::nullopt;
    WalkSegment seg{from, {}};
    for (const WalkStep& step : *path) {
      seg.steps.push_back(WalkStep{back[step.edge], step.to});
      residual[back[step.edge]] -= Rational(1);
    }
    solution.segments.push_back(std::move(seg));
    from = goal;
  }
  solution.usage = recompute_usage(instance, solution);
  solution.total_cost = recompute_cost(net, solution);
  return solution;
}

}  // namespace wrp
