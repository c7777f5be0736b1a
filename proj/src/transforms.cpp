#include "wrp/transforms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace wrp {

namespace {

// Auxiliary node names must not collide with interned user names, so probe
// until a free one turns up.
NodeId fresh_node(Network& net, const std::string& base) {
  std::string name = base;
  int bump = 1;
  while (net.find_node(name)) name = base + "#" + std::to_string(++bump);
  return net.add_node(name);
}

long long floor_of(const Rational& r) {
  // Network forbids negative capacities, so plain integer division floors.
  return r.numerator() / r.denominator();
}

Network copy_nodes(const Network& source, Directedness d) {
  Network out(d);
  for (NodeId v = 0; v < source.node_count(); ++v) out.add_node(source.node_name(v));
  return out;
}

}  // namespace

std::vector<EdgeId> TransformTrace::edge_origin() const {
  std::vector<EdgeId> origin(derived_edge_count, -1);
  for (EdgeId e = 0; e < static_cast<EdgeId>(forward.size()); ++e) {
    for (EdgeId d : forward[e]) {
      if (d < 0 || d >= derived_edge_count || origin[d] != -1)
        throw std::logic_error("transform trace: derived edge must appear in exactly one forward image");
      origin[d] = e;
    }
  }
  for (EdgeId d = 0; d < derived_edge_count; ++d) {
    if (origin[d] == -1)
      throw std::logic_error("transform trace: derived edge missing from forward mapping");
  }
  return origin;
}

std::pair<Network, TransformTrace> expand_capacities(const Network& network,
                                                     long long multiplicity_cap) {
  if (multiplicity_cap < 1)
    throw std::invalid_argument("expand_capacities: multiplicity cap must be at least 1");

  Network out = copy_nodes(network, network.directedness());
  TransformTrace trace;
  trace.kind = TransformKind::kExpandCapacities;
  trace.forward.resize(network.edge_count());
  for (NodeId v = 0; v < network.node_count(); ++v) trace.node_origin.push_back(v);

  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& ed = network.edge(e);
    const long long copies = std::min(floor_of(ed.capacity), multiplicity_cap);
    for (long long i = 0; i < copies; ++i)
      trace.forward[e].push_back(out.add_edge(ed.from, ed.to, Rational(1), ed.weight));
  }
  trace.derived_edge_count = out.edge_count();
  return {std::move(out), std::move(trace)};
}

std::pair<Network, TransformTrace> orient_undirected(const Network& network) {
  if (network.directed())
    throw std::invalid_argument("orient_undirected: input must be undirected");

  Network out = copy_nodes(network, Directedness::kDirected);
  TransformTrace trace;
  trace.kind = TransformKind::kOrientUndirected;
  trace.forward.resize(network.edge_count());
  for (NodeId v = 0; v < network.node_count(); ++v) trace.node_origin.push_back(v);

  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& ed = network.edge(e);
    const std::string tag = std::to_string(e);
    NodeId x = fresh_node(out, "__or" + tag + "x");
    NodeId y = fresh_node(out, "__or" + tag + "y");
    trace.node_origin.push_back(kAuxiliaryNode);
    trace.node_origin.push_back(kAuxiliaryNode);
    auto& image = trace.forward[e];
    image.push_back(out.add_edge(ed.from, x, Rational(1), Rational(0)));
    image.push_back(out.add_edge(ed.to, x, Rational(1), Rational(0)));
    image.push_back(out.add_edge(x, y, Rational(1), ed.weight));
    image.push_back(out.add_edge(y, ed.to, Rational(1), Rational(0)));
    image.push_back(out.add_edge(y, ed.from, Rational(1), Rational(0)));
  }
  trace.derived_edge_count = out.edge_count();
  return {std::move(out), std::move(trace)};
}

SuperTerminals attach_super_terminals(const Network& network, NodeId s, NodeId t,
                                      NodeId w) {
  for (NodeId v : {s, t, w}) {
    if (v < 0 || v >= network.node_count())
      throw std::invalid_argument("attach_super_terminals: unknown node id " + std::to_string(v));
  }
  Network out = copy_nodes(network, network.directedness());
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& ed = network.edge(e);
    out.add_edge(ed.from, ed.to, ed.capacity, ed.weight);
  }
  NodeId super_source = fresh_node(out, "S+");
  NodeId super_sink = fresh_node(out, "T+");
  out.add_edge(super_source, s, Rational(1), Rational(0));
  out.add_edge(super_source, t, Rational(1), Rational(0));
  out.add_edge(w, super_sink, Rational(1), Rational(0));
  out.add_edge(w, super_sink, Rational(1), Rational(0));
  return {std::move(out), super_source, super_sink};
}

std::pair<Network, TransformTrace> subdivide_parallel(const Network& network) {
  // Bundle key: ordered endpoints for arcs, sorted endpoints otherwise.
  std::map<std::pair<NodeId, NodeId>, int> bundle_size;
  auto key = [&](const Edge& ed) {
    if (network.directed()) return std::make_pair(ed.from, ed.to);
    return std::make_pair(std::min(ed.from, ed.to), std::max(ed.from, ed.to));
  };
  for (EdgeId e = 0; e < network.edge_count(); ++e) ++bundle_size[key(network.edge(e))];

  Network out = copy_nodes(network, network.directedness());
  TransformTrace trace;
  trace.kind = TransformKind::kSubdivideParallel;
  trace.forward.resize(network.edge_count());
  for (NodeId v = 0; v < network.node_count(); ++v) trace.node_origin.push_back(v);

  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& ed = network.edge(e);
    if (bundle_size[key(ed)] < 2) {
      trace.forward[e].push_back(out.add_edge(ed.from, ed.to, ed.capacity, ed.weight));
      continue;
    }
    NodeId mid = fresh_node(out, "__sd" + std::to_string(e));
    trace.node_origin.push_back(kAuxiliaryNode);
    trace.forward[e].push_back(out.add_edge(ed.from, mid, ed.capacity, ed.weight));
    trace.forward[e].push_back(out.add_edge(mid, ed.to, ed.capacity, Rational(0)));
  }
  trace.derived_edge_count = out.edge_count();
  return {std::move(out), std::move(trace)};
}

std::vector<WalkSegment> map_segments_back(const TransformTrace& trace,
                                           const std::vector<WalkSegment>& derived) {
  const std::vector<EdgeId> origin = trace.edge_origin();
  auto original_node = [&](NodeId v) {
    if (v < 0 || v >= static_cast<NodeId>(trace.node_origin.size()) ||
        trace.node_origin[v] == kAuxiliaryNode)
      throw std::logic_error("trace mapping: segment endpoint is not an original node");
    return trace.node_origin[v];
  };

  std::vector<WalkSegment> mapped;
  mapped.reserve(derived.size());
  for (const WalkSegment& seg : derived) {
    WalkSegment out;
    out.start = original_node(seg.start);
    EdgeId pending = -1;
    for (const WalkStep& step : seg.steps) {
      if (step.edge < 0 || step.edge >= static_cast<EdgeId>(origin.size()))
        throw std::logic_error("trace mapping: step uses an edge the trace does not know");
      EdgeId orig = origin[step.edge];
      if (pending != -1 && pending != orig)
        throw std::logic_error("trace mapping: auxiliary run spans two original edges");
      if (trace.node_origin[step.to] == kAuxiliaryNode) {
        pending = orig;  // mid-gadget; the original hop completes later
        continue;
      }
      out.steps.push_back(WalkStep{orig, trace.node_origin[step.to]});
      pending = -1;
    }
    if (pending != -1)
      throw std::logic_error("trace mapping: segment ends inside a gadget");
    mapped.push_back(std::move(out));
  }
  return mapped;
}

WalkSolution map_solution_back(const WaypointInstance& original,
                               const std::vector<TransformTrace>& chain,
                               std::vector<WalkSegment> derived_segments) {
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    derived_segments = map_segments_back(*it, derived_segments);
  WalkSolution solution;
  solution.segments = std::move(derived_segments);
  solution.usage = recompute_usage(original, solution);
  solution.total_cost = recompute_cost(original.network, solution);
  return solution;
}

DisjointPathsInstance outerplanar_reduction(const WaypointInstance& instance) {
  for (const Rational& d : instance.demands) {
    if (d != Rational(1))
      throw std::invalid_argument("outerplanar reduction requires unit demands");
  }
  if (instance.bounds)
    throw std::invalid_argument("outerplanar reduction decides feasibility only; length bounds are not representable");

  const Network& net = instance.network;
  const long long cap_clamp = std::max<long long>(1, net.node_count());

  DisjointPathsInstance out;
  // Per-node parity of the clamped capacity sums; odd interior nodes break
  // the reduction, so report them.
  std::vector<long long> incident(net.node_count(), 0);
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    long long c = std::min(floor_of(ed.capacity), cap_clamp);
    if (floor_of(ed.capacity) > cap_clamp) out.report.clamped = true;
    incident[ed.from] += c;
    incident[ed.to] += c;
  }
  for (NodeId v = 0; v < net.node_count(); ++v)
    if (incident[v] % 2 != 0) out.report.odd_capacity_nodes.push_back(v);

  auto [expanded, expand_trace] = expand_capacities(net, cap_clamp);
  // Subdivide every link once so parallel copies become internally disjoint
  // paths of length two.
  Network derived = copy_nodes(expanded, expanded.directedness());
  for (EdgeId e = 0; e < expanded.edge_count(); ++e) {
    const Edge& ed = expanded.edge(e);
    NodeId mid = fresh_node(derived, "__dp" + std::to_string(e));
    derived.add_edge(ed.from, mid, Rational(1), ed.weight);
    derived.add_edge(mid, ed.to, Rational(1), Rational(0));
  }
  out.network = std::move(derived);
  for (int i = 0; i < instance.segment_count(); ++i)
    out.terminal_pairs.emplace_back(instance.route_node(i), instance.route_node(i + 1));
  return out;
}

}  // namespace wrp
