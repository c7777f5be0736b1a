#include "wrp/path_kernels.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace wrp {

namespace {

void require_directed(const Network& net, const char* who) {
  if (!net.directed())
    throw std::invalid_argument(std::string(who) + " requires a directed network");
}

long long integral_or_throw(const Rational& r, const char* what) {
  if (!r.is_integer())
    throw std::invalid_argument(std::string(what) + " must be integral, got " + r.str());
  return r.numerator();
}

// Walks src->dst consuming one unit of `avail` per arc, always taking the
// smallest-id available arc.  Any loop is spliced out on the spot; its arcs
// stay consumed and land in `dropped` (a cancelled cycle).  Returns nullopt
// when src has nothing left to offer.
std::optional<std::vector<WalkStep>> take_unit_path(
    const Network& net, std::vector<long long>& avail, NodeId src, NodeId dst,
    std::vector<EdgeId>& dropped) {
  std::vector<std::vector<EdgeId>> out(net.node_count());
  for (EdgeId e = 0; e < net.edge_count(); ++e)
    if (avail[e] > 0) out[net.edge(e).from].push_back(e);

  std::vector<WalkStep> steps;
  std::map<NodeId, size_t> first_seen{{src, 0}};
  NodeId at = src;
  while (at != dst || steps.empty()) {
    EdgeId pick = -1;
    for (EdgeId e : out[at]) {
      if (avail[e] > 0) {
        pick = e;
        break;
      }
    }
    if (pick == -1) {
      if (at == src && steps.empty()) return std::nullopt;
      throw std::logic_error("flow decomposition: stuck at node '" + net.node_name(at) +
                             "' — flow is not conserved");
    }
    --avail[pick];
    at = net.edge(pick).to;
    steps.push_back(WalkStep{pick, at});
    if (at == dst) break;
    auto [it, fresh] = first_seen.try_emplace(at, steps.size());
    if (!fresh) {
      // Splice the loop out; those units circulate and cancel.
      for (size_t i = it->second; i < steps.size(); ++i) dropped.push_back(steps[i].edge);
      // Forget nodes first seen inside the loop.
      for (auto walker = first_seen.begin(); walker != first_seen.end();)
        walker = walker->second > it->second ? first_seen.erase(walker) : std::next(walker);
      steps.resize(it->second);
    }
  }
  return steps;
}

}  // namespace

DistanceLabeling shortest_path(const Network& network, NodeId src) {
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    if (network.edge(e).weight.is_negative())
      throw std::invalid_argument("negative weight unsupported");
  }
  if (src < 0 || src >= network.node_count())
    throw std::invalid_argument("shortest_path: unknown source node");

  const int n = network.node_count();
  DistanceLabeling labels;
  labels.distance.resize(n);
  labels.parent_edge.assign(n, -1);
  labels.parent_node.assign(n, -1);
  labels.distance[src] = Rational(0);

  using Entry = std::pair<Rational, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
  std::vector<bool> done(n, false);
  queue.push({Rational(0), src});
  while (!queue.empty()) {
    auto [dist, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = true;
    for (const auto& hop : network.out(u)) {
      if (done[hop.to]) continue;
      Rational candidate = dist + network.edge(hop.edge).weight;
      auto& current = labels.distance[hop.to];
      bool better = !current || candidate < *current;
      bool tie_break =
          current && candidate == *current &&
          std::make_pair(u, hop.edge) <
              std::make_pair(labels.parent_node[hop.to], labels.parent_edge[hop.to]);
      if (!better && !tie_break) continue;
      current = candidate;
      labels.parent_node[hop.to] = u;
      labels.parent_edge[hop.to] = hop.edge;
      if (better) queue.push({candidate, hop.to});
    }
  }
  return labels;
}

std::optional<std::vector<WalkStep>> extract_path(const DistanceLabeling& labels,
                                                  NodeId src, NodeId dst) {
  if (!labels.reached(dst)) return std::nullopt;
  std::vector<WalkStep> steps;
  for (NodeId v = dst; v != src; v = labels.parent_node[v])
    steps.push_back(WalkStep{labels.parent_edge[v], v});
  std::reverse(steps.begin(), steps.end());
  return steps;
}

DisjointPair suurballe_pair(const Network& network, NodeId src, NodeId dst) {
  require_directed(network, "suurballe_pair");
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    if (network.edge(e).capacity != Rational(1))
      throw std::invalid_argument("suurballe_pair expects unit arc capacities");
  }
  DisjointPair result;
  if (src == dst) {
    result.feasible = true;
    return result;
  }

  auto first_labels = shortest_path(network, src);
  if (!first_labels.reached(dst)) return result;
  auto first_path = *extract_path(first_labels, src, dst);
  std::vector<bool> on_first(network.edge_count(), false);
  for (const WalkStep& step : first_path) on_first[step.edge] = true;

  // Residual graph under reduced costs: first-path arcs flip around at cost
  // zero, everything else keeps direction at w + d(u) - d(v) >= 0.  Nodes
  // the first Dijkstra missed stay unreachable and are simply skipped.
  struct Arc {
    NodeId to;
    Rational cost;
    EdgeId edge;
    bool reversed;
  };
  const int n = network.node_count();
  std::vector<std::vector<Arc>> residual(n);
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& ed = network.edge(e);
    if (on_first[e]) {
      residual[ed.to].push_back({ed.from, Rational(0), e, true});
      continue;
    }
    if (!first_labels.reached(ed.from) || !first_labels.reached(ed.to)) continue;
    Rational reduced =
        ed.weight + *first_labels.distance[ed.from] - *first_labels.distance[ed.to];
    if (reduced.is_negative())
      throw std::logic_error("suurballe_pair: negative reduced cost");
    residual[ed.from].push_back({ed.to, reduced, e, false});
  }

  std::vector<std::optional<Rational>> dist(n);
  std::vector<std::pair<NodeId, EdgeId>> parent(n, {-1, -1});
  std::vector<bool> reversed_into(n, false);
  std::vector<bool> done(n, false);
  using Entry = std::pair<Rational, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
  dist[src] = Rational(0);
  queue.push({Rational(0), src});
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = true;
    for (const Arc& arc : residual[u]) {
      if (done[arc.to]) continue;
      Rational candidate = d + arc.cost;
      bool better = !dist[arc.to] || candidate < *dist[arc.to];
      bool tie_break = dist[arc.to] && candidate == *dist[arc.to] &&
                       std::make_pair(u, arc.edge) < parent[arc.to];
      if (!better && !tie_break) continue;
      dist[arc.to] = candidate;
      parent[arc.to] = {u, arc.edge};
      reversed_into[arc.to] = arc.reversed;
      if (better) queue.push({candidate, arc.to});
    }
  }
  if (!dist[dst]) return result;

  // Overlay the two walks as an arc multiset; a reversed traversal cancels
  // the first path's use of that arc.
  std::vector<long long> used(network.edge_count(), 0);
  for (const WalkStep& step : first_path) used[step.edge] = 1;
  for (NodeId v = dst; v != src; v = parent[v].first) {
    if (reversed_into[v])
      --used[parent[v].second];
    else
      ++used[parent[v].second];
  }
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    if (used[e] < 0 || used[e] > 1)
      throw std::logic_error("suurballe_pair: cancellation left a bad multiset");
  }

  std::vector<EdgeId> dropped;
  auto one = take_unit_path(network, used, src, dst, dropped);
  auto two = take_unit_path(network, used, src, dst, dropped);
  if (!one || !two) throw std::logic_error("suurballe_pair: expected two paths in the overlay");
  // Whatever survives is cycles; they must cost nothing to be droppable.
  Rational leftover(0);
  for (EdgeId e = 0; e < network.edge_count(); ++e)
    if (used[e] > 0) leftover += network.edge(e).weight;
  for (EdgeId e : dropped) leftover += network.edge(e).weight;
  if (!leftover.is_zero())
    throw std::logic_error("suurballe_pair: dropped cycles carry weight " + leftover.str());

  result.feasible = true;
  result.first = std::move(*one);
  result.second = std::move(*two);
  for (const WalkStep& step : result.first)
    result.combined_weight += network.edge(step.edge).weight;
  for (const WalkStep& step : result.second)
    result.combined_weight += network.edge(step.edge).weight;

  Rational predicted = *first_labels.distance[dst] + *first_labels.distance[dst] + *dist[dst];
  if (result.combined_weight != predicted)
    throw std::logic_error("suurballe_pair: extraction changed the total weight");
  return result;
}

std::optional<FlowAssignment> min_cost_flow(const Network& network, NodeId src,
                                            NodeId dst, long long value) {
  require_directed(network, "min_cost_flow");
  if (value < 1) throw std::invalid_argument("min_cost_flow: value must be positive");
  std::vector<long long> capacity(network.edge_count());
  for (EdgeId e = 0; e < network.edge_count(); ++e)
    capacity[e] = integral_or_throw(network.edge(e).capacity, "min_cost_flow: capacity");

  const int n = network.node_count();
  std::vector<long long> flow(network.edge_count(), 0);
  std::vector<Rational> potential(n, Rational(0));

  // Prime the potentials so the very first residual pass sees non-negative
  // reduced costs (all weights are non-negative, so plain Dijkstra works).
  {
    auto labels = shortest_path(network, src);
    for (NodeId v = 0; v < n; ++v)
      if (labels.reached(v)) potential[v] = *labels.distance[v];
  }

  long long remaining = value;
  while (remaining > 0) {
    struct Arc {
      NodeId to;
      EdgeId edge;
      bool backward;
    };
    std::vector<std::vector<Arc>> residual(n);
    for (EdgeId e = 0; e < network.edge_count(); ++e) {
      const Edge& ed = network.edge(e);
      if (flow[e] < capacity[e]) residual[ed.from].push_back({ed.to, e, false});
      if (flow[e] > 0) residual[ed.to].push_back({ed.from, e, true});
    }

    std::vector<std::optional<Rational>> dist(n);
    std::vector<std::pair<NodeId, EdgeId>> parent(n, {-1, -1});
    std::vector<bool> via_backward(n, false);
    std::vector<bool> done(n, false);
    using Entry = std::pair<Rational, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
    dist[src] = Rational(0);
    queue.push({Rational(0), src});
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (done[u]) continue;
      done[u] = true;
      for (const Arc& arc : residual[u]) {
        if (done[arc.to]) continue;
        const Rational& weight = network.edge(arc.edge).weight;
        Rational reduced = arc.backward ? Rational(0) - weight + potential[u] - potential[arc.to]
                                        : weight + potential[u] - potential[arc.to];
        if (reduced.is_negative())
          throw std::logic_error("min_cost_flow: potentials let a reduced cost go negative");
        Rational candidate = d + reduced;
        bool better = !dist[arc.to] || candidate < *dist[arc.to];
        bool tie_break = dist[arc.to] && candidate == *dist[arc.to] &&
                         std::make_pair(u, arc.edge) < parent[arc.to];
        if (!better && !tie_break) continue;
        dist[arc.to] = candidate;
        parent[arc.to] = {u, arc.edge};
        via_backward[arc.to] = arc.backward;
        if (better) queue.push({candidate, arc.to});
      }
    }
    if (!dist[dst]) return std::nullopt;

    long long push = remaining;
    for (NodeId v = dst; v != src; v = parent[v].first) {
      EdgeId e = parent[v].second;
      push = std::min(push, via_backward[v] ? flow[e] : capacity[e] - flow[e]);
    }
    for (NodeId v = dst; v != src; v = parent[v].first) {
      EdgeId e = parent[v].second;
      flow[e] += via_backward[v] ? -push : push;
    }
    remaining -= push;
    for (NodeId v = 0; v < n; ++v)
      if (dist[v]) potential[v] += *dist[v];
  }

  FlowAssignment out;
  out.flow.reserve(network.edge_count());
  out.value = Rational(value);
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    out.flow.push_back(Rational(flow[e]));
    out.cost += Rational(flow[e]) * network.edge(e).weight;
  }
  return out;
}

std::vector<FlowPath> decompose_flow(const Network& network,
                                     const FlowAssignment& flow, NodeId src,
                                     NodeId dst) {
  require_directed(network, "decompose_flow");
  if (flow.flow.size() != static_cast<size_t>(network.edge_count()))
    throw std::invalid_argument("decompose_flow: flow vector does not match the network");
  std::vector<long long> avail(network.edge_count());
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    avail[e] = integral_or_throw(flow.flow[e], "decompose_flow: flow");
    if (avail[e] < 0) throw std::invalid_argument("decompose_flow: negative flow");
  }
  const long long value = integral_or_throw(flow.value, "decompose_flow: value");

  std::vector<FlowPath> paths;
  if (src == dst) return paths;
  std::vector<EdgeId> dropped;
  for (long long unit = 0; unit < value; ++unit) {
    auto steps = take_unit_path(network, avail, src, dst, dropped);
    if (!steps) throw std::logic_error("decompose_flow: flow value exceeds what the arcs carry");
    auto same = std::find_if(paths.begin(), paths.end(), [&](const FlowPath& p) {
      return p.steps.size() == steps->size() &&
             std::equal(p.steps.begin(), p.steps.end(), steps->begin(),
                        [](const WalkStep& a, const WalkStep& b) { return a.edge == b.edge; });
    });
    if (same != paths.end())
      ++same->multiplicity;
    else
      paths.push_back(FlowPath{std::move(*steps), 1});
  }
  return paths;
}

}  // namespace wrp
