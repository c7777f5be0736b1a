#include "wrp/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>
#include <vector>

namespace wrp {

namespace {

const Rational kNoDistance(-1);

// Capacity-ignoring shortest weighted distances from every node TO `target`
// (Dijkstra on the reversed graph).  Unreachable nodes keep kNoDistance.
// Kept local on purpose: the oracle must not share code with the solvers it
// is used to check.
std::vector<Rational> distances_to(const Network& net, NodeId target) {
  const int n = net.node_count();
  std::vector<Rational> dist(n, kNoDistance);
  std::vector<bool> done(n, false);

  // Reverse adjacency (identical to forward for undirected networks).
  std::vector<std::vector<std::pair<NodeId, Rational>>> in(n);
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    in[ed.to].push_back({ed.from, ed.weight});
    if (!net.directed()) in[ed.from].push_back({ed.to, ed.weight});
  }

  using Item = std::pair<Rational, NodeId>;
  auto cmp = [](const Item& a, const Item& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> queue(cmp);
  dist[target] = Rational(0);
  queue.push({Rational(0), target});
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = true;
    for (const auto& [v, w] : in[u]) {
      Rational nd = d + w;
      if (dist[v] == kNoDistance || nd < dist[v]) {
        dist[v] = nd;
        queue.push({nd, v});
      }
    }
  }
  return dist;
}

struct Search {
  const WaypointInstance& instance;
  const Network& net;
  const OracleLimits& limits;
  bool optimize = true;  // false: stop at first feasible walk

  std::vector<Rational> residual;             // per edge instance
  std::vector<std::vector<Rational>> to_goal; // per segment: dist to its end
  std::vector<Rational> tail_bound;           // sum of later segments' minima
  std::vector<WalkSegment> partial;           // segments built so far
  std::vector<bool> on_segment;               // nodes of the open segment

  bool have_best = false;
  Rational best_cost{0};
  std::vector<WalkSegment> best_segments;

  long long steps = 0;
  bool out_of_budget = false;
  std::chrono::steady_clock::time_point deadline;

  explicit Search(const WaypointInstance& inst, const OracleLimits& lim,
                  bool opt)
      : instance(inst), net(inst.network), limits(lim), optimize(opt) {
    residual.reserve(net.edge_count());
    for (EdgeId e = 0; e < net.edge_count(); ++e)
      residual.push_back(net.edge(e).capacity);
    on_segment.assign(net.node_count(), false);
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(lim.time_budget_seconds));
  }

  bool budget_gone() {
    if (out_of_budget) return true;
    ++steps;
    if (steps > limits.max_total_steps ||
        ((steps & 1023) == 0 && std::chrono::steady_clock::now() > deadline)) {
      out_of_budget = true;
    }
    return out_of_budget;
  }

  // True when every remaining segment is reachable ignoring capacities and,
  // in optimizing mode, the admissible bound does not already lose.
  bool worth_continuing(int segment, NodeId at, const Rational& cost) {
    const Rational& here = to_goal[segment][at];
    if (here == kNoDistance) return false;
    if (!optimize || !have_best) return true;
    return cost + here + tail_bound[segment + 1] < best_cost;
  }

  // Extends segment `i` from node `at`; `cost` and `seg_len` are the walk
  // cost so far and the weighted length of the open segment.
  void extend(int i, NodeId at, Rational cost, Rational seg_len) {
    if (budget_gone()) return;
    const NodeId goal = instance.route_node(i + 1);

    if (at == goal) {
      // A simple path visits its last node once, so arriving at the goal
      // closes the segment; passing through would forbid returning.
      close_segment(i, cost);
      return;
    }
    if (!worth_continuing(i, at, cost)) return;

    const Rational& demand = instance.demands[i];
    for (const auto& hop : net.out(at)) {
      if (on_segment[hop.to]) continue;
      if (residual[hop.edge] < demand) continue;
      const Rational& w = net.edge(hop.edge).weight;
      if (instance.bounds && seg_len + w > (*instance.bounds)[i]) continue;

      residual[hop.edge] -= demand;
      on_segment[hop.to] = true;
      partial[i].steps.push_back(WalkStep{hop.edge, hop.to});

      extend(i, hop.to, cost + w, seg_len + w);

      partial[i].steps.pop_back();
      on_segment[hop.to] = false;
      residual[hop.edge] += demand;
      if (out_of_budget || (!optimize && have_best)) return;
    }
  }

  void close_segment(int i, Rational cost) {
    if (i + 1 == instance.segment_count()) {
      if (!have_best || cost < best_cost) {
        have_best = true;
        best_cost = cost;
        best_segments = partial;
      }
      return;
    }
    // Open the next segment at its route node.
    const NodeId start = instance.route_node(i + 1);
    std::vector<NodeId> cleared;
    for (NodeId v = 0; v < net.node_count(); ++v) {
      if (on_segment[v]) {
        cleared.push_back(v);
        on_segment[v] = false;
      }
    }
    on_segment[start] = true;
    extend(i + 1, start, cost, Rational(0));
    on_segment[start] = false;
    for (NodeId v : cleared) on_segment[v] = true;
  }

  bool run() {
    // Admissible per-segment bounds; an unreachable route pair is an
    // immediate infeasibility proof (capacities only restrict further).
    const int segments = instance.segment_count();
    to_goal.resize(segments);
    for (int i = 0; i < segments; ++i)
      to_goal[i] = distances_to(net, instance.route_node(i + 1));
    tail_bound.assign(segments + 1, Rational(0));
    for (int i = segments - 1; i >= 0; --i) {
      const Rational& d = to_goal[i][instance.route_node(i)];
      if (d == kNoDistance) return false;  // disconnected route pair
      tail_bound[i] = tail_bound[i + 1] + d;
    }

    partial.assign(segments, WalkSegment{});
    for (int i = 0; i < segments; ++i)
      partial[i].start = instance.route_node(i);
    on_segment[instance.source] = true;
    extend(0, instance.source, Rational(0), Rational(0));
    return true;
  }

  WalkSolution finish_solution() const {
    WalkSolution solution;
    solution.segments = best_segments;
    solution.usage = recompute_usage(instance, solution);
    solution.total_cost = recompute_cost(net, solution);
    return solution;
  }
};

void check_node_budget(const WaypointInstance& instance,
                       const OracleLimits& limits) {
  if (instance.network.node_count() > limits.max_nodes) {
    throw std::invalid_argument(
        "oracle refuses: network has " +
        std::to_string(instance.network.node_count()) +
        " nodes, limit is " + std::to_string(limits.max_nodes));
  }
}

}  // namespace

OracleResult solve_exhaustive(const WaypointInstance& instance,
                              const OracleLimits& limits) {
  check_node_budget(instance, limits);
  Search search(instance, limits, /*optimize=*/true);
  search.run();

  OracleResult result;
  result.steps_used = search.steps;
  if (search.out_of_budget) {
    result.status = OracleStatus::kBudgetExceeded;
    if (search.have_best) result.solution = search.finish_solution();
    return result;
  }
  if (!search.have_best) {
    result.status = OracleStatus::kInfeasible;
    return result;
  }
  result.status = OracleStatus::kOptimal;
  result.solution = search.finish_solution();
  return result;
}

FeasibilityResult feasible_exhaustive(const WaypointInstance& instance,
                                      const OracleLimits& limits) {
  check_node_budget(instance, limits);
  Search search(instance, limits, /*optimize=*/false);
  search.run();

  FeasibilityResult result;
  result.steps_used = search.steps;
  if (search.have_best) {
    result.status = Feasibility::kYes;
    result.witness = search.finish_solution();
  } else if (search.out_of_budget) {
    result.status = Feasibility::kBudgetExceeded;
  } else {
    result.status = Feasibility::kNo;
  }
  return result;
}

}  // namespace wrp
