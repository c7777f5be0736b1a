#include "wrp/instance.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace wrp {

NodeId WaypointInstance::route_node(int i) const {
  const int k = waypoint_count();
  if (i < 0 || i > k + 1) throw std::invalid_argument("route index out of range");
  if (i == 0) return source;
  if (i == k + 1) return target;
  return waypoints[i - 1];
}

WaypointInstance make_instance(Network network, NodeId source, NodeId target,
                               std::vector<NodeId> waypoints,
                               std::vector<Rational> demands,
                               std::optional<std::vector<Rational>> bounds,
                               DegenerateSegments degenerate) {
  auto check_node = [&](NodeId v, const char* what) {
    if (v < 0 || v >= network.node_count()) {
      throw std::invalid_argument(std::string(what) + " node is not in the network");
    }
  };
  check_node(source, "source");
  check_node(target, "target");
  for (NodeId w : waypoints) check_node(w, "waypoint");

  std::set<NodeId> seen;
  for (NodeId w : waypoints) {
    if (!seen.insert(w).second)
      throw std::invalid_argument("duplicate waypoint node '" +
                                  network.node_name(w) + "'");
    if ((w == source || w == target) &&
        degenerate == DegenerateSegments::kForbid) {
      throw std::invalid_argument(
          "waypoint '" + network.node_name(w) +
          "' coincides with source/target; degenerate segments not allowed");
    }
  }

  const size_t segment_count = waypoints.size() + 1;
  if (demands.empty()) demands.assign(segment_count, Rational(1));
  if (demands.size() != segment_count) {
    std::ostringstream msg;
    msg << "demands: expected " << segment_count << " values (one per segment), got "
        << demands.size();
    throw std::invalid_argument(msg.str());
  }
  for (const Rational& d : demands) {
    if (d <= Rational(0))
      throw std::invalid_argument("demands must be positive");
  }
  if (bounds) {
    if (bounds->size() != segment_count) {
      std::ostringstream msg;
      msg << "bounds: expected " << segment_count << " values (one per segment), got "
          << bounds->size();
      throw std::invalid_argument(msg.str());
    }
    for (const Rational& b : *bounds) {
      if (b.is_negative())
        throw std::invalid_argument("bounds must be non-negative");
    }
  }

  WaypointInstance instance;
  instance.network = std::move(network);
  instance.source = source;
  instance.target = target;
  instance.waypoints = std::move(waypoints);
  instance.demands = std::move(demands);
  instance.bounds = std::move(bounds);
  return instance;
}

std::map<EdgeId, Rational> recompute_usage(const WaypointInstance& instance,
                                           const WalkSolution& solution) {
  std::map<EdgeId, Rational> usage;
  for (size_t i = 0; i < solution.segments.size(); ++i) {
    const Rational demand = i < instance.demands.size()
                                ? instance.demands[i]
                                : Rational(1);
    for (const WalkStep& step : solution.segments[i].steps) {
      if (step.edge < 0 || step.edge >= instance.network.edge_count())
        throw std::invalid_argument("dangling edge reference " +
                                    std::to_string(step.edge));
      usage[step.edge] += demand;
    }
  }
  return usage;
}

Rational recompute_cost(const Network& network, const WalkSolution& solution) {
  Rational cost(0);
  for (const WalkSegment& segment : solution.segments) {
    for (const WalkStep& step : segment.steps) {
      cost += network.edge(step.edge).weight;
    }
  }
  return cost;
}

namespace {

std::string edge_label(const Network& net, EdgeId e) {
  const Edge& ed = net.edge(e);
  std::ostringstream out;
  out << "edge " << e << " (" << net.node_name(ed.from) << "-"
      << net.node_name(ed.to) << ")";
  return out.str();
}

}  // namespace

ValidationReport validate_walk(const WaypointInstance& instance,
                               const WalkSolution& solution) {
  const Network& net = instance.network;
  ValidationReport report;
  auto violate = [&](const std::string& msg) {
    report.ok = false;
    report.violations.push_back(msg);
  };

  // Dangling references are a hard error, checked up front.
  for (const WalkSegment& segment : solution.segments) {
    for (const WalkStep& step : segment.steps) {
      if (step.edge < 0 || step.edge >= net.edge_count())
        throw std::invalid_argument("dangling edge reference " +
                                    std::to_string(step.edge));
    }
  }
  for (const auto& [edge, used] : solution.usage) {
    (void)used;
    if (edge < 0 || edge >= net.edge_count())
      throw std::invalid_argument("dangling edge reference " +
                                  std::to_string(edge));
  }

  const int expected_segments = instance.segment_count();
  if (static_cast<int>(solution.segments.size()) != expected_segments) {
    std::ostringstream msg;
    msg << "segment count mismatch: expected " << expected_segments << ", got "
        << solution.segments.size();
    violate(msg.str());
    return report;
  }

  for (int i = 0; i < expected_segments; ++i) {
    const WalkSegment& segment = solution.segments[i];
    const NodeId want_start = instance.route_node(i);
    const NodeId want_end = instance.route_node(i + 1);

    if (segment.start != want_start || segment.end() != want_end) {
      std::ostringstream msg;
      msg << "segment " << i << " endpoint mismatch";
      violate(msg.str());
      continue;
    }

    NodeId at = segment.start;
    std::set<NodeId> visited{at};
    bool connectivity_ok = true;
    for (size_t j = 0; j < segment.steps.size(); ++j) {
      const WalkStep& step = segment.steps[j];
      const Edge& ed = net.edge(step.edge);
      bool traversable =
          net.directed()
              ? (ed.from == at && ed.to == step.to)
              : ((ed.from == at && ed.to == step.to) ||
                 (ed.to == at && ed.from == step.to));
      if (!traversable) {
        std::ostringstream msg;
        msg << "segment " << i << " step " << j << " does not traverse "
            << edge_label(net, step.edge) << " from "
            << net.node_name(at);
        violate(msg.str());
        connectivity_ok = false;
        break;
      }
      at = step.to;
      if (!visited.insert(at).second) {
        std::ostringstream msg;
        msg << "segment " << i << " revisits node '" << net.node_name(at)
            << "' (not a simple path)";
        violate(msg.str());
        connectivity_ok = false;
        break;
      }
    }
    if (!connectivity_ok) continue;

    if (instance.bounds) {
      Rational length(0);
      for (const WalkStep& step : segment.steps)
        length += net.edge(step.edge).weight;
      if (length > (*instance.bounds)[i]) {
        std::ostringstream msg;
        msg << "segment " << i << " exceeds bound: length " << length.str()
            << " > bound " << (*instance.bounds)[i].str();
        violate(msg.str());
      }
    }
  }

  const auto recomputed = recompute_usage(instance, solution);
  for (const auto& [edge, used] : recomputed) {
    if (used > net.edge(edge).capacity) {
      std::ostringstream msg;
      msg << "capacity overflow on " << edge_label(net, edge) << ": used "
          << used.str() << ", capacity " << net.edge(edge).capacity.str();
      violate(msg.str());
    }
  }
  if (recomputed != solution.usage) {
    violate("usage ledger does not match recomputation from segments");
  }

  const Rational cost = recompute_cost(net, solution);
  if (cost != solution.total_cost) {
    std::ostringstream msg;
    msg << "total cost mismatch: stated " << solution.total_cost.str()
        << ", recomputed " << cost.str();
    violate(msg.str());
  }

  return report;
}

}  // namespace wrp
