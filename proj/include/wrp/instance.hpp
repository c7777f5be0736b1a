#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wrp/network.hpp"

namespace wrp {

enum class DegenerateSegments { kForbid, kAllow };

//! A routing task: visit every waypoint in order on the way from source to
//! target, each of the k+1 segments being a simple path, with per-segment
//! demands counting against edge capacities and optional per-segment
//! weighted-length bounds.
struct WaypointInstance {
  Network network;
  NodeId source = -1;
  NodeId target = -1;
  std::vector<NodeId> waypoints;
  //! One demand per segment (size k+1); all positive.
  std::vector<Rational> demands;
  //! Optional per-segment weighted-length caps (size k+1 when present).
  std::optional<std::vector<Rational>> bounds;

  int waypoint_count() const { return static_cast<int>(waypoints.size()); }
  int segment_count() const { return waypoint_count() + 1; }

  //! Route node i: source, then the waypoints, then target.
  NodeId route_node(int i) const;
};

//! Validates invariants and builds the instance.  Empty `demands` means
//! every segment demands 1.  Throws std::invalid_argument on violations:
//! unknown nodes, a duplicated waypoint node, demand/bound count mismatch,
//! non-positive demand, negative bound, or a waypoint coinciding with
//! source/target unless `degenerate` allows zero-length segments.
WaypointInstance make_instance(
    Network network, NodeId source, NodeId target,
    std::vector<NodeId> waypoints, std::vector<Rational> demands = {},
    std::optional<std::vector<Rational>> bounds = std::nullopt,
    DegenerateSegments degenerate = DegenerateSegments::kForbid);

//! One traversal step: crossing `edge` arrives at `to`.
struct WalkStep {
  EdgeId edge = -1;
  NodeId to = -1;
};

//! A simple path for one segment: `start`, then one step per edge.
struct WalkSegment {
  NodeId start = -1;
  std::vector<WalkStep> steps;

  NodeId end() const { return steps.empty() ? start : steps.back().to; }
};

//! A candidate solution: one segment per demand, the demand-weighted edge
//! usage ledger, and the claimed total cost (each traversal weighted once).
struct WalkSolution {
  std::vector<WalkSegment> segments;
  std::map<EdgeId, Rational> usage;
  Rational total_cost{0};
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

//! Checks a solution against its instance: segment count and endpoints,
//! hop connectivity (direction-respecting on directed networks), per-segment
//! node-simplicity, capacity respect, per-segment bounds, and that the
//! stated usage ledger and total cost match an independent recomputation
//! from the segments.  Violations are collected, not thrown; a dangling
//! edge reference throws std::invalid_argument.
ValidationReport validate_walk(const WaypointInstance& instance,
                               const WalkSolution& solution);

//! Recomputes the demand-weighted usage ledger from the segments.
//! Throws std::invalid_argument on a dangling edge reference.
std::map<EdgeId, Rational> recompute_usage(const WaypointInstance& instance,
                                           const WalkSolution& solution);

//! Recomputes the total cost (sum of traversed edge weights, one per use).
Rational recompute_cost(const Network& network, const WalkSolution& solution);

}  // namespace wrp
