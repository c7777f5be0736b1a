#pragma once

#include <optional>

#include "wrp/instance.hpp"

namespace wrp {

enum class SingleWaypointMethod { kSuurballe, kFlow };

//! Optimal single-waypoint routing on undirected unit-demand networks.
//!
//! Pipeline: expand capacities to two parallel unit edges, orient through
//! the five-arc gadget, attach super terminals, subdivide parallel arcs,
//! then find two arc-disjoint minimum-weight super-source->super-sink paths
//! (either directly or as a value-2 min-cost flow).  The two paths map back
//! to an s->w path and a t->w path; the latter reverses into the second
//! walk segment, which is sound because the network is undirected.
//!
//! Returns nullopt when no capacity-respecting walk exists.  Throws
//! std::invalid_argument on instances outside its regime (k != 1, directed,
//! non-unit demands, or length bounds): unsupported by this solver.
std::optional<WalkSolution> solve_single_waypoint(const WaypointInstance& instance,
                                                  SingleWaypointMethod method);

//! Deliberately naive baseline: shortest s->w path, subtract its capacity,
//! then shortest w->t path on the residual.  Kept around because its
//! failures (suboptimal or outright infeasible where a joint solution
//! exists) are part of the test suite and benchmarks.
std::optional<WalkSolution> greedy_baseline(const WaypointInstance& instance);

}  // namespace wrp
