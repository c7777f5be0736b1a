#pragma once

#include <optional>

#include "wrp/instance.hpp"

namespace wrp {

//! Exact solver for networks whose underlying graph is a tree: every
//! segment's path is forced, so the solver only assembles the usage ledger
//! and checks capacities, arc orientations (for directed trees) and length
//! bounds.  Handles arbitrary demands.  Throws std::invalid_argument when
//! the underlying graph is not a tree.
std::optional<WalkSolution> solve_tree(const WaypointInstance& instance);

//! Exact solver for directed acyclic networks: segments are routed in
//! order, each by a shortest path over arcs with enough remaining capacity.
//! Topological monotonicity keeps the per-segment choices globally optimal.
//! Handles arbitrary demands and per-segment bounds.  Throws
//! std::invalid_argument on undirected or cyclic networks.
std::optional<WalkSolution> solve_dag(const WaypointInstance& instance);

//! Shortest single segment from `from` to `to` over edges whose capacity
//! covers `demand`; building block shared by solve_dag and the engine's
//! waypoint-free dispatch.  Returns nullopt when no such path exists.
std::optional<WalkSegment> solve_single_segment(const Network& network,
                                                NodeId from, NodeId to,
                                                const Rational& demand);

}  // namespace wrp
