#pragma once

#include <cstdint>
#include <optional>

#include "wrp/instance.hpp"

namespace wrp {

//! Recipe for a seeded random instance.  The same spec always yields the
//! same instance, byte for byte.
struct RandomInstanceSpec {
  std::uint64_t seed = 1;
  int nodes = 8;
  //! Edge instances beyond the connecting spanning tree (parallel edges
  //! and near-duplicates allowed).
  int extra_edges = 4;
  int waypoint_count = 1;
  Directedness directedness = Directedness::kUndirected;
  //! Directed only: arcs all point along one hidden node order.
  bool acyclic = false;
  //! Skip the extra edges entirely: the network stays a tree.
  bool tree = false;
  //! Capacities, weights and demands are drawn from [1, max].
  long long max_capacity = 1;
  long long max_weight = 1;
  long long max_demand = 1;
  //! Resample until the support admits a decomposition of this width
  //! (throws std::runtime_error after 200 failed attempts).
  std::optional<int> max_width;
};

//! Connected network, spanning tree first, terminals and waypoints all
//! distinct.  Throws std::invalid_argument when the spec cannot be
//! satisfied (nodes < waypoint_count + 2, non-positive fields, acyclic on
//! an undirected spec).
WaypointInstance random_instance(const RandomInstanceSpec& spec);

}  // namespace wrp
