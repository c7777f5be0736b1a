#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wrp/instance.hpp"

namespace wrp {

//! The source-problem payloads the gadget instances encode.
struct DisjointPairs {
  NodeId s1 = -1, t1 = -1, s2 = -1, t2 = -1;
};
struct PartitionIntegers {
  //! Sorted ascending; demands are routed in exactly this order.
  std::vector<long long> integers;
};
struct DemandGraph {
  std::vector<std::pair<NodeId, NodeId>> pairs;
};
using SourceProblem = std::variant<DisjointPairs, PartitionIntegers, DemandGraph>;

//! How a gadget walk maps back to a source solution and vice versa.
//! Source links are copied first, so every gadget edge id below
//! `source_edge_count` IS the source edge; ids at or above it were added.
struct WitnessMap {
  int source_edge_count = 0;
  std::vector<NodeId> added_nodes;
  std::vector<EdgeId> added_edges;
  //! Indices of the walk segments that carry the source problem's paths,
  //! one per demand pair, in pair order.  Empty for the partition gadget.
  std::vector<int> path_segments;
  //! The two capacity-S/2 links of the partition gadget, else empty.
  std::vector<EdgeId> cycle_links;
  std::string notes;
};

struct GadgetOutput {
  WaypointInstance instance;
  WitnessMap witness_map;
  SourceProblem source_problem;
  //! Set by the Eulerian gadget: whether every node of the emitted network
  //! has even degree.  Computed, never assumed.
  std::optional<bool> eulerian;
};

//! Feasibility of the instance equals the two-link-disjoint-paths answer
//! for (s1,t1),(s2,t2) on the directed source network.  Adds one fresh node
//! w and the arcs (t1,w),(w,s2); source links are copied with capacity
//! forced to one (the source problem uses every link instance at most
//! once).  Throws std::invalid_argument on an undirected network or a
//! terminal id outside it.
GadgetOutput gadget_two_disjoint_paths(const Network& network,
                                       std::pair<NodeId, NodeId> first,
                                       std::pair<NodeId, NodeId> second);

enum class PartitionFlavor { kArbitraryChange, kBoundedChange };

//! Feasibility of the instance equals the Partition answer for the given
//! positive integers.  Two star centers joined by two parallel links of
//! capacity S/2; the route alternates star sides strictly, so each of the
//! demands crosses the two-link cut exactly once and the crossings must
//! split into two sets of S/2 each.  The bounded flavor replaces interior
//! leaves with chains of waypoints whose demand steps never exceed a
//! factor of two.  Odd totals yield a deliberately infeasible two-node
//! instance.  Throws std::invalid_argument on an empty list or on a
//! non-positive integer.
GadgetOutput gadget_partition(const std::vector<long long>& integers,
                              PartitionFlavor flavor);

//! Feasibility equals the k-link-disjoint-paths answer for `pairs` on the
//! undirected source network (intended: series-parallel, the caller's
//! contract).  Adds a hub joined to the pair terminals plus one
//! waypoint-hosting four-cycle per consecutive pair, keeping the width low.
//! All terminals must be pairwise distinct so every node hosts at most one
//! waypoint.  Throws std::invalid_argument on a directed network, fewer
//! than two pairs, a missing terminal, or repeated terminals.
GadgetOutput gadget_tw3(const Network& network,
                        const std::vector<std::pair<NodeId, NodeId>>& pairs);

//! Feasibility equals the k-link-disjoint-paths answer for `demand_pairs`
//! on the undirected supply network.  Adds every demand link (split twice
//! to host waypoints), a center node with two subdivided links to each
//! pair's first endpoint, and one four-cycle per return visit.  Reports
//! whether the emitted network is Eulerian.  Throws std::invalid_argument
//! on a directed supply, a missing endpoint, or a pair with equal ends.
GadgetOutput gadget_eulerian(const Network& supply,
                             const std::vector<std::pair<NodeId, NodeId>>& demand_pairs);

//! Slices witness_map.path_segments out of a gadget walk and keeps only
//! source links: the recovered per-pair source paths.  Works for the
//! two-disjoint-paths, hub, and Eulerian gadgets.
std::vector<std::vector<WalkStep>> recover_source_paths(const GadgetOutput& gadget,
                                                        const WalkSolution& solution);

//! Builds the canonical feasible walk from two link-disjoint source paths.
WalkSolution walk_from_disjoint_paths(const GadgetOutput& gadget,
                                      const std::vector<WalkStep>& first,
                                      const std::vector<WalkStep>& second);

//! Which side (0 or 1) each routed integer's crossing took.
std::vector<int> partition_from_walk(const GadgetOutput& gadget,
                                     const WalkSolution& solution);

//! Builds the canonical feasible walk realizing a yes-certificate: side 0
//! or 1 per routed integer.  Arbitrary-change gadgets only.
WalkSolution walk_from_partition(const GadgetOutput& gadget,
                                 const std::vector<int>& sides);

}  // namespace wrp
