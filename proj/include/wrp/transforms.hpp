#pragma once

#include <utility>
#include <vector>

#include "wrp/instance.hpp"
#include "wrp/network.hpp"

namespace wrp {

//! Provenance marker for nodes created by a transform.
inline constexpr NodeId kAuxiliaryNode = -1;

enum class TransformKind {
  kExpandCapacities,
  kOrientUndirected,
  kSubdivideParallel,
};

//! Records how one transform rewrote a network, precisely enough to map a
//! solution on the derived network back onto the original one.
struct TransformTrace {
  TransformKind kind;
  //! original edge id -> the derived edge instances that realize it.
  std::vector<std::vector<EdgeId>> forward;
  //! derived node id -> original node id, or kAuxiliaryNode.
  std::vector<NodeId> node_origin;
  Rational cost_scale{1};
  int derived_edge_count = 0;

  //! derived edge id -> original edge id.  Throws std::logic_error unless
  //! every derived edge appears in exactly one forward image.
  std::vector<EdgeId> edge_origin() const;
};

//! Splits each edge of capacity c into min(floor(c), multiplicity_cap)
//! parallel unit-capacity copies of equal weight; capacity below 1 drops
//! the edge.  Intended for unit-demand instances only.
std::pair<Network, TransformTrace> expand_capacities(const Network& network,
                                                     long long multiplicity_cap);

//! Replaces every undirected edge {u,v} of weight w by two auxiliary nodes
//! x, y and the five unit arcs u->x, v->x (0), x->y (w), y->v, y->u (0).
//! Integer flow possibilities between u and v are unchanged, so walks map
//! one-to-one.  Input must be undirected.
std::pair<Network, TransformTrace> orient_undirected(const Network& network);

struct SuperTerminals {
  Network network;
  NodeId super_source;
  NodeId super_sink;
};

//! Adds a super-source with unit links to s and t (weight 0) and a
//! super-sink with two parallel unit links from w, matching the network's
//! directedness.  No trace: the added hops are stripped, not mapped.
SuperTerminals attach_super_terminals(const Network& network, NodeId s,
                                      NodeId t, NodeId w);

//! Splits every member of a parallel bundle through a fresh midpoint,
//! placing the full weight on the first half so costs carry over exactly.
//! Bundles of size one are left alone.  The result has no parallel edges.
std::pair<Network, TransformTrace> subdivide_parallel(const Network& network);

//! Maps segments found on the derived network back through one trace.
std::vector<WalkSegment> map_segments_back(const TransformTrace& trace,
                                           const std::vector<WalkSegment>& derived);

//! Maps segments back through a whole chain of traces (listed in the order
//! the transforms were applied) and rebuilds the usage ledger and cost on
//! the original instance.
WalkSolution map_solution_back(const WaypointInstance& original,
                               const std::vector<TransformTrace>& chain,
                               std::vector<WalkSegment> derived_segments);

//! What the reduction to link-disjoint paths could and could not check.
//! Planarity and outer-face membership of the flagged nodes are the
//! caller's burden; the reduction only runs the parity count.
struct OuterplanarReport {
  //! Nodes whose incident (clamped) capacity sum is odd.  The reduction is
  //! only valid when all of them lie on the outer face.
  std::vector<NodeId> odd_capacity_nodes;
  //! True when some capacity exceeded the node count and was clamped.
  bool clamped = false;
};

//! Link-disjoint paths instance produced by the outerplanar reduction:
//! unit capacities, every link subdivided once, one terminal pair per
//! walk segment.  Terminal pairs use the derived network's node ids
//! (original nodes keep their ids).
struct DisjointPathsInstance {
  Network network;
  std::vector<std::pair<NodeId, NodeId>> terminal_pairs;
  OuterplanarReport report;
};

//! Feasibility-only reduction for low-width instances whose terminals
//! touch the outer face.  Requires unit demands and no bounds.
DisjointPathsInstance outerplanar_reduction(const WaypointInstance& instance);

}  // namespace wrp
