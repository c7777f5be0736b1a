#pragma once

#include <optional>
#include <vector>

#include "wrp/instance.hpp"
#include "wrp/network.hpp"

namespace wrp {

//! Single-source shortest-path labeling.  Parents are deterministic: among
//! equal-distance predecessors the smallest node index wins, then the
//! smallest edge-instance id.
struct DistanceLabeling {
  std::vector<std::optional<Rational>> distance;
  std::vector<EdgeId> parent_edge;  // -1 at the source and on unreached nodes
  std::vector<NodeId> parent_node;

  bool reached(NodeId v) const { return distance[v].has_value(); }
};

//! Dijkstra from `src`; works on directed and undirected networks.
DistanceLabeling shortest_path(const Network& network, NodeId src);

//! The src->dst path implied by the labeling's parents, or nullopt when
//! dst was not reached.
std::optional<std::vector<WalkStep>> extract_path(const DistanceLabeling& labels,
                                                  NodeId src, NodeId dst);

//! Two arc-disjoint paths of minimum combined weight.
struct DisjointPair {
  bool feasible = false;
  std::vector<WalkStep> first;
  std::vector<WalkStep> second;
  Rational combined_weight{0};
};

//! Reduced-cost two-Dijkstra method on a unit-capacity directed network:
//! reweight by the first labeling, rerun on the residual with the first
//! path reversed, cancel overlaps, re-extract two simple paths.  Zero-weight
//! leftover cycles are dropped.
DisjointPair suurballe_pair(const Network& network, NodeId src, NodeId dst);

struct FlowAssignment {
  std::vector<Rational> flow;  // per edge-instance id
  Rational value{0};
  Rational cost{0};
};

//! Min-cost integral src->dst flow of exactly `value` units by successive
//! shortest augmenting paths with node potentials (every residual reduced
//! cost stays non-negative; violating that is a logic error).  Returns
//! nullopt when the max flow falls short of `value`.
std::optional<FlowAssignment> min_cost_flow(const Network& network, NodeId src,
                                            NodeId dst, long long value);

struct FlowPath {
  std::vector<WalkStep> steps;
  long long multiplicity = 1;
};

//! Path decomposition of an integral flow.  Multiplicities sum to the flow
//! value; flow cycles are cancelled rather than returned.
std::vector<FlowPath> decompose_flow(const Network& network,
                                     const FlowAssignment& flow, NodeId src,
                                     NodeId dst);

}  // namespace wrp
