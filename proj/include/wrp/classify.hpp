#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wrp/network.hpp"

namespace wrp {

enum class StructureTag { kTree, kDag, kUnicyclic, kTreewidthLe2, kGeneral };

const char* to_string(StructureTag tag);

struct StructureClass {
  StructureTag tag = StructureTag::kGeneral;
  //! Verified elimination-width bound; nullopt when unknown.
  std::optional<int> treewidth_upper_bound;
};

//! Most specific structure tag for dispatching.  Undirected networks are
//! tested in order tree, unicyclic, treewidth_le_2, general; directed ones
//! are dag or general.  Throws std::invalid_argument on an empty network.
StructureClass classify(const Network& net);

// --- Elimination-order machinery (shared with tree decomposition) ---

//! Adjacency sets of the simple undirected support graph: direction,
//! parallel edge multiplicity and weights dropped.
std::vector<std::set<NodeId>> simple_support(const Network& net);

//! Degree-(<=2) elimination: repeatedly delete isolated and degree-1 nodes
//! and bypass degree-2 nodes (connecting their neighbours).  Returns the
//! elimination order and its width when the graph empties, nullopt when the
//! process stalls.  Recognizes exactly the width-<=2 graphs.
std::optional<std::pair<std::vector<NodeId>, int>> degree2_elimination(
    std::vector<std::set<NodeId>> adj);

//! Min-fill elimination order (ties broken by smallest node id).
std::vector<NodeId> min_fill_order(std::vector<std::set<NodeId>> adj);

//! Width induced by eliminating nodes in `order`: the maximum neighbour
//! count at elimination time, with fill edges added along the way.
int induced_width(std::vector<std::set<NodeId>> adj,
                  const std::vector<NodeId>& order);

//! Exact minimum-width elimination order by subset dynamic programming.
//! Only accepts graphs with at most `max_nodes` nodes (default 14);
//! returns nullopt beyond that.
std::optional<std::pair<std::vector<NodeId>, int>> exact_elimination_order(
    const std::vector<std::set<NodeId>>& adj, int max_nodes = 14);

//! Topological order of a directed network, nullopt when cyclic.
//! Deterministic: smallest node id first among ready nodes.
std::optional<std::vector<NodeId>> topological_order(const Network& net);

//! Connectivity of the undirected support graph (true for empty networks
//! with one node).
bool underlying_connected(const Network& net);

//! True when the undirected support is one tree: connected with exactly
//! node_count()-1 edge instances.  Works for directed networks too.
bool underlying_is_tree(const Network& net);

}  // namespace wrp
