#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wrp/rational.hpp"

namespace wrp {

using NodeId = int;
using EdgeId = int;

enum class Directedness { kUndirected, kDirected };

//! One edge instance.  Parallel instances between the same endpoints are
//! distinct and keep their own ids.  For directed networks the instance is
//! an arc from `from` to `to`; for undirected networks the pair is an
//! unordered endpoint set and `from`/`to` only record insertion order.
struct Edge {
  NodeId from = -1;
  NodeId to = -1;
  Rational capacity{1};
  Rational weight{1};
};

//! Capacitated weighted multigraph with interned node names.
//!
//! Node ids are dense and assigned by first appearance; edge ids are dense
//! and assigned in insertion order.  Those orders are the deterministic
//! tie-breaking orders used throughout the solvers.  Self-loops are
//! rejected: no simple path can use one.
class Network {
 public:
  struct Hop {
    EdgeId edge;
    NodeId to;
  };

  Network() : Network(Directedness::kUndirected) {}
  explicit Network(Directedness d) : directedness_(d) {}

  Directedness directedness() const { return directedness_; }
  bool directed() const { return directedness_ == Directedness::kDirected; }

  //! Interns `name`: returns the existing id when the name is known.
  NodeId add_node(std::string_view name);
  std::optional<NodeId> find_node(std::string_view name) const;
  const std::string& node_name(NodeId v) const;
  int node_count() const { return static_cast<int>(names_.size()); }

  //! Adds one edge instance.  Throws std::invalid_argument on an unknown
  //! endpoint, a self-loop, or a negative capacity or weight.
  EdgeId add_edge(NodeId u, NodeId v, Rational capacity = Rational(1),
                  Rational weight = Rational(1));

  const Edge& edge(EdgeId e) const;
  int edge_count() const { return static_cast<int>(edges_.size()); }

  //! Hops leaving `u`.  For undirected networks every incident edge
  //! appears (traversable both ways); for directed networks only arcs
  //! with tail `u`.
  const std::vector<Hop>& out(NodeId u) const;

  //! The node reached by traversing `e` from `from_node`.
  //! Throws std::invalid_argument when `from_node` is not an endpoint.
  NodeId other_endpoint(EdgeId e, NodeId from_node) const;

 private:
  void check_node(NodeId v) const;

  Directedness directedness_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Hop>> out_;
};

}  // namespace wrp
