#include "wrp/network.hpp"

#include <stdexcept>

namespace wrp {

NodeId Network::add_node(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it != index_.end()) return it->second;
  NodeId id = static_cast<NodeId>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  out_.emplace_back();
  return id;
}

std::optional<NodeId> Network::find_node(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& Network::node_name(NodeId v) const {
  check_node(v);
  return names_[v];
}

EdgeId Network::add_edge(NodeId u, NodeId v, Rational capacity,
                         Rational weight) {
  check_node(u);
  check_node(v);
  if (u == v) throw std::invalid_argument("self-loop edges are not allowed");
  if (capacity.is_negative())
    throw std::invalid_argument("edge capacity must be non-negative");
  if (weight.is_negative())
    throw std::invalid_argument("edge weight must be non-negative");
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{u, v, capacity, weight});
  out_[u].push_back(Hop{id, v});
  if (!directed()) out_[v].push_back(Hop{id, u});
  return id;
}

const Edge& Network::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count())
    throw std::invalid_argument("unknown edge id " + std::to_string(e));
  return edges_[e];
}

const std::vector<Network::Hop>& Network::out(NodeId u) const {
  check_node(u);
  return out_[u];
}

NodeId Network::other_endpoint(EdgeId e, NodeId from_node) const {
  const Edge& ed = edge(e);
  if (ed.from == from_node) return ed.to;
  if (ed.to == from_node) return ed.from;
  throw std::invalid_argument("node is not an endpoint of edge");
}

void Network::check_node(NodeId v) const {
  if (v < 0 || v >= node_count())
    throw std::invalid_argument("unknown node id " + std::to_string(v));
}

}  // namespace wrp
