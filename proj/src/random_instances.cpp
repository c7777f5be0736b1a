#include "wrp/random_instances.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "wrp/tree_decomposition.hpp"

namespace wrp {

namespace {

Network draw_network(std::mt19937_64& rng, const RandomInstanceSpec& spec) {
  const int n = spec.nodes;
  Network net(spec.directedness);
  for (int v = 0; v < n; ++v) net.add_node("n" + std::to_string(v));

  // Hidden order for acyclic orientation: position[v] strictly increases
  // along every arc.
  std::vector<int> position(n);
  for (int v = 0; v < n; ++v) position[v] = v;
  std::shuffle(position.begin(), position.end(), rng);

  auto draw = [&rng](long long max_value) {
    return Rational(1 + static_cast<long long>(rng() % max_value));
  };
  auto add = [&](NodeId u, NodeId v) {
    if (spec.acyclic && position[u] > position[v]) std::swap(u, v);
    net.add_edge(u, v, draw(spec.max_capacity), draw(spec.max_weight));
  };

  for (int v = 1; v < n; ++v) add(static_cast<NodeId>(rng() % v), v);
  if (!spec.tree)
    for (int i = 0; i < spec.extra_edges; ++i) {
      NodeId u = static_cast<NodeId>(rng() % n);
      NodeId v = static_cast<NodeId>(rng() % n);
      if (u != v) add(u, v);
    }
  return net;
}

}  // namespace

WaypointInstance random_instance(const RandomInstanceSpec& spec) {
  if (spec.nodes < spec.waypoint_count + 2)
    throw std::invalid_argument("need at least waypoint_count + 2 nodes");
  if (spec.nodes < 2 || spec.waypoint_count < 0 || spec.extra_edges < 0)
    throw std::invalid_argument("malformed random instance spec");
  if (spec.max_capacity < 1 || spec.max_weight < 1 || spec.max_demand < 1)
    throw std::invalid_argument("capacity, weight and demand draws start at 1");
  if (spec.acyclic && spec.directedness == Directedness::kUndirected)
    throw std::invalid_argument("acyclic orientation needs a directed spec");

  std::mt19937_64 rng(spec.seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Network net = draw_network(rng, spec);
    if (spec.max_width && !decompose(net, *spec.max_width)) continue;

    std::vector<NodeId> ids(spec.nodes);
    for (int v = 0; v < spec.nodes; ++v) ids[v] = v;
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<NodeId> waypoints(ids.begin() + 2,
                                  ids.begin() + 2 + spec.waypoint_count);
    std::vector<Rational> demands;
    for (int i = 0; i <= spec.waypoint_count; ++i)
      demands.push_back(Rational(1 + static_cast<long long>(rng() % spec.max_demand)));
    return make_instance(std::move(net), ids[0], ids[1], std::move(waypoints),
                         std::move(demands));
  }
  throw std::runtime_error("no drawn network hit the width target in 200 tries");
}

}  // namespace wrp
