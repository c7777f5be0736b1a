#pragma once

// Shared hand-built networks used across the test suites.

#include <vector>

#include "wrp/instance.hpp"
#include "wrp/network.hpp"

namespace wrpt {

// Smallest instance whose only solution re-visits a node: two parallel
// source-w edges plus one source-target edge, all unit.  The optimal (and
// only) walk is source, w, source, target at cost 3.
inline wrp::WaypointInstance forced_revisit_instance() {
  wrp::Network net(wrp::Directedness::kUndirected);
  auto s = net.add_node("s");
  auto w = net.add_node("w");
  auto t = net.add_node("t");
  net.add_edge(s, w);  // edge 0
  net.add_edge(s, w);  // edge 1
  net.add_edge(s, t);  // edge 2
  return wrp::make_instance(std::move(net), s, t, {w});
}

// Eight-node unit network where greedily shortest-pathing each segment pays
// 2+6=8 while the joint optimum pays 4+2=6.  Everything except s and u has
// degree 2, so the degree-reduction recognizer applies.
inline wrp::Network greedy_trap_network() {
  wrp::Network net(wrp::Directedness::kUndirected);
  auto s = net.add_node("s");
  auto u = net.add_node("u");
  auto w = net.add_node("w");
  auto t = net.add_node("t");
  auto v1 = net.add_node("v1");
  auto v2 = net.add_node("v2");
  auto v3 = net.add_node("v3");
  auto v4 = net.add_node("v4");
  net.add_edge(s, u);    // 0
  net.add_edge(u, w);    // 1
  net.add_edge(u, t);    // 2
  net.add_edge(v3, v2);  // 3
  net.add_edge(v2, v1);  // 4
  net.add_edge(v1, w);   // 5
  net.add_edge(v3, s);   // 6
  net.add_edge(s, v4);   // 7
  net.add_edge(v4, t);   // 8
  return net;
}

inline wrp::WaypointInstance greedy_trap_instance() {
  wrp::Network net = greedy_trap_network();
  auto s = *net.find_node("s");
  auto w = *net.find_node("w");
  auto t = *net.find_node("t");
  return wrp::make_instance(std::move(net), s, t, {w});
}

// Star with centre x and leaves s, w, t; every edge has capacity `cap`.
// With demands (2, 1) the w-x edge needs 3 units, so cap=2 is infeasible
// and cap=3 is feasible at cost 4.
inline wrp::WaypointInstance star_instance(long long cap) {
  wrp::Network net(wrp::Directedness::kUndirected);
  auto x = net.add_node("x");
  auto s = net.add_node("s");
  auto w = net.add_node("w");
  auto t = net.add_node("t");
  net.add_edge(s, x, wrp::Rational(cap));
  net.add_edge(w, x, wrp::Rational(cap));
  net.add_edge(t, x, wrp::Rational(cap));
  return wrp::make_instance(std::move(net), s, t, {w},
                            {wrp::Rational(2), wrp::Rational(1)});
}

inline wrp::Network cycle_network(int n) {
  wrp::Network net(wrp::Directedness::kUndirected);
  std::vector<wrp::NodeId> ids;
  for (int i = 0; i < n; ++i) ids.push_back(net.add_node("c" + std::to_string(i)));
  for (int i = 0; i < n; ++i) net.add_edge(ids[i], ids[(i + 1) % n]);
  return net;
}

inline wrp::Network complete_network(int n) {
  wrp::Network net(wrp::Directedness::kUndirected);
  std::vector<wrp::NodeId> ids;
  for (int i = 0; i < n; ++i) ids.push_back(net.add_node("k" + std::to_string(i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) net.add_edge(ids[i], ids[j]);
  return net;
}

// Nine nodes, fourteen edges, k=2.  The parity bits fit a width-4
// decomposition comfortably, but the per-edge claims make the table
// explode: the width-bounded dp must bail out by work budget rather than
// grind (found by driving the cli on generated instances; the oracle pays
// cost 5 instantly).
inline wrp::WaypointInstance table_blowup_instance() {
  wrp::Network net(wrp::Directedness::kUndirected);
  std::vector<wrp::NodeId> ids;
  for (int i = 0; i < 9; ++i) ids.push_back(net.add_node("n" + std::to_string(i)));
  const wrp::Rational one(1), two(2);
  auto link = [&](int u, int v, const wrp::Rational& cap) {
    net.add_edge(ids[u], ids[v], cap, one);
  };
  link(0, 1, one);
  link(0, 2, two);
  link(1, 3, one);
  link(2, 4, one);
  link(3, 5, two);
  link(5, 6, one);
  link(5, 7, two);
  link(4, 8, one);
  link(1, 7, two);
  link(1, 6, two);
  link(7, 4, two);
  link(0, 7, two);
  link(5, 3, two);
  link(4, 6, two);
  return wrp::make_instance(std::move(net), ids[2], ids[4], {ids[5], ids[7]});
}

}  // namespace wrpt
