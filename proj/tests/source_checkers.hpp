#pragma once

// Brute-force deciders for the source problems the gadget instances encode.
// Deliberately independent of the library's solvers: plain backtracking and
// subset enumeration, small inputs only.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wrp/instance.hpp"
#include "wrp/network.hpp"

namespace wrpt {

namespace detail {

struct DisjointSearch {
  const wrp::Network& net;
  const std::vector<std::pair<wrp::NodeId, wrp::NodeId>>& pairs;
  std::vector<char> used_edge;
  std::vector<char> on_path;
  std::vector<std::vector<wrp::WalkStep>> chosen;

  bool solve_pair(size_t p) {
    if (p == pairs.size()) return true;
    chosen.emplace_back();
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[pairs[p].first] = 1;
    if (extend(p, pairs[p].first)) return true;
    chosen.pop_back();
    return false;
  }

  bool extend(size_t p, wrp::NodeId at) {
    if (at == pairs[p].second) {
      // Pausing the node marks while the next pair searches: each pair
      // only needs its own path to be simple.
      std::vector<char> parked;
      std::swap(parked, on_path);
      on_path.assign(parked.size(), 0);
      std::vector<std::vector<wrp::WalkStep>> kept = chosen;
      if (solve_pair(p + 1)) return true;
      chosen = std::move(kept);
      std::swap(parked, on_path);
      return false;
    }
    for (const wrp::Network::Hop& hop : net.out(at)) {
      if (used_edge[hop.edge] || on_path[hop.to]) continue;
      used_edge[hop.edge] = 1;
      on_path[hop.to] = 1;
      chosen.back().push_back(wrp::WalkStep{hop.edge, hop.to});
      if (extend(p, hop.to)) return true;
      chosen.back().pop_back();
      on_path[hop.to] = 0;
      used_edge[hop.edge] = 0;
    }
    return false;
  }
};

}  // namespace detail

// Mutually link-disjoint paths, one per pair, each path simple.  Any family
// of link-disjoint connecting walks shortcuts to such a family, so this is
// exactly the k-disjoint-paths answer.  Works for both directednesses via
// Network::out.
inline std::optional<std::vector<std::vector<wrp::WalkStep>>>
link_disjoint_paths(const wrp::Network& net,
                    const std::vector<std::pair<wrp::NodeId, wrp::NodeId>>& pairs) {
  detail::DisjointSearch search{net, pairs, {}, {}, {}};
  search.used_edge.assign(net.edge_count(), 0);
  search.on_path.assign(net.node_count(), 0);
  if (search.solve_pair(0)) return search.chosen;
  return std::nullopt;
}

// Is there a subset summing to half the total?
inline bool partition_possible(const std::vector<long long>& ints) {
  if (ints.size() > 20) throw std::invalid_argument("brute force capped at 20");
  long long total = 0;
  for (long long v : ints) total += v;
  if (total % 2 != 0) return false;
  for (unsigned mask = 0; mask < (1u << ints.size()); ++mask) {
    long long sum = 0;
    for (size_t i = 0; i < ints.size(); ++i)
      if (mask & (1u << i)) sum += ints[i];
    if (sum * 2 == total) return true;
  }
  return false;
}

// One subset achieving the even split, as 0/1 sides per position.
inline std::optional<std::vector<int>> partition_sides(
    const std::vector<long long>& ints) {
  if (ints.size() > 20) throw std::invalid_argument("brute force capped at 20");
  long long total = 0;
  for (long long v : ints) total += v;
  if (total % 2 != 0) return std::nullopt;
  for (unsigned mask = 0; mask < (1u << ints.size()); ++mask) {
    long long sum = 0;
    for (size_t i = 0; i < ints.size(); ++i)
      if (mask & (1u << i)) sum += ints[i];
    if (sum * 2 == total) {
      std::vector<int> sides(ints.size(), 1);
      for (size_t i = 0; i < ints.size(); ++i)
        if (mask & (1u << i)) sides[i] = 0;
      return sides;
    }
  }
  return std::nullopt;
}

}  // namespace wrpt
