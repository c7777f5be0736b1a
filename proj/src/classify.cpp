#include "wrp/classify.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace wrp {

const char* to_string(StructureTag tag) {
  switch (tag) {
    case StructureTag::kTree: return "tree";
    case StructureTag::kDag: return "dag";
    case StructureTag::kUnicyclic: return "unicyclic";
    case StructureTag::kTreewidthLe2: return "treewidth_le_2";
    case StructureTag::kGeneral: return "general";
  }
  return "general";
}

std::vector<std::set<NodeId>> simple_support(const Network& net) {
  std::vector<std::set<NodeId>> adj(net.node_count());
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    adj[ed.from].insert(ed.to);
    adj[ed.to].insert(ed.from);
  }
  return adj;
}

std::optional<std::pair<std::vector<NodeId>, int>> degree2_elimination(
    std::vector<std::set<NodeId>> adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<bool> removed(n, false);
  std::vector<NodeId> order;
  int width = 0;

  // Worklist of candidates; a node may be queued more than once, so each
  // pop rechecks its current degree.
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<NodeId>> ready;
  for (NodeId v = 0; v < n; ++v) {
    if (adj[v].size() <= 2) ready.push(v);
  }
  while (!ready.empty()) {
    NodeId v = ready.top();
    ready.pop();
    if (removed[v] || adj[v].size() > 2) continue;
    removed[v] = true;
    order.push_back(v);
    width = std::max(width, static_cast<int>(adj[v].size()));
    std::vector<NodeId> nbrs(adj[v].begin(), adj[v].end());
    for (NodeId u : nbrs) adj[u].erase(v);
    adj[v].clear();
    if (nbrs.size() == 2) {
      adj[nbrs[0]].insert(nbrs[1]);
      adj[nbrs[1]].insert(nbrs[0]);
    }
    for (NodeId u : nbrs) {
      if (!removed[u] && adj[u].size() <= 2) ready.push(u);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return std::make_pair(std::move(order), width);
}

namespace {

int fill_count(const std::vector<std::set<NodeId>>& adj, NodeId v) {
  int fill = 0;
  for (auto it = adj[v].begin(); it != adj[v].end(); ++it) {
    auto jt = it;
    for (++jt; jt != adj[v].end(); ++jt) {
      if (!adj[*it].count(*jt)) ++fill;
    }
  }
  return fill;
}

void eliminate(std::vector<std::set<NodeId>>& adj, NodeId v) {
  std::vector<NodeId> nbrs(adj[v].begin(), adj[v].end());
  for (size_t i = 0; i < nbrs.size(); ++i) {
    adj[nbrs[i]].erase(v);
    for (size_t j = i + 1; j < nbrs.size(); ++j) {
      adj[nbrs[i]].insert(nbrs[j]);
      adj[nbrs[j]].insert(nbrs[i]);
    }
  }
  adj[v].clear();
}

}  // namespace

std::vector<NodeId> min_fill_order(std::vector<std::set<NodeId>> adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<bool> done(n, false);
  std::vector<NodeId> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    NodeId best = -1;
    int best_fill = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (done[v]) continue;
      int fill = fill_count(adj, v);
      if (best == -1 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    done[best] = true;
    order.push_back(best);
    eliminate(adj, best);
  }
  return order;
}

int induced_width(std::vector<std::set<NodeId>> adj,
                  const std::vector<NodeId>& order) {
  int width = 0;
  for (NodeId v : order) {
    width = std::max(width, static_cast<int>(adj[v].size()));
    eliminate(adj, v);
  }
  return width;
}

std::optional<std::pair<std::vector<NodeId>, int>> exact_elimination_order(
    const std::vector<std::set<NodeId>>& adj, int max_nodes) {
  const int n = static_cast<int>(adj.size());
  if (n > max_nodes || n > 20) return std::nullopt;

  // q(S, v): neighbours of v outside S u {v}, counting nodes reachable from
  // v through S.  This is v's degree when eliminated right after S.
  auto q_size = [&](unsigned mask, NodeId v) {
    std::vector<bool> seen(n, false);
    std::vector<NodeId> stack{v};
    seen[v] = true;
    int count = 0;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : adj[u]) {
        if (seen[w]) continue;
        seen[w] = true;
        if (mask & (1u << w)) {
          stack.push_back(w);  // inside S: pass through
        } else if (w != v) {
          ++count;  // outside: counts toward the eliminated degree
        }
      }
    }
    return count;
  };

  const unsigned full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<int> best(full + 1, n + 1);
  std::vector<NodeId> choice(full + 1, -1);
  best[0] = 0;
  for (unsigned mask = 1; mask <= full; ++mask) {
    for (NodeId v = 0; v < n; ++v) {
      if (!(mask & (1u << v))) continue;
      unsigned prev = mask & ~(1u << v);
      if (best[prev] > n) continue;
      int w = std::max(best[prev], q_size(prev, v));
      if (w < best[mask]) {
        best[mask] = w;
        choice[mask] = v;
      }
    }
  }
  // choice[mask] is the last node of the best prefix eliminating `mask`,
  // so unwinding from the full set yields the order back to front.
  std::vector<NodeId> order(n);
  unsigned mask = full;
  for (int i = n - 1; i >= 0; --i) {
    NodeId v = choice[mask];
    order[i] = v;
    mask &= ~(1u << v);
  }
  return std::make_pair(std::move(order), best[full]);
}

std::optional<std::vector<NodeId>> topological_order(const Network& net) {
  const int n = net.node_count();
  std::vector<int> indeg(n, 0);
  for (EdgeId e = 0; e < net.edge_count(); ++e) ++indeg[net.edge(e).to];
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<NodeId>> ready;
  for (NodeId v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<NodeId> order;
  order.reserve(n);
  while (!ready.empty()) {
    NodeId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const auto& hop : net.out(v)) {
      if (--indeg[hop.to] == 0) ready.push(hop.to);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

bool underlying_connected(const Network& net) {
  const int n = net.node_count();
  if (n == 0) return true;
  auto adj = simple_support(net);
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

bool underlying_is_tree(const Network& net) {
  return net.edge_count() == net.node_count() - 1 && underlying_connected(net);
}

StructureClass classify(const Network& net) {
  if (net.node_count() == 0)
    throw std::invalid_argument("cannot classify an empty network");

  auto support = simple_support(net);

  if (net.directed()) {
    auto order = min_fill_order(support);
    int bound = std::max(1, induced_width(support, order));
    if (topological_order(net)) return {StructureTag::kDag, bound};
    return {StructureTag::kGeneral, bound};
  }

  const bool connected = underlying_connected(net);
  if (connected && net.edge_count() == net.node_count() - 1)
    return {StructureTag::kTree, 1};
  if (connected && net.edge_count() == net.node_count())
    return {StructureTag::kUnicyclic, 2};
  if (auto reduced = degree2_elimination(support))
    return {StructureTag::kTreewidthLe2, std::max(1, reduced->second)};

  auto order = min_fill_order(support);
  int bound = std::max(1, induced_width(support, order));
  return {StructureTag::kGeneral, bound};
}

}  // namespace wrp
