#include "wrp/tree_decomposition.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "wrp/classify.hpp"

namespace wrp {

namespace {

// Bags from an elimination order: bag(v) = {v} + its (fill-augmented)
// neighbourhood at elimination time; each bag hangs off the bag of the
// first-eliminated member of that neighbourhood.
TreeDecomposition from_elimination_order(std::vector<std::set<NodeId>> adj,
                                         const std::vector<NodeId>& order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  TreeDecomposition td;
  td.bags.resize(n);
  for (int i = 0; i < n; ++i) {
    const NodeId v = order[i];
    std::vector<NodeId> bag{v};
    for (NodeId u : adj[v]) bag.push_back(u);
    std::sort(bag.begin(), bag.end());
    td.bags[i] = std::move(bag);

    // Eliminate: clique up the neighbourhood.
    for (NodeId a : adj[v])
      for (NodeId b : adj[v])
        if (a != b) adj[a].insert(b);
    for (NodeId u : adj[v]) adj[u].erase(v);

    int parent = -1;
    for (NodeId u : td.bags[i])
      if (u != v && (parent == -1 || position[u] < parent)) parent = position[u];
    if (parent == -1 && i + 1 < n) parent = i + 1;  // keep one tree
    if (parent != -1) td.tree_edges.push_back({i, parent});
  }
  return td;
}

struct NiceBuilder {
  const TreeDecomposition& td;
  std::vector<std::vector<int>> neighbours;
  NiceDecomposition out;

  explicit NiceBuilder(const TreeDecomposition& t) : td(t), neighbours(t.bags.size()) {
    for (auto [a, b] : td.tree_edges) {
      neighbours[a].push_back(b);
      neighbours[b].push_back(a);
    }
  }

  int add(BagKind kind, std::vector<NodeId> nodes, NodeId pivot,
          std::vector<int> children) {
    out.bags.push_back(NiceBag{kind, std::move(nodes), pivot, std::move(children)});
    return static_cast<int>(out.bags.size()) - 1;
  }

  //! Chain of introduces growing `from` into `to` (with `from` ⊆ `to`),
  //! starting at nice bag `below`.  Returns the chain's top.
  int grow(int below, std::vector<NodeId> from, const std::vector<NodeId>& to) {
    for (NodeId v : to) {
      if (std::binary_search(from.begin(), from.end(), v)) continue;
      from.insert(std::upper_bound(from.begin(), from.end(), v), v);
      below = add(BagKind::kIntroduce, from, v, {below});
    }
    return below;
  }

  //! Chain of forgets shrinking `from` onto `keep`.
  int shrink(int below, std::vector<NodeId> from, const std::vector<NodeId>& keep) {
    for (NodeId v : std::vector<NodeId>(from)) {
      if (std::binary_search(keep.begin(), keep.end(), v)) continue;
      from.erase(std::find(from.begin(), from.end(), v));
      below = add(BagKind::kForget, from, v, {below});
    }
    return below;
  }

  //! Builds the nice subtree for TD bag `bag`, entered from `parent`.
  //! The returned nice bag carries exactly td.bags[bag].
  int build(int bag, int parent) {
    std::vector<int> arms;
    for (int next : neighbours[bag]) {
      if (next == parent) continue;
      int child_top = build(next, bag);
      // Reshape the child's bag into this one: forget, then introduce.
      int trimmed = shrink(child_top, td.bags[next], td.bags[bag]);
      arms.push_back(grow(trimmed, intersect(td.bags[next], td.bags[bag]), td.bags[bag]));
    }
    if (arms.empty()) {
      int leaf = add(BagKind::kLeaf, {}, -1, {});
      return grow(leaf, {}, td.bags[bag]);
    }
    int acc = arms[0];
    for (size_t i = 1; i < arms.size(); ++i)
      acc = add(BagKind::kJoin, td.bags[bag], -1, {acc, arms[i]});
    return acc;
  }

  static std::vector<NodeId> intersect(const std::vector<NodeId>& a,
                                       const std::vector<NodeId>& b) {
    std::vector<NodeId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
  }
};

void validate_axioms(const TreeDecomposition& td, const Network& net) {
  const int bags = static_cast<int>(td.bags.size());
  if (bags == 0)
    throw std::invalid_argument("tree decomposition axiom violated: no bags");
  // The tree must actually be one: connected and acyclic over bag indices.
  if (static_cast<int>(td.tree_edges.size()) != bags - 1)
    throw std::invalid_argument(
        "tree decomposition axiom violated: bag links do not form a tree");
  {
    std::vector<std::vector<int>> adj(bags);
    for (auto [a, b] : td.tree_edges) {
      if (a < 0 || b < 0 || a >= bags || b >= bags)
        throw std::invalid_argument(
            "tree decomposition axiom violated: bag link out of range");
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<bool> seen(bags, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
      int at = q.front();
      q.pop();
      for (int next : adj[at])
        if (!seen[next]) seen[next] = true, ++reached, q.push(next);
    }
    if (reached != bags)
      throw std::invalid_argument(
          "tree decomposition axiom violated: bag links do not form a tree");
  }

  std::vector<std::vector<int>> holding(net.node_count());
  for (int b = 0; b < bags; ++b) {
    // Sorted, duplicate-free bags are load-bearing: every consumer binary
    // searches them.
    for (size_t i = 1; i < td.bags[b].size(); ++i)
      if (td.bags[b][i - 1] >= td.bags[b][i])
        throw std::invalid_argument(
            "tree decomposition axiom violated: bag nodes not strictly ascending");
    for (NodeId v : td.bags[b]) {
      if (v < 0 || v >= net.node_count())
        throw std::invalid_argument(
            "tree decomposition axiom violated: bag mentions an unknown node");
      holding[v].push_back(b);
    }
  }
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (holding[v].empty())
      throw std::invalid_argument(
          "tree decomposition axiom violated: node '" + net.node_name(v) +
          "' is in no bag");
  }
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    bool covered = false;
    for (int b : holding[ed.from]) {
      if (std::binary_search(td.bags[b].begin(), td.bags[b].end(), ed.to)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      throw std::invalid_argument(
          "tree decomposition axiom violated: edge '" + net.node_name(ed.from) +
          "'-'" + net.node_name(ed.to) + "' shares no bag");
  }

  // Connectivity of each node's bag set: walking the tree, the bags holding
  // v must form one component.
  std::vector<std::vector<int>> adj(bags);
  for (auto [a, b] : td.tree_edges) adj[a].push_back(b), adj[b].push_back(a);
  for (NodeId v = 0; v < net.node_count(); ++v) {
    std::set<int> mine(holding[v].begin(), holding[v].end());
    std::queue<int> q;
    std::set<int> seen;
    q.push(*mine.begin());
    seen.insert(*mine.begin());
    while (!q.empty()) {
      int at = q.front();
      q.pop();
      for (int next : adj[at]) {
        if (!mine.count(next) || seen.count(next)) continue;
        seen.insert(next);
        q.push(next);
      }
    }
    if (seen.size() != mine.size())
      throw std::invalid_argument(
          "tree decomposition axiom violated: bags holding node '" +
          net.node_name(v) + "' are not connected");
  }
}

}  // namespace

std::optional<TreeDecomposition> decompose(const Network& network, int max_width) {
  if (max_width < 1) return std::nullopt;
  if (network.node_count() == 0) return std::nullopt;
  auto adj = simple_support(network);

  if (auto quick = degree2_elimination(adj)) {
    if (quick->second <= max_width) return from_elimination_order(adj, quick->first);
  }
  auto greedy = min_fill_order(adj);
  if (induced_width(adj, greedy) <= max_width)
    return from_elimination_order(adj, greedy);
  if (auto exact = exact_elimination_order(adj)) {
    if (exact->second <= max_width) return from_elimination_order(adj, exact->first);
  }
  return std::nullopt;
}

NiceDecomposition make_nice(const TreeDecomposition& decomposition,
                            const Network& network) {
  validate_axioms(decomposition, network);
  NiceBuilder builder(decomposition);
  int top = builder.build(0, -1);
  // Forget the root bag down to nothing so the DP ends on neutral ground.
  top = builder.shrink(top, decomposition.bags[0], {});
  builder.out.root = top;
  builder.out.width = decomposition.width();
  return builder.out;
}

}  // namespace wrp
