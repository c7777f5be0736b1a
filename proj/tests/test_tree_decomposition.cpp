#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "wrp/tree_decomposition.hpp"

using namespace wrp;

namespace {

// Independent re-statement of the decomposition axioms, so the library's
// own validator never gets to grade its own homework.
void check_decomposition(const TreeDecomposition& td, const Network& net) {
  REQUIRE(!td.bags.empty());
  REQUIRE(td.tree_edges.size() == td.bags.size() - 1);

  const int bags = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> link(bags);
  for (auto [a, b] : td.tree_edges) {
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    REQUIRE(a < bags);
    REQUIRE(b < bags);
    link[a].push_back(b);
    link[b].push_back(a);
  }
  {
    std::vector<bool> seen(bags, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
      int at = q.front();
      q.pop();
      for (int next : link[at])
        if (!seen[next]) seen[next] = true, ++reached, q.push(next);
    }
    CHECK(reached == bags);
  }

  std::vector<std::set<int>> holding(net.node_count());
  for (int b = 0; b < bags; ++b) {
    CHECK(std::is_sorted(td.bags[b].begin(), td.bags[b].end()));
    for (NodeId v : td.bags[b]) {
      REQUIRE(v >= 0);
      REQUIRE(v < net.node_count());
      holding[v].insert(b);
    }
  }
  for (NodeId v = 0; v < net.node_count(); ++v) {
    REQUIRE(!holding[v].empty());
    // The bags holding v must form one connected patch of the tree.
    std::queue<int> q;
    std::set<int> seen;
    q.push(*holding[v].begin());
    seen.insert(*holding[v].begin());
    while (!q.empty()) {
      int at = q.front();
      q.pop();
      for (int next : link[at])
        if (holding[v].count(next) && !seen.count(next)) seen.insert(next), q.push(next);
    }
    CHECK(seen.size() == holding[v].size());
  }
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    bool covered = false;
    for (int b : holding[ed.from])
      if (holding[ed.to].count(b)) {
        covered = true;
        break;
      }
    CHECK(covered);
  }
}

// Nice-form invariants the dynamic programming leans on.
void check_nice(const NiceDecomposition& nice, const Network& net, int width_cap) {
  REQUIRE(nice.root >= 0);
  REQUIRE(nice.root < static_cast<int>(nice.bags.size()));
  CHECK(nice.bags[nice.root].nodes.empty());
  CHECK(nice.width <= width_cap);

  std::vector<int> used_as_child(nice.bags.size(), 0);
  std::vector<int> forgets_of(net.node_count(), 0);
  for (const NiceBag& bag : nice.bags) {
    CHECK(std::is_sorted(bag.nodes.begin(), bag.nodes.end()));
    CHECK(static_cast<int>(bag.nodes.size()) <= nice.width + 1);
    for (int c : bag.children) {
      REQUIRE(c >= 0);
      REQUIRE(c < static_cast<int>(nice.bags.size()));
      ++used_as_child[c];
    }
    switch (bag.kind) {
      case BagKind::kLeaf:
        CHECK(bag.nodes.empty());
        CHECK(bag.children.empty());
        break;
      case BagKind::kIntroduce: {
        REQUIRE(bag.children.size() == 1);
        const auto& child = nice.bags[bag.children[0]].nodes;
        REQUIRE(bag.nodes.size() == child.size() + 1);
        CHECK(std::binary_search(bag.nodes.begin(), bag.nodes.end(), bag.pivot));
        CHECK(!std::binary_search(child.begin(), child.end(), bag.pivot));
        CHECK(std::includes(bag.nodes.begin(), bag.nodes.end(), child.begin(),
                            child.end()));
        break;
      }
      case BagKind::kForget: {
        REQUIRE(bag.children.size() == 1);
        const auto& child = nice.bags[bag.children[0]].nodes;
        REQUIRE(child.size() == bag.nodes.size() + 1);
        CHECK(std::binary_search(child.begin(), child.end(), bag.pivot));
        CHECK(!std::binary_search(bag.nodes.begin(), bag.nodes.end(), bag.pivot));
        CHECK(std::includes(child.begin(), child.end(), bag.nodes.begin(),
                            bag.nodes.end()));
        ++forgets_of[bag.pivot];
        break;
      }
      case BagKind::kJoin: {
        REQUIRE(bag.children.size() == 2);
        CHECK(nice.bags[bag.children[0]].nodes == bag.nodes);
        CHECK(nice.bags[bag.children[1]].nodes == bag.nodes);
        break;
      }
    }
  }

  // Rooted tree: the root is nobody's child, everyone else has one parent.
  for (size_t b = 0; b < nice.bags.size(); ++b)
    CHECK(used_as_child[b] == (static_cast<int>(b) == nice.root ? 0 : 1));

  // Reachability from the root covers every bag (no orphan islands).
  std::vector<bool> seen(nice.bags.size(), false);
  std::vector<int> stack{nice.root};
  seen[nice.root] = true;
  size_t reached = 1;
  while (!stack.empty()) {
    int at = stack.back();
    stack.pop_back();
    for (int c : nice.bags[at].children)
      if (!seen[c]) seen[c] = true, ++reached, stack.push_back(c);
  }
  CHECK(reached == nice.bags.size());

  // The root is empty, so every node that ever appears is forgotten, and
  // the connectivity axiom makes that exactly once.
  std::vector<bool> appears(net.node_count(), false);
  bool covered_all_edges = true;
  for (const NiceBag& bag : nice.bags)
    for (NodeId v : bag.nodes) appears[v] = true;
  for (NodeId v = 0; v < net.node_count(); ++v)
    if (appears[v]) CHECK(forgets_of[v] == 1);
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    bool covered = false;
    for (const NiceBag& bag : nice.bags)
      if (std::binary_search(bag.nodes.begin(), bag.nodes.end(), ed.from) &&
          std::binary_search(bag.nodes.begin(), bag.nodes.end(), ed.to)) {
        covered = true;
        break;
      }
    if (!covered) covered_all_edges = false;
  }
  CHECK(covered_all_edges);
}

// Exact treewidth by trying every elimination order; fine up to ~8 nodes.
int brute_force_treewidth(const Network& net) {
  const int n = net.node_count();
  std::vector<std::set<NodeId>> base(n);
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    base[net.edge(e).from].insert(net.edge(e).to);
    base[net.edge(e).to].insert(net.edge(e).from);
  }
  std::vector<NodeId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  int best = n;  // any order is at most n-1 wide
  do {
    auto adj = base;
    int width = 0;
    for (NodeId v : order) {
      width = std::max(width, static_cast<int>(adj[v].size()));
      if (width >= best) break;
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
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::string thrown_message(const std::function<void()>& run) {
  try {
    run();
  } catch (const std::invalid_argument& err) {
    return err.what();
  }
  return "(nothing thrown)";
}

bool mentions(const std::string& message, const std::string& part) {
  return message.find(part) != std::string::npos;
}

Network path_with_branch() {
  Network net(Directedness::kUndirected);
  std::vector<NodeId> ids;
  for (int i = 0; i < 6; ++i) ids.push_back(net.add_node("p" + std::to_string(i)));
  for (int i = 0; i + 1 < 6; ++i) net.add_edge(ids[i], ids[i + 1]);
  NodeId fork = net.add_node("fork");
  net.add_edge(ids[2], fork);
  return net;
}

Network grid(int rows, int cols) {
  Network net(Directedness::kUndirected);
  std::vector<NodeId> ids(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      ids[r * cols + c] =
          net.add_node("g" + std::to_string(r) + "_" + std::to_string(c));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) net.add_edge(ids[r * cols + c], ids[r * cols + c + 1]);
      if (r + 1 < rows) net.add_edge(ids[r * cols + c], ids[(r + 1) * cols + c]);
    }
  return net;
}

}  // namespace

TEST_CASE("trees decompose at width one") {
  Network net = path_with_branch();
  auto td = decompose(net, 1);
  REQUIRE(td.has_value());
  CHECK(td->width() == 1);
  check_decomposition(*td, net);
  check_nice(make_nice(*td, net), net, 1);
}

TEST_CASE("a five-cycle needs width two") {
  Network net = wrpt::cycle_network(5);
  CHECK(!decompose(net, 1).has_value());
  auto td = decompose(net, 2);
  REQUIRE(td.has_value());
  CHECK(td->width() == 2);
  check_decomposition(*td, net);
  check_nice(make_nice(*td, net), net, 2);
}

TEST_CASE("complete graphs pin the width exactly") {
  Network k4 = wrpt::complete_network(4);
  CHECK(!decompose(k4, 2).has_value());
  auto td4 = decompose(k4, 3);
  REQUIRE(td4.has_value());
  CHECK(td4->width() == 3);
  check_decomposition(*td4, k4);

  Network k5 = wrpt::complete_network(5);
  CHECK(!decompose(k5, 2).has_value());
  CHECK(!decompose(k5, 3).has_value());
  auto td5 = decompose(k5, 4);
  REQUIRE(td5.has_value());
  CHECK(td5->width() == 4);
  check_decomposition(*td5, k5);
}

TEST_CASE("nonsense width requests are refused") {
  Network net = wrpt::cycle_network(4);
  CHECK(!decompose(net, 0).has_value());
  CHECK(!decompose(net, -3).has_value());
  CHECK(!decompose(Network(Directedness::kUndirected), 2).has_value());
}

TEST_CASE("parallel edges ride on the simple support") {
  Network net(Directedness::kUndirected);
  std::vector<NodeId> ids;
  for (int i = 0; i < 4; ++i) ids.push_back(net.add_node("d" + std::to_string(i)));
  for (int i = 0; i < 4; ++i) {
    net.add_edge(ids[i], ids[(i + 1) % 4]);
    net.add_edge(ids[i], ids[(i + 1) % 4]);  // doubled ring
  }
  auto td = decompose(net, 2);
  REQUIRE(td.has_value());
  CHECK(td->width() == 2);
  check_decomposition(*td, net);
  check_nice(make_nice(*td, net), net, 2);
}

TEST_CASE("greedy ordering covers networks too large for the exact fallback") {
  Network net = grid(3, 5);  // 15 nodes: past the exact method's reach
  auto td = decompose(net, 5);
  REQUIRE(td.has_value());
  CHECK(td->width() >= 3);  // a 3x5 grid is provably at least this wide
  CHECK(td->width() <= 5);
  check_decomposition(*td, net);
  check_nice(make_nice(*td, net), net, 5);
}

TEST_CASE("exact widths on small random networks") {
  std::mt19937_64 rng(4451);
  int nontrivial = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    Network net(Directedness::kUndirected);
    std::vector<NodeId> ids;
    for (int i = 0; i < n; ++i) ids.push_back(net.add_node("r" + std::to_string(i)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 10 < 4) net.add_edge(ids[i], ids[j]);
        if (rng() % 20 == 0) net.add_edge(ids[i], ids[j]);  // occasional doubles
      }

    const int tw = brute_force_treewidth(net);
    auto td = decompose(net, std::max(1, tw));
    REQUIRE(td.has_value());
    CHECK(td->width() == tw);
    check_decomposition(*td, net);
    if (tw >= 2) {
      CHECK(!decompose(net, tw - 1).has_value());
      ++nontrivial;
    }

    NiceDecomposition nice = make_nice(*td, net);
    check_nice(nice, net, std::max(1, tw));
    // Nice form must stay linear in the decomposition, not blow up.
    CHECK(nice.bags.size() <=
          4 * (td->bags.size() + 1) * static_cast<size_t>(td->width() + 2));
  }
  CHECK(nontrivial > 40);
}

TEST_CASE("one bag unrolls into a single introduce-forget chain") {
  Network net(Directedness::kUndirected);
  NodeId a = net.add_node("a");
  NodeId b = net.add_node("b");
  NodeId c = net.add_node("c");
  net.add_edge(a, b);
  net.add_edge(b, c);
  net.add_edge(a, c);

  TreeDecomposition td;
  td.bags = {{a, b, c}};
  NiceDecomposition nice = make_nice(td, net);
  check_nice(nice, net, 2);
  REQUIRE(nice.bags.size() == 7);  // leaf, three introduces, three forgets

  int leaves = 0, intros = 0, forgets = 0, joins = 0;
  for (const NiceBag& bag : nice.bags) {
    switch (bag.kind) {
      case BagKind::kLeaf: ++leaves; break;
      case BagKind::kIntroduce: ++intros; break;
      case BagKind::kForget: ++forgets; break;
      case BagKind::kJoin: ++joins; break;
    }
  }
  CHECK(leaves == 1);
  CHECK(intros == 3);
  CHECK(forgets == 3);
  CHECK(joins == 0);
}

TEST_CASE("every broken decomposition is called out by name") {
  Network net(Directedness::kUndirected);
  NodeId a = net.add_node("a");
  NodeId b = net.add_node("b");
  NodeId c = net.add_node("c");
  net.add_edge(a, b);
  net.add_edge(b, c);
  net.add_edge(a, c);

  SUBCASE("no bags at all") {
    TreeDecomposition td;
    CHECK(mentions(thrown_message([&] { make_nice(td, net); }), "no bags"));
  }
  SUBCASE("wrong number of links") {
    TreeDecomposition td;
    td.bags = {{a, b, c}, {a, b, c}};
    CHECK(mentions(thrown_message([&] { make_nice(td, net); }),
                   "do not form a tree"));
  }
  SUBCASE("link points past the last bag") {
    TreeDecomposition td;
    td.bags = {{a, b, c}, {a, b, c}};
    td.tree_edges = {{0, 5}};
    CHECK(mentions(thrown_message([&] { make_nice(td, net); }), "out of range"));
  }
  SUBCASE("right link count but a cycle plus an island") {
    TreeDecomposition td;
    td.bags = {{a, b, c}, {a, b, c}, {a, b, c}};
    td.tree_edges = {{0, 1}, {1, 0}};
    CHECK(mentions(thrown_message([&] { make_nice(td, net); }),
                   "do not form a tree"));
  }
  SUBCASE("bag out of order") {
    TreeDecomposition td;
    td.bags = {{b, a, c}};
    CHECK(mentions(thrown_message([&] { make_nice(td, net); }),
                   "not strictly ascending"));
  }
  SUBCASE("bag with a duplicate") {
    TreeDecomposition td;
    td.bags = {{a, a, b, c}};
    CHECK(mentions(thrown_message([&] { make_nice(td, net); }),
                   "not strictly ascending"));
  }
  SUBCASE("bag naming a node the network lacks") {
    TreeDecomposition td;
    td.bags = {{a, b, c, 17}};
    CHECK(mentions(thrown_message([&] { make_nice(td, net); }), "unknown node"));
  }
  SUBCASE("node left out of every bag") {
    TreeDecomposition td;
    td.bags = {{a, b}};
    CHECK(mentions(thrown_message([&] { make_nice(td, net); }), "is in no bag"));
  }
  SUBCASE("edge whose endpoints never share a bag") {
    TreeDecomposition td;
    td.bags = {{a, b}, {b, c}};
    td.tree_edges = {{0, 1}};
    CHECK(mentions(thrown_message([&] { make_nice(td, net); }), "shares no bag"));
  }
  SUBCASE("bags holding one node split into two patches") {
    Network line(Directedness::kUndirected);
    NodeId u = line.add_node("u");
    NodeId v = line.add_node("v");
    NodeId w = line.add_node("w");
    line.add_edge(u, v);
    TreeDecomposition td;
    td.bags = {{u, v}, {w}, {u, v}};
    td.tree_edges = {{0, 1}, {1, 2}};
    CHECK(mentions(thrown_message([&] { make_nice(td, line); }),
                   "are not connected"));
  }
}
