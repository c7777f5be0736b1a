#include "wrp/twdp.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>

namespace wrp {

namespace {

using SegmentMask = unsigned;  // bit i set = segment i claims the edge

//! Table key: packed per-(bag-node, segment) parities plus the claim mask
//! per bag-internal edge instance, both laid out in the bag's sorted order.
struct Key {
  unsigned long long parity = 0;
  std::vector<SegmentMask> claims;

  bool operator<(const Key& other) const {
    if (parity != other.parity) return parity < other.parity;
    return claims < other.claims;
  }
};

//! Representative edge sets, one per segment, each sorted by edge id.
using Representative = std::vector<std::vector<EdgeId>>;

struct Entry {
  Rational cost{0};
  Representative rep;
};

bool beats(const Rational& cost, const Representative& rep, const Entry& have) {
  if (cost != have.cost) return cost < have.cost;
  return rep < have.rep;  // deterministic tie-break
}

using Table = std::map<Key, Entry>;

struct Dp {
  const WaypointInstance& instance;
  const Network& net;
  const NiceDecomposition& nice;
  const int segments;
  const long long work_budget;
  mutable long long work = 0;

  Dp(const WaypointInstance& inst, const NiceDecomposition& nd,
     long long budget)
      : instance(inst), net(inst.network), nice(nd),
        segments(inst.segment_count()), work_budget(budget) {}

  void charge(long long amount = 1) const {
    work += amount;
    if (work > work_budget)
      throw StateSpaceOverflow(
          "state table outgrew the work budget of " +
          std::to_string(work_budget) + " operations");
  }

  //! Edge instances with both endpoints inside `bag`, ascending.
  std::vector<EdgeId> bag_edges(const std::vector<NodeId>& bag) const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
      const Edge& ed = net.edge(e);
      if (std::binary_search(bag.begin(), bag.end(), ed.from) &&
          std::binary_search(bag.begin(), bag.end(), ed.to))
        out.push_back(e);
    }
    return out;
  }

  int slot(const std::vector<NodeId>& bag, NodeId v) const {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
  }

  void flip(unsigned long long& parity, const std::vector<NodeId>& bag, NodeId v,
            int segment) const {
    parity ^= 1ULL << (slot(bag, v) * segments + segment);
  }

  bool odd_at(unsigned long long parity, const std::vector<NodeId>& bag, NodeId v,
              int segment) const {
    return (parity >> (slot(bag, v) * segments + segment)) & 1ULL;
  }

  //! A segment's edge set must be odd exactly at its two route nodes.
  bool wants_odd(NodeId v, int segment) const {
    return (v == instance.route_node(segment)) !=
           (v == instance.route_node(segment + 1));
  }

  bool mask_fits(SegmentMask mask, const Rational& capacity) const {
    Rational load(0);
    for (int i = 0; i < segments; ++i)
      if (mask & (1u << i)) load += instance.demands[i];
    return load <= capacity;
  }

  void insert(Table& table, Key key, Rational cost, Representative rep) const {
    charge();
    auto [it, fresh] = table.try_emplace(std::move(key), Entry{cost, rep});
    if (!fresh && beats(cost, rep, it->second)) it->second = Entry{cost, std::move(rep)};
  }

  Table leaf() const {
    Table table;
    table[Key{0, {}}] = Entry{Rational(0), Representative(segments)};
    return table;
  }

  Table introduce(const Table& child, const std::vector<NodeId>& child_bag,
                  const std::vector<NodeId>& bag) const {
    const auto child_edges = bag_edges(child_bag);
    const auto edges = bag_edges(bag);
    std::vector<EdgeId> fresh;  // the v-incident newcomers
    for (EdgeId e : edges)
      if (!std::binary_search(child_edges.begin(), child_edges.end(), e))
        fresh.push_back(e);

    Table table;
    for (const auto& [key, entry] : child) {
      // Re-seat the child's parities and claims in the wider bag's layout.
      unsigned long long base = 0;
      for (size_t idx = 0; idx < child_bag.size(); ++idx)
        for (int i = 0; i < segments; ++i)
          if ((key.parity >> (idx * segments + i)) & 1ULL)
            base ^= 1ULL << (slot(bag, child_bag[idx]) * segments + i);
      std::vector<SegmentMask> claims(edges.size(), 0);
      for (size_t idx = 0; idx < child_edges.size(); ++idx) {
        auto at = std::lower_bound(edges.begin(), edges.end(), child_edges[idx]);
        claims[at - edges.begin()] = key.claims[idx];
      }

      // Distribute every subset of segments over each new edge instance.
      struct Choice {
        unsigned long long parity;
        std::vector<SegmentMask> claims;
        Rational cost;
        Representative rep;
      };
      std::vector<Choice> frontier{{base, claims, entry.cost, entry.rep}};
      for (EdgeId e : fresh) {
        const Edge& ed = net.edge(e);
        std::vector<Choice> next;
        for (const Choice& choice : frontier) {
          for (SegmentMask mask = 0; mask < (1u << segments); ++mask) {
            if (!mask_fits(mask, ed.capacity)) continue;
            charge();
            Choice grown = choice;
            for (int i = 0; i < segments; ++i) {
              if (!(mask & (1u << i))) continue;
              flip(grown.parity, bag, ed.from, i);
              flip(grown.parity, bag, ed.to, i);
              grown.cost += ed.weight;
              grown.rep[i].push_back(e);
            }
            grown.claims[slot_of_edge(edges, e)] = mask;
            next.push_back(std::move(grown));
          }
        }
        frontier = std::move(next);
      }
      for (Choice& choice : frontier)
        insert(table, Key{choice.parity, std::move(choice.claims)}, choice.cost,
               std::move(choice.rep));
    }
    return table;
  }

  static int slot_of_edge(const std::vector<EdgeId>& edges, EdgeId e) {
    return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) -
                            edges.begin());
  }

  Table forget(const Table& child, const std::vector<NodeId>& child_bag,
               const std::vector<NodeId>& bag, NodeId v) const {
    const auto child_edges = bag_edges(child_bag);
    const auto edges = bag_edges(bag);

    Table table;
    for (const auto& [key, entry] : child) {
      bool ok = true;
      for (int i = 0; i < segments && ok; ++i)
        ok = odd_at(key.parity, child_bag, v, i) == wants_odd(v, i);
      if (!ok) continue;

      unsigned long long parity = 0;
      for (size_t idx = 0; idx < child_bag.size(); ++idx) {
        if (child_bag[idx] == v) continue;
        for (int i = 0; i < segments; ++i)
          if ((key.parity >> (idx * segments + i)) & 1ULL)
            parity ^= 1ULL << (slot(bag, child_bag[idx]) * segments + i);
      }
      std::vector<SegmentMask> claims(edges.size(), 0);
      for (size_t idx = 0; idx < child_edges.size(); ++idx) {
        auto at = std::lower_bound(edges.begin(), edges.end(), child_edges[idx]);
        if (at != edges.end() && *at == child_edges[idx])
          claims[at - edges.begin()] = key.claims[idx];
      }
      insert(table, Key{parity, std::move(claims)}, entry.cost, entry.rep);
    }
    return table;
  }

  Table join(const Table& left, const Table& right,
             const std::vector<NodeId>& bag) const {
    const auto edges = bag_edges(bag);
    Table table;
    for (const auto& [lk, le] : left) {
      for (const auto& [rk, re] : right) {
        charge();
        bool ok = true;
        std::vector<SegmentMask> claims(edges.size(), 0);
        for (size_t idx = 0; idx < edges.size() && ok; ++idx) {
          if (lk.claims[idx] & rk.claims[idx]) {
            ok = false;  // one instance, twice in the same segment
            break;
          }
          claims[idx] = lk.claims[idx] | rk.claims[idx];
          ok = mask_fits(claims[idx], net.edge(edges[idx]).capacity);
        }
        if (!ok) continue;
        Representative rep(segments);
        for (int i = 0; i < segments; ++i) {
          std::merge(le.rep[i].begin(), le.rep[i].end(), re.rep[i].begin(),
                     re.rep[i].end(), std::back_inserter(rep[i]));
          // Children overlap only on bag edges, and those were checked.
          if (std::adjacent_find(rep[i].begin(), rep[i].end()) != rep[i].end())
            throw std::logic_error("treewidth dp: children share a non-bag edge");
        }
        insert(table, Key{lk.parity ^ rk.parity, std::move(claims)}, le.cost + re.cost,
               std::move(rep));
      }
    }
    return table;
  }

  //! Peel a simple a->b path out of an odd-{a,b} edge set; whatever stays
  //! behind is cycles by parity.  Deterministic: smallest edge id first.
  WalkSegment extract(const std::vector<EdgeId>& chosen, NodeId a, NodeId b) const {
    std::vector<bool> available(net.edge_count(), false);
    for (EdgeId e : chosen) available[e] = true;
    WalkSegment seg{a, {}};
    if (a == b) return seg;

    std::map<NodeId, size_t> first_seen{{a, 0}};
    NodeId at = a;
    while (at != b) {
      EdgeId pick = -1;
      for (EdgeId e : chosen) {
        if (!available[e]) continue;
        const Edge& ed = net.edge(e);
        if (ed.from == at || ed.to == at) {
          pick = e;
          break;
        }
      }
      if (pick == -1)
        throw std::logic_error("treewidth dp: parity promised a path that is not there");
      available[pick] = false;
      at = net.other_endpoint(pick, at);
      seg.steps.push_back(WalkStep{pick, at});
      if (at == b) break;
      auto [it, fresh] = first_seen.try_emplace(at, seg.steps.size());
      if (!fresh) {
        seg.steps.resize(it->second);  // loop spliced; its edges stay consumed
        for (auto walker = first_seen.begin(); walker != first_seen.end();)
          walker = walker->second > it->second ? first_seen.erase(walker)
                                               : std::next(walker);
      }
    }
    return seg;
  }
};

}  // namespace

std::optional<WalkSolution> solve_tw_dp(const WaypointInstance& instance,
                                        const NiceDecomposition& nice,
                                        const TwDpOptions& options) {
  if (instance.network.directed())
    throw std::invalid_argument("treewidth dp: directed networks are out of scope");
  if (instance.bounds)
    throw std::invalid_argument(
        "treewidth dp: length bounds are not expressible in the parity table");
  const int segments = instance.segment_count();
  const int cells = (nice.width + 1) * segments;
  if (cells > options.state_budget || cells > 60 || segments > 16)
    throw std::invalid_argument(
        "state space too large: (width+1)*(segments) = " + std::to_string(cells) +
        " exceeds the budget of " + std::to_string(options.state_budget));

  if (options.work_budget < 1)
    throw std::invalid_argument("treewidth dp: work budget must be positive");
  Dp dp(instance, nice, options.work_budget);

  // Bottom-up over the rooted nice tree.
  std::vector<Table> tables(nice.bags.size());
  std::vector<int> order;
  order.reserve(nice.bags.size());
  {
    std::vector<int> stack{nice.root};
    while (!stack.empty()) {
      int at = stack.back();
      stack.pop_back();
      order.push_back(at);
      for (int child : nice.bags[at].children) stack.push_back(child);
    }
    std::reverse(order.begin(), order.end());
  }

  for (int b : order) {
    const NiceBag& bag = nice.bags[b];
    switch (bag.kind) {
      case BagKind::kLeaf:
        tables[b] = dp.leaf();
        break;
      case BagKind::kIntroduce:
        tables[b] = dp.introduce(tables[bag.children[0]],
                                 nice.bags[bag.children[0]].nodes, bag.nodes);
        break;
      case BagKind::kForget:
        tables[b] = dp.forget(tables[bag.children[0]],
                              nice.bags[bag.children[0]].nodes, bag.nodes,
                              bag.pivot);
        break;
      case BagKind::kJoin:
        tables[b] = dp.join(tables[bag.children[0]], tables[bag.children[1]],
                            bag.nodes);
        break;
    }
    for (int child : bag.children) tables[child].clear();

    // The signature space is finite by construction; a count beyond the
    // closed-form bound means the table keys are broken.
    const int exponent =
        segments * static_cast<int>(bag.nodes.size() + dp.bag_edges(bag.nodes).size());
    if (exponent < 40 && tables[b].size() > (1ULL << exponent))
      throw std::logic_error("treewidth dp: signature count exceeds its bound");
  }

  const Table& root = tables[nice.root];
  if (root.empty()) return std::nullopt;
  if (root.size() != 1)
    throw std::logic_error("treewidth dp: the empty root bag must have one signature");
  const Entry& best = root.begin()->second;

  WalkSolution solution;
  for (int i = 0; i < segments; ++i)
    solution.segments.push_back(dp.extract(best.rep[i], instance.route_node(i),
                                           instance.route_node(i + 1)));
  solution.usage = recompute_usage(instance, solution);
  solution.total_cost = recompute_cost(instance.network, solution);
  // Extraction may only shed zero-weight cycles, or the table lied.
  if (solution.total_cost != best.cost)
    throw std::logic_error("treewidth dp: extracted walk cost drifted from the table");
  auto report = validate_walk(instance, solution);
  if (!report.ok)
    throw std::logic_error("treewidth dp: walk failed validation: " +
                           report.violations.front());
  return solution;
}

}  // namespace wrp
