#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wrp/network.hpp"

namespace wrp {

struct TreeDecomposition {
  std::vector<std::vector<NodeId>> bags;  // each sorted ascending
  std::vector<std::pair<int, int>> tree_edges;

  int width() const {
    int biggest = 0;
    for (const auto& bag : bags) biggest = std::max<int>(biggest, bag.size());
    return biggest - 1;
  }
};

//! Builds a tree decomposition of width <= max_width, or nullopt when the
//! methods at hand cannot achieve it.  Strategy: degree-(<=2) elimination
//! (complete for width <= 2), then min-fill with verification, then exact
//! subset dynamic programming for networks of at most 14 nodes.
std::optional<TreeDecomposition> decompose(const Network& network, int max_width);

enum class BagKind { kLeaf, kIntroduce, kForget, kJoin };

struct NiceBag {
  BagKind kind = BagKind::kLeaf;
  std::vector<NodeId> nodes;  // sorted ascending
  NodeId pivot = -1;          // the introduced / forgotten node
  std::vector<int> children;  // none, one, or two (join)
};

//! Rooted binary nice decomposition: empty leaves, an empty root, and
//! introduce/forget/join bags in between.
struct NiceDecomposition {
  std::vector<NiceBag> bags;
  int root = -1;
  int width = 0;
};

//! Refines a decomposition into nice form.  Validates the decomposition
//! axioms first and throws std::invalid_argument naming the violated one.
//! `network` supplies the node and edge sets the axioms quantify over.
NiceDecomposition make_nice(const TreeDecomposition& decomposition,
                            const Network& network);

}  // namespace wrp
