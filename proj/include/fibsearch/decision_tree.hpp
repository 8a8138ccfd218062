#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fibsearch/types.hpp"
#include "fibsearch/weights.hpp"

namespace fibsearch {

enum class TreeKind { search, counting };

using NodeId = std::uint32_t;

struct TreeEdge {
  std::uint32_t outcome;  // index into the weight vector
  NodeId child;
};

struct TreeNode {
  Level level = 0;         // weighted depth
  std::uint32_t depth = 0; // edge count from the root
  std::uint64_t first_leaf = 0;
  std::uint64_t last_leaf = 0;
  std::uint32_t first_edge = 0;
  std::uint32_t edge_count = 0;

  bool is_leaf() const noexcept { return edge_count == 0; }
};

struct TreeLimits {
  std::uint64_t max_nodes = std::uint64_t{1} << 20;
};

/// Explicit lopsided decision tree, stored breadth-first in one array.
///
/// Node 0 is the root. Children of a node are contiguous in edges(), ordered
/// by outcome index, and always have larger ids than their parent. Leaves are
/// numbered left to right; every node records the range of leaves below it.
/// Explicit trees exist for desk-scale verification and rendering; the
/// search itself never materializes one.
class Tree {
 public:
  const WeightVector& weights() const noexcept { return weights_; }
  TreeKind kind() const noexcept { return kind_; }
  // Level cap the tree was built for.
  Level budget() const noexcept { return budget_; }

  const TreeNode& root() const { return nodes_.front(); }
  const TreeNode& node(NodeId id) const { return nodes_.at(id); }
  std::span<const TreeNode> nodes() const noexcept { return nodes_; }
  std::span<const TreeEdge> children(const TreeNode& n) const {
    return {edges_.data() + n.first_edge, n.edge_count};
  }

  Level level() const noexcept { return level_; }
  std::uint32_t depth() const noexcept { return depth_; }
  std::uint64_t leaf_count() const noexcept { return leaf_count_; }

  // Leaf node ids in left-to-right order.
  std::vector<NodeId> leaves() const;

  // Outcomes taken from the root down to the given leaf.
  std::vector<std::uint32_t> path_to_leaf(std::uint64_t leaf) const;

 private:
  friend class TreeAssembler;

  WeightVector weights_{1, 1};
  TreeKind kind_ = TreeKind::search;
  Level budget_ = 0;
  std::vector<TreeNode> nodes_;
  std::vector<TreeEdge> edges_;
  Level level_ = 0;
  std::uint32_t depth_ = 0;
  std::uint64_t leaf_count_ = 0;
};

/// Complete search tree with level <= budget. A node with remaining budget b
/// has a child for every outcome with w_i <= b when at least two outcomes fit,
/// and is a leaf otherwise. For two outcomes this is "leaf iff b < u". The
/// leaf count is G(budget).
Tree build_search_tree(const WeightVector& weights, Level budget,
                       TreeLimits limits = {});

/// Unrolled counting tree: a node at level d has child i iff d + w_i <= cap,
/// so single-child nodes occur. The number of nodes at level k is g(k).
Tree build_counting_tree(const WeightVector& weights, Level cap,
                         TreeLimits limits = {});

/// Cuts a complete search tree down to n leaves so that it stays worst-case
/// optimal and has the least total leaf level among such trees.
///
/// The tree is first reduced to the smallest budget k whose complete tree
/// still has n or more leaves. Relative to the budget k-1 tree, the budget k
/// tree adds two kinds of leaves: new deepest leaves under nodes that were
/// already internal, and whole new families under nodes that were leaves
/// ("conversions", which also cost the parent's extra edge). Surplus leaves
/// are given back in the reverse order they were added: conversions from the
/// right first (the leftmost affected one possibly partially, keeping its
/// cheapest children), then plain deepest leaves from the right.
Tree prune_to_size(const Tree& tree, std::uint64_t n);

/// Keeps the n leftmost leaves, drops emptied subtrees and collapses
/// single-child nodes (their comparison is skipped). This is the shape
/// followed by the short form of the search.
Tree truncate_to_leftmost(const Tree& tree, std::uint64_t n);

/// Complete search tree for budget-1, obtained structurally: every node loses
/// one unit of remaining budget.
Tree shrink_budget(const Tree& tree);

/// Node count per exact level.
std::map<Level, std::uint64_t> level_census(const Tree& tree);

/// Leaf count per exact level.
std::map<Level, std::uint64_t> leaf_census(const Tree& tree);

/// Sum of leaf levels.
Level total_leaf_level(const Tree& tree);

/// Graphviz digraph: one node per tree node labeled "L<level>", one rank
/// group per level, edges labeled "<outcome>:<weight>". Deterministic.
std::string to_dot(const Tree& tree);

}  // namespace fibsearch
