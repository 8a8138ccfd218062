#include "fibsearch/decision_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fibsearch {

class TreeAssembler {
 public:
  // Breadth-first construction. expand(handle, out) appends (outcome, handle)
  // pairs for the children of the node identified by handle, in outcome
  // order. Levels follow from the outcome weights.
  template <class Handle, class Expand>
  static Tree assemble(const WeightVector& weights, TreeKind kind,
                       Level budget, Handle root, Expand&& expand,
                       std::uint64_t max_nodes) {
    Tree tree;
    tree.weights_ = weights;
    tree.kind_ = kind;
    tree.budget_ = budget;
    std::vector<Handle> handles;
    handles.push_back(std::move(root));
    tree.nodes_.push_back(TreeNode{});
    std::vector<std::pair<std::uint32_t, Handle>> kids;
    for (std::size_t id = 0; id < tree.nodes_.size(); ++id) {
      kids.clear();
      expand(handles[id], kids);
      if (tree.nodes_.size() + kids.size() > max_nodes) {
        throw LimitExceeded("explicit tree exceeds the node limit of " +
                                std::to_string(max_nodes),
                            max_nodes);
      }
      tree.nodes_[id].first_edge = static_cast<std::uint32_t>(tree.edges_.size());
      tree.nodes_[id].edge_count = static_cast<std::uint32_t>(kids.size());
      for (auto& [outcome, handle] : kids) {
        TreeNode child;
        child.level = tree.nodes_[id].level + weights[outcome];
        child.depth = tree.nodes_[id].depth + 1;
        tree.edges_.push_back(
            {outcome, static_cast<NodeId>(tree.nodes_.size())});
        tree.nodes_.push_back(child);
        handles.push_back(std::move(handle));
      }
    }
    finalize(tree);
    return tree;
  }

 private:
  static void finalize(Tree& tree) {
    // Left-to-right leaf numbering.
    std::uint64_t next_leaf = 0;
    std::vector<NodeId> stack{0};
    while (!stack.empty()) {
      NodeId id = stack.back();
      stack.pop_back();
      TreeNode& n = tree.nodes_[id];
      if (n.is_leaf()) {
        n.first_leaf = n.last_leaf = next_leaf++;
        continue;
      }
      for (std::uint32_t e = n.edge_count; e-- > 0;) {
        stack.push_back(tree.edges_[n.first_edge + e].child);
      }
    }
    // Children have larger ids than parents.
    for (std::size_t id = tree.nodes_.size(); id-- > 0;) {
      TreeNode& n = tree.nodes_[id];
      if (!n.is_leaf()) {
        n.first_leaf = tree.nodes_[tree.edges_[n.first_edge].child].first_leaf;
        n.last_leaf =
            tree.nodes_[tree.edges_[n.first_edge + n.edge_count - 1].child]
                .last_leaf;
      }
      tree.level_ = std::max(tree.level_, n.level);
      tree.depth_ = std::max(tree.depth_, n.depth);
    }
    tree.leaf_count_ = next_leaf;
  }
};

std::vector<NodeId> Tree::leaves() const {
  std::vector<NodeId> out(leaf_count_);
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    if (nodes_[id].is_leaf()) out[nodes_[id].first_leaf] = static_cast<NodeId>(id);
  }
  return out;
}

std::vector<std::uint32_t> Tree::path_to_leaf(std::uint64_t leaf) const {
  if (leaf >= leaf_count_) {
    throw std::out_of_range("leaf " + std::to_string(leaf) +
                            " out of range for a tree with " +
                            std::to_string(leaf_count_) + " leaves");
  }
  std::vector<std::uint32_t> path;
  const TreeNode* n = &nodes_.front();
  while (!n->is_leaf()) {
    for (const TreeEdge& e : children(*n)) {
      const TreeNode& c = nodes_[e.child];
      if (c.first_leaf <= leaf && leaf <= c.last_leaf) {
        path.push_back(e.outcome);
        n = &c;
        break;
      }
    }
  }
  return path;
}

Tree build_search_tree(const WeightVector& weights, Level budget,
                       TreeLimits limits) {
  if (budget < 0) throw std::invalid_argument("budget must be >= 0");
  auto expand = [&](Level remaining,
                    std::vector<std::pair<std::uint32_t, Level>>& out) {
    if (weights.fitting(remaining) < 2) return;
    for (std::uint32_t i = 0; i < weights.arity(); ++i) {
      if (weights[i] <= remaining) out.emplace_back(i, remaining - weights[i]);
    }
  };
  return TreeAssembler::assemble(weights, TreeKind::search, budget, budget,
                                 expand, limits.max_nodes);
}

Tree build_counting_tree(const WeightVector& weights, Level cap,
                         TreeLimits limits) {
  if (cap < 0) throw std::invalid_argument("cap must be >= 0");
  auto expand = [&](Level remaining,
                    std::vector<std::pair<std::uint32_t, Level>>& out) {
    for (std::uint32_t i = 0; i < weights.arity(); ++i) {
      if (weights[i] <= remaining) out.emplace_back(i, remaining - weights[i]);
    }
  };
  return TreeAssembler::assemble(weights, TreeKind::counting, cap, cap, expand,
                                 limits.max_nodes);
}

namespace {

void require_search_tree(const Tree& tree, const char* op) {
  if (tree.kind() != TreeKind::search) {
    throw std::invalid_argument(std::string(op) + " needs a search tree");
  }
}

std::size_t edge_count(const Tree& tree) {
  std::size_t edges = 0;
  for (const TreeNode& n : tree.nodes()) edges += n.edge_count;
  return edges;
}

// Copies the subtree reachable over edges with keep[edge] set. Levels and
// depths are recomputed from the kept edges, which leaves them unchanged.
Tree copy_edges(const Tree& tree, const std::vector<char>& keep, Level budget) {
  const TreeNode* base = tree.nodes().data();
  auto expand = [&](NodeId id,
                    std::vector<std::pair<std::uint32_t, NodeId>>& out) {
    const TreeNode& n = base[id];
    for (std::uint32_t e = 0; e < n.edge_count; ++e) {
      if (keep[n.first_edge + e]) {
        const TreeEdge& edge = tree.children(n)[e];
        out.emplace_back(edge.outcome, edge.child);
      }
    }
  };
  return TreeAssembler::assemble(tree.weights(), tree.kind(), budget, NodeId{0},
                                 expand, UINT64_MAX);
}

}  // namespace

Tree shrink_budget(const Tree& tree) {
  require_search_tree(tree, "shrink_budget");
  if (tree.budget() == 0) throw std::invalid_argument("budget is already 0");
  const WeightVector& w = tree.weights();
  const Level budget = tree.budget() - 1;
  std::vector<char> keep(edge_count(tree), 0);
  for (const TreeNode& n : tree.nodes()) {
    Level remaining = budget - n.level;
    if (remaining < 0 || w.fitting(remaining) < 2) continue;
    for (std::uint32_t e = 0; e < n.edge_count; ++e) {
      keep[n.first_edge + e] =
          w[tree.children(n)[e].outcome] <= remaining ? 1 : 0;
    }
  }
  return copy_edges(tree, keep, budget);
}

Tree prune_to_size(const Tree& source, std::uint64_t n) {
  require_search_tree(source, "prune_to_size");
  if (n < 1) throw std::invalid_argument("prune_to_size: n must be >= 1");
  if (n > source.leaf_count()) {
    throw std::invalid_argument("prune_to_size: n=" + std::to_string(n) +
                                " exceeds the leaf count " +
                                std::to_string(source.leaf_count()));
  }
  Tree tree = source;
  while (tree.leaf_count() > n && tree.budget() > 0) {
    Tree smaller = shrink_budget(tree);
    if (smaller.leaf_count() < n) break;
    tree = std::move(smaller);
  }
  if (tree.leaf_count() == n) return tree;

  const WeightVector& w = tree.weights();
  const Level budget = tree.budget();
  std::vector<char> keep(edge_count(tree), 1);

  // Sites in left-to-right order: plain new leaves (one edge each) and
  // conversions (a node that is a leaf one budget unit earlier).
  struct Site {
    std::uint64_t position;
    NodeId node;
    std::uint32_t edge;  // only for plain new leaves
  };
  std::vector<Site> plain;
  std::vector<Site> conversions;
  for (NodeId id = 0; id < tree.nodes().size(); ++id) {
    const TreeNode& node = tree.node(id);
    if (node.is_leaf()) continue;
    Level remaining = budget - node.level;
    if (w.fitting(remaining - 1) >= 2) {
      for (std::uint32_t e = 0; e < node.edge_count; ++e) {
        const TreeEdge& edge = tree.children(node)[e];
        if (w[edge.outcome] == remaining) {
          plain.push_back({tree.node(edge.child).first_leaf, id,
                           node.first_edge + e});
        }
      }
    } else {
      conversions.push_back({node.first_leaf, id, 0});
    }
  }
  auto by_position = [](const Site& a, const Site& b) {
    return a.position < b.position;
  };
  std::sort(plain.begin(), plain.end(), by_position);
  std::sort(conversions.begin(), conversions.end(), by_position);

  std::uint64_t surplus = tree.leaf_count() - n;
  for (auto it = conversions.rbegin(); it != conversions.rend() && surplus > 0;
       ++it) {
    const TreeNode& node = tree.node(it->node);
    const std::uint64_t added = node.edge_count - 1;
    if (surplus >= added) {
      for (std::uint32_t e = 0; e < node.edge_count; ++e) {
        keep[node.first_edge + e] = 0;
      }
      surplus -= added;
      continue;
    }
    // Partial: keep the cheapest children, leftmost first among equals.
    std::vector<std::uint32_t> order(node.edge_count);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       return w[tree.children(node)[a].outcome] <
                              w[tree.children(node)[b].outcome];
                     });
    const std::uint64_t kept = added - surplus + 1;
    for (std::size_t r = kept; r < order.size(); ++r) {
      keep[node.first_edge + order[r]] = 0;
    }
    surplus = 0;
  }
  for (auto it = plain.rbegin(); it != plain.rend() && surplus > 0; ++it) {
    keep[it->edge] = 0;
    --surplus;
  }
  if (surplus != 0) {
    throw std::logic_error("prune_to_size: surplus exceeds removable leaves");
  }
  return copy_edges(tree, keep, budget);
}

Tree truncate_to_leftmost(const Tree& tree, std::uint64_t n) {
  require_search_tree(tree, "truncate_to_leftmost");
  if (n < 1 || n > tree.leaf_count()) {
    throw std::invalid_argument("truncate_to_leftmost: n=" + std::to_string(n) +
                                " outside [1, " +
                                std::to_string(tree.leaf_count()) + "]");
  }
  const TreeNode* base = tree.nodes().data();
  auto kept_children = [&](NodeId id, std::vector<TreeEdge>& out) {
    out.clear();
    for (const TreeEdge& e : tree.children(base[id])) {
      if (base[e.child].first_leaf < n) out.push_back(e);
    }
  };
  std::vector<TreeEdge> scratch;
  auto collapse = [&](NodeId id) {
    while (true) {
      kept_children(id, scratch);
      if (scratch.size() != 1) return id;
      id = scratch.front().child;
    }
  };
  auto expand = [&](NodeId id,
                    std::vector<std::pair<std::uint32_t, NodeId>>& out) {
    std::vector<TreeEdge> kids;
    kept_children(id, kids);
    for (const TreeEdge& e : kids) out.emplace_back(e.outcome, collapse(e.child));
  };
  return TreeAssembler::assemble(tree.weights(), tree.kind(), tree.budget(),
                                 collapse(0), expand, UINT64_MAX);
}

std::map<Level, std::uint64_t> level_census(const Tree& tree) {
  std::map<Level, std::uint64_t> census;
  for (const TreeNode& n : tree.nodes()) ++census[n.level];
  return census;
}

std::map<Level, std::uint64_t> leaf_census(const Tree& tree) {
  std::map<Level, std::uint64_t> census;
  for (const TreeNode& n : tree.nodes()) {
    if (n.is_leaf()) ++census[n.level];
  }
  return census;
}

Level total_leaf_level(const Tree& tree) {
  Level total = 0;
  for (const TreeNode& n : tree.nodes()) {
    if (n.is_leaf()) total += n.level;
  }
  return total;
}

}  // namespace fibsearch
