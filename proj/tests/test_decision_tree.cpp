#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "fibsearch/decision_tree.hpp"
#include "fibsearch/oracle.hpp"
#include "fibsearch/sequences.hpp"
#include "support/reference.hpp"

using namespace fibsearch;

namespace {

const std::vector<std::vector<Level>> kGrid = {
    {1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 4},
    {1, 1, 1}, {1, 2, 2}, {1, 2, 3}};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(SearchTree, LeafCountMatchesReference) {
  for (const auto& raw : kGrid) {
    WeightVector w(raw);
    for (Level b = 0; b <= 14; ++b) {
      if (reference::complete_leaves(raw, b) > 200000) break;
      Tree t = build_search_tree(w, b);
      ASSERT_EQ(t.leaf_count(), reference::complete_leaves(raw, b));
      ASSERT_EQ(t.leaf_count(), reference::G_values(raw, b)[b]);
      // With a unit weight some path uses the budget up exactly.
      if (w.min_weight() == 1 && b >= w.max_weight()) EXPECT_EQ(t.level(), b);
      EXPECT_LE(t.level(), b);
      for (NodeId id : t.leaves()) {
        EXPECT_LT(w.fitting(b - t.node(id).level), 2u);
      }
    }
  }
}

TEST(SearchTree, SmallShape) {
  Tree t = build_search_tree(WeightVector{1, 2}, 3);
  EXPECT_EQ(t.leaf_count(), 3u);
  EXPECT_EQ(t.nodes().size(), 5u);
  EXPECT_EQ(leaf_census(t), (std::map<Level, std::uint64_t>{{2, 2}, {3, 1}}));
  EXPECT_EQ(t.path_to_leaf(0), (std::vector<std::uint32_t>{0, 0}));
  EXPECT_EQ(t.path_to_leaf(2), (std::vector<std::uint32_t>{1}));
  EXPECT_THROW(t.path_to_leaf(3), std::out_of_range);
}

TEST(CountingTree, CensusIsG) {
  for (const auto& raw : kGrid) {
    const Level cap = raw.size() == 2 ? 14 : 10;
    Tree t = build_counting_tree(WeightVector(raw), cap);
    auto census = level_census(t);
    auto g = reference::g_values(raw, cap);
    for (Level k = 0; k <= cap; ++k) ASSERT_EQ(census[k], g[k]);
  }
  Tree t = build_counting_tree(WeightVector{3, 2}, 10);
  auto census = level_census(t);
  EXPECT_EQ(census[9] + census[10], reference::G_values({3, 2}, 10)[10]);
}

TEST(Trees, NodeLimit) {
  EXPECT_THROW(build_search_tree(WeightVector{1, 1}, 20, TreeLimits{1000}),
               LimitExceeded);
  EXPECT_THROW(build_search_tree(WeightVector{1, 1}, -1), std::invalid_argument);
}

TEST(ShrinkBudget, EqualsSmallerCompleteTree) {
  for (const auto& raw : kGrid) {
    WeightVector w(raw);
    for (Level b = 1; b <= 12; ++b) {
      if (reference::complete_leaves(raw, b) > 100000) break;
      EXPECT_EQ(to_dot(shrink_budget(build_search_tree(w, b))),
                to_dot(build_search_tree(w, b - 1)));
    }
  }
}

TEST(PruneToSize, HundredOneOfOneThree) {
  Tree t = prune_to_size(build_search_tree(WeightVector{1, 3}, 14), 101);
  EXPECT_EQ(t.leaf_count(), 101u);
  EXPECT_EQ(t.level(), 14);
}

TEST(PruneToSize, IdentityAtCapacity) {
  Tree full = build_search_tree(WeightVector{2, 3}, 12);
  EXPECT_EQ(to_dot(prune_to_size(full, full.leaf_count())), to_dot(full));
}

TEST(PruneToSize, SmallExampleMatchesConstrainedOptimum) {
  Tree t = prune_to_size(build_search_tree(WeightVector{1, 2}, 5), 6);
  EXPECT_EQ(t.leaf_count(), 6u);
  EXPECT_EQ(t.level(), 5);
  EXPECT_EQ(total_leaf_level(t), dp_expected(6, WeightVector{1, 2}, 5));
}

TEST(PruneToSize, TotalLevelIsOptimalAmongMinimaxTrees) {
  for (const auto& raw : std::vector<std::vector<Level>>{
           {1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 4}, {1, 1, 1}, {1, 2, 2}}) {
    WeightVector w(raw);
    FibTable table(w);
    for (std::uint64_t n = 1; n <= 40; ++n) {
      const Level k = min_level_for(table, n).k;
      Tree t = prune_to_size(build_search_tree(w, k + 2), n);
      ASSERT_EQ(t.leaf_count(), n);
      ASSERT_EQ(t.level(), k) << w.to_string() << " n=" << n;
      ASSERT_EQ(total_leaf_level(t), dp_expected(n, w, k))
          << w.to_string() << " n=" << n;
      for (const TreeNode& node : t.nodes()) {
        ASSERT_NE(node.edge_count, 1u);
      }
    }
  }
}

TEST(PruneToSize, RejectsBadSizes) {
  Tree t = build_search_tree(WeightVector{1, 2}, 4);
  EXPECT_THROW(prune_to_size(t, 0), std::invalid_argument);
  EXPECT_THROW(prune_to_size(t, t.leaf_count() + 1), std::invalid_argument);
  EXPECT_THROW(prune_to_size(build_counting_tree(WeightVector{1, 2}, 4), 2),
               std::invalid_argument);
}

TEST(TruncateToLeftmost, KeepsLeftLeavesAndCollapses) {
  WeightVector w{1, 2};
  Tree full = build_search_tree(w, 5);
  for (std::uint64_t n = 1; n <= full.leaf_count(); ++n) {
    Tree t = truncate_to_leftmost(full, n);
    ASSERT_EQ(t.leaf_count(), n);
    ASSERT_LE(t.level(), 5);
    for (const TreeNode& node : t.nodes()) ASSERT_NE(node.edge_count, 1u);
  }
  EXPECT_EQ(truncate_to_leftmost(full, 1).nodes().size(), 1u);
}

TEST(Dot, SingleLeaf) {
  std::string dot = to_dot(build_search_tree(WeightVector{1, 3}, 0));
  EXPECT_EQ(dot,
            "digraph lopsided {\n"
            "  graph [ordering=out];\n"
            "  node [shape=circle, fontsize=10];\n"
            "  n0 [label=\"L0\", shape=box];\n"
            "  { rank=same; n0; }\n"
            "}\n");
}

TEST(Dot, SmallSearchTree) {
  std::string dot = to_dot(build_search_tree(WeightVector{1, 2}, 3));
  EXPECT_NE(dot.find("n0 -> n2 [label=\"1:2\"];"), std::string::npos);
  std::size_t boxes = 0;
  for (std::size_t p = dot.find("shape=box"); p != std::string::npos;
       p = dot.find("shape=box", p + 1)) {
    ++boxes;
  }
  EXPECT_EQ(boxes, 3u);
}

TEST(Dot, CountingTreeGolden) {
  const std::string golden =
      read_file(std::string(FIBSEARCH_GOLDEN_DIR) + "/counting_3_1_cap10.dot");
  ASSERT_FALSE(golden.empty());
  Tree t = build_counting_tree(WeightVector{3, 1}, 10);
  EXPECT_EQ(to_dot(t), golden);
  EXPECT_EQ(to_dot(t), to_dot(build_counting_tree(WeightVector{3, 1}, 10)));
}
