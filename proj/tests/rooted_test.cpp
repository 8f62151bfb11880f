// Copyright 2026 The streconf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "streconf/rooted.hpp"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "streconf/generators.hpp"
#include "test_support.hpp"

namespace streconf {
namespace {

using testing::four_cycle;
using testing::path_tree;

RootedTree FromParents(NodeId root, std::vector<std::optional<NodeId>> parent) {
  return RootedTree{root, std::move(parent)};
}

TEST(RootTreeTest, SingleNode) {
  RootedTree r = root_tree_centralized(EdgeSubset(1, {}), 0);
  EXPECT_EQ(r.root, 0u);
  EXPECT_EQ(r.parent, (std::vector<std::optional<NodeId>>{std::nullopt}));
}

TEST(RootTreeTest, PathRootedInTheMiddle) {
  RootedTree r = root_tree_centralized(path_tree(3), 1);
  EXPECT_EQ(r, FromParents(1, {1, std::nullopt, 1}));
}

TEST(RootTreeTest, PathRootedAtAnEnd) {
  RootedTree r = root_tree_centralized(path_tree(3), 0);
  EXPECT_EQ(r, FromParents(0, {std::nullopt, 0, 1}));
}

TEST(RootTreeTest, RootMustExist) {
  EXPECT_THROW(root_tree_centralized(path_tree(3), 3), GraphError);
}

TEST(RootTreeTest, ValidityChecks) {
  EdgeSubset t = path_tree(3);
  EXPECT_TRUE(is_valid_rooting(t, FromParents(0, {std::nullopt, 0, 1})));
  // Two roots.
  EXPECT_FALSE(is_valid_rooting(t, FromParents(0, {std::nullopt, 0, std::nullopt})));
  // Pointer along a non-edge.
  EXPECT_FALSE(is_valid_rooting(t, FromParents(0, {std::nullopt, 0, 0})));
  // Two nodes pointing at each other.
  EdgeSubset p4 = path_tree(4);
  EXPECT_FALSE(is_valid_rooting(p4, FromParents(0, {std::nullopt, 2, 1, 2})));
}

TEST(RootedReconfigureTest, IdenticalTreesGiveEmptyStep) {
  EdgeSubset t = path_tree(5);
  Graph g = as_graph(t);
  for (NodeId r1 = 0; r1 < 5; ++r1) {
    for (NodeId r2 = 0; r2 < 5; ++r2) {
      auto res = rooted_reconfigure(g, root_tree_centralized(t, r1),
                                    root_tree_centralized(t, r2));
      ASSERT_EQ(res.schedule.steps.size(), 1u);
      EXPECT_TRUE(res.schedule.steps[0].decisions.empty());
      EXPECT_EQ(res.trace.rounds, 1u);
    }
  }
}

TEST(RootedReconfigureTest, FourCycleExample) {
  RootedTree t1 = FromParents(0, {std::nullopt, 0, 1, 2});
  RootedTree t2 = FromParents(0, {std::nullopt, 2, 3, 0});
  auto res = rooted_reconfigure(four_cycle(), t1, t2);
  EXPECT_EQ(res.trace.rounds, 1u);
  EXPECT_EQ(res.schedule.k, 1u);
  ASSERT_EQ(res.schedule.steps.size(), 1u);
  const ReconfigStep& step = res.schedule.steps[0];
  EXPECT_EQ(step, (ReconfigStep{{{1, {}, {{0, 1}}}, {3, {{0, 3}}, {}}}}));
  EXPECT_TRUE(validate_schedule(four_cycle(), t1.edges(), t2.edges(), res.schedule));
  auto all = enumerate_one_step_schedules(four_cycle(), t1.edges(), t2.edges(), 1);
  EXPECT_NE(std::find(all.begin(), all.end(), step), all.end());
}

TEST(RootedReconfigureTest, EveryRootingPairOfSmallTrees) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<EdgeSubset> trees;
    for_each_labeled_tree(n, [&](const EdgeSubset& t) { trees.push_back(t); });
    for (std::size_t i = 0; i < trees.size(); i += 3) {
      for (std::size_t j = 0; j < trees.size(); j += 2) {
        Graph g = union_graph(trees[i], trees[j]);
        for (NodeId r1 = 0; r1 < n; ++r1) {
          NodeId r2 = static_cast<NodeId>((r1 * 3 + j) % n);
          auto t1 = root_tree_centralized(trees[i], r1);
          auto t2 = root_tree_centralized(trees[j], r2);
          auto res = rooted_reconfigure(g, t1, t2);
          ASSERT_TRUE(validate_schedule(g, trees[i], trees[j], res.schedule));
          EXPECT_EQ(res.trace.rounds, 1u);
          auto all = enumerate_one_step_schedules(g, trees[i], trees[j], 1);
          EXPECT_NE(std::find(all.begin(), all.end(), res.schedule.steps[0]), all.end());
        }
      }
    }
  }
}

TEST(RootedReconfigureTest, RandomInstancesWithExtraEdges) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = random_spanning_tree_pair(300, 100, seed);
    auto t1 = root_tree_centralized(inst.t1, static_cast<NodeId>(seed % 300));
    auto t2 = root_tree_centralized(inst.t2, static_cast<NodeId>((seed * 17) % 300));
    auto res = rooted_reconfigure(inst.g, t1, t2);
    auto report = validate_schedule(inst.g, inst.t1, inst.t2, res.schedule);
    EXPECT_TRUE(report) << report.describe();
    EXPECT_EQ(res.trace.rounds, 1u);
    EXPECT_LE(res.schedule.steps[0].max_load(), 1u);
    EXPECT_LE(res.trace.max_bits(), congest_budget(300));
  }
}

TEST(RootedReconfigureTest, RejectsInvalidRootings) {
  EdgeSubset t = path_tree(3);
  Graph g = as_graph(t);
  RootedTree good = root_tree_centralized(t, 0);
  RootedTree cyclic = FromParents(0, {std::nullopt, 2, 1});
  EXPECT_THROW(rooted_reconfigure(g, good, cyclic), GraphError);
  RootedTree off_graph = FromParents(0, {std::nullopt, 0, 0});
  EXPECT_THROW(rooted_reconfigure(g, good, off_graph), GraphError);
}

}  // namespace
}  // namespace streconf
