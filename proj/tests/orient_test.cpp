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

#include "streconf/orient.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "streconf/generators.hpp"
#include "test_support.hpp"

namespace streconf {
namespace {

using testing::path_tree;
using testing::peeling_iteration_bound;
using testing::star_tree;

std::vector<Arc> Arcs(std::initializer_list<std::pair<NodeId, NodeId>> list) {
  std::vector<Arc> arcs;
  for (auto [t, h] : list) arcs.push_back({t, h});
  return arcs;
}

void ExpectMatchesNaive(const EdgeSubset& t, const Orientation& o) {
  auto naive = testing::naive_peel(t.node_count(), t.edges());
  ASSERT_EQ(o.arcs.size(), naive.arcs.size());
  for (std::size_t i = 0; i < o.arcs.size(); ++i) {
    EXPECT_EQ(o.arcs[i].tail, naive.arcs[i].first);
    EXPECT_EQ(o.arcs[i].head, naive.arcs[i].second);
  }
  EXPECT_EQ(o.removal_log, naive.layers);
}

// Independent restatement of the orientation invariants.
void ExpectOrientationInvariants(const EdgeSubset& t, const Orientation& o) {
  const std::size_t n = t.node_count();
  ASSERT_EQ(o.arcs.size(), t.size());
  for (std::size_t i = 0; i < o.arcs.size(); ++i) {
    EXPECT_EQ(o.arcs[i].edge(), t.edges()[i]);
  }
  EXPECT_LE(o.max_out_degree(), 2u);
  EXPECT_LE(o.iterations, peeling_iteration_bound(n));
  EXPECT_EQ(o.removal_log.size(), o.iterations);

  std::vector<std::size_t> layer_of(n, 0);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < o.removal_log.size(); ++i) {
    for (NodeId v : o.removal_log[i]) {
      EXPECT_EQ(layer_of[v], 0u) << "node in two layers";
      layer_of[v] = i + 1;
      ++covered;
    }
  }
  EXPECT_EQ(covered, n);
  for (NodeId v = 0; v < n; ++v) {
    std::size_t later = 0;
    for (const Edge& e : t) {
      if (e.touches(v) && layer_of[e.other(v)] >= layer_of[v]) ++later;
    }
    EXPECT_LE(later, 2u);
  }
  for (const Arc& a : o.arcs) {
    EXPECT_LE(layer_of[a.tail], layer_of[a.head]);
  }
}

TEST(OrientTest, SingleNode) {
  Orientation o = orient(EdgeSubset(1, {}));
  EXPECT_TRUE(o.arcs.empty());
  EXPECT_EQ(o.iterations, 1u);
}

TEST(OrientTest, PathIsOneIterationLowIdTails) {
  Orientation o = orient(path_tree(4));
  EXPECT_EQ(o.arcs, Arcs({{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(o.iterations, 1u);
}

TEST(OrientTest, StarPeelsLeavesThenCenter) {
  Orientation o = orient(star_tree(5));
  EXPECT_EQ(o.arcs, Arcs({{1, 0}, {2, 0}, {3, 0}, {4, 0}}));
  EXPECT_EQ(o.iterations, 2u);
  EXPECT_EQ(o.removal_log, (std::vector<std::vector<NodeId>>{{1, 2, 3, 4}, {0}}));
  EXPECT_EQ(o.out_degrees()[0], 0u);
}

TEST(OrientTest, RejectsNonTrees) {
  EXPECT_THROW(orient(EdgeSubset(4, {{0, 1}, {2, 3}})), GraphError);
  EXPECT_THROW(orient(EdgeSubset(3, {{0, 1}, {1, 2}, {0, 2}})), GraphError);
}

TEST(OrientTest, AllLabeledTreesUpToSeven) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for_each_labeled_tree(n, [&](const EdgeSubset& t) {
      Orientation o = orient(t);
      ExpectOrientationInvariants(t, o);
      ExpectMatchesNaive(t, o);
    });
  }
}

TEST(OrientTest, RandomLargeTrees) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_tree(5000, seed);
    EdgeSubset t = EdgeSubset::all_of(g);
    Orientation o = orient(t);
    ExpectOrientationInvariants(t, o);
    ExpectMatchesNaive(t, o);
  }
}

TEST(OrientDistributedTest, PathMatchesCentralized) {
  EdgeSubset t = path_tree(4);
  auto res = orient_distributed(as_graph(t), t);
  EXPECT_EQ(res.orientation, orient(t));
  EXPECT_EQ(res.trace.rounds, 1u);
}

TEST(OrientDistributedTest, StarTakesTwoIterations) {
  EdgeSubset t = star_tree(5);
  auto res = orient_distributed(as_graph(t), t);
  EXPECT_EQ(res.orientation.iterations, 2u);
  EXPECT_EQ(res.orientation, orient(t));
  EXPECT_EQ(res.trace.rounds, 2u);
}

TEST(OrientDistributedTest, SingleNode) {
  EdgeSubset t(1, {});
  auto res = orient_distributed(Graph(1), t);
  EXPECT_EQ(res.orientation, orient(t));
  EXPECT_EQ(res.trace.total_messages(), 0u);
}

TEST(OrientDistributedTest, ExtraNetworkEdgesAreIgnored) {
  auto inst = random_spanning_tree_pair(60, 40, 2);
  auto res = orient_distributed(inst.g, inst.t1);
  EXPECT_EQ(res.orientation, orient(inst.t1));
}

TEST(OrientDistributedTest, AllLabeledTreesUpToSeven) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for_each_labeled_tree(n, [&](const EdgeSubset& t) {
      auto res = orient_distributed(as_graph(t), t);
      ASSERT_EQ(res.orientation, orient(t));
      EXPECT_EQ(res.trace.rounds, res.orientation.iterations);
    });
  }
}

TEST(OrientDistributedTest, ThousandNodesWithinBudgetAndLimit) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = random_tree(1000, seed);
    EdgeSubset t = EdgeSubset::all_of(g);
    RunOptions opts{Mode::kCongest, 200, std::nullopt};
    auto res = orient_distributed(g, t, opts);
    EXPECT_LE(res.trace.rounds, 200u);
    EXPECT_LE(res.trace.max_bits(), congest_budget(1000));
    EXPECT_EQ(res.orientation, orient(t));
  }
}

TEST(OrientDistributedTest, TenThousandNodesIterationBound) {
  Graph g = random_tree(10000, 77);
  EdgeSubset t = EdgeSubset::all_of(g);
  auto res = orient_distributed(g, t);
  EXPECT_LE(res.orientation.iterations, peeling_iteration_bound(10000));
  EXPECT_EQ(res.orientation, orient(t));
}

TEST(OrientDistributedTest, RejectsTreeOutsideNetwork) {
  Graph g(3, {{0, 1}, {1, 2}});
  EXPECT_THROW(orient_distributed(g, EdgeSubset(3, {{0, 1}, {0, 2}})), GraphError);
}

TEST(OrientDistributedTest, PermutedEvaluationOrder) {
  Graph g = random_tree(2000, 3);
  EdgeSubset t = EdgeSubset::all_of(g);
  auto reference = orient_distributed(g, t);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto res = orient_distributed(g, t, {Mode::kCongest, std::nullopt, seed});
    EXPECT_EQ(res.orientation, reference.orientation);
    EXPECT_EQ(res.trace, reference.trace);
  }
}

}  // namespace
}  // namespace streconf
