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

#include "streconf/graph.hpp"

#include <random>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "streconf/graph_io.hpp"
#include "test_support.hpp"

namespace streconf {
namespace {

using testing::bfs_is_spanning_tree;

Graph Triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

TEST(EdgeTest, CanonicalizesEndpoints) {
  Edge e = Edge::of(5, 2);
  EXPECT_EQ(e.u, 2u);
  EXPECT_EQ(e.v, 5u);
  EXPECT_EQ(e.other(2), 5u);
  EXPECT_THROW(Edge::of(3, 3), GraphError);
  EXPECT_THROW(e.other(4), GraphError);
}

TEST(GraphTest, RejectsEmptyAndMultiEdges) {
  EXPECT_THROW(Graph(0), GraphError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 2}}), GraphError);
}

TEST(GraphTest, AdjacencyMirrorsEdges) {
  Graph g(4, {{2, 3}, {0, 3}, {0, 1}});
  ASSERT_EQ(g.neighbors(0).size(), 2u);
  EXPECT_EQ(g.neighbors(0)[0], 1u);
  EXPECT_EQ(g.neighbors(0)[1], 3u);
  EXPECT_EQ(g.degree(3), 2u);
  EXPECT_TRUE(g.has_edge({0, 3}));
  EXPECT_FALSE(g.has_edge({1, 2}));
}

TEST(ValidateSpanningTreeTest, PathSpansTriangle) {
  EXPECT_TRUE(validate_spanning_tree(Triangle(), EdgeSubset(3, {{0, 1}, {1, 2}})));
}

TEST(ValidateSpanningTreeTest, AllTriangleEdgesIsNotATree) {
  EXPECT_FALSE(validate_spanning_tree(Triangle(), EdgeSubset::all_of(Triangle())));
}

TEST(ValidateSpanningTreeTest, DisconnectedSubsetOfFourCycle) {
  EXPECT_FALSE(validate_spanning_tree(testing::four_cycle(), EdgeSubset(4, {{0, 1}, {2, 3}})));
}

TEST(ValidateSpanningTreeTest, SingleNode) {
  Graph g(1);
  EXPECT_TRUE(validate_spanning_tree(g, EdgeSubset(1, {})));
}

TEST(ValidateSpanningTreeTest, RejectsEdgeOutsideGraph) {
  Graph g(3, {{0, 1}, {1, 2}});
  try {
    validate_spanning_tree(g, EdgeSubset(3, {{0, 1}, {0, 2}}));
    FAIL() << "expected EdgeNotInGraphError";
  } catch (const EdgeNotInGraphError& e) {
    EXPECT_EQ(e.edge(), (Edge{0, 2}));
  }
}

// The verdict depends only on the subset, so every subset of the complete
// graph covers every (graph, subset) pair.
TEST(ValidateSpanningTreeTest, AgreesWithBfsExhaustivelySmall) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Edge> all;
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = a + 1; b < n; ++b) all.push_back({a, b});
    }
    Graph complete(n, all);
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<Edge> subset;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask >> i & 1) subset.push_back(all[i]);
      }
      EXPECT_EQ(validate_spanning_tree(complete, EdgeSubset(n, subset)),
                bfs_is_spanning_tree(n, subset))
          << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(ValidateSpanningTreeTest, AgreesWithBfsSampledMedium) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 6; n <= 8; ++n) {
    std::vector<Edge> all;
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = a + 1; b < n; ++b) all.push_back({a, b});
    }
    for (int trial = 0; trial < 20000; ++trial) {
      // Bias towards n - 1 edges so that trees actually occur.
      std::vector<Edge> shuffled = all;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      std::size_t take = std::uniform_int_distribution<std::size_t>(n - 2, n)(rng);
      std::vector<Edge> subset(shuffled.begin(), shuffled.begin() + take);
      Graph g(n, all);
      EXPECT_EQ(validate_spanning_tree(g, EdgeSubset(n, subset)),
                bfs_is_spanning_tree(n, subset));
    }
  }
}

TEST(SpanningCertificateTest, ReportsCycle) {
  std::vector<Edge> s{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  auto cert = spanning_certificate(4, s);
  ASSERT_EQ(cert.kind, SpanningCertificate::Kind::kCycle);
  EXPECT_EQ(cert.cycle, (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(SpanningCertificateTest, ReportsCut) {
  std::vector<Edge> s{{0, 1}, {2, 3}};
  auto cert = spanning_certificate(4, s);
  ASSERT_EQ(cert.kind, SpanningCertificate::Kind::kCut);
  EXPECT_EQ(cert.component, (std::vector<NodeId>{0, 1}));
}

TEST(SpanningCertificateTest, TreeHasNoWitness) {
  std::vector<Edge> s{{0, 1}, {1, 2}};
  EXPECT_EQ(spanning_certificate(3, s).kind, SpanningCertificate::Kind::kTree);
}

TEST(GraphIoTest, ReadsCommentsAndBlankLines) {
  std::istringstream in("# a square\n4 4\n0 1\n\n1 2\n# middle\n2 3\n0 3\n");
  Graph g = read_graph(in);
  EXPECT_EQ(g, testing::four_cycle());
}

TEST(GraphIoTest, RoundTripsGraphAndSubset) {
  Graph g = testing::four_cycle();
  std::ostringstream out;
  write_graph(out, g, "hello\nworld");
  EXPECT_EQ(out.str(), "# hello\n# world\n4 4\n0 1\n0 3\n1 2\n2 3\n");
  std::istringstream in(out.str());
  EXPECT_EQ(read_graph(in), g);

  EdgeSubset s(4, {{2, 3}, {0, 1}});
  std::ostringstream sout;
  write_edge_subset(sout, s);
  EXPECT_EQ(sout.str(), "0 1\n2 3\n");
  std::istringstream sin(sout.str());
  EXPECT_EQ(read_edge_subset(sin, 4), s);
}

TEST(GraphIoTest, RejectsMalformedInput) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
  };
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("0 0\n"), ParseError);
  EXPECT_THROW(parse("3 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(parse("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse("3 2\n0 1\n0 1\n"), ParseError);
  EXPECT_THROW(parse("3 1\n0 1 2\n"), ParseError);
  try {
    parse("3 1\nx y\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

}  // namespace
}  // namespace streconf
