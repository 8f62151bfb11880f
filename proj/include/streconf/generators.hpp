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

#pragma once

// Deterministic instance generators built on Prüfer sequences.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "streconf/graph.hpp"

namespace streconf {

/// Decodes a Prüfer sequence of length n - 2 into the edges of a labeled
/// tree on n nodes. Linear time.
inline std::vector<Edge> prufer_decode(std::size_t n,
                                       std::span<const NodeId> seq) {
  if (n == 0) throw GraphError("tree must have at least one node");
  if (n == 1) {
    if (!seq.empty()) throw GraphError("Prüfer sequence too long for n = 1");
    return {};
  }
  if (seq.size() != n - 2) {
    throw GraphError("Prüfer sequence must have length n - 2");
  }
  std::vector<std::size_t> degree(n, 1);
  for (NodeId x : seq) {
    if (x >= n) throw GraphError("Prüfer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  NodeId ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  NodeId leaf = ptr;
  for (NodeId x : seq) {
    edges.push_back(Edge::of(leaf, x));
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back(Edge::of(leaf, static_cast<NodeId>(n - 1)));
  return edges;
}

/// Inverse of prufer_decode. The input must be a tree on [0, n).
inline std::vector<NodeId> prufer_encode(const EdgeSubset& tree) {
  const std::size_t n = tree.node_count();
  if (n <= 2) return {};
  auto adj = tree.adjacency();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = adj[v].size();
  std::vector<bool> removed(n, false);
  std::vector<NodeId> seq;
  seq.reserve(n - 2);
  NodeId ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  NodeId leaf = ptr;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    removed[leaf] = true;
    NodeId next = 0;
    for (NodeId y : adj[leaf]) {
      if (!removed[y]) next = y;
    }
    seq.push_back(next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1 || removed[ptr]) ++ptr;
      leaf = ptr;
    }
  }
  return seq;
}

template <typename Rng>
std::vector<Edge> random_tree_edges(std::size_t n, Rng& rng) {
  if (n == 0) throw GraphError("tree must have at least one node");
  std::vector<NodeId> seq(n >= 2 ? n - 2 : 0);
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  for (auto& x : seq) x = pick(rng);
  return prufer_decode(n, seq);
}

/// Uniformly random labeled tree on n nodes; a pure function of (n, seed).
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return Graph(n, random_tree_edges(n, rng));
}

/// A reconfiguration instance: the network g and two spanning trees of it.
struct SpanningTreePair {
  Graph g;
  EdgeSubset t1;
  EdgeSubset t2;
};

/// Two independent uniform spanning trees on [0, n), their union, and up to
/// extra_edges additional random non-tree edges (fewer only if the complete
/// graph runs out).
inline SpanningTreePair random_spanning_tree_pair(std::size_t n,
                                                  std::size_t extra_edges,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeSubset t1(n, random_tree_edges(n, rng));
  EdgeSubset t2(n, random_tree_edges(n, rng));
  std::vector<Edge> all;
  std::set_union(t1.begin(), t1.end(), t2.begin(), t2.end(),
                 std::back_inserter(all));
  const std::size_t capacity = n * (n - 1) / 2;
  std::size_t target = std::min(all.size() + extra_edges, capacity);
  if (target > all.size()) {
    std::vector<bool> present(capacity, false);
    auto index = [n](const Edge& e) {
      return static_cast<std::size_t>(e.u) * n - e.u * (e.u + 1) / 2 +
             (e.v - e.u - 1);
    };
    for (const Edge& e : all) present[index(e)] = true;
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
    while (all.size() < target) {
      NodeId a = pick(rng);
      NodeId b = pick(rng);
      if (a == b) continue;
      Edge e = Edge::of(a, b);
      if (present[index(e)]) continue;
      present[index(e)] = true;
      all.push_back(e);
    }
  }
  return {Graph(n, std::move(all)), std::move(t1), std::move(t2)};
}

/// Calls fn(const EdgeSubset&) once for each of the n^(n-2) labeled trees on
/// [0, n), in lexicographic order of their Prüfer sequences.
template <typename Fn>
void for_each_labeled_tree(std::size_t n, Fn&& fn) {
  if (n == 0) throw GraphError("tree must have at least one node");
  const std::size_t len = n >= 2 ? n - 2 : 0;
  std::vector<NodeId> seq(len, 0);
  while (true) {
    fn(EdgeSubset(n, prufer_decode(n, seq)));
    std::size_t i = len;
    while (i > 0 && seq[i - 1] + 1 == n) {
      seq[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
    ++seq[i - 1];
  }
}

}  // namespace streconf
