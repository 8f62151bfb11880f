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

// Undirected simple graphs, edge subsets and the spanning-tree oracle.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace streconf {

using NodeId = std::uint32_t;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge kept in canonical (min, max) form.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  static Edge of(NodeId a, NodeId b) {
    if (a == b) {
      throw GraphError("self-loop at node " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  bool touches(NodeId x) const { return x == u || x == v; }

  NodeId other(NodeId x) const {
    if (x == u) return v;
    if (x == v) return u;
    throw GraphError("node " + std::to_string(x) + " is not an endpoint of " +
                     to_string());
  }

  std::string to_string() const {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
  }

  auto operator<=>(const Edge&) const = default;
};

namespace detail {

inline std::vector<Edge> canonical_edge_list(std::size_t n,
                                             std::vector<Edge> edges) {
  for (auto& e : edges) {
    e = Edge::of(e.u, e.v);
    if (e.v >= n) {
      throw GraphError("edge " + e.to_string() + " has an endpoint >= n = " +
                       std::to_string(n));
    }
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw GraphError("duplicate edge " + dup->to_string());
  }
  return edges;
}

}  // namespace detail

/// Simple undirected graph on the dense node range [0, n).
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n, std::vector<Edge> edges = {})
      : n_(n), edges_(detail::canonical_edge_list(n, std::move(edges))) {
    if (n == 0) {
      throw GraphError("graph must have at least one node");
    }
    adjacency_.resize(n);
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end());
    }
  }

  std::size_t size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_.at(v); }
  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }

  bool has_edge(const Edge& e) const {
    if (e.v >= n_) return false;
    const auto& list = adjacency_[e.u];
    return std::binary_search(list.begin(), list.end(), e.v);
  }

  bool adjacent(NodeId a, NodeId b) const {
    return a != b && has_edge(Edge::of(a, b));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
};

/// A set of edges over the node range [0, n), typically a candidate
/// spanning tree of some graph. Stored sorted and duplicate-free.
class EdgeSubset {
 public:
  EdgeSubset() = default;

  EdgeSubset(std::size_t n, std::vector<Edge> edges)
      : n_(n), edges_(detail::canonical_edge_list(n, std::move(edges))) {}

  /// Every edge of the graph.
  static EdgeSubset all_of(const Graph& g) {
    EdgeSubset s;
    s.n_ = g.size();
    s.edges_ = g.edges();
    return s;
  }

  std::size_t node_count() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  bool contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  /// Sorted neighbor list of every node using only member edges.
  std::vector<std::vector<NodeId>> adjacency() const {
    std::vector<std::vector<NodeId>> adj(n_);
    for (const Edge& e : edges_) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
  }

  /// Member edges incident to v, in sorted order.
  std::vector<Edge> incident(NodeId v) const {
    std::vector<Edge> out;
    for (const Edge& e : edges_) {
      if (e.touches(v)) out.push_back(e);
    }
    return out;
  }

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Sorted set difference a \ b.
inline std::vector<Edge> edge_difference(const EdgeSubset& a,
                                         const EdgeSubset& b) {
  std::vector<Edge> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

/// Graph on the common node range whose edges are a ∪ b.
inline Graph union_graph(const EdgeSubset& a, const EdgeSubset& b) {
  if (a.node_count() != b.node_count()) {
    throw GraphError("edge subsets span different node ranges");
  }
  std::vector<Edge> all;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(all));
  return Graph(a.node_count(), std::move(all));
}

inline Graph as_graph(const EdgeSubset& s) {
  return Graph(s.node_count(), s.edges());
}

class EdgeNotInGraphError : public GraphError {
 public:
  explicit EdgeNotInGraphError(Edge e)
      : GraphError("edge " + e.to_string() + " is not an edge of the graph"),
        edge_(e) {}
  Edge edge() const { return edge_; }

 private:
  Edge edge_;
};

/// Disjoint-set forest with path compression and union by rank.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
  }

  NodeId find(NodeId x) {
    NodeId root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      NodeId next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  /// Returns false if a and b were already in the same set.
  bool unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --sets_;
    return true;
  }

  bool same(NodeId a, NodeId b) { return find(a) == find(b); }
  std::size_t set_count() const { return sets_; }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t sets_;
};

/// True iff s is a spanning tree of the node range [0, n).
inline bool is_spanning_tree(std::size_t n, std::span<const Edge> s) {
  if (s.size() + 1 != n) return false;
  UnionFind uf(n);
  for (const Edge& e : s) {
    if (e.v >= n || !uf.unite(e.u, e.v)) return false;
  }
  return true;
}

/// True iff s spans g as a tree. Throws EdgeNotInGraphError if s uses an
/// edge that g does not have.
inline bool validate_spanning_tree(const Graph& g, const EdgeSubset& s) {
  for (const Edge& e : s) {
    if (!g.has_edge(e)) throw EdgeNotInGraphError(e);
  }
  if (s.node_count() != g.size()) return false;
  return is_spanning_tree(g.size(), s.edges());
}

/// Why an edge set fails to be a spanning tree: a cycle it contains, or a
/// connected component that it does not link to the rest.
struct SpanningCertificate {
  enum class Kind { kTree, kCycle, kCut };
  Kind kind = Kind::kTree;
  std::vector<Edge> cycle;
  std::vector<NodeId> component;
};

inline SpanningCertificate spanning_certificate(std::size_t n,
                                                std::span<const Edge> s) {
  SpanningCertificate cert;
  UnionFind uf(n);
  std::vector<std::vector<std::pair<NodeId, Edge>>> forest(n);
  for (const Edge& e : s) {
    if (uf.unite(e.u, e.v)) {
      forest[e.u].push_back({e.v, e});
      forest[e.v].push_back({e.u, e});
      continue;
    }
    // Path e.u -> e.v through the forest plus e closes a cycle.
    std::vector<std::optional<Edge>> via(n);
    std::vector<bool> seen(n, false);
    std::vector<NodeId> stack{e.u};
    seen[e.u] = true;
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      for (const auto& [y, f] : forest[x]) {
        if (!seen[y]) {
          seen[y] = true;
          via[y] = f;
          stack.push_back(y);
        }
      }
    }
    cert.kind = SpanningCertificate::Kind::kCycle;
    cert.cycle.push_back(e);
    for (NodeId x = e.v; x != e.u;) {
      Edge f = *via[x];
      cert.cycle.push_back(f);
      x = f.other(x);
    }
    std::sort(cert.cycle.begin(), cert.cycle.end());
    return cert;
  }
  if (uf.set_count() > 1) {
    cert.kind = SpanningCertificate::Kind::kCut;
    for (NodeId x = 0; x < n; ++x) {
      if (uf.same(x, 0)) cert.component.push_back(x);
    }
  }
  return cert;
}

}  // namespace streconf
