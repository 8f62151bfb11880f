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

// Rooted trees and the one-round 1-simultaneous reconfiguration for rooted
// inputs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

#include "streconf/graph.hpp"
#include "streconf/reconfig.hpp"
#include "streconf/sim.hpp"

namespace streconf {

struct RootedTree {
  NodeId root = 0;
  std::vector<std::optional<NodeId>> parent;  // nullopt exactly at root

  std::size_t size() const { return parent.size(); }

  std::optional<Edge> parent_edge(NodeId v) const {
    if (!parent.at(v)) return std::nullopt;
    return Edge::of(v, *parent[v]);
  }

  /// The underlying unrooted tree.
  EdgeSubset edges() const {
    std::vector<Edge> out;
    for (NodeId v = 0; v < parent.size(); ++v) {
      if (parent[v]) out.push_back(Edge::of(v, *parent[v]));
    }
    return EdgeSubset(parent.size(), std::move(out));
  }

  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

/// True iff r has a single root, every parent pointer is an edge of t, and
/// following parents from any node ends at the root.
inline bool is_valid_rooting(const EdgeSubset& t, const RootedTree& r) {
  const std::size_t n = t.node_count();
  if (r.parent.size() != n || r.root >= n || r.parent[r.root]) return false;
  std::size_t pointers = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (v == r.root) continue;
    if (!r.parent[v] || *r.parent[v] >= n || *r.parent[v] == v) return false;
    if (!t.contains(Edge::of(v, *r.parent[v]))) return false;
    ++pointers;
  }
  if (pointers + 1 != n || t.size() + 1 != n) return false;
  // n - 1 distinct tree edges as parent pointers with a single root: the
  // pointer graph is acyclic iff every node reaches the root.
  std::vector<std::uint8_t> state(n, 0);  // 0 new, 1 on path, 2 reaches root
  state[r.root] = 2;
  for (NodeId v = 0; v < n; ++v) {
    std::vector<NodeId> path;
    NodeId x = v;
    while (state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = *r.parent[x];
    }
    if (state[x] == 1) return false;
    for (NodeId y : path) state[y] = 2;
  }
  return true;
}

/// BFS rooting of tree t at root. A test and generator helper only: the
/// distributed version of this problem needs a linear number of rounds.
inline RootedTree root_tree_centralized(const EdgeSubset& t, NodeId root) {
  const std::size_t n = t.node_count();
  if (root >= n) throw GraphError("root " + std::to_string(root) + " is not a node");
  if (!is_spanning_tree(n, t.edges())) throw GraphError("input is not a tree");
  RootedTree r;
  r.root = root;
  r.parent.assign(n, std::nullopt);
  auto adj = t.adjacency();
  std::vector<bool> seen(n, false);
  std::queue<NodeId> frontier;
  frontier.push(root);
  seen[root] = true;
  while (!frontier.empty()) {
    NodeId x = frontier.front();
    frontier.pop();
    for (NodeId y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        r.parent[y] = x;
        frontier.push(y);
      }
    }
  }
  return r;
}

/// One round: every node tells the relevant neighbor that it deletes its
/// old parent edge and adds its new parent edge. A node drops a claim when
/// the other endpoint announces the opposite operation on the same edge.
class RootedProgram {
 public:
  static constexpr std::uint8_t kDelete = 1;
  static constexpr std::uint8_t kAdd = 2;

  struct Input {
    std::optional<NodeId> old_parent;
    std::optional<NodeId> new_parent;
  };
  struct State {
    NodeId id = 0;
    std::optional<Edge> del;
    std::optional<Edge> add;
  };
  using Output = NodeDecision;

  State init(const NodeContext& ctx, const Input& in, Outbox& out) const {
    State s;
    s.id = ctx.id;
    if (in.old_parent) s.del = Edge::of(ctx.id, *in.old_parent);
    if (in.new_parent) s.add = Edge::of(ctx.id, *in.new_parent);
    if (s.del && s.add && *s.del == *s.add) {
      s.del.reset();
      s.add.reset();
    }
    if (s.del) out.send_edge(*in.old_parent, kDelete, *s.del);
    if (s.add) out.send_edge(*in.new_parent, kAdd, *s.add);
    return s;
  }

  bool round(State& s, std::span<const Message> inbox, Outbox&) const {
    // Decide from the claims as sent; clearing in place would let the
    // order of messages matter.
    const auto del = s.del;
    const auto add = s.add;
    for (const Message& m : inbox) {
      const Edge e = m.edge_at(0);
      if (m.tag == kAdd && del == e) s.del.reset();
      if (m.tag == kDelete && add == e) s.add.reset();
    }
    return true;
  }

  Output output(const State& s) const {
    NodeDecision d;
    d.node = s.id;
    if (s.add) d.adds.push_back(*s.add);
    if (s.del) d.deletes.push_back(*s.del);
    return d;
  }
};

namespace detail {

template <typename Decisions>
ReconfigStep step_from_decisions(const Decisions& decisions) {
  ReconfigStep step;
  for (const NodeDecision& d : decisions) {
    if (!d.empty()) step.decisions.push_back(d);
  }
  step.normalize();
  return step;
}

}  // namespace detail

struct RootedReconfiguration {
  Schedule schedule;
  SimTrace<NodeDecision> trace;
};

/// One-step, 1-simultaneous schedule from t1 to t2, both rooted spanning
/// trees of g.
inline RootedReconfiguration rooted_reconfigure(const Graph& g,
                                                const RootedTree& t1,
                                                const RootedTree& t2,
                                                const RunOptions& options = {}) {
  for (const RootedTree* t : {&t1, &t2}) {
    if (t->size() != g.size()) throw GraphError("rooted tree has the wrong size");
    EdgeSubset edges = t->edges();
    if (!is_valid_rooting(edges, *t) || !validate_spanning_tree(g, edges)) {
      throw GraphError("input is not a rooted spanning tree of the network");
    }
  }
  std::vector<RootedProgram::Input> inputs(g.size());
  for (NodeId v = 0; v < g.size(); ++v) {
    inputs[v] = {t1.parent[v], t2.parent[v]};
  }
  RootedProgram program;
  auto trace = run(g, std::span<const RootedProgram::Input>(inputs), program, options);
  Schedule sched;
  sched.k = 1;
  sched.steps.push_back(detail::step_from_decisions(trace.outputs));
  return {std::move(sched), std::move(trace)};
}

}  // namespace streconf
