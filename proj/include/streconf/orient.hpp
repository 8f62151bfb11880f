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

// Rake-style peeling orientation of a tree: repeatedly remove every node of
// residual degree at most 2 and orient its remaining incident edges away
// from it. Every node ends with out-degree at most 2, and at least a third
// of the residual nodes leave in every iteration, so the number of
// iterations is logarithmic.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "streconf/graph.hpp"
#include "streconf/sim.hpp"

namespace streconf {

struct Arc {
  NodeId tail = 0;
  NodeId head = 0;

  Edge edge() const { return Edge::of(tail, head); }
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Orientation {
  std::size_t n = 0;
  std::vector<Arc> arcs;  // one per tree edge, sorted by canonical edge
  std::size_t iterations = 0;
  std::vector<std::vector<NodeId>> removal_log;  // nodes removed per iteration

  std::vector<std::size_t> out_degrees() const {
    std::vector<std::size_t> deg(n, 0);
    for (const Arc& a : arcs) ++deg[a.tail];
    return deg;
  }

  std::size_t max_out_degree() const {
    auto deg = out_degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  }

  /// Heads of the arcs leaving v, ascending.
  std::vector<NodeId> out_neighbors(NodeId v) const {
    std::vector<NodeId> out;
    for (const Arc& a : arcs) {
      if (a.tail == v) out.push_back(a.head);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

namespace detail {

inline void sort_arcs(std::vector<Arc>& arcs) {
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return a.edge() < b.edge();
  });
}

inline void require_tree(const EdgeSubset& t) {
  if (t.node_count() == 0 || !is_spanning_tree(t.node_count(), t.edges())) {
    throw GraphError("orientation input must be a tree on all nodes");
  }
}

}  // namespace detail

/// Centralized peeling. When both endpoints of an edge leave in the same
/// iteration, the lower id becomes the tail.
inline Orientation orient(const EdgeSubset& t) {
  detail::require_tree(t);
  const std::size_t n = t.node_count();
  const auto adj = t.adjacency();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = adj[v].size();
  std::vector<std::size_t> removed_at(n, 0);

  Orientation o;
  o.n = n;
  std::size_t remaining = n;
  std::vector<NodeId> alive(n);
  for (NodeId v = 0; v < n; ++v) alive[v] = v;
  while (remaining > 0) {
    const std::size_t it = ++o.iterations;
    std::vector<NodeId> layer;
    for (NodeId v : alive) {
      if (degree[v] <= 2) layer.push_back(v);
    }
    if (layer.empty()) throw std::logic_error("peeling stalled");
    for (NodeId v : layer) removed_at[v] = it;
    for (NodeId v : layer) {
      for (NodeId u : adj[v]) {
        if (removed_at[u] == 0) {
          o.arcs.push_back({v, u});
          --degree[u];
        } else if (removed_at[u] == it && v < u) {
          o.arcs.push_back({v, u});
        }
      }
    }
    std::erase_if(alive, [&](NodeId v) { return removed_at[v] != 0; });
    remaining -= layer.size();
    o.removal_log.push_back(std::move(layer));
  }
  detail::sort_arcs(o.arcs);
  return o;
}

namespace detail {

/// One node's view of the peeling of one tree. A node scheduled for
/// iteration i announces itself to its residual neighbors in round i - 1
/// (or at init for i = 1); in round i it hears which neighbors left in the
/// same iteration, settles its outgoing arcs and stops.
class Peeler {
 public:
  Peeler() = default;
  Peeler(NodeId self, std::vector<NodeId> neighbors)
      : self_(self), residual_(std::move(neighbors)) {}

  void init(Outbox& out, std::uint8_t tag) { maybe_leave(1, out, tag); }

  /// senders: sorted neighbors whose removal announcement arrived in this
  /// round.
  void on_round(std::size_t round, std::span<const NodeId> senders,
                Outbox& out, std::uint8_t tag) {
    if (settled_) {
      if (!senders.empty()) {
        throw std::logic_error("announcement reached a settled node");
      }
      return;
    }
    if (leaves_at_ == round) {
      for (NodeId u : residual_) {
        bool same_layer = std::binary_search(senders.begin(), senders.end(), u);
        if (!same_layer || self_ < u) out_.push_back(u);
      }
      settled_ = true;
      return;
    }
    std::vector<NodeId> left;
    std::set_difference(residual_.begin(), residual_.end(), senders.begin(),
                        senders.end(), std::back_inserter(left));
    residual_ = std::move(left);
    maybe_leave(round + 1, out, tag);
  }

  bool settled() const { return settled_; }
  std::size_t iteration() const { return leaves_at_; }
  const std::vector<NodeId>& out() const { return out_; }

 private:
  void maybe_leave(std::size_t iteration, Outbox& out, std::uint8_t tag) {
    if (leaves_at_ != 0 || residual_.size() > 2) return;
    leaves_at_ = iteration;
    for (NodeId u : residual_) out.send(u, tag);
  }

  NodeId self_ = 0;
  std::vector<NodeId> residual_;
  std::size_t leaves_at_ = 0;
  std::vector<NodeId> out_;
  bool settled_ = false;
};

inline std::vector<NodeId> senders_with_tag(std::span<const Message> inbox,
                                            std::uint8_t tag) {
  std::vector<NodeId> out;
  for (const Message& m : inbox) {
    if (m.tag == tag) out.push_back(m.sender);
  }
  return out;  // inbox is ordered by sender
}

}  // namespace detail

struct PeelOutput {
  std::size_t iteration = 0;
  std::vector<NodeId> out;

  friend bool operator==(const PeelOutput&, const PeelOutput&) = default;
};

/// Node program for the distributed peeling. Each round is one iteration;
/// the only message is a tag-only removal announcement.
class OrientProgram {
 public:
  static constexpr std::uint8_t kRemoved = 1;

  struct Input {
    std::vector<NodeId> tree_neighbors;
  };
  struct State {
    std::size_t round = 0;
    detail::Peeler peeler;
  };
  using Output = PeelOutput;

  State init(const NodeContext& ctx, const Input& in, Outbox& out) const {
    State s{0, detail::Peeler(ctx.id, in.tree_neighbors)};
    s.peeler.init(out, kRemoved);
    return s;
  }

  bool round(State& s, std::span<const Message> inbox, Outbox& out) const {
    ++s.round;
    auto senders = detail::senders_with_tag(inbox, kRemoved);
    s.peeler.on_round(s.round, senders, out, kRemoved);
    return s.peeler.settled();
  }

  Output output(const State& s) const {
    return {s.peeler.iteration(), s.peeler.out()};
  }
};

namespace detail {

/// Builds an Orientation from per-node peel outputs, checking that every
/// tree edge got exactly one direction.
inline Orientation assemble_orientation(const EdgeSubset& t,
                                        const std::vector<PeelOutput>& outputs) {
  Orientation o;
  o.n = t.node_count();
  for (NodeId v = 0; v < outputs.size(); ++v) {
    const PeelOutput& p = outputs[v];
    o.iterations = std::max(o.iterations, p.iteration);
    for (NodeId u : p.out) o.arcs.push_back({v, u});
  }
  o.removal_log.resize(o.iterations);
  for (NodeId v = 0; v < outputs.size(); ++v) {
    o.removal_log.at(outputs[v].iteration - 1).push_back(v);
  }
  sort_arcs(o.arcs);
  if (o.arcs.size() != t.size()) {
    throw std::logic_error("orientation does not cover the tree exactly once");
  }
  for (std::size_t i = 0; i < o.arcs.size(); ++i) {
    if (o.arcs[i].edge() != t.edges()[i]) {
      throw std::logic_error("orientation does not cover the tree exactly once");
    }
  }
  return o;
}

}  // namespace detail

struct DistributedOrientation {
  Orientation orientation;
  SimTrace<PeelOutput> trace;
};

/// Runs OrientProgram on network g for tree t, which must use edges of g.
inline DistributedOrientation orient_distributed(const Graph& g,
                                                 const EdgeSubset& t,
                                                 const RunOptions& options = {}) {
  if (!validate_spanning_tree(g, t)) {
    throw GraphError("orientation input must be a spanning tree of the network");
  }
  auto adj = t.adjacency();
  std::vector<OrientProgram::Input> inputs(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) inputs[v].tree_neighbors = std::move(adj[v]);
  OrientProgram program;
  auto trace = run(g, std::span<const OrientProgram::Input>(inputs), program, options);
  Orientation o = detail::assemble_orientation(t, trace.outputs);
  return {std::move(o), std::move(trace)};
}

}  // namespace streconf
