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

// One-step 2-simultaneous reconfiguration between unrooted spanning trees.
//
// Both trees are peeled concurrently. Once a node knows its outgoing edges
// in both orientations it claims "delete" on its outgoing edges of t1 and
// "add" on its outgoing edges of t2, drops any edge it would both add and
// delete, and sends each remaining claim to the other endpoint. An edge
// carrying an add claim from one endpoint and a delete claim from the other
// is left untouched by both.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "streconf/graph.hpp"
#include "streconf/orient.hpp"
#include "streconf/reconfig.hpp"
#include "streconf/rooted.hpp"
#include "streconf/sim.hpp"

namespace streconf {

struct TwoSimOutput {
  NodeDecision decision;
  std::size_t iteration_t1 = 0;
  std::size_t iteration_t2 = 0;

  friend bool operator==(const TwoSimOutput&, const TwoSimOutput&) = default;
};

class TwoSimProgram {
 public:
  static constexpr std::uint8_t kRemovedT1 = 1;
  static constexpr std::uint8_t kRemovedT2 = 2;
  static constexpr std::uint8_t kClaimDelete = 3;
  static constexpr std::uint8_t kClaimAdd = 4;

  struct Input {
    std::vector<NodeId> t1_neighbors;
    std::vector<NodeId> t2_neighbors;
  };

  struct Claim {
    Edge edge;
    bool add = false;
    friend bool operator==(const Claim&, const Claim&) = default;
  };

  struct State {
    NodeId id = 0;
    std::size_t round = 0;
    detail::Peeler peel1;
    detail::Peeler peel2;
    std::vector<NodeId> t1_neighbors;
    std::vector<NodeId> t2_neighbors;
    bool claimed = false;
    std::size_t expected = 0;
    std::vector<Edge> deletes;
    std::vector<Edge> adds;
    std::vector<Claim> received;
  };

  using Output = TwoSimOutput;

  State init(const NodeContext& ctx, const Input& in, Outbox& out) const {
    State s;
    s.id = ctx.id;
    s.t1_neighbors = in.t1_neighbors;
    s.t2_neighbors = in.t2_neighbors;
    s.peel1 = detail::Peeler(ctx.id, in.t1_neighbors);
    s.peel2 = detail::Peeler(ctx.id, in.t2_neighbors);
    s.peel1.init(out, kRemovedT1);
    s.peel2.init(out, kRemovedT2);
    return s;
  }

  bool round(State& s, std::span<const Message> inbox, Outbox& out) const {
    ++s.round;
    std::vector<NodeId> left1;
    std::vector<NodeId> left2;
    for (const Message& m : inbox) {
      switch (m.tag) {
        case kRemovedT1: left1.push_back(m.sender); break;
        case kRemovedT2: left2.push_back(m.sender); break;
        case kClaimDelete:
        case kClaimAdd: {
          const Edge e = m.edge_at(0);
          if (e != Edge::of(s.id, m.sender)) {
            throw std::logic_error("claim names an edge the sender does not share");
          }
          s.received.push_back({e, m.tag == kClaimAdd});
          break;
        }
        default: throw std::logic_error("unknown message tag");
      }
    }
    s.peel1.on_round(s.round, left1, out, kRemovedT1);
    s.peel2.on_round(s.round, left2, out, kRemovedT2);

    if (!s.claimed && s.peel1.settled() && s.peel2.settled()) {
      make_claims(s, out);
    }
    if (!s.claimed || s.received.size() < s.expected) return false;

    std::vector<Edge> keep_deletes;
    std::vector<Edge> keep_adds;
    for (const Edge& e : s.deletes) {
      if (!has_claim(s.received, e, true)) keep_deletes.push_back(e);
    }
    for (const Edge& e : s.adds) {
      if (!has_claim(s.received, e, false)) keep_adds.push_back(e);
    }
    for (const Claim& c : s.received) {
      const auto& mine = c.add ? s.adds : s.deletes;
      if (std::find(mine.begin(), mine.end(), c.edge) != mine.end()) {
        // Both endpoints oriented this edge outward in the same tree.
        throw std::logic_error("edge " + c.edge.to_string() +
                               " claimed for the same operation twice");
      }
    }
    s.deletes = std::move(keep_deletes);
    s.adds = std::move(keep_adds);
    return true;
  }

  Output output(const State& s) const {
    Output o;
    o.decision.node = s.id;
    if (s.claimed) {
      o.decision.adds = s.adds;
      o.decision.deletes = s.deletes;
    }
    o.iteration_t1 = s.peel1.iteration();
    o.iteration_t2 = s.peel2.iteration();
    return o;
  }

 private:
  static bool contains(const std::vector<NodeId>& sorted, NodeId x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
  }

  static bool has_claim(const std::vector<Claim>& claims, const Edge& e, bool add) {
    return std::find(claims.begin(), claims.end(), Claim{e, add}) != claims.end();
  }

  static void make_claims(State& s, Outbox& out) {
    const auto& out1 = s.peel1.out();
    const auto& out2 = s.peel2.out();
    for (NodeId u : out1) {
      if (std::find(out2.begin(), out2.end(), u) == out2.end()) {
        s.deletes.push_back(Edge::of(s.id, u));
      }
    }
    for (NodeId u : out2) {
      if (std::find(out1.begin(), out1.end(), u) == out1.end()) {
        s.adds.push_back(Edge::of(s.id, u));
      }
    }
    std::sort(s.deletes.begin(), s.deletes.end());
    std::sort(s.adds.begin(), s.adds.end());
    for (const Edge& e : s.deletes) out.send_edge(e.other(s.id), kClaimDelete, e);
    for (const Edge& e : s.adds) out.send_edge(e.other(s.id), kClaimAdd, e);

    // A neighbor u owning our shared edge in one tree sends a claim unless
    // it also owns the edge in the other tree and cancelled it locally.
    auto incoming = [&](const std::vector<NodeId>& nbrs,
                        const std::vector<NodeId>& outs) {
      std::vector<NodeId> in;
      for (NodeId u : nbrs) {
        if (std::find(outs.begin(), outs.end(), u) == outs.end()) in.push_back(u);
      }
      return in;
    };
    const auto in1 = incoming(s.t1_neighbors, out1);
    const auto in2 = incoming(s.t2_neighbors, out2);
    s.expected = 0;
    for (NodeId u : in1) {
      if (!contains(in2, u)) ++s.expected;
    }
    for (NodeId u : in2) {
      if (!contains(in1, u)) ++s.expected;
    }
    s.claimed = true;
  }
};

struct TwoSimReconfiguration {
  Schedule schedule;
  SimTrace<TwoSimOutput> trace;
  std::size_t iterations_t1 = 0;
  std::size_t iterations_t2 = 0;

  std::size_t iterations() const { return std::max(iterations_t1, iterations_t2); }
};

/// One-step, 2-simultaneous schedule from t1 to t2, both (unrooted)
/// spanning trees of g.
inline TwoSimReconfiguration two_sim_reconfigure(const Graph& g,
                                                 const EdgeSubset& t1,
                                                 const EdgeSubset& t2,
                                                 const RunOptions& options = {}) {
  if (!validate_spanning_tree(g, t1) || !validate_spanning_tree(g, t2)) {
    throw GraphError("inputs must be spanning trees of the network");
  }
  auto adj1 = t1.adjacency();
  auto adj2 = t2.adjacency();
  std::vector<TwoSimProgram::Input> inputs(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    inputs[v] = {std::move(adj1[v]), std::move(adj2[v])};
  }
  TwoSimProgram program;
  auto trace = run(g, std::span<const TwoSimProgram::Input>(inputs), program, options);

  TwoSimReconfiguration result;
  std::vector<NodeDecision> decisions;
  for (const auto& o : trace.outputs) {
    decisions.push_back(o.decision);
    result.iterations_t1 = std::max(result.iterations_t1, o.iteration_t1);
    result.iterations_t2 = std::max(result.iterations_t2, o.iteration_t2);
  }
  result.schedule.k = 2;
  result.schedule.steps.push_back(detail::step_from_decisions(decisions));
  result.trace = std::move(trace);
  return result;
}

}  // namespace streconf
