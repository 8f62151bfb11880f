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

// Reduction from rooting a tree to one-step 1-simultaneous reconfiguration.
//
// Every node v of the base tree T = (V, E) gets a copy v' = v + n. The
// gadget network holds E, the mirrored copy edges E' and the matching
// M = {v, v'}; the source tree is E ∪ M and the target tree is E' ∪ M. In
// any valid one-step 1-simultaneous schedule, the E-edge a base node
// deletes is its parent pointer, and the single base node deleting nothing
// is the root.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "streconf/graph.hpp"
#include "streconf/reconfig.hpp"
#include "streconf/rooted.hpp"

namespace streconf {

struct GadgetInstance {
  EdgeSubset base;  // E, over [0, n)
  Graph graph;      // E ∪ E' ∪ M, over [0, 2n)
  EdgeSubset t1;    // E ∪ M
  EdgeSubset t2;    // E' ∪ M

  std::size_t base_size() const { return base.node_count(); }
  NodeId copy_of(NodeId v) const { return v + static_cast<NodeId>(base_size()); }
  NodeId original_of(NodeId copy) const {
    return copy - static_cast<NodeId>(base_size());
  }
  bool is_copy(NodeId x) const { return x >= base_size(); }
};

inline GadgetInstance build_gadget(const Graph& tree) {
  const std::size_t n = tree.size();
  if (n == 0 || !is_spanning_tree(n, tree.edges())) {
    throw GraphError("gadget input must be a tree");
  }
  const auto shift = static_cast<NodeId>(n);
  std::vector<Edge> e_edges = tree.edges();
  std::vector<Edge> copies;
  std::vector<Edge> matching;
  for (const Edge& e : e_edges) copies.push_back({e.u + shift, e.v + shift});
  for (NodeId v = 0; v < n; ++v) matching.push_back({v, v + shift});

  auto join = [](std::vector<Edge> a, const std::vector<Edge>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  GadgetInstance inst;
  inst.base = EdgeSubset(n, e_edges);
  inst.graph = Graph(2 * n, join(join(e_edges, copies), matching));
  inst.t1 = EdgeSubset(2 * n, join(e_edges, matching));
  inst.t2 = EdgeSubset(2 * n, join(copies, matching));
  if (!validate_spanning_tree(inst.graph, inst.t1) ||
      !validate_spanning_tree(inst.graph, inst.t2)) {
    throw std::logic_error("gadget trees do not span the gadget");
  }
  return inst;
}

class ExtractionError : public std::invalid_argument {
 public:
  ExtractionError(const std::string& what, std::optional<ValidityReport> report)
      : std::invalid_argument(what), report_(std::move(report)) {}
  const std::optional<ValidityReport>& report() const { return report_; }

 private:
  std::optional<ValidityReport> report_;
};

/// Reads a rooting of the base tree off a valid one-step 1-simultaneous
/// schedule on the gadget.
inline RootedTree extract_rooting(const GadgetInstance& inst,
                                  const ReconfigStep& step) {
  const std::size_t n = inst.base_size();
  std::size_t deleted = 0;
  for (const NodeDecision& d : step.decisions) {
    for (const Edge& e : d.deletes) {
      if (inst.base.contains(e)) ++deleted;
    }
  }
  if (deleted + 1 != n) {
    throw ExtractionError("every base edge must be deleted in the step: " +
                              std::to_string(deleted) + " of " +
                              std::to_string(n - 1) + " are",
                          std::nullopt);
  }
  Schedule sched{1, {step}};
  ValidityReport report = validate_schedule(inst.graph, inst.t1, inst.t2, sched);
  if (!report) {
    throw ExtractionError("step is not a valid 1-simultaneous schedule: " +
                              report.describe(),
                          report);
  }

  RootedTree r;
  r.parent.assign(n, std::nullopt);
  for (const NodeDecision& d : step.decisions) {
    if (inst.is_copy(d.node)) continue;
    for (const Edge& e : d.deletes) {
      if (inst.base.contains(e)) r.parent[d.node] = e.other(d.node);
    }
  }
  std::vector<NodeId> roots;
  for (NodeId v = 0; v < n; ++v) {
    if (!r.parent[v]) roots.push_back(v);
  }
  if (roots.size() != 1) {
    throw ExtractionError(std::to_string(roots.size()) +
                              " base nodes delete no base edge, expected 1",
                          report);
  }
  r.root = roots.front();
  if (!is_valid_rooting(inst.base, r)) {
    throw ExtractionError("parent pointers do not form a rooting", report);
  }
  return r;
}

/// The step a pair of rootings induces on the gadget: every non-root base
/// node deletes its parent edge, and every non-root copy adds the mirrored
/// parent edge of copy_rooting (given over base ids).
inline ReconfigStep induced_step(const GadgetInstance& inst,
                                 const RootedTree& base_rooting,
                                 const RootedTree& copy_rooting) {
  const std::size_t n = inst.base_size();
  if (base_rooting.size() != n || copy_rooting.size() != n) {
    throw GraphError("rooting size does not match the gadget");
  }
  ReconfigStep step;
  for (NodeId v = 0; v < n; ++v) {
    if (auto p = base_rooting.parent[v]) {
      step.decisions.push_back({v, {}, {Edge::of(v, *p)}});
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (auto p = copy_rooting.parent[v]) {
      NodeId c = inst.copy_of(v);
      step.decisions.push_back({c, {Edge::of(c, inst.copy_of(*p))}, {}});
    }
  }
  step.normalize();
  return step;
}

}  // namespace streconf
