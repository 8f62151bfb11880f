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

// k-simultaneous add-and-delete steps, schedules, and the centralized
// validity oracle.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "streconf/graph.hpp"

namespace streconf {

/// The edges one node adds and deletes in a step. Every edge is incident to
/// the node, and no edge is both added and deleted.
struct NodeDecision {
  NodeId node = 0;
  std::vector<Edge> adds;
  std::vector<Edge> deletes;

  bool empty() const { return adds.empty() && deletes.empty(); }
  friend bool operator==(const NodeDecision&, const NodeDecision&) = default;
};

struct ReconfigStep {
  std::vector<NodeDecision> decisions;

  /// Sorts decisions by node and edges within each decision, and drops
  /// decisions that change nothing. Equal steps compare equal afterwards.
  ReconfigStep& normalize() {
    std::erase_if(decisions, [](const NodeDecision& d) { return d.empty(); });
    for (auto& d : decisions) {
      std::sort(d.adds.begin(), d.adds.end());
      std::sort(d.deletes.begin(), d.deletes.end());
    }
    std::sort(decisions.begin(), decisions.end(),
              [](const NodeDecision& a, const NodeDecision& b) {
                return a.node < b.node;
              });
    return *this;
  }

  std::vector<Edge> all_adds() const {
    std::vector<Edge> out;
    for (const auto& d : decisions) out.insert(out.end(), d.adds.begin(), d.adds.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Edge> all_deletes() const {
    std::vector<Edge> out;
    for (const auto& d : decisions) {
      out.insert(out.end(), d.deletes.begin(), d.deletes.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Largest number of adds or deletes any single node performs.
  std::size_t max_load() const {
    std::size_t load = 0;
    for (const auto& d : decisions) {
      load = std::max({load, d.adds.size(), d.deletes.size()});
    }
    return load;
  }

  friend bool operator==(const ReconfigStep&, const ReconfigStep&) = default;
};

struct Schedule {
  std::size_t k = 1;
  std::vector<ReconfigStep> steps;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

enum class Rule {
  kBudget,
  kNotIncident,
  kAddAndDeleteSameEdge,
  kDuplicateNode,
  kClaimConflict,
  kDeleteNotInTree,
  kAddAlreadyInTree,
  kAddNotInGraph,
  kNotSpanningTree,
  kFinalMismatch,
};

inline std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::kBudget: return "budget";
    case Rule::kNotIncident: return "not_incident";
    case Rule::kAddAndDeleteSameEdge: return "add_and_delete_same_edge";
    case Rule::kDuplicateNode: return "duplicate_node";
    case Rule::kClaimConflict: return "claim_conflict";
    case Rule::kDeleteNotInTree: return "delete_not_in_tree";
    case Rule::kAddAlreadyInTree: return "add_already_in_tree";
    case Rule::kAddNotInGraph: return "add_not_in_graph";
    case Rule::kNotSpanningTree: return "not_spanning_tree";
    case Rule::kFinalMismatch: return "final_mismatch";
  }
  return "unknown";
}

/// A step that cannot be applied, naming the offending node and edge.
class StepError : public std::invalid_argument {
 public:
  StepError(Rule rule, NodeId node, std::optional<Edge> edge)
      : std::invalid_argument(describe(rule, node, edge)),
        rule_(rule),
        node_(node),
        edge_(edge) {}

  Rule rule() const { return rule_; }
  NodeId node() const { return node_; }
  std::optional<Edge> edge() const { return edge_; }

 private:
  static std::string describe(Rule rule, NodeId node, std::optional<Edge> e) {
    std::string s(rule_name(rule));
    s += " at node " + std::to_string(node);
    if (e) s += " on edge " + e->to_string();
    return s;
  }

  Rule rule_;
  NodeId node_;
  std::optional<Edge> edge_;
};

/// Applies one step atomically: current minus all deletes, plus all adds.
/// Makes no judgment about whether the result is a spanning tree.
inline EdgeSubset apply_step(const Graph& g, const EdgeSubset& current,
                             const ReconfigStep& step) {
  std::vector<const NodeDecision*> order;
  order.reserve(step.decisions.size());
  for (const auto& d : step.decisions) order.push_back(&d);
  std::sort(order.begin(), order.end(),
            [](const NodeDecision* a, const NodeDecision* b) {
              return a->node < b->node;
            });

  struct Claim {
    Edge edge;
    NodeId node;
    auto operator<=>(const Claim&) const = default;
  };
  std::vector<Claim> claims;
  std::size_t total = 0;
  for (const NodeDecision* d : order) total += d->adds.size() + d->deletes.size();
  claims.reserve(total);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const NodeDecision& d = *order[i];
    if (i > 0 && order[i - 1]->node == d.node) {
      throw StepError(Rule::kDuplicateNode, d.node, std::nullopt);
    }
    for (const auto* list : {&d.deletes, &d.adds}) {
      for (const Edge& e : *list) {
        if (!e.touches(d.node)) throw StepError(Rule::kNotIncident, d.node, e);
        claims.push_back({e, d.node});
      }
    }
    for (const Edge& e : d.adds) {
      if (std::find(d.deletes.begin(), d.deletes.end(), e) != d.deletes.end()) {
        throw StepError(Rule::kAddAndDeleteSameEdge, d.node, e);
      }
    }
  }
  std::sort(claims.begin(), claims.end());
  for (std::size_t i = 1; i < claims.size(); ++i) {
    if (claims[i].edge == claims[i - 1].edge) {
      throw StepError(Rule::kClaimConflict, claims[i].node, claims[i].edge);
    }
  }

  for (const NodeDecision* d : order) {
    for (const Edge& e : d->deletes) {
      if (!current.contains(e)) throw StepError(Rule::kDeleteNotInTree, d->node, e);
    }
    for (const Edge& e : d->adds) {
      if (current.contains(e)) throw StepError(Rule::kAddAlreadyInTree, d->node, e);
      if (!g.has_edge(e)) throw StepError(Rule::kAddNotInGraph, d->node, e);
    }
  }
  // Claims are now sorted, unique per edge, deletes inside current and adds
  // outside it: one merge pass drops the deletes and inserts the adds.
  std::vector<Edge> next;
  next.reserve(current.size() + claims.size());
  auto c = claims.begin();
  for (const Edge& e : current) {
    for (; c != claims.end() && c->edge < e; ++c) next.push_back(c->edge);
    if (c != claims.end() && c->edge == e) {
      ++c;
    } else {
      next.push_back(e);
    }
  }
  for (; c != claims.end(); ++c) next.push_back(c->edge);
  return EdgeSubset(current.node_count(), std::move(next));
}

/// Outcome of checking a schedule. When invalid, names the first failing
/// step and a witness: the violated rule with offending node and edge, or a
/// cycle / disconnected component for a non-tree intermediate set.
struct ValidityReport {
  bool valid = true;
  std::size_t step = 0;
  Rule rule = Rule::kBudget;
  std::optional<NodeId> node;
  std::optional<Edge> edge;
  std::vector<Edge> cycle;
  std::vector<NodeId> component;

  explicit operator bool() const { return valid; }

  std::string describe() const {
    if (valid) return "VALID";
    std::string s = "INVALID at step " + std::to_string(step) + ": " +
                    std::string(rule_name(rule));
    if (node) s += " node " + std::to_string(*node);
    if (edge) s += " edge " + edge->to_string();
    if (!cycle.empty()) s += " (cycle of " + std::to_string(cycle.size()) + " edges)";
    if (!component.empty()) {
      s += " (component of " + std::to_string(component.size()) + " nodes)";
    }
    return s;
  }
};

/// Checks schedules from t1 to t2 on g. The endpoint trees are checked once,
/// on construction, which pays off when validating many candidate schedules
/// for one instance.
class ScheduleValidator {
 public:
  /// Throws std::invalid_argument if t1 or t2 is not a spanning tree of g.
  ScheduleValidator(const Graph& g, const EdgeSubset& t1, const EdgeSubset& t2)
      : g_(g), t1_(t1), t2_(t2) {
    if (!validate_spanning_tree(g, t1) || !validate_spanning_tree(g, t2)) {
      throw std::invalid_argument("source and target must be spanning trees");
    }
  }

  ValidityReport operator()(const Schedule& sched) const {
    return check(sched.k, sched.steps);
  }

  /// Validates steps as a schedule with budget k.
  ValidityReport check(std::size_t k, std::span<const ReconfigStep> steps) const {
    ValidityReport report;
    auto fail = [&](std::size_t step, Rule rule) {
      report.valid = false;
      report.step = step;
      report.rule = rule;
      return report;
    };

    EdgeSubset current;
    const EdgeSubset* now = &t1_;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const ReconfigStep& step = steps[i];
      const NodeDecision* over = nullptr;
      for (const NodeDecision& d : step.decisions) {
        if ((d.adds.size() > k || d.deletes.size() > k) &&
            (over == nullptr || d.node < over->node)) {
          over = &d;
        }
      }
      if (over != nullptr) {
        report.node = over->node;
        return fail(i, Rule::kBudget);
      }
      try {
        current = apply_step(g_, *now, step);
        now = &current;
      } catch (const StepError& e) {
        report.node = e.node();
        report.edge = e.edge();
        return fail(i, e.rule());
      }
      if (!is_spanning_tree(g_.size(), current.edges())) {
        SpanningCertificate cert = spanning_certificate(g_.size(), current.edges());
        report.cycle = std::move(cert.cycle);
        report.component = std::move(cert.component);
        return fail(i, Rule::kNotSpanningTree);
      }
    }
    if (!(*now == t2_)) {
      std::vector<Edge> diff;
      std::set_symmetric_difference(now->begin(), now->end(), t2_.begin(),
                                    t2_.end(), std::back_inserter(diff));
      report.edge = diff.front();
      return fail(steps.size(), Rule::kFinalMismatch);
    }
    return report;
  }

 private:
  const Graph& g_;
  const EdgeSubset& t1_;
  const EdgeSubset& t2_;
};

/// Checks that sched transforms t1 into t2 through spanning trees of g,
/// respecting the per-node budget and the edge-claim rules. Throws
/// std::invalid_argument if t1 or t2 is not itself a spanning tree of g.
inline ValidityReport validate_schedule(const Graph& g, const EdgeSubset& t1,
                                        const EdgeSubset& t2,
                                        const Schedule& sched) {
  return ScheduleValidator(g, t1, t2)(sched);
}

class EnumerationCapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultEnumerationCap = 8;

/// Brute force over every one-step schedule from t1 to t2 with budget k:
/// each edge of t1 \ t2 is deleted by one of its endpoints and each edge of
/// t2 \ t1 is added by one of its endpoints, keeping only assignments where
/// no node exceeds k adds or k deletes. Calls fn(const ReconfigStep&) for
/// each, in a fixed order.
template <typename Fn>
void for_each_one_step_schedule(const Graph& g, const EdgeSubset& t1,
                                const EdgeSubset& t2, std::size_t k, Fn&& fn,
                                std::size_t cap = kDefaultEnumerationCap) {
  if (g.size() > cap) {
    throw EnumerationCapError("enumeration capped at n = " +
                              std::to_string(cap) + ", got n = " +
                              std::to_string(g.size()));
  }
  struct Work {
    Edge edge;
    bool add;
  };
  std::vector<Work> work;
  for (const Edge& e : edge_difference(t1, t2)) work.push_back({e, false});
  for (const Edge& e : edge_difference(t2, t1)) work.push_back({e, true});

  const std::size_t n = g.size();
  std::vector<std::size_t> add_load(n, 0);
  std::vector<std::size_t> del_load(n, 0);
  std::vector<NodeId> owner(work.size(), 0);
  std::vector<NodeDecision> by_node(n);
  for (NodeId v = 0; v < n; ++v) by_node[v].node = v;
  ReconfigStep step;

  // Work items are sorted within deletes and within adds, so filling
  // by_node in item order and copying non-empty entries in node order
  // yields a normalized step. Buffers keep their capacity across leaves.
  auto emit = [&] {
    for (auto& d : by_node) {
      d.adds.clear();
      d.deletes.clear();
    }
    for (std::size_t j = 0; j < work.size(); ++j) {
      NodeDecision& d = by_node[owner[j]];
      (work[j].add ? d.adds : d.deletes).push_back(work[j].edge);
    }
    std::size_t used = 0;
    for (const auto& d : by_node) {
      if (d.empty()) continue;
      if (used == step.decisions.size()) step.decisions.emplace_back();
      NodeDecision& out = step.decisions[used++];
      out.node = d.node;
      out.adds.assign(d.adds.begin(), d.adds.end());
      out.deletes.assign(d.deletes.begin(), d.deletes.end());
    }
    step.decisions.resize(used);
    fn(static_cast<const ReconfigStep&>(step));
  };
  auto assign = [&](auto& self, std::size_t i) -> void {
    if (i == work.size()) {
      emit();
      return;
    }
    for (NodeId endpoint : {work[i].edge.u, work[i].edge.v}) {
      auto& load = work[i].add ? add_load : del_load;
      if (load[endpoint] == k) continue;
      ++load[endpoint];
      owner[i] = endpoint;
      self(self, i + 1);
      --load[endpoint];
    }
  };
  assign(assign, 0);
}

inline std::vector<ReconfigStep> enumerate_one_step_schedules(
    const Graph& g, const EdgeSubset& t1, const EdgeSubset& t2, std::size_t k,
    std::size_t cap = kDefaultEnumerationCap) {
  std::vector<ReconfigStep> out;
  for_each_one_step_schedule(
      g, t1, t2, k, [&](const ReconfigStep& s) { out.push_back(s); }, cap);
  return out;
}

}  // namespace streconf
