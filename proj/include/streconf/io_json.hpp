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

// JSON encodings: schedules, orientations, validity reports and JSON-lines
// simulation traces. Key order is fixed, so output is byte-stable.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "streconf/graph.hpp"
#include "streconf/orient.hpp"
#include "streconf/reconfig.hpp"
#include "streconf/sim.hpp"
#include "streconf/two_sim.hpp"

namespace streconf {

using ordered_json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline ordered_json edge_json(const Edge& e) { return ordered_json::array({e.u, e.v}); }

inline ordered_json edges_json(const std::vector<Edge>& edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e));
  return out;
}

inline ordered_json decision_json(const NodeDecision& d) {
  ordered_json j;
  j["node"] = d.node;
  j["adds"] = edges_json(d.adds);
  j["deletes"] = edges_json(d.deletes);
  return j;
}

inline ordered_json schedule_json(const Schedule& s) {
  ordered_json j;
  j["k"] = s.k;
  ordered_json steps = ordered_json::array();
  for (const ReconfigStep& step : s.steps) {
    ordered_json decisions = ordered_json::array();
    for (const NodeDecision& d : step.decisions) decisions.push_back(decision_json(d));
    ordered_json js;
    js["decisions"] = std::move(decisions);
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  return j;
}

inline std::string format_schedule(const Schedule& s) {
  return schedule_json(s).dump() + "\n";
}

namespace detail {

inline Edge parse_edge_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() ||
      !j[1].is_number_unsigned()) {
    throw FormatError("edge must be a pair of node ids: " + j.dump());
  }
  auto a = j[0].get<NodeId>();
  auto b = j[1].get<NodeId>();
  if (a >= b) throw FormatError("edge must be written (min,max): " + j.dump());
  return Edge{a, b};
}

inline std::vector<Edge> parse_edge_list(const ordered_json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& list = j.at(key);
  if (!list.is_array()) throw FormatError(std::string(key) + " must be an array");
  std::vector<Edge> out;
  for (const auto& e : list) out.push_back(parse_edge_json(e));
  return out;
}

}  // namespace detail

inline Schedule parse_schedule(std::istream& in) {
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("schedule is not valid JSON: ") + e.what());
  }
  try {
    Schedule s;
    if (!j.is_object() || !j.contains("k") || !j.at("k").is_number_unsigned()) {
      throw FormatError("schedule needs a non-negative integer \"k\"");
    }
    s.k = j.at("k").get<std::size_t>();
    if (!j.contains("steps") || !j.at("steps").is_array()) {
      throw FormatError("schedule needs a \"steps\" array");
    }
    for (const auto& js : j.at("steps")) {
      ReconfigStep step;
      if (!js.is_object() || !js.contains("decisions") ||
          !js.at("decisions").is_array()) {
        throw FormatError("each step needs a \"decisions\" array");
      }
      for (const auto& jd : js.at("decisions")) {
        if (!jd.is_object() || !jd.contains("node") ||
            !jd.at("node").is_number_unsigned()) {
          throw FormatError("each decision needs a \"node\" id");
        }
        NodeDecision d;
        d.node = jd.at("node").get<NodeId>();
        d.adds = detail::parse_edge_list(jd, "adds");
        d.deletes = detail::parse_edge_list(jd, "deletes");
        step.decisions.push_back(std::move(d));
      }
      s.steps.push_back(std::move(step));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed schedule: ") + e.what());
  }
}

inline Schedule parse_schedule(const std::string& text) {
  std::istringstream in(text);
  return parse_schedule(in);
}

inline ordered_json orientation_json(const Orientation& o) {
  ordered_json j;
  j["iterations"] = o.iterations;
  ordered_json arcs = ordered_json::array();
  for (const Arc& a : o.arcs) arcs.push_back(ordered_json::array({a.tail, a.head}));
  j["edges"] = std::move(arcs);
  return j;
}

inline ordered_json report_json(const ValidityReport& r) {
  ordered_json j;
  j["valid"] = r.valid;
  if (r.valid) return j;
  j["step"] = r.step;
  j["rule"] = std::string(rule_name(r.rule));
  if (r.node) j["node"] = *r.node;
  if (r.edge) j["edge"] = edge_json(*r.edge);
  if (!r.cycle.empty()) j["cycle"] = edges_json(r.cycle);
  if (!r.component.empty()) j["component"] = r.component;
  return j;
}

inline ordered_json output_json(const NodeDecision& d) { return decision_json(d); }

inline ordered_json output_json(const PeelOutput& p) {
  ordered_json j;
  j["iteration"] = p.iteration;
  j["out"] = p.out;
  return j;
}

inline ordered_json output_json(const TwoSimOutput& o) {
  ordered_json j = decision_json(o.decision);
  j["iteration_t1"] = o.iteration_t1;
  j["iteration_t2"] = o.iteration_t2;
  return j;
}

/// One {"round","msgs","max_bits"} record per round, then a final record
/// with the round count and every node's output.
template <typename Output>
void write_trace_jsonl(std::ostream& out, const SimTrace<Output>& trace) {
  for (const RoundRecord& r : trace.per_round) {
    ordered_json j;
    j["round"] = r.round;
    j["msgs"] = r.messages;
    j["max_bits"] = r.max_bits;
    out << j.dump() << '\n';
  }
  ordered_json outputs = ordered_json::array();
  for (const Output& o : trace.outputs) outputs.push_back(output_json(o));
  ordered_json last;
  last["rounds"] = trace.rounds;
  last["outputs"] = std::move(outputs);
  out << last.dump() << '\n';
}

template <typename Output>
std::string format_trace_jsonl(const SimTrace<Output>& trace) {
  std::ostringstream out;
  write_trace_jsonl(out, trace);
  return out.str();
}

}  // namespace streconf
