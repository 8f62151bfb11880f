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

// Synchronous message-passing executor.
//
// Round r consists of delivering every message produced during round r - 1
// (or by init, for r = 1) and then invoking the round function of every
// node that has not halted. A message is therefore never processed in the
// round that produced it. Inboxes are ordered by sender id, and delivery
// walks senders in id order, so traces do not depend on the order in which
// node round functions are evaluated.

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "streconf/graph.hpp"

namespace streconf {

enum class Mode { kLocal, kCongest };

inline constexpr std::size_t kTagBits = 8;
inline constexpr std::size_t kCongestIdentifierFields = 4;

/// ceil(log2(max(n, 2))): bits needed for one node identifier.
inline std::size_t identifier_bits(std::size_t n) {
  return static_cast<std::size_t>(std::bit_width(std::max<std::size_t>(n, 2) - 1));
}

/// Largest message allowed in CONGEST mode on an n-node network.
inline std::size_t congest_budget(std::size_t n) {
  return kCongestIdentifierFields * identifier_bits(n) + kTagBits;
}

inline std::size_t default_round_limit(Mode mode, std::size_t n) {
  return mode == Mode::kCongest ? 64 * (identifier_bits(n) + 1) : n + 8;
}

/// An operation tag plus identifier-sized fields. An edge occupies two
/// fields. The sender is stamped by the executor.
struct Message {
  NodeId sender = 0;
  std::uint8_t tag = 0;
  std::vector<NodeId> fields;

  std::size_t bits(std::size_t n) const {
    return fields.size() * identifier_bits(n) + kTagBits;
  }

  Edge edge_at(std::size_t i) const {
    return Edge::of(fields.at(i), fields.at(i + 1));
  }

  friend bool operator==(const Message&, const Message&) = default;
};

inline std::size_t message_bits(const Message& m, std::size_t n) {
  return m.bits(n);
}

class Outbox {
 public:
  void send(NodeId to, std::uint8_t tag, std::vector<NodeId> fields = {}) {
    envelopes_.push_back({to, Message{0, tag, std::move(fields)}});
  }

  void send_edge(NodeId to, std::uint8_t tag, Edge e) {
    send(to, tag, {e.u, e.v});
  }

  struct Envelope {
    NodeId to;
    Message message;
  };

  bool empty() const { return envelopes_.empty(); }
  const std::vector<Envelope>& pending() const { return envelopes_; }

  std::vector<Envelope> take() {
    std::vector<Envelope> out;
    out.swap(envelopes_);
    return out;
  }

 private:
  std::vector<Envelope> envelopes_;
};

/// What a node sees at start-up besides its program-specific input.
struct NodeContext {
  NodeId id;
  std::span<const NodeId> neighbors;
};

template <typename P>
concept NodeProgram =
    requires(const P& program, typename P::State& state,
             const typename P::State& cstate, const typename P::Input& input,
             const NodeContext& ctx, std::span<const Message> inbox,
             Outbox& out) {
      typename P::Output;
      { program.init(ctx, input, out) } -> std::same_as<typename P::State>;
      // Returns true when the node halts.
      { program.round(state, inbox, out) } -> std::same_as<bool>;
      { program.output(cstate) } -> std::convertible_to<typename P::Output>;
    };

struct RoundRecord {
  std::size_t round = 0;
  std::size_t messages = 0;
  std::size_t max_bits = 0;
  std::vector<NodeId> halted;  // nodes that halted during this round

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

template <typename Output>
struct SimTrace {
  std::size_t n = 0;
  std::size_t rounds = 0;
  std::vector<RoundRecord> per_round;
  std::vector<bool> halted;
  std::vector<Output> outputs;

  std::size_t max_bits() const {
    std::size_t b = 0;
    for (const auto& r : per_round) b = std::max(b, r.max_bits);
    return b;
  }

  std::size_t total_messages() const {
    std::size_t m = 0;
    for (const auto& r : per_round) m += r.messages;
    return m;
  }

  friend bool operator==(const SimTrace&, const SimTrace&) = default;
};

class SimError : public std::runtime_error {
 public:
  SimError(std::size_t round, const std::string& what)
      : std::runtime_error("round " + std::to_string(round) + ": " + what),
        round_(round) {}
  std::size_t round() const { return round_; }

 private:
  std::size_t round_;
};

class CongestViolation : public SimError {
 public:
  CongestViolation(std::size_t round, NodeId sender, NodeId receiver,
                   std::size_t bits, std::size_t budget)
      : SimError(round, "message from " + std::to_string(sender) + " to " +
                            std::to_string(receiver) + " has " +
                            std::to_string(bits) +
                            " bits, CONGEST budget is " +
                            std::to_string(budget)),
        sender_(sender),
        receiver_(receiver),
        bits_(bits),
        budget_(budget) {}
  NodeId sender() const { return sender_; }
  NodeId receiver() const { return receiver_; }
  std::size_t bits() const { return bits_; }
  std::size_t budget() const { return budget_; }

 private:
  NodeId sender_;
  NodeId receiver_;
  std::size_t bits_;
  std::size_t budget_;
};

/// A message addressed to a node that has already halted, or to a node that
/// is not a neighbor of the sender.
class DeliveryError : public SimError {
 public:
  DeliveryError(std::size_t round, NodeId sender, NodeId receiver,
                const std::string& why)
      : SimError(round, "cannot deliver message from " +
                            std::to_string(sender) + " to " +
                            std::to_string(receiver) + ": " + why),
        sender_(sender),
        receiver_(receiver) {}
  NodeId sender() const { return sender_; }
  NodeId receiver() const { return receiver_; }

 private:
  NodeId sender_;
  NodeId receiver_;
};

template <typename Output>
class NonTerminationError : public SimError {
 public:
  NonTerminationError(std::size_t limit, SimTrace<Output> partial)
      : SimError(limit, "round limit reached with " +
                            std::to_string(std::count(partial.halted.begin(),
                                                      partial.halted.end(),
                                                      false)) +
                            " nodes still running"),
        partial_(std::move(partial)) {}
  const SimTrace<Output>& partial_trace() const { return partial_; }

 private:
  SimTrace<Output> partial_;
};

struct RunOptions {
  Mode mode = Mode::kCongest;
  std::optional<std::size_t> round_limit;
  /// When set, node round functions are evaluated in a fresh pseudo-random
  /// order every round. Results must not change.
  std::optional<std::uint64_t> evaluation_seed;
};

template <NodeProgram P>
class Executor {
 public:
  using State = typename P::State;
  using Output = typename P::Output;

  Executor(const Graph& g, std::span<const typename P::Input> inputs,
           const P& program, const RunOptions& options)
      : g_(g), inputs_(inputs), program_(program), options_(options) {}

  SimTrace<Output> run() {
    const std::size_t n = g_.size();
    if (inputs_.size() != n) {
      throw std::invalid_argument("need exactly one input per node");
    }
    const std::size_t limit =
        options_.round_limit.value_or(default_round_limit(options_.mode, n));
    if (limit == 0) throw std::invalid_argument("round limit must be >= 1");

    std::vector<State> states;
    states.reserve(n);
    std::vector<Outbox> outboxes(n);
    for (NodeId v = 0; v < n; ++v) {
      states.push_back(program_.init(NodeContext{v, g_.neighbors(v)},
                                     inputs_[v], outboxes[v]));
    }

    SimTrace<Output> trace;
    trace.n = n;
    trace.halted.assign(n, false);
    std::size_t running = n;
    std::vector<std::vector<Message>> inboxes(n);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::mt19937_64 shuffle_rng(options_.evaluation_seed.value_or(0));

    auto finish = [&] {
      trace.outputs.clear();
      trace.outputs.reserve(n);
      for (const State& s : states) trace.outputs.push_back(program_.output(s));
    };

    for (std::size_t round = 1;; ++round) {
      if (running == 0) {
        // Anything still queued is addressed to a halted node.
        for (NodeId s = 0; s < n; ++s) {
          if (!outboxes[s].empty()) {
            throw DeliveryError(round, s, outboxes[s].pending().front().to,
                                "receiver has halted");
          }
        }
        break;
      }
      if (round > limit) {
        finish();
        throw NonTerminationError<Output>(limit, std::move(trace));
      }

      RoundRecord record;
      record.round = round;
      for (auto& inbox : inboxes) inbox.clear();
      for (NodeId s = 0; s < n; ++s) {
        for (auto& env : outboxes[s].take()) {
          if (env.to >= n || !g_.adjacent(s, env.to)) {
            throw DeliveryError(round, s, env.to, "not a neighbor");
          }
          if (trace.halted[env.to]) {
            throw DeliveryError(round, s, env.to, "receiver has halted");
          }
          env.message.sender = s;
          const std::size_t bits = env.message.bits(n);
          if (options_.mode == Mode::kCongest && bits > congest_budget(n)) {
            throw CongestViolation(round, s, env.to, bits, congest_budget(n));
          }
          record.messages += 1;
          record.max_bits = std::max(record.max_bits, bits);
          inboxes[env.to].push_back(std::move(env.message));
        }
      }

      if (options_.evaluation_seed) {
        std::shuffle(order.begin(), order.end(), shuffle_rng);
      }
      for (NodeId v : order) {
        if (trace.halted[v]) continue;
        if (program_.round(states[v], std::span<const Message>(inboxes[v]),
                           outboxes[v])) {
          trace.halted[v] = true;
          record.halted.push_back(v);
          --running;
        }
      }
      std::sort(record.halted.begin(), record.halted.end());
      trace.per_round.push_back(std::move(record));
      trace.rounds = round;
    }
    finish();
    return trace;
  }

 private:
  const Graph& g_;
  std::span<const typename P::Input> inputs_;
  const P& program_;
  RunOptions options_;
};

/// Runs program on every node of g until all nodes halt.
///
/// Throws CongestViolation if a message exceeds the CONGEST budget in
/// CONGEST mode, DeliveryError for messages to non-neighbors or halted
/// nodes, and NonTerminationError (carrying the partial trace) when the
/// round limit is exhausted.
template <NodeProgram P>
SimTrace<typename P::Output> run(const Graph& g,
                                 std::span<const typename P::Input> inputs,
                                 const P& program,
                                 const RunOptions& options = {}) {
  return Executor<P>(g, inputs, program, options).run();
}

}  // namespace streconf
