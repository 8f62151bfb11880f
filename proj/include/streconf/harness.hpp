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

// Library side of the command-line harness: algorithm dispatch with
// self-validation, and the round/message benchmark.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "streconf/generators.hpp"
#include "streconf/graph.hpp"
#include "streconf/io_json.hpp"
#include "streconf/reconfig.hpp"
#include "streconf/rooted.hpp"
#include "streconf/sim.hpp"
#include "streconf/two_sim.hpp"

namespace streconf {

enum class Algorithm { kRooted, kTwoSim };

inline std::string_view algorithm_name(Algorithm a) {
  return a == Algorithm::kRooted ? "rooted" : "two-sim";
}

struct ReconfigureResult {
  Schedule schedule;
  std::string trace_jsonl;
  std::size_t rounds = 0;
  std::size_t iterations = 0;  // peeling iterations; 0 for the rooted protocol
  std::size_t max_bits = 0;
  ValidityReport report;
};

/// Runs the chosen protocol and checks its schedule with the oracle. The
/// rooted protocol roots t1 at node 0 and t2 at node n - 1.
inline ReconfigureResult reconfigure(const Graph& g, const EdgeSubset& t1,
                                     const EdgeSubset& t2, Algorithm algo,
                                     const RunOptions& options = {}) {
  ReconfigureResult r;
  if (algo == Algorithm::kRooted) {
    auto rooted1 = root_tree_centralized(t1, 0);
    auto rooted2 = root_tree_centralized(t2, static_cast<NodeId>(g.size() - 1));
    auto out = rooted_reconfigure(g, rooted1, rooted2, options);
    r.schedule = std::move(out.schedule);
    r.rounds = out.trace.rounds;
    r.max_bits = out.trace.max_bits();
    r.trace_jsonl = format_trace_jsonl(out.trace);
  } else {
    auto out = two_sim_reconfigure(g, t1, t2, options);
    r.schedule = std::move(out.schedule);
    r.rounds = out.trace.rounds;
    r.iterations = out.iterations();
    r.max_bits = out.trace.max_bits();
    r.trace_jsonl = format_trace_jsonl(out.trace);
  }
  r.report = validate_schedule(g, t1, t2, r.schedule);
  return r;
}

struct BenchRow {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::kTwoSim;
  std::size_t rounds = 0;
  std::size_t iterations = 0;
  std::size_t max_bits = 0;
  bool valid = false;
};

/// Every n = n_min, 2 n_min, 4 n_min, ... up to n_max, with seeds
/// 0 .. seeds - 1 each, on random spanning-tree pairs.
inline std::vector<BenchRow> bench(std::size_t n_min, std::size_t n_max,
                                   std::size_t seeds, Algorithm algo,
                                   const RunOptions& options = {}) {
  if (n_min < 1 || n_max < n_min) {
    throw std::invalid_argument("need 1 <= n-min <= n-max");
  }
  std::vector<BenchRow> rows;
  for (std::size_t n = n_min; n <= n_max; n *= 2) {
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
      auto inst = random_spanning_tree_pair(n, 0, seed);
      auto res = reconfigure(inst.g, inst.t1, inst.t2, algo, options);
      rows.push_back({n, seed, algo, res.rounds, res.iterations, res.max_bits,
                      res.report.valid});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.n, a.seed) < std::tie(b.n, b.seed);
  });
  return rows;
}

inline std::string format_bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,seed,algorithm,rounds,iterations,max_bits,valid\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.seed << ',' << algorithm_name(r.algorithm) << ','
        << r.rounds << ',' << r.iterations << ',' << r.max_bits << ','
        << (r.valid ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace streconf
