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

// streconf: command-line front end for instance generation, protocol
// execution, schedule validation, gadget construction and benchmarking.
//
// Exit codes: 0 success / valid, 1 invalid result, 2 usage or input error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "streconf/generators.hpp"
#include "streconf/graph.hpp"
#include "streconf/graph_io.hpp"
#include "streconf/harness.hpp"
#include "streconf/io_json.hpp"
#include "streconf/lowerbound.hpp"
#include "streconf/orient.hpp"
#include "streconf/reconfig.hpp"

namespace fs = std::filesystem;
using namespace streconf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw InputError("cannot write " + path.string());
}

Graph load_graph(const std::string& path) {
  auto in = open_in(path);
  try {
    return read_graph(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

EdgeSubset load_subset(const std::string& path, std::size_t n) {
  auto in = open_in(path);
  try {
    return read_edge_subset(in, n);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string graph_text(const Graph& g, std::string_view comment = {}) {
  std::ostringstream out;
  write_graph(out, g, comment);
  return out.str();
}

std::string subset_text(const EdgeSubset& s) {
  std::ostringstream out;
  write_edge_subset(out, s);
  return out.str();
}

void require_tree_of(const Graph& g, const EdgeSubset& t, const std::string& what) {
  bool ok = false;
  try {
    ok = validate_spanning_tree(g, t);
  } catch (const EdgeNotInGraphError& e) {
    throw InputError(what + ": " + e.what());
  }
  if (!ok) throw InputError(what + " is not a spanning tree of the graph");
}

struct Flags {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> k;
  Mode mode = Mode::kCongest;
  Algorithm algo = Algorithm::kTwoSim;
  std::string in_graph;
  std::string in_t1;
  std::string in_t2;
  std::string in_schedule;
  std::string out;
  std::size_t n_min = 16;
  std::size_t n_max = 16384;
  std::size_t seeds = 1;
};

const std::map<std::string, Mode> kModes{{"local", Mode::kLocal},
                                         {"congest", Mode::kCongest}};
const std::map<std::string, Algorithm> kAlgos{{"rooted", Algorithm::kRooted},
                                              {"two-sim", Algorithm::kTwoSim}};

int cmd_gen(const Flags& f) {
  auto inst = random_spanning_tree_pair(f.n, 0, f.seed);
  fs::path dir = f.out.empty() ? fs::path(".") : fs::path(f.out);
  write_file(dir / "graph.txt", graph_text(inst.g));
  write_file(dir / "t1.txt", subset_text(inst.t1));
  write_file(dir / "t2.txt", subset_text(inst.t2));
  return kExitOk;
}

int cmd_orient(const Flags& f) {
  Graph g = load_graph(f.in_graph);
  EdgeSubset t = load_subset(f.in_t1, g.size());
  require_tree_of(g, t, f.in_t1);
  auto res = orient_distributed(g, t, RunOptions{f.mode, std::nullopt, std::nullopt});
  std::string json = orientation_json(res.orientation).dump() + "\n";
  if (f.out.empty()) {
    std::cout << json;
  } else {
    write_file(fs::path(f.out) / "orientation.json", json);
    write_file(fs::path(f.out) / "trace.jsonl", format_trace_jsonl(res.trace));
  }
  return kExitOk;
}

int cmd_reconfigure(const Flags& f) {
  Graph g = load_graph(f.in_graph);
  EdgeSubset t1 = load_subset(f.in_t1, g.size());
  EdgeSubset t2 = load_subset(f.in_t2, g.size());
  require_tree_of(g, t1, f.in_t1);
  require_tree_of(g, t2, f.in_t2);
  auto res = reconfigure(g, t1, t2, f.algo, RunOptions{f.mode, std::nullopt, std::nullopt});
  std::string sched = format_schedule(res.schedule);
  if (f.out.empty()) {
    std::cout << sched;
  } else {
    write_file(fs::path(f.out) / "schedule.json", sched);
    write_file(fs::path(f.out) / "trace.jsonl", res.trace_jsonl);
  }
  if (!res.report) {
    std::cerr << "self-validation failed: " << res.report.describe() << '\n';
    return kExitInvalid;
  }
  std::cerr << algorithm_name(f.algo) << ": " << res.rounds << " rounds, "
            << res.schedule.steps.front().decisions.size() << " deciding nodes\n";
  return kExitOk;
}

int cmd_validate(const Flags& f) {
  Graph g = load_graph(f.in_graph);
  EdgeSubset t1 = load_subset(f.in_t1, g.size());
  EdgeSubset t2 = load_subset(f.in_t2, g.size());
  require_tree_of(g, t1, f.in_t1);
  require_tree_of(g, t2, f.in_t2);
  auto in = open_in(f.in_schedule);
  Schedule sched;
  try {
    sched = parse_schedule(in);
  } catch (const FormatError& e) {
    throw InputError(f.in_schedule + ": " + e.what());
  }
  if (f.k) sched.k = *f.k;
  ValidityReport report = validate_schedule(g, t1, t2, sched);
  std::cout << report_json(report).dump() << '\n';
  return report ? kExitOk : kExitInvalid;
}

int cmd_gadget(const Flags& f) {
  Graph tree = f.in_graph.empty() ? random_tree(f.n, f.seed) : load_graph(f.in_graph);
  if (!is_spanning_tree(tree.size(), tree.edges())) {
    throw InputError("gadget input is not a tree");
  }
  GadgetInstance inst = build_gadget(tree);
  const std::size_t n = inst.base_size();
  std::string comment = "gadget over a base tree on " + std::to_string(n) +
                        " nodes\ncopy of node v is node v + " + std::to_string(n);
  fs::path dir = f.out.empty() ? fs::path(".") : fs::path(f.out);
  write_file(dir / "graph.txt", graph_text(inst.graph, comment));
  write_file(dir / "t1.txt", subset_text(inst.t1));
  write_file(dir / "t2.txt", subset_text(inst.t2));
  return kExitOk;
}

int cmd_bench(const Flags& f) {
  auto rows = bench(f.n_min, f.n_max, f.seeds, f.algo,
                    RunOptions{f.mode, std::nullopt, std::nullopt});
  std::string csv = format_bench_csv(rows);
  if (f.out.empty()) {
    std::cout << csv;
  } else {
    write_file(f.out, csv);
  }
  bool all_valid = std::all_of(rows.begin(), rows.end(),
                               [](const BenchRow& r) { return r.valid; });
  return all_valid ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed spanning-tree reconfiguration simulator"};
  app.require_subcommand(1);
  Flags f;

  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", f.mode, "Message model")
        ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  };
  auto add_algo = [&](CLI::App* sub) {
    sub->add_option("--algo", f.algo, "Protocol")
        ->transform(CLI::CheckedTransformer(kAlgos, CLI::ignore_case));
  };

  auto* gen = app.add_subcommand("gen", "Generate a random spanning-tree pair");
  gen->add_option("--n", f.n, "Node count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", f.seed, "Random seed");
  gen->add_option("--out", f.out, "Output directory");

  auto* orient_cmd = app.add_subcommand("orient", "Peel-orient a tree");
  orient_cmd->add_option("--in-graph", f.in_graph)->required();
  orient_cmd->add_option("--in-t1", f.in_t1, "Tree to orient")->required();
  orient_cmd->add_option("--out", f.out, "Output directory");
  add_mode(orient_cmd);

  auto* rec = app.add_subcommand("reconfigure", "Compute a one-step schedule");
  rec->add_option("--in-graph", f.in_graph)->required();
  rec->add_option("--in-t1", f.in_t1)->required();
  rec->add_option("--in-t2", f.in_t2)->required();
  rec->add_option("--out", f.out, "Output directory");
  add_mode(rec);
  add_algo(rec);

  auto* val = app.add_subcommand("validate", "Check a schedule with the oracle");
  val->add_option("--in-graph", f.in_graph)->required();
  val->add_option("--in-t1", f.in_t1)->required();
  val->add_option("--in-t2", f.in_t2)->required();
  val->add_option("--in-schedule", f.in_schedule)->required();
  val->add_option("--k", f.k, "Override the schedule's budget");

  auto* gadget = app.add_subcommand("gadget", "Build the rooting reduction gadget");
  auto* gadget_in = gadget->add_option("--in-graph", f.in_graph, "Base tree");
  gadget->add_option("--n", f.n, "Random base tree size")
      ->check(CLI::PositiveNumber)
      ->excludes(gadget_in);
  gadget->add_option("--seed", f.seed, "Random seed");
  gadget->add_option("--out", f.out, "Output directory");

  auto* bench_cmd = app.add_subcommand("bench", "Rounds and message sizes across n");
  bench_cmd->add_option("--n-min", f.n_min)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--n-max", f.n_max)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seeds", f.seeds, "Seeds per n");
  bench_cmd->add_option("--out", f.out, "CSV output file");
  add_mode(bench_cmd);
  add_algo(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(f);
    if (*orient_cmd) return cmd_orient(f);
    if (*rec) return cmd_reconfigure(f);
    if (*val) return cmd_validate(f);
    if (*gadget) {
      if (f.in_graph.empty() && f.n == 0) {
        std::cerr << "gadget: pass --in-graph or --n\n";
        return kExitUsage;
      }
      return cmd_gadget(f);
    }
    if (*bench_cmd) {
      if (f.n_max < f.n_min) {
        std::cerr << "bench: --n-max must be >= --n-min\n";
        return kExitUsage;
      }
      return cmd_bench(f);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
