//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "wllab/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "wllab/error.hpp"
#include "wllab/io.hpp"
#include "wllab/structure.hpp"
#include "wllab/synth.hpp"
#include "wllab/verify.hpp"
#include "wllab/wl.hpp"

namespace wllab {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

struct WlArgs {
  std::string variant = "classic";
  int k = 1;
  std::vector<std::string> graphs;
  bool vertexwise = false;
};

struct CheckArgs {
  std::string what;
  int k = 1;
  std::optional<int> bound;
  std::string graph;
};

struct VerifyArgs {
  std::string theorem;
  int k = 2;
  int n_max = 7;
  int classes = 1;
  bool explore = false;
  std::size_t pairs = 10000;
  std::string out;
};

struct StatsArgs {
  std::string corpus;
  std::string out;
};

struct FixtureArgs {
  std::string name;
  std::string out = ".";
};

struct DotArgs {
  std::string graph;
  std::string out;
};

void emit(std::ostream &out, const std::string &path, const std::string &text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text))
    throw InputError("cannot write " + path);
}

ordered_json vertices(const std::vector<Vertex> &vs) {
  return ordered_json(vs);
}

int cmd_wl(const WlArgs &a, std::ostream &out) {
  if (a.graphs.empty() || a.graphs.size() > 2)
    throw InputError("--graphs takes one or two files");
  const auto variant = parse_variant(a.variant);
  ColorInterner interner;
  std::vector<WlRun> runs;
  for (const auto &path : a.graphs)
    runs.push_back(
        run_wl(read_graph_document(path).graph, variant, a.k, interner));

  ordered_json j;
  j["variant"] = to_string(variant);
  j["k"] = a.k;
  if (runs.size() == 1) {
    const auto &run = runs[0];
    j["n"] = run.size();
    j["stabilized_at"] = run.stabilized_at;
    j["history"] = ordered_json::array();
    for (const auto &c : run.history)
      j["history"].push_back(
          { { "iteration", c.iteration }, { "colors", c.colors } });
    j["classes"] = normalized_partition(run.final_coloring().colors);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  const bool same = indistinguishable(runs[0], runs[1]);
  const bool same_vertexwise = vertexwise_indistinguishable(runs[0], runs[1]);
  const bool verdict = a.vertexwise ? same_vertexwise : same;
  j["indistinguishable"] = same;
  j["vertexwise_indistinguishable"] = same_vertexwise;
  j["stabilized_at"] = { runs[0].stabilized_at, runs[1].stabilized_at };
  j["verdict"] = verdict ? "indistinguishable" : "distinguishable";
  out << j.dump(2) << "\n";
  return verdict ? kExitOk : kExitNegative;
}

int cmd_check(const CheckArgs &a, std::ostream &out) {
  const auto g = read_graph_document(a.graph).graph;
  ordered_json j;
  j["what"] = a.what;
  bool result = false;
  if (a.what == "connected") {
    result = is_connected(g);
  } else if (a.what == "cycles") {
    auto rep = a.bound ? check_cycle_bound(g, *a.bound) : circumference(g);
    result = rep.satisfied;
    j["circumference"] = rep.circumference;
    j["exact"] = rep.exact;
    if (rep.bound)
      j["bound"] = *rep.bound;
    else
      j["bound"] = nullptr;
    j["witness_cycle"] = rep.witness_cycle ? vertices(*rep.witness_cycle)
                                           : ordered_json(nullptr);
  } else if (a.what == "k-separable" || a.what == "k-strongly-separable") {
    if (a.k < 1)
      throw InputError("--k must be at least 1");
    auto rep = a.what == "k-separable" ? is_k_separable(g, a.k)
                                       : is_k_strongly_separable(g, a.k);
    result = rep.separable;
    j["k"] = a.k;
    j["witness"] = rep.separable ? ordered_json(nullptr)
                                 : vertices(rep.witness);
  } else {
    throw InputError("unknown check '" + a.what + "'");
  }
  j["result"] = result;
  out << j.dump(2) << "\n";
  return result ? kExitOk : kExitNegative;
}

int cmd_verify(const VerifyArgs &a, std::uint64_t seed, std::ostream &out) {
  VerifyOptions opt;
  opt.seed = seed;
  opt.explore = a.explore;
  VerificationReport r;
  if (a.theorem == "t32")
    r = verify_theorem_1hop(a.n_max, a.classes, opt);
  else if (a.theorem == "t35")
    r = verify_theorem_khop_subgraph(a.k, a.n_max, a.classes, opt);
  else if (a.theorem == "t38")
    r = verify_theorem_khop(a.k, a.n_max, a.classes, opt);
  else if (a.theorem == "lemma-c1")
    r = verify_lemma_c1(a.k, a.n_max, opt);
  else if (a.theorem == "hierarchy")
    r = verify_hierarchy(a.n_max, a.classes, opt);
  else if (a.theorem == "fixtures")
    r = verify_fixtures(opt);
  else if (a.theorem == "soundness")
    r = verify_soundness(a.pairs, a.n_max, opt);
  else
    throw InputError("unknown theorem '" + a.theorem + "'");
  emit(out, a.out, report_to_json(r));
  return r.passed() ? kExitOk : kExitNegative;
}

int cmd_stats(const StatsArgs &a, std::ostream &out, std::ostream &err) {
  if (!fs::is_directory(a.corpus))
    throw InputError("not a directory: " + a.corpus);
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(a.corpus))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::map<int, std::size_t> histogram;
  ordered_json errors = ordered_json::array();
  int status = kExitOk;
  for (const auto &path : files) {
    try {
      auto g = read_graph_document(path).graph;
      ++histogram[circumference(g).circumference];
    } catch (const CapacityError &e) {
      errors.push_back({ { "file", path.filename().string() },
                         { "error", e.what() } });
      status = std::max(status, int(kExitCapacity));
    } catch (const InputError &e) {
      errors.push_back({ { "file", path.filename().string() },
                         { "error", e.what() } });
      status = status == kExitOk ? kExitInput : status;
    }
  }
  if (files.empty())
    err << "warning: no .json graph files in " << a.corpus << "\n";

  ordered_json hist = ordered_json::object();
  for (auto [c, count] : histogram)
    hist[std::to_string(c)] = count;
  ordered_json j;
  j["histogram"] = hist;
  j["graphs"] = files.size() - errors.size();
  j["errors"] = errors;
  emit(out, a.out, j.dump(2) + "\n");
  return status;
}

int cmd_fixtures(const FixtureArgs &a, std::ostream &out) {
  auto fx = fixture(a.name);
  fs::create_directories(a.out);
  for (std::size_t i = 0; i < fx.graphs.size(); ++i) {
    auto path = fs::path(a.out) / (fx.name + "_" + std::to_string(i) + ".json");
    write_graph_document(path, { fx.graphs[i].graph, fx.graphs[i].labels });
    out << path.string() << "\n";
  }
  return kExitOk;
}

int cmd_export_dot(const DotArgs &a, std::ostream &out) {
  emit(out, a.out, to_dot(read_graph_document(a.graph)));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app { "Weisfeiler-Lehman variants, structural checks, and "
                 "isomorphism verification on small graphs",
                 "wllab" };
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for randomized steps")->capture_default_str();

  WlArgs wl;
  auto *wl_cmd = app.add_subcommand("wl", "Run a WL variant on one or two graphs");
  wl_cmd->add_option("--variant", wl.variant, "classic, khop, or subgraph")
      ->check(CLI::IsMember({ "classic", "khop", "subgraph" }))
      ->capture_default_str();
  wl_cmd->add_option("--k", wl.k, "Neighborhood radius")->capture_default_str();
  wl_cmd->add_option("--graphs", wl.graphs, "Graph files")->required();
  wl_cmd->add_flag("--vertexwise", wl.vertexwise,
                   "Compare colors position by position");

  CheckArgs check;
  auto *check_cmd = app.add_subcommand("check", "Check a structural predicate");
  check_cmd->add_option("--what", check.what)
      ->required()
      ->check(CLI::IsMember(
          { "connected", "cycles", "k-separable", "k-strongly-separable" }));
  check_cmd->add_option("--k", check.k)->capture_default_str();
  check_cmd->add_option("--bound", check.bound, "Cycle length bound");
  check_cmd->add_option("--graph", check.graph)->required();

  VerifyArgs verify;
  auto *verify_cmd = app.add_subcommand("verify", "Run a verification harness");
  verify_cmd->add_option("--theorem", verify.theorem)
      ->required()
      ->check(CLI::IsMember({ "t32", "t35", "t38", "lemma-c1", "hierarchy",
                              "fixtures", "soundness" }));
  verify_cmd->add_option("--k", verify.k)->capture_default_str();
  verify_cmd->add_option("--n-max", verify.n_max)->capture_default_str();
  verify_cmd->add_option("--classes", verify.classes)->capture_default_str();
  verify_cmd->add_option("--pairs", verify.pairs,
                         "Relabeled pairs for the soundness run")
      ->capture_default_str();
  verify_cmd->add_flag("--explore", verify.explore,
                       "Drop the separability filter and report findings");
  verify_cmd->add_option("--out", verify.out, "Write the report here");

  StatsArgs stats;
  auto *stats_cmd =
      app.add_subcommand("stats", "Longest-cycle histogram over a directory");
  stats_cmd->add_option("--corpus", stats.corpus)->required();
  stats_cmd->add_option("--out", stats.out);

  FixtureArgs fixtures;
  auto *fixtures_cmd =
      app.add_subcommand("fixtures", "Write a built-in graph pair as files");
  fixtures_cmd->add_option("--name", fixtures.name)->required();
  fixtures_cmd->add_option("--out", fixtures.out)->capture_default_str();

  DotArgs dot;
  auto *dot_cmd = app.add_subcommand("export-dot", "Convert a graph to DOT");
  dot_cmd->add_option("--graph", dot.graph)->required();
  dot_cmd->add_option("--out", dot.out);

  std::vector<std::string> storage { "wllab" };
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &s : storage)
    argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*wl_cmd)
      return cmd_wl(wl, out);
    if (*check_cmd)
      return cmd_check(check, out);
    if (*verify_cmd)
      return cmd_verify(verify, seed, out);
    if (*stats_cmd)
      return cmd_stats(stats, out, err);
    if (*fixtures_cmd)
      return cmd_fixtures(fixtures, out);
    if (*dot_cmd)
      return cmd_export_dot(dot, out);
  } catch (const CapacityError &e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const SamplingBudgetError &e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const fs::filesystem_error &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace wllab
