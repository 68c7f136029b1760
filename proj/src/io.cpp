//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "wllab/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "wllab/error.hpp"

namespace wllab {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

int require_int(const json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(std::string("graph document lacks \"") + key + "\"");
  if (!it->is_number_integer())
    throw InputError(std::string("\"") + key + "\" must be an integer");
  auto v = it->get<long long>();
  if (v < 0 || v > 1'000'000)
    throw InputError(std::string("\"") + key + "\" out of range");
  return static_cast<int>(v);
}

const json &require_array(const json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_array())
    throw InputError(std::string("\"") + key + "\" must be an array");
  return *it;
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object())
    throw InputError("graph document must be a JSON object");

  const int n = require_int(j, "n");
  const int m = require_int(j, "m");
  const auto &jf = require_array(j, "features");
  if (static_cast<int>(jf.size()) != n)
    throw InputError("\"features\" must have n entries");
  std::vector<std::vector<double>> features;
  for (const auto &row : jf) {
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      throw InputError("every feature vector must have m entries");
    auto &out = features.emplace_back();
    for (const auto &x : row) {
      if (!x.is_number())
        throw InputError("features must be numbers");
      out.push_back(x.get<double>());
    }
  }

  std::vector<Edge> edges;
  for (const auto &e : require_array(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer()
        || !e[1].is_number_integer())
      throw InputError("every edge must be a pair of integers");
    auto u = e[0].get<long long>(), v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge endpoint out of range");
    edges.push_back({ static_cast<Vertex>(u), static_cast<Vertex>(v) });
  }

  std::optional<std::vector<std::string>> labels;
  if (auto it = j.find("labels"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || static_cast<int>(it->size()) != n)
      throw InputError("\"labels\" must have n entries");
    labels.emplace();
    for (const auto &s : *it) {
      if (!s.is_string())
        throw InputError("labels must be strings");
      labels->push_back(s.get<std::string>());
    }
  }
  return { FeaturedGraph(n, std::move(edges), std::move(features)),
           std::move(labels) };
}

GraphDocument read_graph_document(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph_document(buf.str());
  } catch (const InputError &e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_number(double value) {
  if (!std::isfinite(value))
    throw InputError("features must be finite");
  if (value == 0.0)
    return std::signbit(value) ? "-0.0" : "0";
  std::array<char, 32> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

std::string serialize_graph_document(const GraphDocument &doc) {
  const auto &g = doc.graph;
  if (doc.labels && static_cast<int>(doc.labels->size()) != g.size())
    throw InputError("label count does not match the graph");
  std::string out = "{\n  \"n\": " + std::to_string(g.size())
                    + ",\n  \"m\": " + std::to_string(g.feature_dim())
                    + ",\n  \"features\": [";
  for (Vertex v = 0; v < g.size(); ++v) {
    out += v == 0 ? "[" : ", [";
    bool first = true;
    for (double x : g.features(v)) {
      if (!first)
        out += ", ";
      out += format_number(x);
      first = false;
    }
    out += "]";
  }
  out += "],\n  \"edges\": [";
  bool first = true;
  for (const auto &e : g.edges()) {
    if (!first)
      out += ", ";
    out += "[" + std::to_string(e.u) + ", " + std::to_string(e.v) + "]";
    first = false;
  }
  out += "]";
  if (doc.labels) {
    out += ",\n  \"labels\": [";
    for (std::size_t i = 0; i < doc.labels->size(); ++i) {
      if (i)
        out += ", ";
      out += json((*doc.labels)[i]).dump();
    }
    out += "]";
  }
  out += "\n}\n";
  return out;
}

void write_graph_document(const std::filesystem::path &path,
                          const GraphDocument &doc) {
  auto text = serialize_graph_document(doc);
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw InputError("cannot write " + path.string());
}

std::string to_dot(const GraphDocument &doc) {
  static constexpr std::array<const char *, 10> kPalette {
    "lightblue", "tomato", "palegreen", "gray30", "gold",
    "mediumpurple", "gray75", "orange", "cyan", "pink",
  };
  const auto &g = doc.graph;
  std::map<std::string, std::size_t> classes;
  for (Vertex v = 0; v < g.size(); ++v)
    classes.try_emplace(g.feature_key(v), 0);
  std::size_t next = 0;
  for (auto &[key, id] : classes)
    id = next++;

  std::string out = "graph G {\n  node [style=filled];\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    std::string label = doc.labels ? (*doc.labels)[v] : std::to_string(v);
    std::size_t cls = classes.at(g.feature_key(v));
    out += "  " + std::to_string(v) + " [label=" + json(label).dump()
           + ", fillcolor=\"" + kPalette[cls % kPalette.size()]
           + "\", class=\"" + std::to_string(cls) + "\"];\n";
  }
  for (const auto &e : g.edges())
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

namespace {

ordered_json graph_json(const FeaturedGraph &g) {
  return ordered_json::parse(serialize_graph_document({ g, std::nullopt }));
}

}  // namespace

std::string report_to_json(const VerificationReport &r) {
  ordered_json j;
  j["theorem"] = r.theorem;
  j["status"] = r.status();
  ordered_json params;
  params["k"] = r.k;
  params["n_max"] = r.n_max;
  params["feature_classes"] = r.feature_classes;
  if (r.cycle_bound == std::numeric_limits<int>::max())
    params["cycle_bound"] = nullptr;
  else
    params["cycle_bound"] = r.cycle_bound;
  params["explore"] = r.explore;
  params["seed"] = r.seed;
  j["params"] = params;

  ordered_json counts;
  counts["graphs_enumerated"] = r.graphs_enumerated;
  counts["graphs_admitted"] = r.graphs_admitted;
  counts["graphs_filtered"] = r.graphs_filtered;
  counts["buckets"] = r.buckets;
  counts["pairs_checked"] = r.pairs_checked;
  counts["self_pairs_checked"] = r.self_pairs_checked;
  counts["constructions_verified"] = r.constructions_verified;
  counts["constructions_skipped"] = r.constructions_skipped;
  counts["samples_checked"] = r.samples_checked;
  j["counts"] = counts;

  // Sorted so the output does not depend on traversal order.
  auto violations = r.violations;
  std::sort(violations.begin(), violations.end(),
            [](const Violation &a, const Violation &b) {
              return std::tie(a.kind, a.graph_a, a.graph_b, a.detail)
                     < std::tie(b.kind, b.graph_a, b.graph_b, b.detail);
            });
  j["violations"] = ordered_json::array();
  for (const auto &v : violations) {
    ordered_json jv;
    jv["kind"] = v.kind;
    jv["graph_a"] = v.graph_a;
    jv["graph_b"] = v.graph_b;
    jv["wl_verdict"] = v.wl_verdict;
    jv["oracle_verdict"] = v.oracle_verdict;
    jv["witness"] = v.witness;
    jv["detail"] = v.detail;
    if (v.a)
      jv["a"] = graph_json(*v.a);
    if (v.b)
      jv["b"] = graph_json(*v.b);
    j["violations"].push_back(std::move(jv));
  }
  j["filtered"] = ordered_json::array();
  for (const auto &f : r.filtered)
    j["filtered"].push_back({ { "graph", f.graph },
                              { "hypothesis", f.hypothesis } });
  j["findings"] = r.findings;
  j["elapsed_seconds"] = r.elapsed.count();
  return j.dump(2) + "\n";
}

}  // namespace wllab
