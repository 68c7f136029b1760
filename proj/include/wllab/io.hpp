//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wllab/graph.hpp"
#include "wllab/verify.hpp"

namespace wllab {

/// JSON graph file:
///   {"n": int, "m": int, "features": [[num, ...], ...],
///    "edges": [[i, j], ...], "labels": [str, ...]}   (labels optional)
struct GraphDocument {
  FeaturedGraph graph;
  std::optional<std::vector<std::string>> labels;
};

/// Throws InputError on malformed JSON or an invalid graph.
GraphDocument parse_graph_document(std::string_view text);

/// Reads and parses a file; unreadable files raise InputError.
GraphDocument read_graph_document(const std::filesystem::path &path);

/// Canonical form: fixed key order, edges sorted, shortest round-trip
/// numbers. Throws InputError for non-finite features or a label count that
/// does not match the graph.
std::string serialize_graph_document(const GraphDocument &doc);

void write_graph_document(const std::filesystem::path &path,
                          const GraphDocument &doc);

/// Shortest decimal that parses back to the same double; -0.0 keeps its sign.
std::string format_number(double value);

/// Undirected DOT graph. Vertices with equal feature vectors share a fill
/// color; the label defaults to the vertex index.
std::string to_dot(const GraphDocument &doc);

/// Pretty-printed JSON for a verification report.
std::string report_to_json(const VerificationReport &report);

}  // namespace wllab
