//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wllab/graph.hpp"

namespace wllab {

/// map[i] is the image of vertex i.
using VertexMap = std::vector<Vertex>;

/// Backtracking isomorphism search. Shares no code with canonical coding so
/// the two can check each other. Returns a feature- and edge-preserving
/// bijection, or nullopt.
std::optional<VertexMap> are_isomorphic(const FeaturedGraph &a,
                                        const FeaturedGraph &b);

/// Same for rooted colored graphs; the root is pinned to the root.
std::optional<VertexMap> are_rooted_isomorphic(const RootedColoredGraph &a,
                                               const RootedColoredGraph &b);

/// True iff `map` is a bijection preserving features pointwise and edges in
/// both directions.
bool is_isomorphism(const FeaturedGraph &a, const FeaturedGraph &b,
                    std::span<const Vertex> map);

bool is_rooted_isomorphism(const RootedColoredGraph &a,
                           const RootedColoredGraph &b,
                           std::span<const Vertex> map);

}  // namespace wllab
