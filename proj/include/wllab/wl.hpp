//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wllab/canonical.hpp"
#include "wllab/graph.hpp"
#include "wllab/limits.hpp"

namespace wllab {

enum class WlVariant {
  kClassic,       ///< neighbor-multiset refinement
  kKHop,          ///< (color, distance) multiset over the k-hop neighborhood
  kKHopSubgraph,  ///< canonical code of the colored k-hop rooted subgraph
};

std::string_view to_string(WlVariant variant);

/// Parses "classic", "khop", or "subgraph". Throws InputError otherwise.
WlVariant parse_variant(std::string_view name);

/// Vertex colors after one refinement iteration.
struct Coloring {
  std::size_t iteration = 0;
  std::vector<ColorId> colors;
  std::uint64_t interner_tag = 0;
};

/// Full refinement history up to the stable partition. The last entry is
/// iteration stabilized_at + 1, whose partition repeats the previous one.
struct WlRun {
  WlVariant variant = WlVariant::kClassic;
  int k = 1;
  std::vector<Coloring> history;
  /// First iteration whose partition equals the next iteration's.
  std::size_t stabilized_at = 0;

  /// Colors at iteration stabilized_at + 1. These, not the colors at
  /// stabilized_at, are what cross-graph comparisons use.
  const Coloring &final_coloring() const { return history.back(); }
  std::size_t size() const { return history.front().colors.size(); }

  /// Sorted final colors.
  std::vector<ColorId> final_multiset() const;
};

WlRun classic_wl(const FeaturedGraph &g, ColorInterner &shared);

/// Throws InputError for k < 1.
WlRun khop_wl(const FeaturedGraph &g, int k, ColorInterner &shared);

/// Throws InputError for k < 1 and CapacityError when a k-hop subgraph is too
/// large to canonicalize.
WlRun khop_subgraph_wl(const FeaturedGraph &g, int k, ColorInterner &shared,
                       const Limits &limits = Limits::current());

/// Dispatches on `variant`; k is ignored for kClassic.
WlRun run_wl(const FeaturedGraph &g, WlVariant variant, int k,
             ColorInterner &shared, const Limits &limits = Limits::current());

/// Equal final color multisets. Throws InputError when the runs come from
/// different interners or different variants/k. Runs on graphs of different
/// sizes are always distinguishable.
bool indistinguishable(const WlRun &a, const WlRun &b);

/// Equal final colors position by position.
bool vertexwise_indistinguishable(const WlRun &a, const WlRun &b);

/// Relabels colors by order of first occurrence, so two colorings induce the
/// same partition iff their normalized forms are equal.
std::vector<int> normalized_partition(std::span<const ColorId> colors);

/// True iff every class of `finer` lies inside a class of `coarser`.
bool refines(std::span<const ColorId> finer, std::span<const ColorId> coarser);

}  // namespace wllab
