//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wllab/graph.hpp"
#include "wllab/limits.hpp"

namespace wllab {

/// A graph together with display labels for its vertices.
struct NamedGraph {
  FeaturedGraph graph;
  std::vector<std::string> labels;
};

struct FixtureSet {
  std::string name;
  std::vector<NamedGraph> graphs;
  std::string provenance;
};

/// Known names: "fig1_pair", "fig3_pair", "fig4_pair".
std::vector<std::string> fixture_names();

/// Throws InputError for an unknown name.
FixtureSet fixture(std::string_view name);

/// Cycle on n >= 3 vertices, uniform features.
FeaturedGraph cycle_graph(int n);

/// Path on n >= 1 vertices, uniform features.
FeaturedGraph path_graph(int n);

/// Vertices of b are shifted past those of a.
FeaturedGraph disjoint_union(const FeaturedGraph &a, const FeaturedGraph &b);

/// Two disjoint (2k+2)-cycles and one (4k+4)-cycle, uniform features.
std::pair<FeaturedGraph, FeaturedGraph> cycle_pair(int k);

inline constexpr int kNoCycleBound = std::numeric_limits<int>::max();

/// One representative per isomorphism class of connected graphs on exactly
/// n vertices with no cycle longer than max_circumference, each vertex
/// carrying a one-dimensional feature in {0, ..., feature_classes - 1}.
/// Deterministic order. Throws CapacityError above the enumeration limits.
std::vector<FeaturedGraph>
enumerate_connected(int n, int max_circumference, int feature_classes,
                    const Limits &limits = Limits::current());

/// Concatenation of enumerate_connected for n = 1 .. n_max.
std::vector<FeaturedGraph>
enumerate_connected_up_to(int n_max, int max_circumference,
                          int feature_classes,
                          const Limits &limits = Limits::current());

/// Rejection sampler: random spanning tree plus sparse extra edges, redrawn
/// until no cycle exceeds max_circumference. Deterministic under `seed`.
/// Throws SamplingBudgetError after `budget` rejected draws.
FeaturedGraph random_bounded_graph(int n, int max_circumference,
                                   int feature_classes, std::uint64_t seed,
                                   std::size_t budget = 100000,
                                   const Limits &limits = Limits::current());

/// Uniformly random permutation of 0..n-1.
template <class Rng>
std::vector<Vertex> random_permutation(int n, Rng &rng);

}  // namespace wllab

#include <algorithm>
#include <numeric>

namespace wllab {

template <class Rng>
std::vector<Vertex> random_permutation(int n, Rng &rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace wllab
