//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wllab/graph.hpp"
#include "wllab/limits.hpp"
#include "wllab/wl.hpp"

namespace wllab {

bool is_connected(const FeaturedGraph &g);

/// Longest simple cycle, optionally checked against an upper bound.
struct CycleBoundReport {
  /// Longest cycle length; 0 if acyclic. When the bound check exits early
  /// this is the witness length and `exact` is false.
  int circumference = 0;
  bool exact = true;
  /// nullopt means "no bound" (circumference mode).
  std::optional<int> bound;
  bool satisfied = true;
  /// A simple cycle longer than the bound, present iff !satisfied.
  std::optional<std::vector<Vertex>> witness_cycle;
};

/// Exact longest simple cycle by dynamic programming over (vertex subset,
/// path endpoint) states. Throws CapacityError above
/// limits.circumference_vertices.
CycleBoundReport circumference(const FeaturedGraph &g,
                               const Limits &limits = Limits::current());

/// Stops at the first cycle longer than `bound`.
CycleBoundReport check_cycle_bound(const FeaturedGraph &g, int bound,
                                   const Limits &limits = Limits::current());

struct SeparabilityReport {
  bool separable = true;
  /// k-separability: {u, v1, v2}; strong separability: {v1, v2}.
  std::vector<Vertex> witness;
};

/// Any two distinct vertices at distance exactly k from a common vertex have
/// distinct stable k-hop subgraph WL colors.
SeparabilityReport is_k_separable(const FeaturedGraph &g, int k,
                                  const Limits &limits = Limits::current());

/// Same check on an existing k-hop subgraph run of g.
SeparabilityReport is_k_separable(const FeaturedGraph &g, const WlRun &run,
                                  const DistanceMatrix &dm);

/// Any two distinct vertices within distance 2k have distinct stable k-hop
/// WL colors.
SeparabilityReport is_k_strongly_separable(const FeaturedGraph &g, int k);

SeparabilityReport is_k_strongly_separable(const FeaturedGraph &g,
                                           const WlRun &run,
                                           const DistanceMatrix &dm);

/// Edge-exclusion property used when growing a partial isomorphism: for a
/// connected vertex set S and a vertex u1 outside S adjacent to it, no vertex
/// of N_k(u1) \ N_k(S) is adjacent to a vertex of N_k(S) \ N_k(u1).
///
/// Requires k >= 2, g connected with no cycle longer than 2k + 1, S nonempty
/// and connected, u1 not in S and adjacent to S. Throws PreconditionError
/// naming the failed hypothesis otherwise.
bool check_lemma_c1(const FeaturedGraph &g, std::span<const Vertex> s,
                    Vertex u1, int k,
                    const Limits &limits = Limits::current());

/// True iff the subgraph induced by `s` is connected (false for empty s).
bool induces_connected(const FeaturedGraph &g, std::span<const Vertex> s);

}  // namespace wllab
