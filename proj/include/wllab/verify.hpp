//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wllab/graph.hpp"
#include "wllab/isomorphism.hpp"
#include "wllab/limits.hpp"

namespace wllab {

/// Builds an isomorphism g -> h by growing a connected seed set one frontier
/// vertex at a time, extending the map over each new k-hop neighborhood by
/// stable k-hop subgraph WL colors.
///
/// Hypotheses, checked in this order (PreconditionError::which in quotes):
/// both graphs "connected"; both "k-separable" when k >= 2; circumference at
/// most 2k + 1 ("cycle-bound"). Returns nullopt when the k-hop subgraph WL
/// test distinguishes g and h. Throws ConstructionError, carrying the partial
/// map, if the extension gets stuck or the result fails validation.
std::optional<VertexMap>
construct_isomorphism(const FeaturedGraph &g, const FeaturedGraph &h, int k,
                      const Limits &limits = Limits::current());

struct Violation {
  /// "completeness", "soundness", "equivariance", "construction", "oracle",
  /// "hierarchy", "strictness", "lemma", or "fixture".
  std::string kind;
  std::string graph_a;
  std::string graph_b;
  std::optional<FeaturedGraph> a;
  std::optional<FeaturedGraph> b;
  std::string wl_verdict;
  std::string oracle_verdict;
  /// Kind-specific: a permutation, a partial map flattened as (from, to)
  /// pairs, or a vertex set followed by a vertex.
  std::vector<Vertex> witness;
  std::string detail;
};

/// A graph excluded by a hypothesis filter.
struct FilteredGraph {
  std::string graph;
  std::string hypothesis;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Drop the separability filter; hits become findings, not violations.
  bool explore = false;
  /// Extra graphs run through the same hypothesis filters as the pool.
  std::vector<FeaturedGraph> injected;
  Limits limits = Limits::current();
};

struct VerificationReport {
  /// "t32", "t35", "t38", "lemma-c1", "hierarchy", "fixtures", "soundness".
  std::string theorem;
  int k = 0;
  int n_max = 0;
  int feature_classes = 0;
  int cycle_bound = 0;
  bool explore = false;
  std::uint64_t seed = 0;

  std::size_t graphs_enumerated = 0;
  std::size_t graphs_admitted = 0;
  std::size_t graphs_filtered = 0;
  std::size_t buckets = 0;
  std::size_t pairs_checked = 0;
  std::size_t self_pairs_checked = 0;
  std::size_t constructions_verified = 0;
  std::size_t constructions_skipped = 0;
  std::size_t samples_checked = 0;

  std::vector<Violation> violations;
  std::vector<FilteredGraph> filtered;
  std::vector<std::string> findings;
  std::chrono::duration<double> elapsed {};

  bool passed() const { return violations.empty(); }
  /// "PASS", "FAIL", or "EXPLORATORY" (explore mode without violations).
  std::string status() const;
};

/// 1-hop subgraph WL on connected graphs with no cycle longer than 3:
/// indistinguishable implies isomorphic.
VerificationReport verify_theorem_1hop(int n_max, int feature_classes,
                                       const VerifyOptions &options = {});

/// k-hop subgraph WL (k >= 2) on connected k-separable graphs with no cycle
/// longer than 2k + 1.
VerificationReport verify_theorem_khop_subgraph(int k, int n_max,
                                                int feature_classes,
                                                const VerifyOptions &options
                                                = {});

/// k-hop WL on connected k-strongly separable graphs with no cycle longer
/// than 2k - 1. For k = 1 the pool is trees and no separability filter
/// applies.
VerificationReport verify_theorem_khop(int k, int n_max, int feature_classes,
                                       const VerifyOptions &options = {});

/// Classic <= k-hop <= k-hop subgraph containment over the pool for
/// k = 1 .. n_max - 1, plus the fixture strictness witnesses.
VerificationReport verify_hierarchy(int n_max, int feature_classes = 1,
                                    const VerifyOptions &options = {});

/// Edge-exclusion property for every connected S and adjacent u1 over the
/// pool with no cycle longer than 2k + 1.
VerificationReport verify_lemma_c1(int k, int n_max,
                                   const VerifyOptions &options = {});

/// Pinned claims about the fixture graphs and the cycle-pair family.
VerificationReport verify_fixtures(const VerifyOptions &options = {});

/// Random graphs against random relabelings of themselves under every
/// variant: never distinguished, colors move with the relabeling.
VerificationReport verify_soundness(std::size_t pairs, int n_max,
                                    const VerifyOptions &options = {});

}  // namespace wllab
