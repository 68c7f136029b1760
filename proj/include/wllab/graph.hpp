//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wllab {

using Vertex = int;

/// Dense color identifier issued by a ColorInterner.
using ColorId = std::uint32_t;

/// Undirected edge. Stored normalized with u < v.
struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Undirected, unweighted simple graph on vertices 0..n-1 with one feature
/// vector per vertex. Features compare bit-exactly. Immutable.
class FeaturedGraph {
public:
  /// Validates and normalizes the edge list. Throws InputError on
  /// out-of-range endpoints, self-loops, duplicate edges, n < 1, or ragged
  /// feature vectors.
  FeaturedGraph(int n, std::vector<Edge> edges,
                std::vector<std::vector<double>> features);

  /// All vertices carry the one-dimensional feature 0.0.
  static FeaturedGraph uniform(int n, std::vector<Edge> edges);

  /// Vertex v carries the one-dimensional feature classes[v].
  static FeaturedGraph with_classes(std::vector<Edge> edges,
                                    const std::vector<int> &classes);

  int size() const { return n_; }
  int feature_dim() const { return m_; }
  std::size_t num_edges() const { return edges_.size(); }

  /// Sorted, each edge with u < v.
  const std::vector<Edge> &edges() const { return edges_; }

  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  std::span<const double> features(Vertex v) const {
    return {features_.data() + static_cast<std::size_t>(v) * m_,
            static_cast<std::size_t>(m_)};
  }

  /// Bit pattern of the feature vector of v, usable as a hash key. Two
  /// vertices have equal keys iff their features are bit-identical.
  std::string feature_key(Vertex v) const;

  /// sigma * g: vertex i of this graph becomes vertex perm[i].
  FeaturedGraph permuted(std::span<const Vertex> perm) const;

  /// Bit-exact equality of n, features, and edge sets.
  friend bool operator==(const FeaturedGraph &a, const FeaturedGraph &b);

private:
  int n_;
  int m_;
  std::vector<Edge> edges_;
  std::vector<double> features_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

/// Marks vertex pairs in different connected components.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// n x n shortest-path lengths; kUnreachable for disconnected pairs.
class DistanceMatrix {
public:
  DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) { }

  int size() const { return n_; }
  int operator()(Vertex u, Vertex v) const {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const int> row(Vertex u) const {
    return {d_.data() + static_cast<std::size_t>(u) * n_,
            static_cast<std::size_t>(n_)};
  }

private:
  int n_;
  std::vector<int> d_;
};

/// Induced subgraph on a vertex neighborhood with a distinguished root.
/// Positions are local; vertex_ids maps them back to the parent graph.
struct RootedColoredGraph {
  std::vector<Vertex> vertex_ids;
  std::size_t root = 0;
  std::vector<Edge> edges;
  std::vector<ColorId> colors;

  std::size_t size() const { return vertex_ids.size(); }
};

/// BFS distances from one source.
std::vector<int> bfs_distances(const FeaturedGraph &g, Vertex source);

/// Distance of every vertex to the nearest member of `sources`.
std::vector<int> bfs_distances(const FeaturedGraph &g,
                               std::span<const Vertex> sources);

DistanceMatrix all_pairs_distances(const FeaturedGraph &g);

/// {u : d(u, v) <= k}, sorted. Throws InputError for a bad vertex or k < 1.
std::vector<Vertex> k_hop_neighborhood(const DistanceMatrix &dm, Vertex v,
                                       int k);

/// The k-hop subgraph rooted at v, colored by `colors` (one entry per vertex
/// of g). vertex_ids is sorted ascending.
RootedColoredGraph extract_rooted_subgraph(const FeaturedGraph &g,
                                           std::span<const ColorId> colors,
                                           Vertex v, int k);

/// Same, reusing precomputed distances.
RootedColoredGraph extract_rooted_subgraph(const FeaturedGraph &g,
                                           const DistanceMatrix &dm,
                                           std::span<const ColorId> colors,
                                           Vertex v, int k);

}  // namespace wllab
