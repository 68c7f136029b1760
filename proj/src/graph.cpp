//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "wllab/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <deque>
#include <string>
#include <utility>

#include "wllab/error.hpp"

namespace wllab {

FeaturedGraph::FeaturedGraph(int n, std::vector<Edge> edges,
                             std::vector<std::vector<double>> features)
    : n_(n), m_(0), edges_(std::move(edges)) {
  if (n < 1)
    throw InputError("graph must have at least one vertex");
  if (features.size() != static_cast<std::size_t>(n))
    throw InputError("expected " + std::to_string(n) + " feature vectors, got "
                     + std::to_string(features.size()));

  m_ = static_cast<int>(features[0].size());
  features_.reserve(static_cast<std::size_t>(n) * m_);
  for (const auto &f : features) {
    if (f.size() != static_cast<std::size_t>(m_))
      throw InputError("feature vectors have differing dimensions");
    features_.insert(features_.end(), f.begin(), f.end());
  }

  for (auto &e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InputError("edge (" + std::to_string(e.u) + ", "
                       + std::to_string(e.v) + ") out of range");
    if (e.u == e.v)
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v)
      std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw InputError("duplicate edge (" + std::to_string(dup->u) + ", "
                     + std::to_string(dup->v) + ")");

  adj_.resize(n);
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const auto &e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    matrix_[static_cast<std::size_t>(e.u) * n + e.v] = 1;
    matrix_[static_cast<std::size_t>(e.v) * n + e.u] = 1;
  }
  for (auto &nb : adj_)
    std::sort(nb.begin(), nb.end());
}

FeaturedGraph FeaturedGraph::uniform(int n, std::vector<Edge> edges) {
  return FeaturedGraph(n, std::move(edges),
                       std::vector<std::vector<double>>(
                           std::max(n, 0), std::vector<double> { 0.0 }));
}

FeaturedGraph FeaturedGraph::with_classes(std::vector<Edge> edges,
                                          const std::vector<int> &classes) {
  std::vector<std::vector<double>> features;
  features.reserve(classes.size());
  for (int c : classes)
    features.push_back({ static_cast<double>(c) });
  return FeaturedGraph(static_cast<int>(classes.size()), std::move(edges),
                       std::move(features));
}

std::string FeaturedGraph::feature_key(Vertex v) const {
  std::string key(static_cast<std::size_t>(m_) * sizeof(std::uint64_t), '\0');
  auto f = features(v);
  for (int i = 0; i < m_; ++i) {
    auto bits = std::bit_cast<std::uint64_t>(f[i]);
    std::memcpy(key.data() + i * sizeof(bits), &bits, sizeof(bits));
  }
  return key;
}

FeaturedGraph FeaturedGraph::permuted(std::span<const Vertex> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_))
    throw InputError("permutation length does not match vertex count");
  std::vector<char> seen(n_, 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= n_ || seen[p])
      throw InputError("not a permutation");
    seen[p] = 1;
  }

  std::vector<std::vector<double>> features(n_);
  for (int i = 0; i < n_; ++i) {
    auto f = this->features(i);
    features[perm[i]].assign(f.begin(), f.end());
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto &e : edges_)
    edges.push_back({ perm[e.u], perm[e.v] });
  return FeaturedGraph(n_, std::move(edges), std::move(features));
}

bool operator==(const FeaturedGraph &a, const FeaturedGraph &b) {
  if (a.n_ != b.n_ || a.m_ != b.m_ || a.edges_ != b.edges_)
    return false;
  for (int v = 0; v < a.n_; ++v)
    if (a.feature_key(v) != b.feature_key(v))
      return false;
  return true;
}

std::vector<int> bfs_distances(const FeaturedGraph &g,
                               std::span<const Vertex> sources) {
  std::vector<int> dist(g.size(), kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (s < 0 || s >= g.size())
      throw InputError("vertex " + std::to_string(s) + " out of range");
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const FeaturedGraph &g, Vertex source) {
  return bfs_distances(g, std::span<const Vertex>(&source, 1));
}

DistanceMatrix all_pairs_distances(const FeaturedGraph &g) {
  const int n = g.size();
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    d.insert(d.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(d));
}

std::vector<Vertex> k_hop_neighborhood(const DistanceMatrix &dm, Vertex v,
                                       int k) {
  if (v < 0 || v >= dm.size())
    throw InputError("vertex " + std::to_string(v) + " out of range");
  if (k < 1)
    throw InputError("k must be at least 1");
  std::vector<Vertex> out;
  auto row = dm.row(v);
  for (Vertex u = 0; u < dm.size(); ++u)
    if (row[u] <= k)
      out.push_back(u);
  return out;
}

namespace {

RootedColoredGraph induced_rooted(const FeaturedGraph &g,
                                  std::span<const ColorId> colors,
                                  std::vector<Vertex> ids, Vertex root) {
  RootedColoredGraph rg;
  rg.vertex_ids = std::move(ids);
  std::vector<int> local(g.size(), -1);
  for (std::size_t i = 0; i < rg.vertex_ids.size(); ++i) {
    local[rg.vertex_ids[i]] = static_cast<int>(i);
    if (rg.vertex_ids[i] == root)
      rg.root = i;
    rg.colors.push_back(colors[rg.vertex_ids[i]]);
  }
  for (std::size_t i = 0; i < rg.vertex_ids.size(); ++i) {
    for (Vertex w : g.neighbors(rg.vertex_ids[i])) {
      int j = local[w];
      if (j > static_cast<int>(i))
        rg.edges.push_back({ static_cast<Vertex>(i), j });
    }
  }
  std::sort(rg.edges.begin(), rg.edges.end());
  return rg;
}

void check_coloring(const FeaturedGraph &g, std::span<const ColorId> colors,
                    Vertex v, int k) {
  if (colors.size() != static_cast<std::size_t>(g.size()))
    throw InputError("coloring has " + std::to_string(colors.size())
                     + " entries for a graph with " + std::to_string(g.size())
                     + " vertices");
  if (v < 0 || v >= g.size())
    throw InputError("vertex " + std::to_string(v) + " out of range");
  if (k < 1)
    throw InputError("k must be at least 1");
}

}  // namespace

RootedColoredGraph extract_rooted_subgraph(const FeaturedGraph &g,
                                           std::span<const ColorId> colors,
                                           Vertex v, int k) {
  check_coloring(g, colors, v, k);
  auto dist = bfs_distances(g, v);
  std::vector<Vertex> ids;
  for (Vertex u = 0; u < g.size(); ++u)
    if (dist[u] <= k)
      ids.push_back(u);
  return induced_rooted(g, colors, std::move(ids), v);
}

RootedColoredGraph extract_rooted_subgraph(const FeaturedGraph &g,
                                           const DistanceMatrix &dm,
                                           std::span<const ColorId> colors,
                                           Vertex v, int k) {
  check_coloring(g, colors, v, k);
  return induced_rooted(g, colors, k_hop_neighborhood(dm, v, k), v);
}

}  // namespace wllab
