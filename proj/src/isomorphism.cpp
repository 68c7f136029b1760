//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "wllab/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace wllab {
namespace {

struct LabeledGraph {
  int n = 0;
  std::vector<std::uint8_t> adj;
  std::vector<std::vector<int>> nbrs;
  std::vector<int> label;

  bool edge(int u, int v) const {
    return adj[static_cast<std::size_t>(u) * n + v] != 0;
  }
};

LabeledGraph make_labeled(int n, const std::vector<Edge> &edges,
                          std::vector<int> label) {
  LabeledGraph g;
  g.n = n;
  g.adj.assign(static_cast<std::size_t>(n) * n, 0);
  g.nbrs.resize(n);
  g.label = std::move(label);
  for (const auto &e : edges) {
    g.adj[static_cast<std::size_t>(e.u) * n + e.v] = 1;
    g.adj[static_cast<std::size_t>(e.v) * n + e.u] = 1;
    g.nbrs[e.u].push_back(e.v);
    g.nbrs[e.v].push_back(e.u);
  }
  return g;
}

class Matcher {
public:
  Matcher(const LabeledGraph &a, const LabeledGraph &b) : a_(a), b_(b) { }

  std::optional<VertexMap> solve(std::optional<std::pair<int, int>> pin) {
    const int n = a_.n;
    if (n != b_.n)
      return std::nullopt;

    std::vector<std::pair<int, int>> ia, ib;
    for (int v = 0; v < n; ++v) {
      ia.emplace_back(a_.label[v], static_cast<int>(a_.nbrs[v].size()));
      ib.emplace_back(b_.label[v], static_cast<int>(b_.nbrs[v].size()));
    }
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    if (ia != ib)
      return std::nullopt;

    order_ = search_order(pin ? pin->first : -1);
    map_.assign(n, -1);
    used_.assign(n, 0);
    if (pin) {
      if (!compatible(pin->first, pin->second))
        return std::nullopt;
      map_[pin->first] = pin->second;
      used_[pin->second] = 1;
    }
    if (!extend(pin ? 1 : 0))
      return std::nullopt;
    return map_;
  }

private:
  // Vertices of a, each next one chosen with the most already-ordered
  // neighbors so adjacency constraints prune early.
  std::vector<int> search_order(int first) const {
    const int n = a_.n;
    std::vector<int> order;
    std::vector<int> placed(n, 0), weight(n, 0);
    auto place = [&](int v) {
      order.push_back(v);
      placed[v] = 1;
      for (int w : a_.nbrs[v])
        ++weight[w];
    };
    if (first >= 0)
      place(first);
    while (static_cast<int>(order.size()) < n) {
      int pick = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v])
          continue;
        if (pick < 0 || weight[v] > weight[pick]
            || (weight[v] == weight[pick]
                && a_.nbrs[v].size() > a_.nbrs[pick].size()))
          pick = v;
      }
      place(pick);
    }
    return order;
  }

  bool compatible(int u, int c) const {
    if (used_[c] || a_.label[u] != b_.label[c]
        || a_.nbrs[u].size() != b_.nbrs[c].size())
      return false;
    for (int x = 0; x < a_.n; ++x) {
      if (map_[x] < 0)
        continue;
      if (a_.edge(u, x) != b_.edge(c, map_[x]))
        return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size())
      return true;
    int u = order_[depth];
    for (int c = 0; c < b_.n; ++c) {
      if (!compatible(u, c))
        continue;
      map_[u] = c;
      used_[c] = 1;
      if (extend(depth + 1))
        return true;
      map_[u] = -1;
      used_[c] = 0;
    }
    return false;
  }

  const LabeledGraph &a_;
  const LabeledGraph &b_;
  std::vector<int> order_;
  VertexMap map_;
  std::vector<char> used_;
};

std::pair<LabeledGraph, LabeledGraph> label_pair(const FeaturedGraph &a,
                                                 const FeaturedGraph &b) {
  std::map<std::string, int> ids;
  auto labels = [&](const FeaturedGraph &g) {
    std::vector<int> out;
    for (Vertex v = 0; v < g.size(); ++v)
      out.push_back(
          ids.try_emplace(g.feature_key(v), static_cast<int>(ids.size()))
              .first->second);
    return out;
  };
  auto la = labels(a);
  auto lb = labels(b);
  return { make_labeled(a.size(), a.edges(), std::move(la)),
           make_labeled(b.size(), b.edges(), std::move(lb)) };
}

bool is_bijection(std::span<const Vertex> map, int n) {
  if (map.size() != static_cast<std::size_t>(n))
    return false;
  std::vector<char> hit(n, 0);
  for (Vertex v : map) {
    if (v < 0 || v >= n || hit[v])
      return false;
    hit[v] = 1;
  }
  return true;
}

bool preserves_edges(const LabeledGraph &a, const LabeledGraph &b,
                     std::span<const Vertex> map) {
  for (int u = 0; u < a.n; ++u) {
    if (a.label[u] != b.label[map[u]])
      return false;
    for (int v = u + 1; v < a.n; ++v)
      if (a.edge(u, v) != b.edge(map[u], map[v]))
        return false;
  }
  return true;
}

std::vector<int> color_labels(const RootedColoredGraph &g) {
  return { g.colors.begin(), g.colors.end() };
}

}  // namespace

std::optional<VertexMap> are_isomorphic(const FeaturedGraph &a,
                                        const FeaturedGraph &b) {
  if (a.size() != b.size() || a.num_edges() != b.num_edges())
    return std::nullopt;
  auto [la, lb] = label_pair(a, b);
  return Matcher(la, lb).solve(std::nullopt);
}

std::optional<VertexMap> are_rooted_isomorphic(const RootedColoredGraph &a,
                                               const RootedColoredGraph &b) {
  if (a.size() != b.size() || a.edges.size() != b.edges.size())
    return std::nullopt;
  auto la = make_labeled(static_cast<int>(a.size()), a.edges, color_labels(a));
  auto lb = make_labeled(static_cast<int>(b.size()), b.edges, color_labels(b));
  return Matcher(la, lb).solve(std::make_pair(static_cast<int>(a.root),
                                              static_cast<int>(b.root)));
}

bool is_isomorphism(const FeaturedGraph &a, const FeaturedGraph &b,
                    std::span<const Vertex> map) {
  if (a.size() != b.size() || a.num_edges() != b.num_edges()
      || !is_bijection(map, a.size()))
    return false;
  auto [la, lb] = label_pair(a, b);
  return preserves_edges(la, lb, map);
}

bool is_rooted_isomorphism(const RootedColoredGraph &a,
                           const RootedColoredGraph &b,
                           std::span<const Vertex> map) {
  const int n = static_cast<int>(a.size());
  if (a.size() != b.size() || !is_bijection(map, n)
      || map[a.root] != static_cast<Vertex>(b.root))
    return false;
  auto la = make_labeled(n, a.edges, color_labels(a));
  auto lb = make_labeled(n, b.edges, color_labels(b));
  return preserves_edges(la, lb, map);
}

}  // namespace wllab
