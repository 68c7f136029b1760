//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "wllab/canonical.hpp"
#include "wllab/error.hpp"
#include "wllab/structure.hpp"
#include "wllab/verify.hpp"
#include "wllab/wl.hpp"

namespace wllab {

namespace {

class Extender {
public:
  Extender(const FeaturedGraph &g, const FeaturedGraph &h, int k,
           const std::vector<ColorId> &cg, const std::vector<ColorId> &ch,
           const DistanceMatrix &dg, const DistanceMatrix &dh,
           const Limits &limits)
      : g_(g), h_(h), k_(k), cg_(cg), ch_(ch), dg_(dg), dh_(dh),
        limits_(limits), fwd_(g.size(), -1), back_(h.size(), -1),
        in_s1_(g.size(), 0) { }

  VertexMap run() {
    seed();
    for (int grown = 1; grown < g_.size(); ++grown)
      grow();
    VertexMap out(fwd_.begin(), fwd_.end());
    if (!is_isomorphism(g_, h_, out))
      fail("assembled map is not an isomorphism");
    return out;
  }

private:
  [[noreturn]] void fail(const std::string &why) const {
    std::vector<std::pair<int, int>> partial;
    for (Vertex v = 0; v < g_.size(); ++v)
      if (fwd_[v] >= 0)
        partial.emplace_back(v, fwd_[v]);
    throw ConstructionError("isomorphism construction stuck: " + why,
                            std::move(partial));
  }

  void assign(Vertex x, Vertex y) {
    if (fwd_[x] >= 0 || back_[y] >= 0)
      fail("vertex mapped twice");
    if (cg_[x] != ch_[y])
      fail("color mismatch at " + std::to_string(x));
    fwd_[x] = y;
    back_[y] = x;
    fresh_.push_back(x);
  }

  // Every newly mapped vertex must agree on adjacency with everything mapped
  // so far.
  void check_fresh() {
    for (Vertex x : fresh_)
      for (Vertex z = 0; z < g_.size(); ++z)
        if (fwd_[z] >= 0 && z != x
            && g_.adjacent(x, z) != h_.adjacent(fwd_[x], fwd_[z]))
          fail("adjacency of " + std::to_string(x) + " and "
               + std::to_string(z) + " not preserved");
    fresh_.clear();
  }

  // Two vertices of equal color have isomorphic rooted k-hop subgraphs.
  void seed() {
    Vertex v = 0;
    Vertex w = -1;
    for (Vertex y = 0; y < h_.size() && w < 0; ++y)
      if (ch_[y] == cg_[v])
        w = y;
    if (w < 0)
      fail("no seed vertex of matching color");
    auto rg = extract_rooted_subgraph(g_, dg_, cg_, v, k_);
    auto rh = extract_rooted_subgraph(h_, dh_, ch_, w, k_);
    auto fg = canonical_form(rg, limits_);
    auto fh = canonical_form(rh, limits_);
    if (fg.code != fh.code)
      fail("seed neighborhoods are not isomorphic");
    for (std::size_t p = 0; p < fg.order.size(); ++p)
      assign(rg.vertex_ids[fg.order[p]], rh.vertex_ids[fh.order[p]]);
    check_fresh();
    in_s1_[v] = 1;
  }

  Vertex frontier() const {
    for (Vertex x = 0; x < g_.size(); ++x) {
      if (in_s1_[x])
        continue;
      for (Vertex y : g_.neighbors(x))
        if (in_s1_[y])
          return x;
    }
    return -1;
  }

  void grow() {
    const Vertex v1 = frontier();
    if (v1 < 0)
      fail("no frontier vertex");
    const Vertex v2 = fwd_[v1];
    if (v2 < 0)
      fail("frontier vertex is unmapped");

    // Unmapped vertices are exactly those outside the k-hop neighborhood of
    // the seed set, so these are the two difference sets.
    std::vector<Vertex> t1, t2;
    for (Vertex x = 0; x < g_.size(); ++x)
      if (fwd_[x] < 0 && dg_(v1, x) <= k_)
        t1.push_back(x);
    for (Vertex y = 0; y < h_.size(); ++y)
      if (back_[y] < 0 && dh_(v2, y) <= k_)
        t2.push_back(y);
    if (t1.size() != t2.size())
      fail("new neighborhoods differ in size at " + std::to_string(v1));

    if (k_ == 1)
      extend_by_pairing(t1, t2);
    else
      extend_by_color(t1, t2);
    check_fresh();
    in_s1_[v1] = 1;
  }

  // k >= 2: new vertices sit at distance exactly k from the frontier vertex
  // and have pairwise distinct colors.
  void extend_by_color(const std::vector<Vertex> &t1,
                       const std::vector<Vertex> &t2) {
    std::map<ColorId, Vertex> by_color;
    for (Vertex y : t2)
      if (!by_color.try_emplace(ch_[y], y).second)
        fail("repeated color among new vertices");
    for (Vertex x : t1) {
      auto it = by_color.find(cg_[x]);
      if (it == by_color.end())
        fail("no partner for new vertex " + std::to_string(x));
      assign(x, it->second);
      by_color.erase(it);
    }
  }

  // k = 1: inside each difference set every vertex has degree at most 1, so
  // it splits into edges and isolated vertices, matched by end colors.
  void extend_by_pairing(const std::vector<Vertex> &t1,
                         const std::vector<Vertex> &t2) {
    auto split = [&](const FeaturedGraph &gr, const std::vector<ColorId> &col,
                     const std::vector<Vertex> &t) {
      std::map<std::pair<ColorId, ColorId>, std::vector<std::pair<Vertex, Vertex>>>
          edges;
      std::map<ColorId, std::vector<Vertex>> lone;
      for (Vertex x : t) {
        std::vector<Vertex> inside;
        for (Vertex y : gr.neighbors(x))
          if (std::binary_search(t.begin(), t.end(), y))
            inside.push_back(y);
        if (inside.size() > 1)
          fail("vertex of degree above 1 inside a difference set");
        if (inside.empty()) {
          lone[col[x]].push_back(x);
        } else if (x < inside[0]) {
          Vertex a = x, b = inside[0];
          if (col[a] > col[b])
            std::swap(a, b);
          edges[{ col[a], col[b] }].emplace_back(a, b);
        }
      }
      return std::pair { edges, lone };
    };
    auto [e1, l1] = split(g_, cg_, t1);
    auto [e2, l2] = split(h_, ch_, t2);

    for (auto &[key, list] : e1) {
      auto it = e2.find(key);
      if (it == e2.end() || it->second.size() != list.size())
        fail("edge color pattern differs at frontier");
      for (std::size_t i = 0; i < list.size(); ++i) {
        assign(list[i].first, it->second[i].first);
        assign(list[i].second, it->second[i].second);
      }
    }
    for (auto &[color, list] : l1) {
      auto it = l2.find(color);
      if (it == l2.end() || it->second.size() != list.size())
        fail("isolated color pattern differs at frontier");
      for (std::size_t i = 0; i < list.size(); ++i)
        assign(list[i], it->second[i]);
    }
  }

  const FeaturedGraph &g_;
  const FeaturedGraph &h_;
  const int k_;
  const std::vector<ColorId> &cg_;
  const std::vector<ColorId> &ch_;
  const DistanceMatrix &dg_;
  const DistanceMatrix &dh_;
  const Limits &limits_;
  std::vector<Vertex> fwd_;
  std::vector<Vertex> back_;
  std::vector<char> in_s1_;
  std::vector<Vertex> fresh_;
};

}  // namespace

std::optional<VertexMap> construct_isomorphism(const FeaturedGraph &g,
                                               const FeaturedGraph &h, int k,
                                               const Limits &limits) {
  if (k < 1)
    throw InputError("k must be at least 1, got " + std::to_string(k));
  if (!is_connected(g) || !is_connected(h))
    throw PreconditionError("connected", "both graphs must be connected");

  ColorInterner interner;
  auto run_g = khop_subgraph_wl(g, k, interner, limits);
  auto run_h = khop_subgraph_wl(h, k, interner, limits);
  auto dg = all_pairs_distances(g);
  auto dh = all_pairs_distances(h);

  if (k >= 2
      && (!is_k_separable(g, run_g, dg).separable
          || !is_k_separable(h, run_h, dh).separable))
    throw PreconditionError("k-separable", "both graphs must be "
                                               + std::to_string(k)
                                               + "-separable");
  const int bound = 2 * k + 1;
  if (!check_cycle_bound(g, bound, limits).satisfied
      || !check_cycle_bound(h, bound, limits).satisfied)
    throw PreconditionError("cycle-bound", "a graph has a cycle longer than "
                                               + std::to_string(bound));
  if (!indistinguishable(run_g, run_h))
    return std::nullopt;

  return Extender(g, h, k, run_g.final_coloring().colors,
                  run_h.final_coloring().colors, dg, dh, limits)
      .run();
}

}  // namespace wllab
