//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "wllab/wl.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "wllab/error.hpp"

namespace wllab {

std::string_view to_string(WlVariant variant) {
  switch (variant) {
  case WlVariant::kClassic:
    return "classic";
  case WlVariant::kKHop:
    return "khop";
  case WlVariant::kKHopSubgraph:
    return "subgraph";
  }
  return "unknown";
}

WlVariant parse_variant(std::string_view name) {
  if (name == "classic")
    return WlVariant::kClassic;
  if (name == "khop")
    return WlVariant::kKHop;
  if (name == "subgraph")
    return WlVariant::kKHopSubgraph;
  throw InputError("unknown WL variant '" + std::string(name) + "'");
}

std::vector<ColorId> WlRun::final_multiset() const {
  auto out = final_coloring().colors;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> normalized_partition(std::span<const ColorId> colors) {
  std::unordered_map<ColorId, int> first;
  std::vector<int> out;
  out.reserve(colors.size());
  for (ColorId c : colors)
    out.push_back(
        first.try_emplace(c, static_cast<int>(first.size())).first->second);
  return out;
}

bool refines(std::span<const ColorId> finer, std::span<const ColorId> coarser) {
  if (finer.size() != coarser.size())
    return false;
  std::unordered_map<ColorId, ColorId> parent;
  for (std::size_t i = 0; i < finer.size(); ++i) {
    auto [it, inserted] = parent.try_emplace(finer[i], coarser[i]);
    if (!inserted && it->second != coarser[i])
      return false;
  }
  return true;
}

namespace {

// Iterates `step` from the feature coloring until the partition repeats.
// Each step interns (old color, aggregate), so partitions never coarsen and
// at most n - 1 strict refinements are possible.
template <class Step>
WlRun refine_to_fixpoint(const FeaturedGraph &g, WlVariant variant, int k,
                         ColorInterner &interner, Step step) {
  WlRun run;
  run.variant = variant;
  run.k = k;
  run.history.push_back(
      { 0, colored_by_features(g, interner).colors, interner.tag() });

  const std::size_t n = static_cast<std::size_t>(g.size());
  for (std::size_t l = 1;; ++l) {
    if (l > n)
      throw std::logic_error("WL refinement did not stabilize within n "
                             "iterations");
    const auto &prev = run.history.back().colors;
    std::vector<ColorId> next = step(prev);
    auto prev_part = normalized_partition(prev);
    auto next_part = normalized_partition(next);
    int prev_classes = prev_part.empty()
        ? 0
        : *std::max_element(prev_part.begin(), prev_part.end());
    int next_classes = next_part.empty()
        ? 0
        : *std::max_element(next_part.begin(), next_part.end());
    run.history.push_back({ l, std::move(next), interner.tag() });
    if (prev_classes == next_classes && prev_part == next_part) {
      run.stabilized_at = l - 1;
      return run;
    }
  }
}

void check_k(int k) {
  if (k < 1)
    throw InputError("k must be at least 1, got " + std::to_string(k));
}

}  // namespace

WlRun classic_wl(const FeaturedGraph &g, ColorInterner &shared) {
  return refine_to_fixpoint(
      g, WlVariant::kClassic, 1, shared,
      [&](const std::vector<ColorId> &prev) {
        std::vector<ColorId> next(prev.size());
        std::vector<ColorId> nb;
        std::string key;
        for (Vertex v = 0; v < g.size(); ++v) {
          nb.clear();
          for (Vertex w : g.neighbors(v))
            nb.push_back(prev[w]);
          std::sort(nb.begin(), nb.end());
          key.assign(1, 'C');
          append_varint(key, prev[v]);
          append_varint(key, nb.size());
          for (ColorId c : nb)
            append_varint(key, c);
          next[v] = shared.intern(key);
        }
        return next;
      });
}

WlRun khop_wl(const FeaturedGraph &g, int k, ColorInterner &shared) {
  check_k(k);
  const auto dm = all_pairs_distances(g);
  std::vector<std::vector<Vertex>> hoods;
  for (Vertex v = 0; v < g.size(); ++v)
    hoods.push_back(k_hop_neighborhood(dm, v, k));

  return refine_to_fixpoint(
      g, WlVariant::kKHop, k, shared, [&](const std::vector<ColorId> &prev) {
        std::vector<ColorId> next(prev.size());
        std::vector<std::pair<ColorId, int>> tagged;
        std::string key;
        for (Vertex v = 0; v < g.size(); ++v) {
          tagged.clear();
          for (Vertex w : hoods[v])
            tagged.emplace_back(prev[w], dm(v, w));
          std::sort(tagged.begin(), tagged.end());
          key.assign(1, 'K');
          append_varint(key, prev[v]);
          append_varint(key, tagged.size());
          for (auto [c, d] : tagged) {
            append_varint(key, c);
            append_varint(key, static_cast<std::uint64_t>(d));
          }
          next[v] = shared.intern(key);
        }
        return next;
      });
}

WlRun khop_subgraph_wl(const FeaturedGraph &g, int k, ColorInterner &shared,
                       const Limits &limits) {
  check_k(k);
  const auto dm = all_pairs_distances(g);
  const std::vector<ColorId> blank(g.size(), 0);
  std::vector<RootedColoredGraph> subgraphs;
  for (Vertex v = 0; v < g.size(); ++v)
    subgraphs.push_back(extract_rooted_subgraph(g, dm, blank, v, k));

  return refine_to_fixpoint(
      g, WlVariant::kKHopSubgraph, k, shared,
      [&](const std::vector<ColorId> &prev) {
        std::vector<ColorId> next(prev.size());
        std::string key;
        for (Vertex v = 0; v < g.size(); ++v) {
          auto &rg = subgraphs[v];
          for (std::size_t i = 0; i < rg.size(); ++i)
            rg.colors[i] = prev[rg.vertex_ids[i]];
          auto code = canonical_code(rg, limits);
          key.assign(1, 'S');
          append_varint(key, prev[v]);
          key += code.bytes();
          next[v] = shared.intern(key);
        }
        return next;
      });
}

WlRun run_wl(const FeaturedGraph &g, WlVariant variant, int k,
             ColorInterner &shared, const Limits &limits) {
  switch (variant) {
  case WlVariant::kClassic:
    return classic_wl(g, shared);
  case WlVariant::kKHop:
    return khop_wl(g, k, shared);
  case WlVariant::kKHopSubgraph:
    return khop_subgraph_wl(g, k, shared, limits);
  }
  throw InputError("unknown WL variant");
}

namespace {

void check_comparable(const WlRun &a, const WlRun &b) {
  if (a.final_coloring().interner_tag != b.final_coloring().interner_tag)
    throw InputError("WL runs use different color interners");
  if (a.variant != b.variant
      || (a.variant != WlVariant::kClassic && a.k != b.k))
    throw InputError("WL runs use different variants");
}

}  // namespace

// With an injective interner, equal multisets at every iteration force equal
// class counts and hence the same stabilization index L. Colors at L + 1
// determine those at L injectively, and inside each graph the two partitions
// coincide, so equality at L + 1 propagates to every later iteration.
// Equality at L alone is not enough: C4 and K4 agree at iteration 0.
bool indistinguishable(const WlRun &a, const WlRun &b) {
  check_comparable(a, b);
  if (a.size() != b.size() || a.stabilized_at != b.stabilized_at)
    return false;
  return a.final_multiset() == b.final_multiset();
}

bool vertexwise_indistinguishable(const WlRun &a, const WlRun &b) {
  check_comparable(a, b);
  if (a.size() != b.size() || a.stabilized_at != b.stabilized_at)
    return false;
  return a.final_coloring().colors == b.final_coloring().colors;
}

}  // namespace wllab
