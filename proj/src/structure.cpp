//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "wllab/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "wllab/error.hpp"

namespace wllab {

bool is_connected(const FeaturedGraph &g) {
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreachable; });
}

bool induces_connected(const FeaturedGraph &g, std::span<const Vertex> s) {
  if (s.empty())
    return false;
  std::vector<char> in(g.size(), 0), seen(g.size(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.size())
      throw InputError("vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  std::vector<Vertex> stack { s.front() };
  seen[s.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  std::size_t distinct = std::count(in.begin(), in.end(), 1);
  return reached == distinct;
}

namespace {

// reach[mask] holds the endpoints v such that some simple path starts at the
// lowest vertex of mask, visits exactly mask, and ends at v. A cycle of
// length |mask| exists through that anchor when an endpoint is adjacent to
// it. Each cycle is found from its lowest vertex.
CycleBoundReport cycle_search(const FeaturedGraph &g, std::optional<int> bound,
                              const Limits &limits) {
  const int n = g.size();
  std::size_t cap = std::min(limits.circumference_vertices,
                             Limits::kCircumferenceCeiling);
  if (static_cast<std::size_t>(n) > cap)
    throw CapacityError("circumference search limited to "
                        + std::to_string(cap) + " vertices, got "
                        + std::to_string(n));

  std::vector<std::uint32_t> adj(n, 0);
  for (const auto &e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }

  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> reach(static_cast<std::size_t>(full) + 1, 0);
  for (int a = 0; a < n; ++a)
    reach[1u << a] = 1u << a;

  CycleBoundReport report;
  report.bound = bound;

  auto witness = [&](std::uint32_t mask, int end) {
    const int anchor = std::countr_zero(mask);
    std::vector<Vertex> path { end };
    int cur = end;
    while (cur != anchor) {
      mask &= ~(1u << cur);
      std::uint32_t prev = reach[mask] & adj[cur];
      cur = std::countr_zero(prev);
      path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = reach[mask];
    if (ends == 0)
      continue;
    const int anchor = std::countr_zero(mask);
    const int size = std::popcount(mask);
    const std::uint32_t above = ~((2u << anchor) - 1);
    for (std::uint32_t rest = ends; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (size >= 3 && ((adj[v] >> anchor) & 1)) {
        report.circumference = std::max(report.circumference, size);
        if (bound && size > *bound) {
          report.exact = false;
          report.satisfied = false;
          report.witness_cycle = witness(mask, v);
          return report;
        }
      }
      for (std::uint32_t ext = adj[v] & ~mask & above; ext != 0;
           ext &= ext - 1) {
        const int w = std::countr_zero(ext);
        reach[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return report;
}

}  // namespace

CycleBoundReport circumference(const FeaturedGraph &g, const Limits &limits) {
  return cycle_search(g, std::nullopt, limits);
}

CycleBoundReport check_cycle_bound(const FeaturedGraph &g, int bound,
                                   const Limits &limits) {
  return cycle_search(g, bound, limits);
}

SeparabilityReport is_k_separable(const FeaturedGraph &g, const WlRun &run,
                                  const DistanceMatrix &dm) {
  if (run.variant != WlVariant::kKHopSubgraph)
    throw InputError("k-separability needs a k-hop subgraph WL run");
  if (run.size() != static_cast<std::size_t>(g.size()))
    throw InputError("WL run does not belong to this graph");
  const auto &colors = run.final_coloring().colors;
  const int k = run.k;
  for (Vertex u = 0; u < g.size(); ++u) {
    std::map<ColorId, Vertex> at_k;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (dm(u, v) != k)
        continue;
      auto [it, inserted] = at_k.try_emplace(colors[v], v);
      if (!inserted)
        return { false, { u, it->second, v } };
    }
  }
  return { true, {} };
}

SeparabilityReport is_k_separable(const FeaturedGraph &g, int k,
                                  const Limits &limits) {
  ColorInterner interner;
  auto run = khop_subgraph_wl(g, k, interner, limits);
  return is_k_separable(g, run, all_pairs_distances(g));
}

SeparabilityReport is_k_strongly_separable(const FeaturedGraph &g,
                                           const WlRun &run,
                                           const DistanceMatrix &dm) {
  if (run.variant != WlVariant::kKHop)
    throw InputError("strong separability needs a k-hop WL run");
  if (run.size() != static_cast<std::size_t>(g.size()))
    throw InputError("WL run does not belong to this graph");
  const auto &colors = run.final_coloring().colors;
  const int reach = 2 * run.k;
  for (Vertex a = 0; a < g.size(); ++a)
    for (Vertex b = a + 1; b < g.size(); ++b)
      if (dm(a, b) <= reach && colors[a] == colors[b])
        return { false, { a, b } };
  return { true, {} };
}

SeparabilityReport is_k_strongly_separable(const FeaturedGraph &g, int k) {
  ColorInterner interner;
  auto run = khop_wl(g, k, interner);
  return is_k_strongly_separable(g, run, all_pairs_distances(g));
}

bool check_lemma_c1(const FeaturedGraph &g, std::span<const Vertex> s,
                    Vertex u1, int k, const Limits &limits) {
  if (k < 2)
    throw PreconditionError("k", "the edge-exclusion property needs k >= 2");
  if (u1 < 0 || u1 >= g.size())
    throw InputError("vertex " + std::to_string(u1) + " out of range");
  if (s.empty())
    throw PreconditionError("set-empty", "S must be nonempty");
  if (!is_connected(g))
    throw PreconditionError("connected", "graph is not connected");
  if (!check_cycle_bound(g, 2 * k + 1, limits).satisfied)
    throw PreconditionError("cycle-bound", "graph has a cycle longer than "
                                               + std::to_string(2 * k + 1));
  if (!induces_connected(g, s))
    throw PreconditionError("set-disconnected", "S does not induce a "
                                                "connected subgraph");
  if (std::find(s.begin(), s.end(), u1) != s.end())
    throw PreconditionError("u1-in-set", "u1 must lie outside S");
  bool touches = std::any_of(s.begin(), s.end(),
                             [&](Vertex v) { return g.adjacent(u1, v); });
  if (!touches)
    throw PreconditionError("u1-not-adjacent", "u1 must be adjacent to S");

  auto from_s = bfs_distances(g, s);
  auto from_u = bfs_distances(g, u1);
  for (const auto &e : g.edges()) {
    auto in_t = [&](Vertex x) { return from_u[x] <= k && from_s[x] > k; };
    auto in_r = [&](Vertex x) { return from_s[x] <= k && from_u[x] > k; };
    if ((in_t(e.u) && in_r(e.v)) || (in_t(e.v) && in_r(e.u)))
      return false;
  }
  return true;
}

}  // namespace wllab
