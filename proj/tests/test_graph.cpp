//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wllab/error.hpp"
#include "wllab/graph.hpp"
#include "wllab/synth.hpp"

using namespace wllab;

namespace {

std::vector<Vertex> sorted_image(const std::vector<Vertex> &set,
                                 const std::vector<Vertex> &perm) {
  std::vector<Vertex> out;
  for (Vertex v : set)
    out.push_back(perm[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(FeaturedGraph, RejectsInvalidInput) {
  EXPECT_THROW(FeaturedGraph::uniform(0, {}), InputError);
  EXPECT_THROW(FeaturedGraph::uniform(2, { { 0, 2 } }), InputError);
  EXPECT_THROW(FeaturedGraph::uniform(2, { { -1, 1 } }), InputError);
  EXPECT_THROW(FeaturedGraph::uniform(2, { { 1, 1 } }), InputError);
  EXPECT_THROW(FeaturedGraph::uniform(2, { { 0, 1 }, { 1, 0 } }), InputError);
  EXPECT_THROW(FeaturedGraph(2, {}, { { 1.0 }, { 1.0, 2.0 } }), InputError);
  EXPECT_THROW(FeaturedGraph(2, {}, { { 1.0 } }), InputError);
}

TEST(FeaturedGraph, NormalizesEdges) {
  auto g = FeaturedGraph::uniform(3, { { 2, 1 }, { 1, 0 } });
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge { 0, 1 }));
  EXPECT_EQ(g.edges()[1], (Edge { 1, 2 }));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_EQ(g.degree(1), 2);
}

TEST(FeaturedGraph, ZeroDimensionalFeaturesAreAllowed) {
  FeaturedGraph g(2, { { 0, 1 } }, { {}, {} });
  EXPECT_EQ(g.feature_dim(), 0);
  EXPECT_EQ(g.feature_key(0), g.feature_key(1));
}

TEST(FeaturedGraph, FeaturesCompareBitExactly) {
  FeaturedGraph a(1, {}, { { 0.0 } });
  FeaturedGraph b(1, {}, { { -0.0 } });
  EXPECT_NE(a.feature_key(0), b.feature_key(0));
  EXPECT_FALSE(a == b);
}

TEST(FeaturedGraph, PermutedMovesVertexToImage) {
  auto g = FeaturedGraph::with_classes({ { 0, 1 } }, { 5, 6, 7 });
  auto h = g.permuted(std::vector<Vertex> { 2, 0, 1 });
  EXPECT_TRUE(h.adjacent(2, 0));
  EXPECT_EQ(h.features(2)[0], 5.0);
  EXPECT_EQ(h.features(0)[0], 6.0);
  EXPECT_THROW(g.permuted(std::vector<Vertex> { 0, 0, 1 }), InputError);
}

TEST(Distances, SingleVertex) {
  auto dm = all_pairs_distances(FeaturedGraph::uniform(1, {}));
  EXPECT_EQ(dm.size(), 1);
  EXPECT_EQ(dm(0, 0), 0);
}

TEST(Distances, PathOfThree) {
  auto dm = all_pairs_distances(path_graph(3));
  EXPECT_EQ(dm(0, 2), 2);
}

TEST(Distances, DisjointCyclesAreUnreachable) {
  const auto left = fixture("fig1_pair").graphs[0].graph;
  auto dm = all_pairs_distances(left);
  EXPECT_EQ(dm(0, 4), kUnreachable);
  EXPECT_EQ(dm(0, 2), 2);
}

TEST(Distances, MatrixInvariantsOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_graph(2 + trial % 9, 0.3, 2, rng);
    auto dm = all_pairs_distances(g);
    const int n = g.size();
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(dm(i, i), 0);
      for (int j = 0; j < n; ++j) {
        EXPECT_EQ(dm(i, j), dm(j, i));
        EXPECT_EQ(dm(i, j) == 1, g.adjacent(i, j));
        for (int l = 0; l < n; ++l)
          if (dm(i, l) != kUnreachable && dm(l, j) != kUnreachable) {
            EXPECT_LE(dm(i, j), dm(i, l) + dm(l, j));
          }
      }
    }
  }
}

TEST(Neighborhood, IsolatedVertex) {
  auto dm = all_pairs_distances(FeaturedGraph::uniform(3, { { 1, 2 } }));
  for (int k = 1; k <= 3; ++k)
    EXPECT_EQ(k_hop_neighborhood(dm, 0, k), std::vector<Vertex> { 0 });
}

TEST(Neighborhood, EightCycleTwoHops) {
  const auto right = fixture("fig1_pair").graphs[1].graph;
  auto dm = all_pairs_distances(right);
  // v1, v2, v3, v7, v8
  EXPECT_EQ(k_hop_neighborhood(dm, 0, 2), (std::vector<Vertex> { 0, 1, 2, 6, 7 }));
}

TEST(Neighborhood, FourCycleTwoHopsIsEverything) {
  auto dm = all_pairs_distances(cycle_graph(4));
  for (Vertex v = 0; v < 4; ++v)
    EXPECT_EQ(k_hop_neighborhood(dm, v, 2), (std::vector<Vertex> { 0, 1, 2, 3 }));
}

TEST(Neighborhood, RejectsBadArguments) {
  auto dm = all_pairs_distances(cycle_graph(4));
  EXPECT_THROW(k_hop_neighborhood(dm, 4, 1), InputError);
  EXPECT_THROW(k_hop_neighborhood(dm, -1, 1), InputError);
  EXPECT_THROW(k_hop_neighborhood(dm, 0, 0), InputError);
}

TEST(Neighborhood, MonotoneAndSaturating) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_graph(3 + trial % 8, 0.25, 1, rng);
    auto dm = all_pairs_distances(g);
    for (Vertex v = 0; v < g.size(); ++v) {
      std::vector<Vertex> component;
      for (Vertex u = 0; u < g.size(); ++u)
        if (dm(v, u) != kUnreachable)
          component.push_back(u);
      auto prev = k_hop_neighborhood(dm, v, 1);
      EXPECT_TRUE(std::binary_search(prev.begin(), prev.end(), v));
      for (int k = 2; k <= g.size(); ++k) {
        auto cur = k_hop_neighborhood(dm, v, k);
        EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(),
                                  prev.end()));
        prev = cur;
      }
      EXPECT_EQ(prev, component);
    }
  }
}

TEST(RootedSubgraph, EightCycleGivesFivePath) {
  const auto right = fixture("fig1_pair").graphs[1].graph;
  std::vector<ColorId> colors(8);
  for (int v = 0; v < 8; ++v)
    colors[v] = 100 + v;
  auto rg = extract_rooted_subgraph(right, colors, 0, 2);
  EXPECT_EQ(rg.vertex_ids, (std::vector<Vertex> { 0, 1, 2, 6, 7 }));
  EXPECT_EQ(rg.vertex_ids[rg.root], 0);
  // v7-v8-v1-v2-v3 as local positions 3-4-0-1-2
  std::vector<Edge> expect { { 0, 1 }, { 0, 4 }, { 1, 2 }, { 3, 4 } };
  EXPECT_EQ(rg.edges, expect);
  for (std::size_t i = 0; i < rg.size(); ++i)
    EXPECT_EQ(rg.colors[i], colors[rg.vertex_ids[i]]);
}

TEST(RootedSubgraph, FourCycleIsWhole) {
  const auto left = fixture("fig1_pair").graphs[0].graph;
  std::vector<ColorId> colors(8, 1);
  auto rg = extract_rooted_subgraph(left, colors, 0, 2);
  EXPECT_EQ(rg.vertex_ids, (std::vector<Vertex> { 0, 1, 2, 3 }));
  EXPECT_EQ(rg.edges.size(), 4u);
}

TEST(RootedSubgraph, SaturatesAtComponent) {
  auto g = disjoint_union(path_graph(4), cycle_graph(3));
  std::vector<ColorId> colors(7, 0);
  auto rg = extract_rooted_subgraph(g, colors, 1, 10);
  EXPECT_EQ(rg.vertex_ids, (std::vector<Vertex> { 0, 1, 2, 3 }));
  EXPECT_EQ(rg.edges.size(), 3u);
}

TEST(RootedSubgraph, RejectsMismatchedColoring) {
  std::vector<ColorId> colors(3, 0);
  EXPECT_THROW(extract_rooted_subgraph(cycle_graph(4), colors, 0, 1),
               InputError);
}

TEST(RootedSubgraph, InducedEdgesMatchParent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_graph(4 + trial % 7, 0.35, 1, rng);
    std::vector<ColorId> colors(g.size(), 0);
    auto dm = all_pairs_distances(g);
    for (Vertex v = 0; v < g.size(); ++v) {
      for (int k = 1; k <= 3; ++k) {
        auto rg = extract_rooted_subgraph(g, colors, v, k);
        EXPECT_EQ(rg.vertex_ids, k_hop_neighborhood(dm, v, k));
        std::size_t expected = 0;
        for (std::size_t i = 0; i < rg.size(); ++i)
          for (std::size_t j = i + 1; j < rg.size(); ++j)
            expected += g.adjacent(rg.vertex_ids[i], rg.vertex_ids[j]);
        EXPECT_EQ(rg.edges.size(), expected);
        for (const auto &e : rg.edges)
          EXPECT_TRUE(g.adjacent(rg.vertex_ids[e.u], rg.vertex_ids[e.v]));
      }
    }
  }
}

TEST(GraphCore, EquivariantUnderRelabeling) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::random_graph(3 + trial % 8, 0.3, 2, rng);
    auto perm = random_permutation(g.size(), rng);
    auto h = g.permuted(perm);
    auto dg = all_pairs_distances(g);
    auto dh = all_pairs_distances(h);
    std::vector<ColorId> cg(g.size()), ch(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
      ch[perm[v]] = cg[v] = static_cast<ColorId>(v);
    for (Vertex u = 0; u < g.size(); ++u) {
      for (Vertex v = 0; v < g.size(); ++v)
        EXPECT_EQ(dg(u, v), dh(perm[u], perm[v]));
      for (int k = 1; k <= 3; ++k) {
        EXPECT_EQ(sorted_image(k_hop_neighborhood(dg, u, k), perm),
                  k_hop_neighborhood(dh, perm[u], k));
        auto rg = extract_rooted_subgraph(g, cg, u, k);
        auto rh = extract_rooted_subgraph(h, ch, perm[u], k);
        EXPECT_EQ(sorted_image(rg.vertex_ids, perm), rh.vertex_ids);
        EXPECT_EQ(rg.edges.size(), rh.edges.size());
      }
    }
  }
}
