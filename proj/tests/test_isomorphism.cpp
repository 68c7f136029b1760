//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wllab/isomorphism.hpp"
#include "wllab/synth.hpp"

using namespace wllab;

TEST(AreIsomorphic, RelabeledGraphHasValidWitness) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::random_graph(1 + trial % 10, 0.35, 3, rng);
    auto perm = random_permutation(g.size(), rng);
    auto h = g.permuted(perm);
    auto w = are_isomorphic(g, h);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_isomorphism(g, h, *w));
    EXPECT_TRUE(is_isomorphism(g, h, perm));
  }
}

TEST(AreIsomorphic, FigurePairsAreNot) {
  for (const char *name : { "fig1_pair", "fig3_pair", "fig4_pair" }) {
    auto fx = fixture(name);
    EXPECT_FALSE(are_isomorphic(fx.graphs[0].graph, fx.graphs[1].graph))
        << name;
  }
}

TEST(AreIsomorphic, FeaturesMustMatch) {
  auto a = FeaturedGraph::with_classes({ { 0, 1 } }, { 0, 1 });
  auto b = FeaturedGraph::with_classes({ { 0, 1 } }, { 0, 0 });
  EXPECT_FALSE(are_isomorphic(a, b));
  auto c = FeaturedGraph::with_classes({ { 0, 1 } }, { 1, 0 });
  auto w = are_isomorphic(a, c);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (VertexMap { 1, 0 }));
}

TEST(AreIsomorphic, AgreesWithPermutationSearch) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 7;
    auto a = oracle::random_graph(n, 0.45, 2, rng);
    auto b = oracle::random_graph(n, 0.45, 2, rng);
    if (trial % 3 == 0)
      b = a.permuted(random_permutation(n, rng));
    bool expected = oracle::isomorphic_by_permutations(a, b);
    auto w = are_isomorphic(a, b);
    ASSERT_EQ(w.has_value(), expected);
    if (w) {
      EXPECT_TRUE(is_isomorphism(a, b, *w));
    }
  }
}

TEST(AreIsomorphic, RegularGraphsOfEqualDegree) {
  // every vertex has the same degree and feature, so only structure decides
  auto c6 = cycle_graph(6);
  auto two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
  EXPECT_FALSE(are_isomorphic(c6, two_triangles));
  EXPECT_TRUE(are_isomorphic(c6, c6.permuted(std::vector<Vertex> { 3, 1, 5, 0, 2, 4 })));
}

TEST(IsIsomorphism, RejectsBadMaps) {
  auto g = path_graph(3);
  EXPECT_FALSE(is_isomorphism(g, g, std::vector<Vertex> { 0, 0, 1 }));
  EXPECT_FALSE(is_isomorphism(g, g, std::vector<Vertex> { 1, 0, 2 }));
  EXPECT_FALSE(is_isomorphism(g, g, std::vector<Vertex> { 0, 1 }));
  EXPECT_FALSE(is_isomorphism(g, g, std::vector<Vertex> { 0, 1, 3 }));
  EXPECT_TRUE(is_isomorphism(g, g, std::vector<Vertex> { 2, 1, 0 }));
}

TEST(AreRootedIsomorphic, PinsTheRoot) {
  auto g = path_graph(3);
  std::vector<ColorId> colors(3, 0);
  auto end = extract_rooted_subgraph(g, colors, 0, 3);
  auto mid = extract_rooted_subgraph(g, colors, 1, 3);
  auto other_end = extract_rooted_subgraph(g, colors, 2, 3);
  EXPECT_FALSE(are_rooted_isomorphic(end, mid));
  auto w = are_rooted_isomorphic(end, other_end);
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_rooted_isomorphism(end, other_end, *w));
}

TEST(AreRootedIsomorphic, AgreesWithPinnedPermutationSearch) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    auto a = oracle::random_graph(n, 0.5, 2, rng);
    auto b = trial % 2 ? a.permuted(random_permutation(n, rng))
                       : oracle::random_graph(n, 0.5, 2, rng);
    const int ra = static_cast<int>(rng() % n);
    const int rb = static_cast<int>(rng() % n);
    auto to_rooted = [](const FeaturedGraph &g, int root) {
      RootedColoredGraph rg;
      rg.root = root;
      for (Vertex v = 0; v < g.size(); ++v) {
        rg.vertex_ids.push_back(v);
        rg.colors.push_back(static_cast<ColorId>(g.features(v)[0]));
      }
      rg.edges = g.edges();
      return rg;
    };
    bool expected = oracle::isomorphic_by_permutations(a, b, ra, rb);
    ASSERT_EQ(are_rooted_isomorphic(to_rooted(a, ra), to_rooted(b, rb)).has_value(),
              expected);
  }
}
