//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wllab/error.hpp"
#include "wllab/io.hpp"
#include "wllab/structure.hpp"
#include "wllab/synth.hpp"
#include "wllab/verify.hpp"

using namespace wllab;

namespace {

std::string precondition_of(const FeaturedGraph &g, const FeaturedGraph &h,
                            int k) {
  try {
    construct_isomorphism(g, h, k);
  } catch (const PreconditionError &e) {
    return e.which();
  }
  return "none";
}

std::string without_elapsed(std::string json) {
  auto pos = json.find("\"elapsed_seconds\"");
  return json.substr(0, pos);
}

}  // namespace

TEST(Construct, RelabeledGraphsYieldVerifiedBijections) {
  std::mt19937_64 rng(12);
  for (const auto &g : enumerate_connected_up_to(7, 3, 2)) {
    auto perm = random_permutation(g.size(), rng);
    auto h = g.permuted(perm);
    auto map = construct_isomorphism(g, h, 1);
    ASSERT_TRUE(map.has_value());
    ASSERT_TRUE(is_isomorphism(g, h, *map));
  }
}

TEST(Construct, FigureThreeGraphAgainstItself) {
  std::mt19937_64 rng(13);
  for (const auto &ng : fixture("fig3_pair").graphs) {
    auto h = ng.graph.permuted(random_permutation(14, rng));
    auto map = construct_isomorphism(ng.graph, h, 3);
    ASSERT_TRUE(map.has_value());
    EXPECT_TRUE(is_isomorphism(ng.graph, h, *map));
  }
}

TEST(Construct, SeparableGraphsAtLargerRadius) {
  std::mt19937_64 rng(14);
  std::size_t built = 0;
  for (int k = 2; k <= 3; ++k) {
    for (const auto &g : enumerate_connected_up_to(7, 2 * k + 1, 1)) {
      if (!is_k_separable(g, k).separable)
        continue;
      auto h = g.permuted(random_permutation(g.size(), rng));
      auto map = construct_isomorphism(g, h, k);
      ASSERT_TRUE(map.has_value());
      ASSERT_TRUE(is_isomorphism(g, h, *map));
      ++built;
    }
  }
  EXPECT_GT(built, 100u);
}

TEST(Construct, DistinguishablePairGivesNothing) {
  EXPECT_FALSE(construct_isomorphism(path_graph(4), path_graph(5), 1));
  auto star = FeaturedGraph::uniform(4, { { 0, 1 }, { 0, 2 }, { 0, 3 } });
  EXPECT_FALSE(construct_isomorphism(path_graph(4), star, 1));
}

TEST(Construct, Preconditions) {
  auto fig4 = fixture("fig4_pair");
  EXPECT_EQ(precondition_of(fig4.graphs[0].graph, fig4.graphs[1].graph, 2),
            "k-separable");
  auto fig1 = fixture("fig1_pair");
  EXPECT_EQ(precondition_of(fig1.graphs[0].graph, fig1.graphs[1].graph, 2),
            "connected");
  EXPECT_EQ(precondition_of(cycle_graph(5), cycle_graph(5), 1), "cycle-bound");
  EXPECT_EQ(precondition_of(path_graph(5), path_graph(5), 1), "none");
  EXPECT_THROW(construct_isomorphism(path_graph(2), path_graph(2), 0),
               InputError);
}

TEST(TheoremOneHop, SmallPoolsPass) {
  for (int classes = 1; classes <= 2; ++classes) {
    auto r = verify_theorem_1hop(6, classes);
    EXPECT_TRUE(r.passed()) << report_to_json(r);
    EXPECT_EQ(r.status(), "PASS");
    EXPECT_EQ(r.graphs_admitted, r.graphs_enumerated);
    EXPECT_EQ(r.constructions_verified, r.graphs_admitted);
    EXPECT_EQ(r.self_pairs_checked, r.graphs_admitted);
  }
}

TEST(TheoremOneHop, DisconnectedInjectionIsFiltered) {
  VerifyOptions opt;
  auto fx = fixture("fig1_pair");
  opt.injected = { fx.graphs[0].graph, fx.graphs[1].graph };
  auto r = verify_theorem_1hop(4, 1, opt);
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.filtered.size(), 2u);
  EXPECT_EQ(r.filtered[0].hypothesis, "connected");
  EXPECT_EQ(r.filtered[1].hypothesis, "cycle-bound");
}

TEST(TheoremOneHop, DuplicateInjectionIsComparedAndConstructed) {
  VerifyOptions opt;
  auto pool = enumerate_connected_up_to(5, 3, 1);
  std::mt19937_64 rng(3);
  const auto &g = pool.back();
  opt.injected = { g.permuted(random_permutation(g.size(), rng)) };
  auto r = verify_theorem_1hop(5, 1, opt);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.pairs_checked, 1u);
  EXPECT_EQ(r.constructions_verified, r.graphs_admitted + 1);
}

TEST(TheoremSubgraph, RadiusTwoPasses) {
  auto r = verify_theorem_khop_subgraph(2, 6, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.graphs_filtered, 0u);
  EXPECT_EQ(r.constructions_skipped, 0u);
}

TEST(TheoremSubgraph, FigureThreeInjectionIsAdmittedAndSeparated) {
  VerifyOptions opt;
  auto fx = fixture("fig3_pair");
  opt.injected = { fx.graphs[0].graph, fx.graphs[1].graph };
  auto r = verify_theorem_khop_subgraph(3, 3, 1, opt);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.filtered.empty());
  EXPECT_EQ(r.graphs_admitted, r.graphs_enumerated - r.graphs_filtered + 2);
}

TEST(TheoremSubgraph, ExploreModeNeverFails) {
  VerifyOptions opt;
  opt.explore = true;
  auto r = verify_theorem_khop_subgraph(2, 6, 1, opt);
  EXPECT_EQ(r.status(), "EXPLORATORY");
  EXPECT_EQ(r.graphs_filtered, 0u);
  EXPECT_THROW(verify_theorem_khop_subgraph(1, 5, 1), InputError);
}

TEST(TheoremKHop, RadiusTwoPasses) {
  auto r = verify_theorem_khop(2, 6, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cycle_bound, 3);
}

TEST(TheoremKHop, TreesUnderRadiusOne) {
  auto r = verify_theorem_khop(1, 8, 1);
  EXPECT_TRUE(r.passed());
  // unlabeled trees on 1..8 vertices
  EXPECT_EQ(r.graphs_enumerated, 1u + 1 + 1 + 2 + 3 + 6 + 11 + 23);
  EXPECT_EQ(r.graphs_filtered, 0u);
}

TEST(TheoremKHop, FigureFourRejectedByStrongSeparability) {
  VerifyOptions opt;
  auto fx = fixture("fig4_pair");
  opt.injected = { fx.graphs[0].graph, fx.graphs[1].graph };
  auto r = verify_theorem_khop(4, 3, 1, opt);
  ASSERT_EQ(r.filtered.size(), 2u);
  for (const auto &f : r.filtered)
    EXPECT_EQ(f.hypothesis, "k-strongly-separable");
}

TEST(Hierarchy, ContainmentAndStrictness) {
  auto r = verify_hierarchy(6);
  EXPECT_TRUE(r.passed()) << report_to_json(r);
  EXPECT_EQ(r.findings.size(), 2u);
  EXPECT_GT(r.pairs_checked, 0u);
}

TEST(LemmaC1, ExhaustiveSmallPool) {
  auto r = verify_lemma_c1(2, 6);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.samples_checked, 1000u);
  auto r3 = verify_lemma_c1(3, 6);
  EXPECT_TRUE(r3.passed());
}

TEST(Fixtures, PinnedClaimsHold) {
  auto r = verify_fixtures();
  EXPECT_TRUE(r.passed()) << report_to_json(r);
  EXPECT_GT(r.samples_checked, 20u);
}

TEST(Soundness, RandomRelabelings) {
  VerifyOptions opt;
  opt.seed = 5;
  auto r = verify_soundness(500, 9, opt);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.self_pairs_checked, 500u);
}

TEST(Reports, DeterministicGivenSeed) {
  VerifyOptions opt;
  opt.seed = 77;
  auto a = report_to_json(verify_theorem_1hop(5, 2, opt));
  auto b = report_to_json(verify_theorem_1hop(5, 2, opt));
  EXPECT_EQ(without_elapsed(a), without_elapsed(b));
  auto s1 = report_to_json(verify_soundness(50, 8, opt));
  auto s2 = report_to_json(verify_soundness(50, 8, opt));
  EXPECT_EQ(without_elapsed(s1), without_elapsed(s2));
}

TEST(Reports, FailingStatus) {
  VerificationReport r;
  r.theorem = "t32";
  EXPECT_EQ(r.status(), "PASS");
  r.violations.push_back({ "completeness", "a", "b", path_graph(2),
                           path_graph(2), "indistinguishable",
                           "non-isomorphic", {}, "" });
  EXPECT_EQ(r.status(), "FAIL");
  auto json = report_to_json(r);
  EXPECT_NE(json.find("\"FAIL\""), std::string::npos);
  EXPECT_NE(json.find("\"completeness\""), std::string::npos);
}
