//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "wllab/synth.hpp"

#include <map>
#include <random>
#include <string>

#include "wllab/canonical.hpp"
#include "wllab/error.hpp"
#include "wllab/structure.hpp"

namespace wllab {

namespace {

std::vector<std::string> labels_from(int first, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i)
    out.push_back("v" + std::to_string(first + i));
  return out;
}

// Edge lists below use the 1-based labels of the drawings.
std::vector<Edge> from_labels(std::initializer_list<std::pair<int, int>> pairs,
                              int first) {
  std::vector<Edge> out;
  for (auto [a, b] : pairs)
    out.push_back({ a - first, b - first });
  return out;
}

FixtureSet fig1_pair() {
  // red = 1 on odd labels, blue = 0 on even labels
  std::vector<int> classes { 1, 0, 1, 0, 1, 0, 1, 0 };
  auto left = from_labels(
      { { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 1 },
        { 5, 6 }, { 6, 7 }, { 7, 8 }, { 8, 5 } }, 1);
  auto right = from_labels(
      { { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 5 },
        { 5, 6 }, { 6, 7 }, { 7, 8 }, { 8, 1 } }, 1);
  return { "fig1_pair",
           { { FeaturedGraph::with_classes(left, classes), labels_from(1, 8) },
             { FeaturedGraph::with_classes(right, classes),
               labels_from(1, 8) } },
           "two 4-cycles vs one 8-cycle, alternating red/blue features" };
}

FixtureSet fig3_pair() {
  // Seven color classes, two vertices each: blue, red, green, black,
  // yellow, purple, gray.
  std::vector<int> classes { 0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6 };
  auto left = from_labels(
      { { 1, 2 }, { 1, 3 }, { 2, 4 }, { 1, 5 }, { 2, 6 }, { 3, 5 },
        { 4, 6 }, { 5, 7 }, { 6, 8 }, { 7, 9 }, { 8, 10 }, { 9, 11 },
        { 10, 12 }, { 11, 13 }, { 12, 14 } }, 1);
  auto right = from_labels(
      { { 15, 16 }, { 15, 17 }, { 16, 18 }, { 15, 20 }, { 16, 19 },
        { 17, 19 }, { 18, 20 }, { 19, 21 }, { 20, 22 }, { 21, 23 },
        { 22, 24 }, { 23, 25 }, { 24, 26 }, { 25, 27 }, { 26, 28 } }, 15);
  return { "fig3_pair",
           { { FeaturedGraph::with_classes(left, classes),
               labels_from(1, 14) },
             { FeaturedGraph::with_classes(right, classes),
               labels_from(15, 14) } },
           "two 14-vertex 3-separable graphs with seven color classes" };
}

FixtureSet fig4_pair() {
  auto left = from_labels(
      { { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 5 }, { 5, 6 }, { 6, 1 },
        { 1, 4 }, { 2, 5 }, { 3, 6 } }, 1);
  auto right = from_labels(
      { { 7, 11 }, { 8, 12 }, { 9, 7 }, { 10, 8 }, { 11, 9 }, { 12, 10 },
        { 7, 10 }, { 8, 11 }, { 9, 12 } }, 7);
  return { "fig4_pair",
           { { FeaturedGraph::uniform(6, left), labels_from(1, 6) },
             { FeaturedGraph::uniform(6, right), labels_from(7, 6) } },
           "K3,3 vs triangular prism, uniform features" };
}

}  // namespace

std::vector<std::string> fixture_names() {
  return { "fig1_pair", "fig3_pair", "fig4_pair" };
}

FixtureSet fixture(std::string_view name) {
  if (name == "fig1_pair")
    return fig1_pair();
  if (name == "fig3_pair")
    return fig3_pair();
  if (name == "fig4_pair")
    return fig4_pair();
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

FeaturedGraph cycle_graph(int n) {
  if (n < 3)
    throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({ i, (i + 1) % n });
  return FeaturedGraph::uniform(n, std::move(edges));
}

FeaturedGraph path_graph(int n) {
  if (n < 1)
    throw InputError("a path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({ i, i + 1 });
  return FeaturedGraph::uniform(n, std::move(edges));
}

FeaturedGraph disjoint_union(const FeaturedGraph &a, const FeaturedGraph &b) {
  if (a.feature_dim() != b.feature_dim())
    throw InputError("feature dimensions differ");
  std::vector<Edge> edges = a.edges();
  for (const auto &e : b.edges())
    edges.push_back({ e.u + a.size(), e.v + a.size() });
  std::vector<std::vector<double>> features;
  for (Vertex v = 0; v < a.size(); ++v)
    features.emplace_back(a.features(v).begin(), a.features(v).end());
  for (Vertex v = 0; v < b.size(); ++v)
    features.emplace_back(b.features(v).begin(), b.features(v).end());
  return FeaturedGraph(a.size() + b.size(), std::move(edges),
                       std::move(features));
}

std::pair<FeaturedGraph, FeaturedGraph> cycle_pair(int k) {
  if (k < 1)
    throw InputError("k must be at least 1");
  auto small = cycle_graph(2 * k + 2);
  return { disjoint_union(small, small), cycle_graph(4 * k + 4) };
}

namespace {

struct Shape {
  std::vector<Edge> edges;
  std::vector<int> classes;
};

void check_enumeration_args(int n, int max_circumference, int feature_classes,
                            const Limits &limits) {
  if (n < 1)
    throw InputError("n must be at least 1");
  if (feature_classes < 1)
    throw InputError("need at least one feature class");
  if (max_circumference < 0)
    throw InputError("cycle bound must be non-negative");
  std::size_t cap = feature_classes == 1 ? limits.enumeration_uniform
                                         : limits.enumeration_featured;
  if (static_cast<std::size_t>(n) > cap)
    throw CapacityError("enumeration limited to n <= " + std::to_string(cap)
                        + " with " + std::to_string(feature_classes)
                        + " feature class(es), got n = " + std::to_string(n));
}

// Every connected graph on n vertices has a non-cut vertex, and deleting it
// keeps the cycle bound. So the graphs on n vertices are the graphs on n - 1
// vertices plus one vertex of any class joined to any nonempty subset.
std::vector<std::vector<Shape>> enumerate_levels(int n_max,
                                                 int max_circumference,
                                                 int feature_classes,
                                                 const Limits &limits) {
  check_enumeration_args(n_max, max_circumference, feature_classes, limits);
  std::vector<std::vector<Shape>> levels;
  std::vector<Shape> level;
  for (int c = 0; c < feature_classes; ++c)
    level.push_back({ {}, { c } });
  levels.push_back(level);

  for (int n = 2; n <= n_max; ++n) {
    std::map<CanonicalCode, Shape> seen;
    const int prev = n - 1;
    for (const auto &base : levels.back()) {
      for (std::uint32_t subset = 1; subset < (1u << prev); ++subset) {
        std::vector<Edge> edges = base.edges;
        for (int u = 0; u < prev; ++u)
          if ((subset >> u) & 1)
            edges.push_back({ u, prev });
        if (max_circumference < n) {
          auto g = FeaturedGraph::uniform(n, edges);
          if (!check_cycle_bound(g, max_circumference, limits).satisfied)
            continue;
        }
        for (int c = 0; c < feature_classes; ++c) {
          Shape s { edges, base.classes };
          s.classes.push_back(c);
          ColoredGraph cg { n, s.edges, {} };
          for (int x : s.classes)
            cg.colors.push_back(static_cast<ColorId>(x));
          seen.try_emplace(canonical_code_unrooted(cg, limits), std::move(s));
        }
      }
    }
    level.clear();
    for (auto &[code, s] : seen)
      level.push_back(std::move(s));
    levels.push_back(std::move(level));
  }
  return levels;
}

FeaturedGraph to_graph(const Shape &s) {
  return FeaturedGraph::with_classes(s.edges, s.classes);
}

}  // namespace

std::vector<FeaturedGraph> enumerate_connected(int n, int max_circumference,
                                               int feature_classes,
                                               const Limits &limits) {
  auto levels = enumerate_levels(n, max_circumference, feature_classes, limits);
  std::vector<FeaturedGraph> out;
  for (const auto &s : levels.back())
    out.push_back(to_graph(s));
  return out;
}

std::vector<FeaturedGraph> enumerate_connected_up_to(int n_max,
                                                     int max_circumference,
                                                     int feature_classes,
                                                     const Limits &limits) {
  auto levels =
      enumerate_levels(n_max, max_circumference, feature_classes, limits);
  std::vector<FeaturedGraph> out;
  for (const auto &level : levels)
    for (const auto &s : level)
      out.push_back(to_graph(s));
  return out;
}

FeaturedGraph random_bounded_graph(int n, int max_circumference,
                                   int feature_classes, std::uint64_t seed,
                                   std::size_t budget, const Limits &limits) {
  if (n < 1)
    throw InputError("n must be at least 1");
  if (feature_classes < 1)
    throw InputError("need at least one feature class");
  if (max_circumference < 0)
    throw InputError("cycle bound must be non-negative");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_class(0, feature_classes - 1);
  std::bernoulli_distribution extra(1.0 / n);

  for (std::size_t draw = 0; draw < budget; ++draw) {
    // random recursive tree over a shuffled vertex order
    auto order = random_permutation(n, rng);
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
      std::uniform_int_distribution<int> parent(0, i - 1);
      edges.push_back({ order[parent(rng)], order[i] });
    }
    std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
    for (const auto &e : edges)
      used[static_cast<std::size_t>(e.u) * n + e.v] =
          used[static_cast<std::size_t>(e.v) * n + e.u] = 1;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!used[static_cast<std::size_t>(u) * n + v] && extra(rng))
          edges.push_back({ u, v });

    std::vector<int> classes(n);
    for (int &c : classes)
      c = pick_class(rng);
    auto g = FeaturedGraph::with_classes(std::move(edges), classes);
    if (max_circumference >= n
        || check_cycle_bound(g, max_circumference, limits).satisfied)
      return g;
  }
  throw SamplingBudgetError("no graph with circumference <= "
                            + std::to_string(max_circumference) + " on "
                            + std::to_string(n) + " vertices within "
                            + std::to_string(budget) + " draws");
}

}  // namespace wllab
