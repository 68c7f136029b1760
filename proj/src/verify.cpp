//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "wllab/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <tuple>
#include <utility>

#include "wllab/canonical.hpp"
#include "wllab/error.hpp"
#include "wllab/structure.hpp"
#include "wllab/synth.hpp"
#include "wllab/wl.hpp"

namespace wllab {

std::string VerificationReport::status() const {
  if (!violations.empty())
    return "FAIL";
  return explore ? "EXPLORATORY" : "PASS";
}

namespace {

using Clock = std::chrono::steady_clock;

std::string pool_id(std::size_t i) { return "pool#" + std::to_string(i); }

void check_common(int n_max, int feature_classes) {
  if (n_max < 1)
    throw InputError("n_max must be at least 1");
  if (feature_classes < 1)
    throw InputError("need at least one feature class");
}

enum class Filter { kNone, kSeparable, kStronglySeparable };

struct TheoremSetup {
  std::string id;
  WlVariant variant;
  int wl_k;
  int cycle_bound;
  Filter filter;
  /// k for construct_isomorphism.
  int construct_k;
  /// Whether the construction's hypotheses follow from the theorem's.
  bool construct_guaranteed;
};

struct Entry {
  std::string id;
  FeaturedGraph g;
  WlRun run;
  bool separable;
};

class TheoremHarness {
public:
  TheoremHarness(TheoremSetup setup, int n_max, int feature_classes,
                 const VerifyOptions &options)
      : s_(std::move(setup)), opt_(options), rng_(options.seed) {
    r_.theorem = s_.id;
    r_.k = s_.wl_k;
    r_.n_max = n_max;
    r_.feature_classes = feature_classes;
    r_.cycle_bound = s_.cycle_bound;
    r_.explore = options.explore;
    r_.seed = options.seed;
  }

  VerificationReport run() {
    const auto start = Clock::now();
    auto pool = enumerate_connected_up_to(r_.n_max, s_.cycle_bound,
                                          r_.feature_classes, opt_.limits);
    r_.graphs_enumerated = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i)
      admit(pool_id(i), pool[i], false);
    for (std::size_t i = 0; i < opt_.injected.size(); ++i)
      admit("injected#" + std::to_string(i), opt_.injected[i], true);

    compare_buckets();
    for (const auto &e : entries_)
      self_pair(e);
    r_.elapsed = Clock::now() - start;
    return std::move(r_);
  }

private:
  void filter_out(const std::string &id, const std::string &hypothesis,
                  bool record) {
    ++r_.graphs_filtered;
    if (record)
      r_.filtered.push_back({ id, hypothesis });
  }

  bool passes_filter(const FeaturedGraph &g, const WlRun &run) const {
    switch (s_.filter) {
    case Filter::kNone:
      return true;
    case Filter::kSeparable:
      return is_k_separable(g, run, all_pairs_distances(g)).separable;
    case Filter::kStronglySeparable:
      return is_k_strongly_separable(g, run, all_pairs_distances(g)).separable;
    }
    return true;
  }

  static std::string filter_name(Filter f) {
    return f == Filter::kSeparable ? "k-separable" : "k-strongly-separable";
  }

  void admit(const std::string &id, const FeaturedGraph &g, bool injected) {
    if (!is_connected(g)) {
      filter_out(id, "connected", injected);
      return;
    }
    if (!check_cycle_bound(g, s_.cycle_bound, opt_.limits).satisfied) {
      filter_out(id, "cycle-bound", injected);
      return;
    }
    auto run = run_wl(g, s_.variant, s_.wl_k, interner_, opt_.limits);
    bool separable = passes_filter(g, run);
    if (!separable && !opt_.explore) {
      filter_out(id, filter_name(s_.filter), injected);
      return;
    }
    ++r_.graphs_admitted;
    entries_.push_back({ id, g, std::move(run), separable });
  }

  void compare_buckets() {
    std::map<std::tuple<std::size_t, std::size_t, std::vector<ColorId>>,
             std::vector<std::size_t>>
        buckets;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto &run = entries_[i].run;
      buckets[{ run.size(), run.stabilized_at, run.final_multiset() }]
          .push_back(i);
    }
    r_.buckets = buckets.size();
    for (const auto &[key, members] : buckets)
      for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y)
          compare(entries_[members[x]], entries_[members[y]]);
  }

  void compare(const Entry &a, const Entry &b) {
    ++r_.pairs_checked;
    auto witness = are_isomorphic(a.g, b.g);
    if (witness) {
      if (!is_isomorphism(a.g, b.g, *witness))
        add_violation("oracle", a.id, b.id, a.g, b.g, "indistinguishable",
                      "isomorphic", *witness, "oracle witness does not "
                                              "validate");
      else
        construct(a, b.g, b.id, &*witness);
      return;
    }
    if (opt_.explore && (!a.separable || !b.separable)) {
      r_.findings.push_back(a.id + " and " + b.id
                            + " are indistinguishable but not isomorphic; "
                              "at least one fails "
                            + filter_name(s_.filter));
      return;
    }
    add_violation("completeness", a.id, b.id, a.g, b.g, "indistinguishable",
                  "non-isomorphic", {}, "");
  }

  void self_pair(const Entry &e) {
    auto perm = random_permutation(e.g.size(), rng_);
    auto h = e.g.permuted(perm);
    const std::string hid = e.id + "/relabeled";
    auto run = run_wl(h, s_.variant, s_.wl_k, interner_, opt_.limits);
    ++r_.self_pairs_checked;
    if (!indistinguishable(e.run, run)) {
      add_violation("soundness", e.id, hid, e.g, h, "distinguishable",
                    "isomorphic", perm, "");
      return;
    }
    const auto &before = e.run.final_coloring().colors;
    const auto &after = run.final_coloring().colors;
    for (Vertex v = 0; v < e.g.size(); ++v) {
      if (before[v] != after[perm[v]]) {
        add_violation("equivariance", e.id, hid, e.g, h, "indistinguishable",
                      "isomorphic", perm,
                      "vertex " + std::to_string(v)
                          + " changed color under relabeling");
        return;
      }
    }
    construct(e, h, hid, nullptr);
  }

  // Runs the proof construction on an isomorphic pair and cross-checks the
  // result against the oracle.
  void construct(const Entry &a, const FeaturedGraph &h,
                 const std::string &hid, const VertexMap *oracle) {
    std::optional<VertexMap> built;
    try {
      built = construct_isomorphism(a.g, h, s_.construct_k, opt_.limits);
    } catch (const PreconditionError &err) {
      if (s_.construct_guaranteed && a.separable)
        add_violation("construction", a.id, hid, a.g, h, "indistinguishable",
                      "isomorphic", {},
                      std::string("hypothesis rejected: ") + err.which());
      else
        ++r_.constructions_skipped;
      return;
    } catch (const ConstructionError &err) {
      std::vector<Vertex> flat;
      for (auto [x, y] : err.partial_map()) {
        flat.push_back(x);
        flat.push_back(y);
      }
      add_violation("construction", a.id, hid, a.g, h, "indistinguishable",
                    "isomorphic", flat, err.what());
      return;
    }
    if (!built) {
      add_violation("construction", a.id, hid, a.g, h, "distinguishable",
                    "isomorphic", {},
                    "subgraph WL used by the construction separates an "
                    "isomorphic pair");
      return;
    }
    bool agrees = oracle != nullptr || are_isomorphic(a.g, h).has_value();
    if (!is_isomorphism(a.g, h, *built) || !agrees) {
      add_violation("construction", a.id, hid, a.g, h, "indistinguishable",
                    agrees ? "isomorphic" : "non-isomorphic", *built,
                    "constructed map does not validate");
      return;
    }
    ++r_.constructions_verified;
  }

  void add_violation(std::string kind, const std::string &ida,
                     const std::string &idb, const FeaturedGraph &a,
                     const FeaturedGraph &b, std::string wl,
                     std::string oracle, std::vector<Vertex> witness,
                     std::string detail) {
    r_.violations.push_back({ std::move(kind), ida, idb, a, b, std::move(wl),
                              std::move(oracle), std::move(witness),
                              std::move(detail) });
  }

  TheoremSetup s_;
  const VerifyOptions &opt_;
  std::mt19937_64 rng_;
  ColorInterner interner_;
  std::vector<Entry> entries_;
  VerificationReport r_;
};

}  // namespace

VerificationReport verify_theorem_1hop(int n_max, int feature_classes,
                                       const VerifyOptions &options) {
  check_common(n_max, feature_classes);
  TheoremSetup setup { "t32", WlVariant::kKHopSubgraph, 1, 3, Filter::kNone,
                       1, true };
  return TheoremHarness(setup, n_max, feature_classes, options).run();
}

VerificationReport verify_theorem_khop_subgraph(int k, int n_max,
                                                int feature_classes,
                                                const VerifyOptions &options) {
  check_common(n_max, feature_classes);
  if (k < 2)
    throw InputError("this theorem needs k >= 2");
  TheoremSetup setup { "t35", WlVariant::kKHopSubgraph, k, 2 * k + 1,
                       Filter::kSeparable, k, true };
  return TheoremHarness(setup, n_max, feature_classes, options).run();
}

// Strong separability makes k-hop colors determine (k-1)-hop subgraphs, so
// the construction runs at k - 1. Its separability hypothesis is only
// implied when k - 1 = 1.
VerificationReport verify_theorem_khop(int k, int n_max, int feature_classes,
                                       const VerifyOptions &options) {
  check_common(n_max, feature_classes);
  if (k < 1)
    throw InputError("k must be at least 1");
  TheoremSetup setup { "t38",
                       WlVariant::kKHop,
                       k,
                       2 * k - 1,
                       k == 1 ? Filter::kNone : Filter::kStronglySeparable,
                       std::max(1, k - 1),
                       k <= 2 };
  return TheoremHarness(setup, n_max, feature_classes, options).run();
}

namespace {

using RunKey = std::pair<std::size_t, std::vector<ColorId>>;

RunKey key_of(const WlRun &run) {
  return { run.stabilized_at, run.final_multiset() };
}

}  // namespace

VerificationReport verify_hierarchy(int n_max, int feature_classes,
                                    const VerifyOptions &options) {
  check_common(n_max, feature_classes);
  const auto start = Clock::now();
  VerificationReport r;
  r.theorem = "hierarchy";
  r.n_max = n_max;
  r.feature_classes = feature_classes;
  r.cycle_bound = kNoCycleBound;
  r.seed = options.seed;

  auto pool = enumerate_connected_up_to(n_max, kNoCycleBound, feature_classes,
                                        options.limits);
  r.graphs_enumerated = r.graphs_admitted = pool.size();
  ColorInterner interner;
  std::vector<RunKey> classic;
  for (const auto &g : pool)
    classic.push_back(key_of(classic_wl(g, interner)));

  // A coarser key must be a function of the finer one.
  auto check_function = [&](const std::vector<RunKey> &finer,
                            const std::vector<RunKey> &coarser,
                            const std::string &what) {
    std::map<RunKey, std::size_t> first;
    for (std::size_t i = 0; i < finer.size(); ++i) {
      auto [it, inserted] = first.try_emplace(finer[i], i);
      if (inserted)
        continue;
      ++r.pairs_checked;
      if (coarser[it->second] != coarser[i])
        r.violations.push_back(
            { "hierarchy", pool_id(it->second), pool_id(i), pool[it->second],
              pool[i], "indistinguishable", "", {}, what });
    }
    r.buckets += first.size();
  };

  for (int k = 1; k <= std::max(1, n_max - 1); ++k) {
    std::vector<RunKey> khop, sub;
    for (const auto &g : pool) {
      khop.push_back(key_of(khop_wl(g, k, interner)));
      sub.push_back(key_of(khop_subgraph_wl(g, k, interner, options.limits)));
    }
    const std::string ks = std::to_string(k);
    check_function(khop, classic, "classic separates a pair that " + ks
                                      + "-hop WL does not");
    check_function(sub, khop, ks + "-hop WL separates a pair that " + ks
                                  + "-hop subgraph WL does not");
    check_function(sub, classic, "classic separates a pair that " + ks
                                     + "-hop subgraph WL does not");
  }

  auto strict = [&](const std::string &name, int k) {
    auto fx = fixture(name);
    const auto &a = fx.graphs[0].graph;
    const auto &b = fx.graphs[1].graph;
    ColorInterner local;
    bool classic_same =
        indistinguishable(classic_wl(a, local), classic_wl(b, local));
    bool sub_same =
        indistinguishable(khop_subgraph_wl(a, k, local, options.limits),
                          khop_subgraph_wl(b, k, local, options.limits));
    ++r.samples_checked;
    if (classic_same && !sub_same)
      r.findings.push_back("strictness witness: " + name + " is separated by "
                           + std::to_string(k)
                           + "-hop subgraph WL but not by classic WL");
    else
      r.violations.push_back({ "strictness", name + "/0", name + "/1", a, b,
                               classic_same ? "indistinguishable"
                                            : "distinguishable",
                               "non-isomorphic", {},
                               "expected a strictness witness at k = "
                                   + std::to_string(k) });
  };
  strict("fig3_pair", 3);
  strict("fig1_pair", 2);

  r.elapsed = Clock::now() - start;
  return r;
}

VerificationReport verify_lemma_c1(int k, int n_max,
                                   const VerifyOptions &options) {
  check_common(n_max, 1);
  if (k < 2)
    throw InputError("the edge-exclusion property needs k >= 2");
  const auto start = Clock::now();
  VerificationReport r;
  r.theorem = "lemma-c1";
  r.k = k;
  r.n_max = n_max;
  r.feature_classes = 1;
  r.cycle_bound = 2 * k + 1;
  r.seed = options.seed;

  auto pool = enumerate_connected_up_to(n_max, 2 * k + 1, 1, options.limits);
  r.graphs_enumerated = r.graphs_admitted = pool.size();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto &g = pool[i];
    const int n = g.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Vertex> s;
      for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1)
          s.push_back(v);
      if (!induces_connected(g, s))
        continue;
      for (Vertex u = 0; u < n; ++u) {
        if ((mask >> u) & 1)
          continue;
        bool touches = std::any_of(s.begin(), s.end(),
                                   [&](Vertex x) { return g.adjacent(u, x); });
        if (!touches)
          continue;
        ++r.samples_checked;
        if (!check_lemma_c1(g, s, u, k, options.limits)) {
          auto witness = s;
          witness.push_back(u);
          r.violations.push_back({ "lemma", pool_id(i), "", g, std::nullopt,
                                   "", "", witness,
                                   "edge between the two difference sets; "
                                   "witness is S followed by u1" });
        }
      }
    }
  }
  r.elapsed = Clock::now() - start;
  return r;
}

VerificationReport verify_fixtures(const VerifyOptions &options) {
  const auto start = Clock::now();
  VerificationReport r;
  r.theorem = "fixtures";
  r.seed = options.seed;
  const Limits &lim = options.limits;

  auto claim = [&](bool ok, const std::string &what) {
    ++r.samples_checked;
    if (!ok)
      r.violations.push_back({ "fixture", "", "", std::nullopt, std::nullopt,
                               "", "", {}, what });
  };
  auto regular = [](const FeaturedGraph &g, int d) {
    for (Vertex v = 0; v < g.size(); ++v)
      if (g.degree(v) != d)
        return false;
    return true;
  };
  auto same = [&](const FeaturedGraph &a, const FeaturedGraph &b,
                  WlVariant variant, int k) {
    ColorInterner interner;
    return indistinguishable(run_wl(a, variant, k, interner, lim),
                             run_wl(b, variant, k, interner, lim));
  };

  {
    auto fx = fixture("fig1_pair");
    const auto &a = fx.graphs[0].graph;
    const auto &b = fx.graphs[1].graph;
    claim(a.size() == 8 && b.size() == 8 && a.num_edges() == 8
              && b.num_edges() == 8 && regular(a, 2) && regular(b, 2),
          "fig1: 8 vertices, 8 edges, 2-regular");
    claim(!is_connected(a) && is_connected(b),
          "fig1: left disconnected, right connected");
    claim(!are_isomorphic(a, b), "fig1: oracle finds no isomorphism");
    claim(same(a, b, WlVariant::kClassic, 1),
          "fig1: classic WL does not separate the pair");
    claim(!same(a, b, WlVariant::kKHopSubgraph, 2),
          "fig1: 2-hop subgraph WL separates the pair");
    ColorInterner interner;
    auto ca = colored_by_features(a, interner).colors;
    auto cb = colored_by_features(b, interner).colors;
    claim(canonical_code(extract_rooted_subgraph(a, ca, 0, 2), lim)
              != canonical_code(extract_rooted_subgraph(b, cb, 0, 2), lim),
          "fig1: rooted 2-hop subgraphs at v1 get different codes");
  }
  {
    auto fx = fixture("fig3_pair");
    const auto &a = fx.graphs[0].graph;
    const auto &b = fx.graphs[1].graph;
    claim(a.size() == 14 && b.size() == 14, "fig3: 14 vertices each");
    claim(is_connected(a) && is_connected(b), "fig3: both connected");
    claim(check_cycle_bound(a, 7, lim).satisfied
              && check_cycle_bound(b, 7, lim).satisfied,
          "fig3: no cycle longer than 7");
    claim(is_k_separable(a, 3, lim).separable
              && is_k_separable(b, 3, lim).separable,
          "fig3: both 3-separable");
    claim(!are_isomorphic(a, b), "fig3: oracle finds no isomorphism");
    claim(same(a, b, WlVariant::kClassic, 1),
          "fig3: classic WL does not separate the pair");
    claim(!same(a, b, WlVariant::kKHopSubgraph, 3),
          "fig3: 3-hop subgraph WL separates the pair");
  }
  {
    auto fx = fixture("fig4_pair");
    const auto &a = fx.graphs[0].graph;
    const auto &b = fx.graphs[1].graph;
    claim(a.size() == 6 && b.size() == 6 && regular(a, 3) && regular(b, 3),
          "fig4: 3-regular on 6 vertices");
    claim(!are_isomorphic(a, b), "fig4: oracle finds no isomorphism");
    claim(circumference(a, lim).circumference == 6
              && circumference(b, lim).circumference == 6,
          "fig4: both Hamiltonian");
    for (int k = 1; k <= 3; ++k)
      claim(!is_k_strongly_separable(a, k).separable
                && !is_k_strongly_separable(b, k).separable,
            "fig4: neither is " + std::to_string(k)
                + "-strongly separable");
    for (int k = 1; k <= 5; ++k)
      claim(same(a, b, WlVariant::kKHop, k),
            "fig4: " + std::to_string(k) + "-hop WL does not separate");
    bool rejected = false;
    try {
      construct_isomorphism(a, b, 2, lim);
    } catch (const PreconditionError &) {
      rejected = true;
    }
    claim(rejected, "fig4: construction at k = 2 rejects its hypotheses");
  }
  for (int k = 1; k <= 3; ++k) {
    auto [a, b] = cycle_pair(k);
    claim(a.size() == b.size(),
          "cycle pair k = " + std::to_string(k) + ": equal sizes");
    claim(same(a, b, WlVariant::kKHopSubgraph, k),
          "cycle pair k = " + std::to_string(k)
              + ": k-hop subgraph WL does not separate");
  }
  {
    auto [a, b] = cycle_pair(1);
    claim(!same(a, b, WlVariant::kKHopSubgraph, 2),
          "cycle pair k = 1: 2-hop subgraph WL separates");
  }
  r.elapsed = Clock::now() - start;
  return r;
}

VerificationReport verify_soundness(std::size_t pairs, int n_max,
                                    const VerifyOptions &options) {
  check_common(n_max, 1);
  const auto start = Clock::now();
  VerificationReport r;
  r.theorem = "soundness";
  r.n_max = n_max;
  r.feature_classes = 3;
  r.seed = options.seed;

  const std::vector<std::pair<WlVariant, int>> variants {
    { WlVariant::kClassic, 1 },      { WlVariant::kKHop, 1 },
    { WlVariant::kKHop, 2 },         { WlVariant::kKHop, 3 },
    { WlVariant::kKHopSubgraph, 1 }, { WlVariant::kKHopSubgraph, 2 },
  };
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> pick_n(1, n_max);
  std::uniform_int_distribution<int> pick_classes(1, 3);
  for (std::size_t i = 0; i < pairs; ++i) {
    const int n = pick_n(rng);
    auto g = random_bounded_graph(n, kNoCycleBound, pick_classes(rng), rng(),
                                  1, options.limits);
    auto perm = random_permutation(n, rng);
    auto h = g.permuted(perm);
    ++r.self_pairs_checked;
    for (auto [variant, k] : variants) {
      ColorInterner interner;
      auto ra = run_wl(g, variant, k, interner, options.limits);
      auto rb = run_wl(h, variant, k, interner, options.limits);
      ++r.pairs_checked;
      const std::string id = "sample#" + std::to_string(i);
      const std::string label =
          std::string(to_string(variant)) + " k=" + std::to_string(k);
      if (!indistinguishable(ra, rb)) {
        r.violations.push_back({ "soundness", id, id + "/relabeled", g, h,
                                 "distinguishable", "isomorphic", perm,
                                 label });
        continue;
      }
      const auto &ca = ra.final_coloring().colors;
      const auto &cb = rb.final_coloring().colors;
      for (Vertex v = 0; v < n; ++v) {
        if (ca[v] != cb[perm[v]]) {
          r.violations.push_back({ "equivariance", id, id + "/relabeled", g,
                                   h, "indistinguishable", "isomorphic", perm,
                                   label });
          break;
        }
      }
    }
  }
  r.elapsed = Clock::now() - start;
  return r;
}

}  // namespace wllab
