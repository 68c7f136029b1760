//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include <json.hpp>

#include "oracles.hpp"
#include "wllab/error.hpp"
#include "wllab/io.hpp"
#include "wllab/synth.hpp"

using namespace wllab;

namespace {

void expect_round_trip(const GraphDocument &doc) {
  auto text = serialize_graph_document(doc);
  auto back = parse_graph_document(text);
  ASSERT_EQ(back.graph, doc.graph) << text;
  EXPECT_EQ(back.labels, doc.labels);
  EXPECT_EQ(serialize_graph_document(back), text);
}

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

}  // namespace

TEST(GraphDocument, FixturesRoundTrip) {
  for (const auto &name : fixture_names())
    for (const auto &ng : fixture(name).graphs) {
      expect_round_trip({ ng.graph, ng.labels });
      expect_round_trip({ ng.graph, std::nullopt });
    }
}

TEST(GraphDocument, EnumeratedGraphsRoundTrip) {
  for (const auto &g : enumerate_connected_up_to(5, 5, 2))
    expect_round_trip({ g, std::nullopt });
}

TEST(GraphDocument, AwkwardNumbersRoundTrip) {
  const std::vector<double> values {
    -0.0, 0.0, 0.1, 1e300, -1e300, 5e-324, 2.2250738585072014e-308,
    std::numeric_limits<double>::max(), 1.0 / 3.0, 123456789012345680.0,
    1e22, -7.0,
  };
  std::vector<std::vector<double>> features;
  for (double x : values)
    features.push_back({ x, -x });
  FeaturedGraph g(static_cast<int>(values.size()), {}, features);
  auto back = parse_graph_document(serialize_graph_document({ g, std::nullopt }));
  for (int v = 0; v < g.size(); ++v)
    for (int d = 0; d < 2; ++d)
      EXPECT_TRUE(same_bits(back.graph.features(v)[d], g.features(v)[d]))
          << values[v];
}

TEST(GraphDocument, RandomDoublesRoundTripBitExact) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    double x = std::bit_cast<double>(rng());
    if (!std::isfinite(x))
      continue;
    double y = parse_graph_document("{\"n\":1,\"m\":1,\"features\":[["
                                    + format_number(x) + "]],\"edges\":[]}")
                   .graph.features(0)[0];
    ASSERT_TRUE(same_bits(x, y)) << format_number(x);
  }
}

TEST(FormatNumber, Shortest) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(-0.0), "-0.0");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(3.0), "3");
  EXPECT_THROW(format_number(std::nan("")), InputError);
  EXPECT_THROW(format_number(INFINITY), InputError);
}

TEST(GraphDocument, SerializesCanonically) {
  auto g = FeaturedGraph::uniform(3, { { 2, 1 }, { 1, 0 } });
  EXPECT_EQ(serialize_graph_document({ g, std::nullopt }),
            "{\n  \"n\": 3,\n  \"m\": 1,\n  \"features\": [[0], [0], [0]],\n"
            "  \"edges\": [[0, 1], [1, 2]]\n}\n");
}

TEST(GraphDocument, NonFiniteFeaturesRejected) {
  FeaturedGraph g(1, {}, { { INFINITY } });
  EXPECT_THROW(serialize_graph_document({ g, std::nullopt }), InputError);
  EXPECT_THROW(serialize_graph_document({ path_graph(2), std::vector<std::string> { "a" } }),
               InputError);
}

TEST(GraphDocument, ParseErrors) {
  const std::vector<std::string> bad {
    "",
    "[1, 2]",
    "{\"n\": 2}",
    "{\"n\": 1, \"m\": 1, \"features\": [[1]], \"edges\": [[0, 0]]}",
    "{\"n\": 2, \"m\": 1, \"features\": [[1]], \"edges\": []}",
    "{\"n\": 2, \"m\": 1, \"features\": [[1], [1, 2]], \"edges\": []}",
    "{\"n\": 2, \"m\": 1, \"features\": [[1], [1]], \"edges\": [[0, 2]]}",
    "{\"n\": 2, \"m\": 1, \"features\": [[1], [1]], \"edges\": [[0, 1], [1, 0]]}",
    "{\"n\": 2, \"m\": 1, \"features\": [[1], [\"x\"]], \"edges\": []}",
    "{\"n\": 2, \"m\": 1, \"features\": [[1], [1]], \"edges\": [], \"labels\": [\"a\"]}",
    "{\"n\": -1, \"m\": 1, \"features\": [], \"edges\": []}",
    "{\"n\": 1.5, \"m\": 1, \"features\": [[1]], \"edges\": []}",
    "{\"n\": 1, \"m\": 1, \"features\": [[1]], \"edges\": [[0]]}",
  };
  for (const auto &text : bad)
    EXPECT_THROW(parse_graph_document(text), InputError) << text;
}

TEST(GraphDocument, FilesRoundTrip) {
  auto dir = oracle::scratch_dir("io_files");
  auto fx = fixture("fig3_pair");
  GraphDocument doc { fx.graphs[1].graph, fx.graphs[1].labels };
  write_graph_document(dir / "g.json", doc);
  auto back = read_graph_document(dir / "g.json");
  EXPECT_EQ(back.graph, doc.graph);
  EXPECT_EQ(back.labels, doc.labels);
  EXPECT_THROW(read_graph_document(dir / "missing.json"), InputError);
}

TEST(Dot, FigureOneLeft) {
  auto fx = fixture("fig1_pair");
  auto dot = to_dot({ fx.graphs[0].graph, fx.graphs[0].labels });
  auto count = [&](const std::string &needle) {
    std::size_t c = 0;
    for (auto pos = dot.find(needle); pos != std::string::npos;
         pos = dot.find(needle, pos + 1))
      ++c;
    return c;
  };
  EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
  EXPECT_EQ(count(" -- "), 8u);
  EXPECT_EQ(count("[label="), 8u);
  EXPECT_EQ(count("class=\"0\""), 4u);
  EXPECT_EQ(count("class=\"1\""), 4u);
  EXPECT_NE(dot.find("label=\"v1\""), std::string::npos);
}

TEST(Dot, DefaultLabelsAreIndices) {
  auto dot = to_dot({ path_graph(2), std::nullopt });
  EXPECT_NE(dot.find("0 [label=\"0\""), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
}

TEST(ReportJson, ParsesWithExpectedShape) {
  VerificationReport r;
  r.theorem = "t35";
  r.k = 2;
  r.cycle_bound = kNoCycleBound;
  r.filtered.push_back({ "pool#3", "k-separable" });
  r.violations.push_back({ "soundness", "pool#1", "pool#1", path_graph(2),
                           std::nullopt, "distinguishable", "isomorphic",
                           { 1, 0 }, "classic" });
  auto j = nlohmann::json::parse(report_to_json(r));
  EXPECT_EQ(j["status"], "FAIL");
  EXPECT_TRUE(j["params"]["cycle_bound"].is_null());
  EXPECT_EQ(j["filtered"][0]["hypothesis"], "k-separable");
  EXPECT_EQ(j["violations"][0]["witness"], nlohmann::json({ 1, 0 }));
  EXPECT_EQ(j["violations"][0]["a"]["n"], 2);
  EXPECT_FALSE(j["violations"][0].contains("b"));
}
