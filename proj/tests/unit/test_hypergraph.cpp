#include <gtest/gtest.h>

#include <sstream>

#include "hyperabc/hyperabc.hpp"

using namespace hyperabc;

namespace {

HypergraphErrc build_error(int k, int n, std::vector<Edge> edges, std::optional<std::size_t>* index = nullptr) {
  try {
    UniformHypergraph::build(k, n, std::move(edges));
  } catch (const HypergraphError& e) {
    if (index) *index = e.edge_index();
    return e.code();
  }
  ADD_FAILURE() << "build accepted invalid input";
  return HypergraphErrc::bad_uniformity;
}

}  // namespace

TEST(Build, SingleEdge) {
  const auto g = UniformHypergraph::build(3, 3, {{0, 1, 2}});
  EXPECT_EQ(g.m(), 1);
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.k(), 3);
}

TEST(Build, SmallStarMatchesGenerator) {
  const auto g = UniformHypergraph::build(3, 5, {{0, 1, 2}, {0, 3, 4}});
  EXPECT_EQ(g, hyperstar(2, 3));
}

TEST(Build, EdgesAreNormalized) {
  const auto a = UniformHypergraph::build(3, 5, {{4, 3, 0}, {2, 0, 1}});
  const auto b = UniformHypergraph::build(3, 5, {{0, 1, 2}, {0, 3, 4}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.find_edge({3, 0, 4}).has_value());
  EXPECT_FALSE(a.find_edge({1, 3, 4}).has_value());
}

TEST(Build, DistinctErrors) {
  std::optional<std::size_t> idx;
  EXPECT_EQ(build_error(2, 3, {{0, 1}, {0, 1}}, &idx), HypergraphErrc::duplicate_edge);
  EXPECT_EQ(idx, std::optional<std::size_t>(1));
  EXPECT_EQ(build_error(2, 3, {{1, 0}, {2, 1}, {0, 1}}, &idx), HypergraphErrc::duplicate_edge);
  EXPECT_EQ(idx, std::optional<std::size_t>(2));
  EXPECT_EQ(build_error(3, 4, {{0, 1, 2}, {0, 1}}, &idx), HypergraphErrc::wrong_cardinality);
  EXPECT_EQ(idx, std::optional<std::size_t>(1));
  EXPECT_EQ(build_error(3, 4, {{0, 1, 1}}, &idx), HypergraphErrc::repeated_vertex);
  EXPECT_EQ(idx, std::optional<std::size_t>(0));
  EXPECT_EQ(build_error(3, 4, {{0, 1, 2}, {1, 2, 4}}, &idx), HypergraphErrc::vertex_out_of_range);
  EXPECT_EQ(idx, std::optional<std::size_t>(1));
  EXPECT_EQ(build_error(3, 4, {{-1, 1, 2}}), HypergraphErrc::vertex_out_of_range);
  EXPECT_EQ(build_error(1, 4, {{0}}), HypergraphErrc::bad_uniformity);
  EXPECT_EQ(build_error(3, 2, {{0, 1, 2}}), HypergraphErrc::too_few_vertices);
  EXPECT_EQ(build_error(3, 4, {}), HypergraphErrc::empty_edge_list);
}

TEST(Degrees, Hyperstar) {
  const auto dv = degrees(hyperstar(3, 3));
  EXPECT_EQ(dv.degrees[0], 3);
  EXPECT_EQ(std::count(dv.degrees.begin(), dv.degrees.end(), 1), 6);
  EXPECT_EQ(dv.max_degree, 3);
  EXPECT_EQ(dv.min_degree, 1);
}

TEST(Degrees, SingleEdgeK4) {
  const auto dv = degrees(hyperstar(1, 4));
  EXPECT_EQ(dv.degrees, std::vector<int>(4, 1));
  EXPECT_EQ(dv.max_degree, 1);
  EXPECT_EQ(dv.min_degree, 1);
  EXPECT_TRUE(is_regular(hyperstar(1, 4)));
}

TEST(Degrees, Hypercycle) {
  const auto dv = degrees(hypercycle(3, 3));
  EXPECT_EQ(std::count(dv.degrees.begin(), dv.degrees.end(), 2), 3);
  EXPECT_EQ(std::count(dv.degrees.begin(), dv.degrees.end(), 1), 3);
  EXPECT_EQ(std::accumulate(dv.degrees.begin(), dv.degrees.end(), 0), 9);
}

TEST(Connectivity, Examples) {
  for (int m = 1; m <= 6; ++m) EXPECT_TRUE(is_connected(hyperstar(m, 3)));
  EXPECT_FALSE(is_connected(UniformHypergraph::build(3, 6, {{0, 1, 2}, {3, 4, 5}})));
  EXPECT_TRUE(is_connected(hypercycle(4, 3)));
  EXPECT_FALSE(is_connected(UniformHypergraph::build(2, 4, {{0, 1}})));
}

TEST(Classify, Hyperstar) {
  const auto r = classify(hyperstar(4, 3));
  EXPECT_TRUE(r.connected);
  EXPECT_EQ(r.kind, StructureKind::hypertree);
  EXPECT_TRUE(r.linear);
  EXPECT_FALSE(r.girth.has_value());
  EXPECT_EQ(r.girth_status, GirthStatus::acyclic);
  ASSERT_TRUE(r.power_hypertree.has_value());
  EXPECT_TRUE(*r.power_hypertree);
}

TEST(Classify, NonPowerHypertree) {
  const auto r = classify(s_composition(5, 3, {2, 1, 1}));
  EXPECT_EQ(r.kind, StructureKind::hypertree);
  ASSERT_TRUE(r.power_hypertree.has_value());
  EXPECT_FALSE(*r.power_hypertree);
}

TEST(Classify, UnicyclicGirthTwo) {
  const auto r = classify(unicyclic_family(5, 3, 2, {3, 0, 0}));
  EXPECT_EQ(r.kind, StructureKind::unicyclic);
  EXPECT_FALSE(r.linear);
  EXPECT_EQ(r.girth, std::optional<int>(2));
  EXPECT_FALSE(r.power_hypertree.has_value());
}

TEST(Classify, Hypercycles) {
  for (int g = 2; g <= 6; ++g) {
    for (int k = 3; k <= 4; ++k) {
      const auto r = classify(hypercycle(g, k));
      EXPECT_EQ(r.kind, StructureKind::unicyclic) << g << ' ' << k;
      EXPECT_EQ(r.girth, std::optional<int>(g)) << g << ' ' << k;
      EXPECT_EQ(r.linear, g >= 3);
    }
  }
}

TEST(Classify, PowerHypertreeNotDefinedForGraphs) {
  const auto r = classify(hyperpath(3, 2));
  EXPECT_EQ(r.kind, StructureKind::hypertree);
  EXPECT_FALSE(r.power_hypertree.has_value());
}

TEST(Classify, OtherAndDisconnected) {
  const auto r = classify(complete(5, 3));
  EXPECT_EQ(r.kind, StructureKind::other);
  EXPECT_EQ(r.girth, std::optional<int>(2));
  const auto d = classify(UniformHypergraph::build(3, 6, {{0, 1, 2}, {3, 4, 5}}));
  EXPECT_FALSE(d.connected);
  EXPECT_EQ(d.kind, StructureKind::other);
}

TEST(Classify, GraphTriangleGirth) {
  const auto tri = UniformHypergraph::build(2, 3, {{0, 1}, {1, 2}, {0, 2}});
  const auto r = classify(tri);
  EXPECT_EQ(r.kind, StructureKind::unicyclic);
  EXPECT_EQ(r.girth, std::optional<int>(3));
}

TEST(Classify, GirthBudgetReportsUndetermined) {
  ClassifyOptions opts;
  opts.girth_node_budget = 1;
  const auto r = classify(hypercycle(6, 3), opts);
  EXPECT_EQ(r.girth_status, GirthStatus::undetermined);
  EXPECT_FALSE(r.girth.has_value());
  EXPECT_EQ(r.kind, StructureKind::unicyclic);
}

TEST(Classify, GirthOnUnicyclicFamilies) {
  for (int g = 2; g <= 3; ++g) {
    for (int m = g; m <= 6; ++m) {
      const auto r = classify(unicyclic_family(m, 3, g, {m - g, 0, 0}));
      EXPECT_EQ(r.kind, StructureKind::unicyclic);
      EXPECT_EQ(r.girth, std::optional<int>(g));
    }
  }
}

TEST(UhgIo, RoundTrip) {
  for (const auto& g : {hyperstar(5, 3), hypercycle(4, 4), t_family(7, 3), complete(5, 3)}) {
    EXPECT_EQ(parse_uhg(to_uhg(g, "note")), g);
  }
}

TEST(UhgIo, CommentsAndBlankLines) {
  const auto g = parse_uhg("# a star\n\nuhg 3 5 2\n# first edge\n0 1 2\n\n0 3 4\n");
  EXPECT_EQ(g, hyperstar(2, 3));
}

TEST(UhgIo, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_uhg(text);
    } catch (const UhgParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("uhg 3 5 2\n0 1 2\n0 1 2\n"), 3u);
  EXPECT_EQ(line_of("uhg 3 5 2\n0 1 2\n"), 3u);
  EXPECT_EQ(line_of("hg 3 5 2\n"), 1u);
  EXPECT_EQ(line_of("# c\nuhg 3 5 1\n0 1 x\n"), 3u);
  EXPECT_EQ(line_of("uhg 3 5 1\n0 1\n"), 2u);
  EXPECT_EQ(line_of("uhg 3 5 1\n0 1 2\n0 3 4\n"), 3u);
  EXPECT_GT(line_of(""), 0u);
}
