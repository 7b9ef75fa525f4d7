#include <gtest/gtest.h>

#include "pivotminor/pivot.hpp"
#include "support.hpp"

using namespace pivotminor;
using testing_support::random_bipartite;
using testing_support::random_graph;

TEST(Pivot, PathToCycle) {
  Graph p4 = path_graph(4);
  PivotClasses c = pivot_classes(p4, 1, 2);
  EXPECT_EQ(c.v1, VertexSet{0});
  EXPECT_EQ(c.v2, VertexSet{3});
  EXPECT_TRUE(c.v3.empty());
  Graph out = pivot(p4, 1, 2);
  EXPECT_EQ(out.edge_count(), 4U);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(out.degree(v), 2);
  EXPECT_TRUE(out.has_edge(0, 3));
  EXPECT_TRUE(is_isomorphic(out, cycle_graph(4)));
  // The swap moves 0's attachment from 1 to 2.
  EXPECT_TRUE(out.has_edge(0, 2));
  EXPECT_FALSE(out.has_edge(0, 1));
}

TEST(Pivot, TriangleFixed) {
  EXPECT_EQ(pivot(complete_graph(3), 0, 1), complete_graph(3));
}

TEST(Pivot, NonEdgeRejected) {
  try {
    pivot(path_graph(4), 0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnEdge);
  }
}

TEST(Pivot, MatchesDefinitionOracle) {
  for (int t = 0; t < 300; ++t) {
    Graph g = random_graph(12);
    for (auto [u, v] : g.edges()) {
      EXPECT_EQ(pivot(g, u, v), testing_support::definition_pivot(g, u, v));
      EXPECT_EQ(pivot(g, v, u), pivot(g, u, v));
    }
  }
}

TEST(Pivot, InvolutionAndEdgeKept) {
  for (int t = 0; t < 300; ++t) {
    Graph g = random_graph(12);
    for (auto [u, v] : g.edges()) {
      Graph once = pivot(g, u, v);
      EXPECT_TRUE(once.has_edge(u, v));
      EXPECT_EQ(once.size(), g.size());
      EXPECT_EQ(pivot(once, u, v), g);
    }
  }
}

TEST(Pivot, PreservesBipartiteness) {
  for (int t = 0; t < 300; ++t) {
    Graph g = random_bipartite(12);
    for (auto [u, v] : g.edges()) EXPECT_TRUE(is_bipartite(pivot(g, u, v)));
  }
}

TEST(Pivot, LabelsStayWithIndices) {
  Graph g = path_graph(4);
  g.set_label(1, "u");
  g.set_label(2, "v");
  Graph out = pivot(g, 1, 2);
  EXPECT_EQ(out.label(1), "u");
  EXPECT_EQ(out.label(2), "v");
}

TEST(Witness, Apply) {
  Graph p4 = path_graph(4);
  EXPECT_EQ(apply_witness(p4, {}).graph, p4);
  PivotWitness w{{PivotStep::pivot(1, 2), PivotStep::remove(1), PivotStep::remove(2)}, {}};
  AppliedWitness a = apply_witness(p4, w);
  EXPECT_EQ(a.graph, complete_graph(2));
  EXPECT_EQ(a.original_of, (std::vector<Vertex>{0, 3}));
}

TEST(Witness, MissingVertexCarriesStep) {
  PivotWitness w{{PivotStep::remove(1), PivotStep::pivot(1, 2)}, {}};
  try {
    apply_witness(path_graph(4), w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingVertex);
    EXPECT_EQ(e.step(), std::optional<std::size_t>(1));
  }
  PivotWitness bad{{PivotStep::remove(0), PivotStep::pivot(1, 3)}, {}};
  try {
    apply_witness(path_graph(4), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnEdge);
    EXPECT_EQ(e.step(), std::optional<std::size_t>(1));
  }
}

TEST(Witness, Verify) {
  Graph p4 = path_graph(4);
  PivotWitness w{{PivotStep::pivot(1, 2), PivotStep::remove(1), PivotStep::remove(2)}, {}};
  WitnessVerdict ok = verify_witness(p4, complete_graph(2), w);
  EXPECT_TRUE(ok.accepted);
  EXPECT_EQ(ok.isomorphism.size(), 2U);
  EXPECT_FALSE(verify_witness(p4, complete_graph(3), w).accepted);
  EXPECT_TRUE(verify_witness(p4, p4, {}).accepted);
  WitnessVerdict bad = verify_witness(p4, complete_graph(2), PivotWitness{{PivotStep::pivot(0, 2)}, {}});
  EXPECT_FALSE(bad.accepted);
  EXPECT_EQ(bad.failing_step, std::optional<std::size_t>(0));
}

TEST(Witness, RandomWitnessesVerifyAgainstTheirResult) {
  for (int t = 0; t < 200; ++t) {
    Graph g = random_graph(10);
    if (g.size() == 0) continue;
    PivotWitness w;
    Graph cur = g;
    std::vector<Vertex> orig(static_cast<std::size_t>(g.size()));
    for (Vertex v = 0; v < g.size(); ++v) orig[v] = v;
    for (int s = 0; s < 6 && cur.size() > 0; ++s) {
      auto edges = cur.edges();
      if (!edges.empty() && testing_support::uniform_int(0, 1) == 0) {
        auto [a, b] = edges[static_cast<std::size_t>(testing_support::uniform_int(0, static_cast<int>(edges.size()) - 1))];
        w.steps.push_back(PivotStep::pivot(orig[a], orig[b]));
        cur = pivot(cur, a, b);
      } else {
        Vertex x = testing_support::uniform_int(0, cur.size() - 1);
        w.steps.push_back(PivotStep::remove(orig[x]));
        cur = remove_vertices(cur, VertexSet{x});
        orig.erase(orig.begin() + x);
      }
    }
    AppliedWitness a = apply_witness(g, w);
    EXPECT_EQ(a.graph, cur);
    EXPECT_EQ(a.original_of, orig);
    EXPECT_TRUE(verify_witness(g, a.graph, w).accepted);
  }
}

TEST(Witness, TextRoundTrip) {
  PivotWitness w{{PivotStep::pivot(4, 7), PivotStep::remove(3)}, {}};
  EXPECT_EQ(format_witness(w), "P 4 7\nD 3\n");
  EXPECT_EQ(parse_witness("P 4 7\n# comment\n\nD 3\n").steps, w.steps);
  EXPECT_THROW(parse_witness("X 1\n"), Error);
  EXPECT_THROW(parse_witness("P 1\n"), Error);
}
