#include <gtest/gtest.h>

#include "pivotminor/canonical.hpp"
#include "pivotminor/embedding.hpp"
#include "pivotminor/enumerate.hpp"
#include "support.hpp"

using namespace pivotminor;
using testing_support::brute_isomorphic;
using testing_support::permuted;
using testing_support::random_graph;
using testing_support::random_permutation;

TEST(Canonical, Examples) {
  Graph c5 = cycle_graph(5);
  EXPECT_TRUE(is_isomorphic(c5, permuted(c5, {3, 0, 4, 1, 2})));
  EXPECT_FALSE(is_isomorphic(path_graph(4), star_graph(3)));
}

TEST(Canonical, CertificateReproducesRows) {
  for (int t = 0; t < 200; ++t) {
    Graph g = random_graph(12);
    CanonicalForm f = canonical(g);
    Graph relabelled = relabel(g, f.perm);
    EXPECT_EQ(relabelled, f.graph());
    EXPECT_EQ(encode_graph6(relabelled), f.key());
    EXPECT_EQ(f.bits().size(), static_cast<std::size_t>(g.size() * (g.size() - (g.size() > 0)) / 2));
  }
}

TEST(Canonical, InvariantUnderRelabelling) {
  for (int t = 0; t < 300; ++t) {
    Graph g = random_graph(12);
    Graph h = permuted(g, random_permutation(g.size()));
    EXPECT_EQ(canonical(g), canonical(h));
    auto map = find_isomorphism(g, h);
    ASSERT_TRUE(map.has_value());
    for (auto [u, v] : g.edges()) EXPECT_TRUE(h.has_edge((*map)[u], (*map)[v]));
  }
}

TEST(Canonical, AgreesWithBruteForce) {
  for (int t = 0; t < 400; ++t) {
    const int n = testing_support::uniform_int(1, 8);
    Graph g = random_graph(n, 0.5);
    Graph h = random_graph(n, 0.5);
    if (t % 3 == 0) h = permuted(g, random_permutation(n));
    EXPECT_EQ(canonical(g) == canonical(h), brute_isomorphic(g, h)) << encode_graph6(g) << " " << encode_graph6(h);
  }
}

TEST(Canonical, HardRegularPairs) {
  // Two 3-regular graphs on 8 vertices that refinement alone cannot split:
  // the cube and the Wagner graph.
  Graph cube(8, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 5}, {5, 7}, {7, 6}, {6, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  Graph wagner = cycle_graph(8);
  for (Vertex v = 0; v < 4; ++v) wagner.add_edge(v, v + 4);
  EXPECT_FALSE(is_isomorphic(cube, wagner));
  EXPECT_EQ(is_isomorphic(cube, wagner), brute_isomorphic(cube, wagner));
  EXPECT_TRUE(is_isomorphic(cube, permuted(cube, random_permutation(8))));
  // C6 vs 2 K3.
  EXPECT_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
}

TEST(Canonical, TierLimit) {
  EXPECT_THROW(canonical(Graph(13)), Error);
  EXPECT_NO_THROW(canonical(cycle_graph(30), 64));
}

TEST(Enumerate, ClassCountsMatchKnownSequence) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(graphs_up_to_isomorphism(n).size(), expected[n]) << n;
  EXPECT_EQ(graphs_up_to_isomorphism_through(3).size(), 7U);
  EXPECT_EQ(labeled_graphs(3).size(), 8U);
}

TEST(Embedding, Examples) {
  EXPECT_TRUE(induced_embedding(path_graph(3), cycle_graph(5)).has_value());
  EXPECT_FALSE(induced_embedding(complete_graph(3), cycle_graph(5)).has_value());
  EXPECT_FALSE(induced_embedding(cycle_graph(4), complete_graph(4)).has_value());
}

TEST(Embedding, MapIsInducedAndComplete) {
  for (int t = 0; t < 200; ++t) {
    Graph host = random_graph(9);
    Graph pat = random_graph(4);
    auto map = induced_embedding(pat, host);
    // Oracle: try every injective map.
    bool exists = false;
    if (pat.size() <= host.size()) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << host.size()) && !exists; ++s) {
        VertexSet sub(s);
        if (sub.size() != pat.size()) continue;
        exists = brute_isomorphic(induced(host, sub), pat);
      }
    }
    EXPECT_EQ(map.has_value(), exists);
    if (map) {
      for (Vertex a = 0; a < pat.size(); ++a)
        for (Vertex b = a + 1; b < pat.size(); ++b) EXPECT_EQ(pat.has_edge(a, b), host.has_edge((*map)[a], (*map)[b]));
    }
  }
}

TEST(Embedding, BudgetIsDistinguishedFromAbsence) {
  EmbeddingOptions opt;
  opt.budget = 3;
  try {
    induced_embedding(complete_graph(5), edgeless_graph(20), opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExhausted);
  }
}

TEST(Embedding, Domains) {
  EmbeddingOptions opt;
  opt.domains = {VertexSet{3}, VertexSet{0, 1, 2, 3, 4}};
  auto map = induced_embedding(complete_graph(2), path_graph(5), opt);
  ASSERT_TRUE(map.has_value());
  EXPECT_EQ((*map)[0], 3);
  EXPECT_EQ((*map)[1], 2);
}
