#include <gtest/gtest.h>

#include "pivotminor/coherence.hpp"
#include "pivotminor/enumerate.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace pivotminor;
using testing_support::uniform_int;
using namespace testing_oracles;

namespace {

VertexSet random_subset(int n) {
  VertexSet s;
  for (Vertex v = 0; v < n; ++v)
    if (uniform_int(0, 1)) s.insert(v);
  return s;
}

}  // namespace

TEST(Mass, Examples) {
  Graph c5 = cycle_graph(5);
  MassedGraph u = MassedGraph::uniform(c5);
  EXPECT_EQ(u(c5.vertices()), Rational(1));
  EXPECT_EQ(u(VertexSet{0, 2}), Rational(2, 5));
  MassedGraph chi = MassedGraph::chromatic(complete_graph(4));
  EXPECT_EQ(chi(VertexSet{0, 1}), Rational(1, 2));
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(chromatic_number(cycle_graph(6)), 2);
  EXPECT_EQ(chromatic_number(complete_graph(7)), 7);
  EXPECT_EQ(chromatic_number(edgeless_graph(3)), 1);
  EXPECT_THROW(MassedGraph::chromatic(edgeless_graph(17)), Error);
  EXPECT_THROW(MassedGraph::weighted(path_graph(2), {Rational(1, 2), Rational(1, 3)}), Error);
  EXPECT_THROW(MassedGraph::weighted(path_graph(2), {Rational(3, 2), Rational(-1, 2)}), Error);
}

TEST(Mass, ChromaticAgainstBruteForce) {
  // k-colourability by trying every assignment.
  for (int t = 0; t < 40; ++t) {
    Graph g = testing_support::random_graph(uniform_int(1, 7), 0.5);
    int brute = 0;
    for (int k = 1; k <= g.size() && brute == 0; ++k) {
      std::vector<int> col(static_cast<std::size_t>(g.size()), 0);
      while (true) {
        bool proper = true;
        for (auto [a, b] : g.edges()) proper = proper && col[a] != col[b];
        if (proper) {
          brute = k;
          break;
        }
        std::size_t i = 0;
        while (i < col.size() && ++col[i] == k) col[i++] = 0;
        if (i == col.size()) break;
      }
    }
    EXPECT_EQ(chromatic_number(g), brute) << encode_graph6(g);
  }
}

TEST(Mass, Axioms) {
  for (int t = 0; t < 150; ++t) {
    Graph g = testing_support::random_graph(uniform_int(1, 10), 0.4);
    MassedGraph mg = random_mass(g);
    EXPECT_EQ(mg(VertexSet{}), Rational(0));
    EXPECT_EQ(mg(g.vertices()), Rational(1));
    for (int s = 0; s < 20; ++s) {
      VertexSet x = random_subset(g.size());
      VertexSet y = random_subset(g.size());
      EXPECT_LE(mg(x & y), mg(x));
      EXPECT_LE(mg(x), mg(x | y));
      EXPECT_LE(mg(x | y), mg(x) + mg(y));
    }
  }
}

TEST(Dominance, Examples) {
  Graph c5 = cycle_graph(5);
  MassedGraph u = MassedGraph::uniform(c5);
  EXPECT_TRUE(is_dominant(u, c5.vertices(), 1));
  EXPECT_FALSE(is_dominant(u, VertexSet{0}, parse_rational("0.7")));
  EXPECT_TRUE(is_dominant(u, VertexSet{0}, Rational(3, 5)));
  Graph star = star_graph(4);
  EXPECT_TRUE(is_dominant(MassedGraph::uniform(star), VertexSet{0}, 1));
}

TEST(AnticompletePair, Examples) {
  AnticompletePair e4 = max_anticomplete_pair(MassedGraph::uniform(edgeless_graph(4)));
  EXPECT_EQ(e4.value, Rational(1, 2));
  EXPECT_EQ(e4.a.size(), 2);
  EXPECT_EQ(e4.b.size(), 2);
  AnticompletePair k4 = max_anticomplete_pair(MassedGraph::uniform(complete_graph(4)));
  EXPECT_EQ(k4.value, Rational(0));
  EXPECT_TRUE(k4.a.empty());
  EXPECT_TRUE(k4.b.empty());
  AnticompletePair c5 = max_anticomplete_pair(MassedGraph::uniform(cycle_graph(5)));
  EXPECT_EQ(c5.value, Rational(1, 5));
  EXPECT_EQ(c5.a, VertexSet{0});
  EXPECT_EQ(c5.b, (VertexSet{2, 3}));
  EXPECT_THROW(max_anticomplete_pair(MassedGraph::uniform(edgeless_graph(25))), Error);
}

TEST(AnticompletePair, LexOrder) {
  EXPECT_TRUE(lex_less(VertexSet{0}, VertexSet{0, 1}));
  EXPECT_TRUE(lex_less(VertexSet{0, 1}, VertexSet{0, 2}));
  EXPECT_TRUE(lex_less(VertexSet{0, 5}, VertexSet{1}));
  EXPECT_FALSE(lex_less(VertexSet{1}, VertexSet{0, 5}));
  EXPECT_FALSE(lex_less(VertexSet{2}, VertexSet{2}));
  for (int t = 0; t < 300; ++t) {
    VertexSet a = random_subset(6);
    VertexSet b = random_subset(6);
    EXPECT_EQ(lex_less(a, b), a.to_vector() < b.to_vector());
  }
}

TEST(AnticompletePair, ExhaustiveSmallClasses) {
  for (const Graph& g : graphs_up_to_isomorphism_through(7)) {
    MassedGraph mg = MassedGraph::uniform(g);
    AnticompletePair p = max_anticomplete_pair(mg);
    ASSERT_EQ(p.value, naive_max_pair(mg)) << encode_graph6(g);
    if (!p.a.empty()) {
      EXPECT_TRUE(anticomplete(g, p.a, p.b));
      EXPECT_TRUE((p.a & p.b).empty());
      EXPECT_EQ(std::min(mg(p.a), mg(p.b)), p.value);
    }
  }
}

TEST(AnticompletePair, RandomMasses) {
  for (int t = 0; t < 200; ++t) {
    Graph g = testing_support::random_graph(uniform_int(1, 10), 0.3 + 0.1 * uniform_int(0, 4));
    MassedGraph mg = random_mass(g);
    AnticompletePair p = max_anticomplete_pair(mg);
    EXPECT_EQ(p.value, naive_max_pair(mg)) << encode_graph6(g) << " " << to_string(mg.kind());
  }
}

TEST(Coherence, Examples) {
  CoherenceVerdict k4 = check_coherent(MassedGraph::uniform(complete_graph(4)), Rational(1, 2));
  ASSERT_FALSE(k4.coherent);
  EXPECT_EQ(k4.violation->kind, Violation::Kind::NeighborhoodMass);
  EXPECT_EQ(k4.violation->mass, Rational(3, 4));
  CoherenceVerdict e4 = check_coherent(MassedGraph::uniform(edgeless_graph(4)), Rational(1, 2));
  ASSERT_FALSE(e4.coherent);
  EXPECT_EQ(e4.violation->kind, Violation::Kind::AnticompletePair);
  EXPECT_TRUE(check_coherent(MassedGraph::uniform(cycle_graph(5)), Rational(1, 2)).coherent);
  CoherenceVerdict tiny = check_coherent(MassedGraph::uniform(cycle_graph(5)), Rational(1, 5));
  ASSERT_FALSE(tiny.coherent);
  EXPECT_EQ(tiny.violation->kind, Violation::Kind::VertexMass);
}

TEST(Coherence, RadiusExamples) {
  MassedGraph c5 = MassedGraph::uniform(cycle_graph(5));
  for (Rational eps : {Rational(1), Rational(1, 2), Rational(1, 5), Rational(1, 1000)}) {
    CoherenceVerdict v = check_r_coherent(c5, eps, 2);
    ASSERT_FALSE(v.coherent);
    EXPECT_EQ(v.violation->kind, Violation::Kind::BallMass);
    EXPECT_EQ(v.violation->mass, Rational(1));
  }
  MassedGraph c9 = MassedGraph::uniform(cycle_graph(9));
  CoherenceVerdict v = check_r_coherent(c9, Rational(2, 3), 2);
  // Balls have mass 5/9; the anticomplete bullet decides.
  const bool pair_small = naive_max_pair(c9) < Rational(2, 3);
  EXPECT_EQ(v.coherent, pair_small);
  EXPECT_THROW(check_r_coherent(c9, Rational(1, 2), 0), Error);
}

TEST(Coherence, RadiusOneImpliesCoherent) {
  for (int t = 0; t < 200; ++t) {
    Graph g = testing_support::random_graph(uniform_int(1, 10), 0.3);
    MassedGraph mg = random_mass(g);
    Rational eps(uniform_int(1, 10), 10);
    if (check_r_coherent(mg, eps, 1).coherent) {
      EXPECT_TRUE(check_coherent(mg, eps).coherent);
    }
  }
}

TEST(Coherence, Monotone) {
  for (int t = 0; t < 100; ++t) {
    Graph g = testing_support::random_graph(uniform_int(1, 9), 0.4);
    MassedGraph mg = random_mass(g);
    for (int k = 1; k <= 10; ++k) {
      if (!check_coherent(mg, Rational(k, 10)).coherent) continue;
      for (int j = k; j <= 10; ++j) EXPECT_TRUE(check_coherent(mg, Rational(j, 10)).coherent);
      break;
    }
  }
}

TEST(Coherence, ViolationsRecheck) {
  for (int t = 0; t < 100; ++t) {
    Graph g = testing_support::random_graph(uniform_int(1, 9), 0.4);
    MassedGraph mg = random_mass(g);
    Rational eps(uniform_int(1, 10), 10);
    CoherenceVerdict v = check_coherent(mg, eps);
    ASSERT_EQ(v.coherent, !v.violation.has_value());
    if (!v.violation) continue;
    const Violation& w = *v.violation;
    switch (w.kind) {
      case Violation::Kind::VertexMass: EXPECT_GE(mg(w.vertex), eps); break;
      case Violation::Kind::NeighborhoodMass: EXPECT_GE(mg(g.neighbors(w.vertex)), eps); break;
      case Violation::Kind::AnticompletePair:
        EXPECT_TRUE(anticomplete(g, w.a, w.b));
        EXPECT_GE(std::min(mg(w.a), mg(w.b)), eps);
        break;
      default: ADD_FAILURE();
    }
  }
}

TEST(Focused, Examples) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(check_focused(MassedGraph::uniform(complete_graph(n)), Rational(1, 10), 1).coherent);
  // In 2K4 the larger part of any Z carries at least half of it.
  Graph two_k4 = disjoint_union(complete_graph(4), complete_graph(4));
  for (int k = 1; k <= 8; ++k) EXPECT_TRUE(check_focused(MassedGraph::uniform(two_k4), Rational(k, 8), 1).coherent);
  // 3K2 fails once delta lets Z = V in: every ball holds a third.
  Graph three_k2 = disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)), complete_graph(2));
  CoherenceVerdict m = check_focused(MassedGraph::uniform(three_k2), Rational(1), 1);
  ASSERT_FALSE(m.coherent);
  EXPECT_EQ(m.violation->z, three_k2.vertices());
  CoherenceVerdict e4 = check_focused(MassedGraph::uniform(edgeless_graph(4)), Rational(1, 2), 1);
  ASSERT_FALSE(e4.coherent);
  EXPECT_EQ(e4.violation->kind, Violation::Kind::FocusWitness);
  // {0,1} is fine (each ball is exactly half); {0,1,2} is the first offender.
  EXPECT_EQ(e4.violation->z, (VertexSet{0, 1, 2}));
}

TEST(Focused, AgreesWithDirectQuantifier) {
  for (int t = 0; t < 120; ++t) {
    Graph g = testing_support::random_graph(uniform_int(1, 10), 0.1 * uniform_int(1, 5));
    MassedGraph mg = random_mass(g);
    Rational delta(uniform_int(1, 8), 8);
    const int r = uniform_int(1, 3);
    std::optional<VertexSet> expected;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.size()); ++mask) {
      VertexSet z(mask);
      if (!naive_violates(mg, z, delta, r)) continue;
      if (!expected || z.size() < expected->size() ||
          (z.size() == expected->size() && z.to_vector() < expected->to_vector())) {
        expected = z;
      }
    }
    CoherenceVerdict v = check_focused(mg, delta, r);
    ASSERT_EQ(v.coherent, !expected.has_value()) << encode_graph6(g);
    if (expected) {
      EXPECT_EQ(v.violation->z, *expected);
    }
  }
}

TEST(Focused, Monotone) {
  for (int t = 0; t < 60; ++t) {
    Graph g = testing_support::random_graph(uniform_int(1, 9), 0.3);
    MassedGraph mg = random_mass(g);
    for (int k = 1; k <= 8; ++k) {
      if (!check_focused(mg, Rational(k, 8), 1).coherent) continue;
      for (int j = k; j <= 8; ++j) EXPECT_TRUE(check_focused(mg, Rational(j, 8), 1).coherent);
      break;
    }
  }
}

TEST(EhRatio, Examples) {
  EhRatio k6 = eh_ratio(complete_graph(6));
  EXPECT_EQ(k6.value, Rational(1, 2));
  EXPECT_EQ(k6.polarity, Polarity::Complete);
  EXPECT_EQ(eh_ratio(cycle_graph(5)).value, Rational(1, 5));
  EXPECT_EQ(eh_ratio(path_graph(4)).value, Rational(1, 4));
  EhRatio e6 = eh_ratio(edgeless_graph(6));
  EXPECT_EQ(e6.polarity, Polarity::Anticomplete);
}

TEST(EhRatio, Duality) {
  for (int t = 0; t < 200; ++t) {
    Graph g = testing_support::random_graph(uniform_int(1, 12), 0.5);
    EhRatio a = eh_ratio(g);
    EhRatio b = eh_ratio(complement(g));
    EXPECT_EQ(a.value, b.value) << encode_graph6(g);
    if (a.polarity == Polarity::Complete) {
      for (Vertex x : a.a)
        for (Vertex y : a.b) EXPECT_TRUE(g.has_edge(x, y));
    } else if (!a.a.empty()) {
      EXPECT_TRUE(anticomplete(g, a.a, a.b));
    }
  }
}
