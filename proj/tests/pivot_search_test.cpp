#include <gtest/gtest.h>

#include "pivotminor/enumerate.hpp"
#include "pivotminor/pivot_search.hpp"
#include "support.hpp"

using namespace pivotminor;

TEST(Orbit, Examples) {
  EXPECT_EQ(pivot_orbit(edgeless_graph(5)).forms.size(), 1U);
  PivotOrbit k3 = pivot_orbit(complete_graph(3));
  ASSERT_EQ(k3.forms.size(), 1U);
  EXPECT_EQ(k3.forms[0], canonical(complete_graph(3)));
  PivotOrbit p4 = pivot_orbit(path_graph(4));
  EXPECT_FALSE(p4.truncated);
  auto has = [&](const Graph& g) {
    return std::find(p4.forms.begin(), p4.forms.end(), canonical(g)) != p4.forms.end();
  };
  EXPECT_TRUE(has(path_graph(4)));
  EXPECT_TRUE(has(cycle_graph(4)));
}

TEST(Orbit, ClosedUnderPivots) {
  for (int t = 0; t < 30; ++t) {
    Graph g = testing_support::random_graph(7);
    PivotOrbit orbit = pivot_orbit(g);
    for (const CanonicalForm& f : orbit.forms) {
      Graph rep = f.graph();
      for (auto [u, v] : rep.edges()) {
        CanonicalForm next = canonical(pivot(rep, u, v));
        EXPECT_TRUE(std::binary_search(orbit.forms.begin(), orbit.forms.end(), next));
      }
    }
  }
}

TEST(Orbit, Truncation) {
  SearchOptions opt;
  opt.orbit_limit = 1;
  EXPECT_TRUE(pivot_orbit(path_graph(4), opt).truncated);
}

TEST(FindPivotMinor, Examples) {
  auto w = find_pivot_minor(path_graph(4), complete_graph(2));
  ASSERT_TRUE(w.has_value());
  EXPECT_LE(w->steps.size(), 3U);
  EXPECT_TRUE(verify_witness(path_graph(4), complete_graph(2), *w).accepted);
  EXPECT_FALSE(find_pivot_minor(path_graph(4), complete_graph(3)).has_value());
  Graph g = cycle_graph(5);
  auto self = find_pivot_minor(g, g);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(self->steps.empty());
}

TEST(FindPivotMinor, TruncationIsNotAbsence) {
  SearchOptions opt;
  opt.orbit_limit = 1;
  try {
    find_pivot_minor(path_graph(4), complete_graph(3), opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExhausted);
  }
}

TEST(FindPivotMinor, FewestPivots) {
  // K2 is an induced subgraph of P4 already; no pivot is needed.
  auto w = find_pivot_minor(path_graph(4), complete_graph(2));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->pivot_count(), 0U);
  // C4 needs exactly one pivot from P4.
  auto c = find_pivot_minor(path_graph(4), cycle_graph(4));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->pivot_count(), 1U);
}

// Every host on at most 7 vertices against every pattern on at most 4,
// compared with the naive raw-definition exploration.
TEST(FindPivotMinor, AgreesWithNaiveOracle) {
  std::vector<Graph> patterns = graphs_up_to_isomorphism_through(4);
  std::vector<Graph> hosts = graphs_up_to_isomorphism_through(7);
  for (const Graph& host : hosts) {
    for (const Graph& pat : patterns) {
      if (pat.size() > host.size()) continue;
      auto w = find_pivot_minor(host, pat);
      const bool naive = testing_support::naive_pivot_minor(host, pat);
      EXPECT_EQ(w.has_value(), naive) << encode_graph6(host) << " / " << encode_graph6(pat);
      if (w) {
        EXPECT_TRUE(verify_witness(host, pat, *w).accepted);
      }
    }
  }
}
