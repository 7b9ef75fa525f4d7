#pragma once

// Pivot orbits and the exhaustive pivot-minor search.
//
// A deletion commutes with any pivot on an edge avoiding the deleted vertex,
// so every pivot-minor of G is (G ^ e1 ^ ... ^ ek) - X for some pivot
// sequence and vertex set X. The search therefore walks the pivot orbit of
// the host breadth-first, one representative per isomorphism class, and asks
// at each node whether the pattern embeds as an induced subgraph.

#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "pivotminor/budget.hpp"
#include "pivotminor/canonical.hpp"
#include "pivotminor/embedding.hpp"
#include "pivotminor/pivot.hpp"

namespace pivotminor {

struct SearchOptions {
  std::uint64_t budget = Budget::kDefaultLimit;
  /// Cap on distinct isomorphism classes visited in an orbit.
  std::uint64_t orbit_limit = 1'000'000;
  int canonical_limit = kDefaultCanonicalLimit;
};

struct PivotOrbit {
  /// Sorted canonical forms of every class reachable by pivots alone.
  std::vector<CanonicalForm> forms;
  bool truncated = false;
};

namespace detail {

struct OrbitNode {
  Graph graph;
  std::vector<Edge> path;  // pivots applied from the host, host indices
};

/// Breadth-first over pivot classes. `visit` sees each node once in BFS
/// order and returns true to stop early.
template <class Visit>
bool walk_orbit(const Graph& g, const SearchOptions& opt, Budget& budget, bool& truncated, Visit&& visit) {
  std::set<CanonicalForm> seen;
  std::deque<OrbitNode> queue;
  seen.insert(canonical(g, opt.canonical_limit));
  queue.push_back({g, {}});
  truncated = false;
  while (!queue.empty()) {
    OrbitNode node = std::move(queue.front());
    queue.pop_front();
    budget.tick("pivot orbit");
    if (visit(node)) return true;
    for (auto [u, v] : node.graph.edges()) {
      Graph next = pivot(node.graph, u, v);
      CanonicalForm form = canonical(next, opt.canonical_limit);
      if (seen.contains(form)) continue;
      if (seen.size() >= opt.orbit_limit) {
        truncated = true;
        continue;
      }
      seen.insert(std::move(form));
      std::vector<Edge> path = node.path;
      path.emplace_back(u, v);
      queue.push_back({std::move(next), std::move(path)});
    }
  }
  return false;
}

}  // namespace detail

inline PivotOrbit pivot_orbit(const Graph& g, const SearchOptions& opt = {}) {
  Budget budget(opt.budget);
  PivotOrbit orbit;
  std::vector<CanonicalForm> forms;
  detail::walk_orbit(g, opt, budget, orbit.truncated, [&](const detail::OrbitNode& node) {
    forms.push_back(canonical(node.graph, opt.canonical_limit));
    return false;
  });
  std::sort(forms.begin(), forms.end());
  orbit.forms = std::move(forms);
  return orbit;
}

inline PivotOrbit pivot_orbit(const Graph& g, std::uint64_t limit) {
  SearchOptions opt;
  opt.orbit_limit = limit;
  return pivot_orbit(g, opt);
}

/// Shortest witness that pattern is a pivot-minor of host: the fewest pivots,
/// followed by deleting every vertex outside the image in ascending order.
/// nullopt means the full orbit was searched. A truncated orbit or an
/// exhausted budget throws BudgetExhausted.
inline std::optional<PivotWitness> find_pivot_minor(const Graph& host, const Graph& pattern,
                                                    const SearchOptions& opt = {}) {
  if (pattern.size() > host.size()) return std::nullopt;
  Budget budget(opt.budget);
  std::optional<PivotWitness> found;
  bool truncated = false;
  detail::walk_orbit(host, opt, budget, truncated, [&](const detail::OrbitNode& node) {
    EmbeddingOptions eo;
    eo.budget = opt.budget > budget.used() ? opt.budget - budget.used() : 0;
    auto map = induced_embedding(pattern, node.graph, eo);
    if (!map) return false;
    PivotWitness w;
    for (auto [u, v] : node.path) w.steps.push_back(PivotStep::pivot(u, v));
    VertexSet image = VertexSet::from(*map);
    for (Vertex x : host.vertices() - image) w.steps.push_back(PivotStep::remove(x));
    w.claimed_target = pattern;
    found = std::move(w);
    return true;
  });
  if (!found && truncated) {
    throw Error(ErrorCode::BudgetExhausted, "pivot orbit truncated at " + std::to_string(opt.orbit_limit) +
                                                " classes; absence not proven");
  }
  return found;
}

inline std::optional<PivotWitness> find_pivot_minor(const Graph& host, const Graph& pattern,
                                                    std::uint64_t budget) {
  SearchOptions opt;
  opt.budget = budget;
  return find_pivot_minor(host, pattern, opt);
}

}  // namespace pivotminor
