#pragma once

// Test-only generators and brute-force oracles. None of these reuse the
// library's search code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pivotminor/graph.hpp"

namespace testing_support {

using pivotminor::Edge;
using pivotminor::Graph;
using pivotminor::Vertex;
using pivotminor::VertexSet;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed1234ULL);
  return engine;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Graph random_graph(int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng())) g.add_edge(u, v);
  return g;
}

inline Graph random_graph(int max_n) {
  const int n = uniform_int(0, max_n);
  const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng());
  return random_graph(n, p);
}

inline Graph random_bipartite(int max_n) {
  const int n = uniform_int(1, max_n);
  std::bernoulli_distribution side(0.5);
  std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.2, 0.8)(rng()));
  std::vector<int> s(static_cast<std::size_t>(n));
  for (auto& x : s) x = side(rng()) ? 1 : 0;
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (s[u] != s[v] && coin(rng())) g.add_edge(u, v);
  return g;
}

inline std::vector<Vertex> random_permutation(int n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

inline Graph permuted(const Graph& g, const std::vector<Vertex>& p) {
  Graph h(g.size());
  for (auto [u, v] : g.edges()) h.add_edge(p[u], p[v]);
  return h;
}

/// Isomorphism by trying every permutation.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return false;
  std::vector<Vertex> p(static_cast<std::size_t>(g.size()));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Vertex u = 0; u < g.size() && ok; ++u)
      for (Vertex v = u + 1; v < g.size() && ok; ++v)
        if (g.has_edge(u, v) != h.has_edge(p[u], p[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Raw adjacency-matrix string; equal strings mean identical labelled graphs.
inline std::string matrix_key(const Graph& g) {
  std::string s = std::to_string(g.size()) + ":";
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v) s.push_back(g.has_edge(u, v) ? '1' : '0');
  return s;
}

/// Pivot straight from the definition on an adjacency matrix.
inline Graph definition_pivot(const Graph& g, Vertex u, Vertex v) {
  const int n = g.size();
  auto adj = [&](Vertex a, Vertex b) { return g.has_edge(a, b); };
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  for (Vertex w = 0; w < n; ++w) {
    if (w == u || w == v) continue;
    const bool au = adj(w, u);
    const bool av = adj(w, v);
    cls[w] = au && !av ? 1 : (!au && av ? 2 : (au && av ? 3 : 0));
  }
  std::vector<std::vector<bool>> m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) m[a][b] = a != b && adj(a, b);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      if (cls[a] && cls[b] && cls[a] != cls[b]) m[a][b] = !adj(a, b);
  // Rename u <-> v.
  auto rn = [&](Vertex x) { return x == u ? v : (x == v ? u : x); };
  Graph out(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (m[a][b]) out.add_edge(rn(a), rn(b));
  return out;
}

inline Graph definition_delete(const Graph& g, Vertex x) {
  Graph out(g.size() - 1);
  auto idx = [&](Vertex a) { return a < x ? a : a - 1; };
  for (auto [a, b] : g.edges())
    if (a != x && b != x) out.add_edge(idx(a), idx(b));
  return out;
}

/// Naive pivot-minor test: explore every labelled graph reachable by raw
/// pivots and deletions, comparing by brute-force isomorphism.
inline bool naive_pivot_minor(const Graph& host, const Graph& pattern) {
  if (pattern.size() > host.size()) return false;
  std::set<std::string> seen;
  std::vector<Graph> stack{host};
  seen.insert(matrix_key(host));
  while (!stack.empty()) {
    Graph g = stack.back();
    stack.pop_back();
    if (g.size() == pattern.size()) {
      if (brute_isomorphic(g, pattern)) return true;
    }
    std::vector<Graph> next;
    for (auto [u, v] : g.edges()) next.push_back(definition_pivot(g, u, v));
    if (g.size() > pattern.size())
      for (Vertex x = 0; x < g.size(); ++x) next.push_back(definition_delete(g, x));
    for (auto& h : next)
      if (seen.insert(matrix_key(h)).second) stack.push_back(std::move(h));
  }
  return false;
}

}  // namespace testing_support
