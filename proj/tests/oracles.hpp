#pragma once

// Brute-force oracles and generators shared by the unit tests and the
// acceptance runner. They do not call the library routine they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include "pivotminor/ladder.hpp"
#include "pivotminor/mass.hpp"
#include "pivotminor/rational.hpp"
#include "pivotminor/subdivision.hpp"
#include "support.hpp"

namespace testing_oracles {

using namespace pivotminor;
using testing_support::uniform_int;

inline bool coin() { return uniform_int(0, 1) == 1; }

// Every disjoint pair of nonempty anticomplete sets, via base-3 labels.
inline Rational naive_max_pair(const MassedGraph& mg) {
  const Graph& g = mg.graph();
  const int n = g.size();
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  Rational best = 0;
  for (std::int64_t code = 0; code < total; ++code) {
    VertexSet a;
    VertexSet b;
    std::int64_t c = code;
    for (Vertex v = 0; v < n; ++v, c /= 3) {
      if (c % 3 == 1) a.insert(v);
      if (c % 3 == 2) b.insert(v);
    }
    if (a.empty() || b.empty()) continue;
    bool anti = true;
    for (Vertex x : a)
      for (Vertex y : b)
        if (g.has_edge(x, y)) anti = false;
    if (!anti) continue;
    best = std::max(best, std::min(mg(a), mg(b)));
  }
  return best;
}

// Direct reading of the focus quantifier, with its own BFS inside G[Z].
inline bool naive_violates(const MassedGraph& mg, VertexSet z, const Rational& delta, int r) {
  if (mg(z) < delta) return false;
  for (Vertex v : z) {
    std::vector<int> d = distances(mg.graph(), v, z);
    VertexSet in_ball;
    for (Vertex w : z)
      if (d[w] != kUnreachable && d[w] <= r) in_ball.insert(w);
    if (mg(in_ball) >= mg(z) / 2) return false;
  }
  return true;
}

inline MassedGraph random_mass(const Graph& g) {
  switch (uniform_int(0, 2)) {
    case 0: return MassedGraph::uniform(g);
    case 1: {
      std::vector<std::int64_t> raw(static_cast<std::size_t>(g.size()));
      std::int64_t sum = 0;
      for (auto& w : raw) sum += (w = uniform_int(0, 5));
      if (sum == 0) {
        raw[0] = 1;
        sum = 1;
      }
      std::vector<Rational> ws;
      for (auto w : raw) ws.emplace_back(w, sum);
      return MassedGraph::weighted(g, ws);
    }
    default: return MassedGraph::chromatic(g);
  }
}

// Independent fuzzy odd path test on G[p]: degrees, connectivity, parity,
// and for the extra edge a triangle chord between internal vertices.
inline bool oracle_fuzzy_odd(const Graph& g, VertexSet p, Vertex u, Vertex v) {
  if (!p.contains(u) || !p.contains(v) || u == v) return false;
  auto plain_path = [&](const Graph& h) -> std::vector<Vertex> {
    // Walk from u; every step must be forced.
    std::vector<Vertex> order{u};
    VertexSet seen{u};
    Vertex cur = u;
    while (cur != v) {
      VertexSet next = (h.neighbors(cur) & p) - seen;
      if (next.size() != 1) return {};
      cur = next.front();
      seen.insert(cur);
      order.push_back(cur);
    }
    if (seen != p) return {};
    std::size_t m = 0;
    for (Vertex a : p) m += (h.neighbors(a) & p).size();
    if (m / 2 + 1 != static_cast<std::size_t>(p.size())) return {};
    return order;
  };
  auto odd = [](const std::vector<Vertex>& o) { return !o.empty() && (o.size() - 1) % 2 == 1; };
  if (odd(plain_path(g))) return true;
  for (Vertex a : p)
    for (Vertex b : g.neighbors(a) & p) {
      if (b < a) continue;
      Graph h = g;
      h.remove_edge(a, b);
      auto o = plain_path(h);
      if (!odd(o)) continue;
      const auto ia = std::find(o.begin(), o.end(), a) - o.begin();
      const auto ib = std::find(o.begin(), o.end(), b) - o.begin();
      const auto last = static_cast<long>(o.size()) - 1;
      if (std::abs(ia - ib) == 2 && std::min(ia, ib) >= 1 && std::max(ia, ib) <= last - 1) return true;
    }
  return false;
}

// A random plan over a random base with odd lengths in {3, 5}.
inline SubdivisionPlan random_plan() {
  Graph base = testing_support::random_graph(uniform_int(1, 5), 0.6);
  SubdivisionPlan plan = SubdivisionPlan::uniform(base, 3);
  for (auto& e : plan.edges) {
    e.len = coin() ? 3 : 5;
    if (coin()) std::swap(e.u, e.v);
    if (e.len == 5 && coin()) {
      if (coin()) e.fuzz = Fuzz{uniform_int(1, e.len - 3), Fuzz::Attach::Next};
      else e.fuzz = Fuzz{uniform_int(3, e.len - 1), Fuzz::Attach::Prev};
    }
  }
  return plan;
}

// Path 0..len plus an optional chord (i, i+2), then shuffled.
struct PathSample {
  Graph g;
  Vertex u;
  Vertex v;
};

inline PathSample make_path(int len, std::vector<int> chords) {
  Graph g = path_graph(len + 1);
  for (int i : chords) g.add_edge(i, i + 2);
  std::vector<Vertex> perm = testing_support::random_permutation(len + 1);
  return {relabel(g, perm), perm[0], perm[len]};
}


struct Gadget {
  Graph g;
  Ladder lad;
  std::vector<Tick> ticks;
  // Ladder index -> its a, b, c vertices.
  std::vector<std::array<Vertex, 3>> abc;
};

enum class Extra { None, CB, BB };

// K_n gadget: centre x_t per tick, and per ladder index s a path
// x_t (- y_s) - q_s - a_s - b_s - c_s; the C ends of paired indices are joined.
inline Gadget gadget(int n, int tick_len, Extra extra = Extra::None, bool join = true, std::vector<int> len_override = {}) {
  Gadget gd;
  const int k = n * (n - 1);
  std::vector<std::pair<Vertex, Vertex>> edges;
  int next = 0;
  std::vector<Vertex> centre;
  for (int t = 0; t < n; ++t) centre.push_back(next++);
  gd.ticks.resize(n);
  for (int s = 0; s < k; ++s) {
    const int t = s / (n - 1);
    const int len = len_override.empty() ? tick_len : len_override[t];
    std::vector<Vertex> path;
    Vertex prev = centre[t];
    path.push_back(prev);
    for (int step = 0; step < len; ++step) {
      const Vertex w = next++;
      edges.emplace_back(prev, w);
      path.push_back(w);
      prev = w;
    }
    std::reverse(path.begin(), path.end());
    const Vertex a = next++, b = next++, c = next++;
    edges.emplace_back(prev, a);
    edges.emplace_back(a, b);
    edges.emplace_back(b, c);
    gd.abc.push_back({a, b, c});
    gd.lad.a.push_back(VertexSet{a});
    gd.lad.b.push_back(VertexSet{b});
    gd.lad.c.push_back(VertexSet{c});
    gd.ticks[t].index.push_back(s);
    gd.ticks[t].paths.push_back(path);
  }
  if (join) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int s = i * (n - 1) + (j - 1);
        const int s2 = j * (n - 1) + i;
        edges.emplace_back(gd.abc[s][2], gd.abc[s2][2]);
        if (extra == Extra::CB) edges.emplace_back(gd.abc[s][2], gd.abc[s2][1]);
        if (extra == Extra::BB) edges.emplace_back(gd.abc[s][1], gd.abc[s2][1]);
      }
  }
  gd.g = Graph(next, edges);
  return gd;
}

}  // namespace testing_oracles
