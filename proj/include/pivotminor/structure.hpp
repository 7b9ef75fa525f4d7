#pragma once

// Shared pieces of the proof-object validators: verdicts naming a failing
// bullet, stalls of constructive searches, caterpillars and r-centres.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pivotminor/error.hpp"
#include "pivotminor/graph.hpp"

namespace pivotminor {

/// Accept, or the identifier of the first failing bullet plus the indices
/// (ladder index, leaf, vertex of the shape...) it concerns.
struct StructureVerdict {
  bool accepted = true;
  std::string bullet;
  std::vector<int> indices;
  std::string detail;

  explicit operator bool() const { return accepted; }

  static StructureVerdict accept() { return {}; }
  static StructureVerdict reject(std::string bullet, std::vector<int> indices, std::string detail) {
    return {false, std::move(bullet), std::move(indices), std::move(detail)};
  }
};

/// A constructive search stopped at `step`. Says nothing about existence.
struct NoProgress {
  std::string step;
  int index = 0;
  std::string detail;
};

struct CaterpillarVerdict {
  bool accepted = false;
  std::string reason;
  /// T - L(T) in path order; starts at the head for the rooted check.
  std::vector<Vertex> spine;
  VertexSet leaves;
};

inline bool is_tree(const Graph& g) {
  return g.size() > 0 && g.edge_count() + 1 == static_cast<std::size_t>(g.size()) && is_connected(g);
}

inline CaterpillarVerdict is_caterpillar(const Graph& g) {
  CaterpillarVerdict out;
  if (!is_tree(g)) {
    out.reason = "not a tree";
    return out;
  }
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) <= 1) out.leaves.insert(v);
  const VertexSet inner = g.vertices() - out.leaves;
  Vertex start = -1;
  for (Vertex v : inner) {
    const int d = (g.neighbors(v) & inner).size();
    if (d > 2) {
      out.reason = "T - L(T) has a vertex of degree " + std::to_string(d);
      return out;
    }
    if (d <= 1 && start < 0) start = v;
  }
  // A subtree with maximum degree 2 is a path; walk it from its smaller end.
  Vertex prev = -1;
  for (Vertex cur = start; cur >= 0;) {
    out.spine.push_back(cur);
    VertexSet next = g.neighbors(cur) & inner;
    if (prev >= 0) next.erase(prev);
    prev = cur;
    cur = next.empty() ? -1 : next.front();
  }
  out.accepted = true;
  return out;
}

/// Rooted variant: T - L(T) must be a path with the head at one end. With an
/// empty T - L(T) (one or two vertices) any vertex may be the head.
inline CaterpillarVerdict is_rooted_caterpillar(const Graph& g, Vertex head) {
  if (!g.has_vertex(head)) throw Error(ErrorCode::InvalidVertex, "head out of range");
  CaterpillarVerdict out = is_caterpillar(g);
  if (!out.accepted || out.spine.empty()) return out;
  if (out.spine.back() == head) std::reverse(out.spine.begin(), out.spine.end());
  if (out.spine.front() != head) {
    out.accepted = false;
    out.reason = "head " + std::to_string(head) + " is not an end of T - L(T)";
  }
  return out;
}

/// v is an r-centre for X: every vertex of X is within distance r of v in G[X].
inline bool is_r_centre(const Graph& g, VertexSet x, Vertex v, int r) {
  require_set(g, x);
  if (!x.contains(v)) throw Error(ErrorCode::PreconditionViolated, "the centre must belong to the set");
  if (r < 0) throw Error(ErrorCode::PreconditionViolated, "negative radius");
  return reach_within(g, VertexSet{v}, x, r) == x;
}

/// Lexicographically least shortest path from `from` to `to` inside `within`.
inline std::optional<std::vector<Vertex>> least_shortest_path(const Graph& g, Vertex from, Vertex to, VertexSet within) {
  const std::vector<int> d = distances(g, to, within);
  if (!within.contains(from) || d[from] == kUnreachable) return std::nullopt;
  std::vector<Vertex> path{from};
  for (Vertex cur = from; cur != to;) {
    for (Vertex w : g.neighbors(cur) & within)
      if (d[w] == d[cur] - 1) {
        cur = w;
        break;
      }
    path.push_back(cur);
  }
  return path;
}

}  // namespace pivotminor
