#pragma once

// Dense simple graphs on at most 64 vertices with one adjacency word per
// vertex, plus the set-relation and distance primitives built on them.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "pivotminor/error.hpp"

namespace pivotminor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxVertices = 64;

inline constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

inline constexpr std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// A subset of [0, 64). Membership in [0, n) of a particular graph is checked
/// by the operations that accept it.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& other) const = default;

   private:
    std::uint64_t rest_;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet from(const std::vector<Vertex>& members) {
    VertexSet s;
    for (Vertex v : members) s.insert(v);
    return s;
  }
  static constexpr VertexSet all(int n) { return VertexSet(low_mask(n)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  bool contains(Vertex v) const { return v >= 0 && v < 64 && (bits_ >> v) & 1U; }
  Vertex front() const { return std::countr_zero(bits_); }

  void insert(Vertex v) {
    if (v < 0 || v >= kMaxVertices) {
      throw Error(ErrorCode::InvalidSet, "vertex " + std::to_string(v) + " out of range");
    }
    bits_ |= bit(v);
  }
  void erase(Vertex v) {
    if (v >= 0 && v < 64) bits_ &= ~bit(v);
  }

  bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  bool within(int n) const { return (bits_ & ~low_mask(n)) == 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

inline std::string to_string(VertexSet s);

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw Error(ErrorCode::Oversize, "graph with " + std::to_string(n) +
                                           " vertices exceeds the 64-vertex exhaustive tier");
    }
  }
  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int size() const { return n_; }
  VertexSet vertices() const { return VertexSet::all(n_); }

  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
  bool has_edge(Vertex u, Vertex v) const {
    return has_vertex(u) && has_vertex(v) && ((adj_[u] >> v) & 1U);
  }

  void add_edge(Vertex u, Vertex v) { set_edge(u, v, true); }
  void remove_edge(Vertex u, Vertex v) { set_edge(u, v, false); }
  void toggle_edge(Vertex u, Vertex v) { set_edge(u, v, !has_edge(u, v)); }
  void set_edge(Vertex u, Vertex v, bool present) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(ErrorCode::InvalidVertex, "loops are not allowed");
    if (present) {
      adj_[u] |= bit(v);
      adj_[v] |= bit(u);
    } else {
      adj_[u] &= ~bit(v);
      adj_[v] &= ~bit(u);
    }
  }

  /// Neighbourhood of v as a raw mask.
  std::uint64_t row(Vertex v) const { return adj_[v]; }
  VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighbors(Vertex v) const { return VertexSet(adj_[v] | bit(v)); }
  int degree(Vertex v) const { return std::popcount(adj_[v]); }

  /// N(X): every vertex with a neighbour in X (may meet X).
  VertexSet neighbors(VertexSet x) const {
    std::uint64_t out = 0;
    for (Vertex v : x) out |= adj_[v];
    return VertexSet(out);
  }
  /// N[X] = X together with N(X).
  VertexSet closed_neighbors(VertexSet x) const { return neighbors(x) | x; }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(std::popcount(adj_[v]));
    return twice / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : VertexSet(adj_[u] & ~low_mask(u + 1))) out.emplace_back(u, v);
    }
    return out;
  }

  /// Exchanges the adjacency of u and v; display labels stay with indices.
  void swap_vertices(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return;
    const bool uv = has_edge(u, v);
    std::uint64_t ru = adj_[u] & ~bit(v);
    std::uint64_t rv = adj_[v] & ~bit(u);
    for (Vertex w : VertexSet(ru)) adj_[w] &= ~bit(u);
    for (Vertex w : VertexSet(rv)) adj_[w] &= ~bit(v);
    adj_[u] = rv | (uv ? bit(v) : 0);
    adj_[v] = ru | (uv ? bit(u) : 0);
    for (Vertex w : VertexSet(rv)) adj_[w] |= bit(u);
    for (Vertex w : VertexSet(ru)) adj_[w] |= bit(v);
  }

  // Display names are metadata only; no operation depends on them.
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const {
    if (has_labels() && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
  }
  void set_label(Vertex v, std::string name) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(n_);
    labels_[v] = std::move(name);
  }
  void clear_labels() { labels_.clear(); }

  /// Structural equality: same vertex count and identical adjacency.
  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
  }

 private:
  void check_vertex(Vertex v) const {
    if (!has_vertex(v)) {
      throw Error(ErrorCode::InvalidVertex,
                  "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
    }
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
  std::vector<std::string> labels_;
};

inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

inline void require_set(const Graph& g, VertexSet x, const char* what = "set") {
  if (!x.within(g.size())) {
    throw Error(ErrorCode::InvalidSet, std::string(what) + " " + to_string(x) +
                                           " not contained in [0, " + std::to_string(g.size()) + ")");
  }
}

// ---- small families -------------------------------------------------------

inline Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph edgeless_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// ---- operations -----------------------------------------------------------

inline Graph complement(const Graph& g) {
  Graph out(g.size());
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  if (g.has_labels())
    for (Vertex v = 0; v < g.size(); ++v) out.set_label(v, g.labels()[v]);
  return out;
}

/// Disjoint union of g and h (h shifted by |V(g)|) with every cross edge.
inline Graph join(const Graph& g, const Graph& h) {
  const int n = g.size() + h.size();
  if (n > kMaxVertices) throw Error(ErrorCode::Oversize, "join exceeds 64 vertices");
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + g.size(), v + g.size());
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = 0; v < h.size(); ++v) out.add_edge(u, g.size() + v);
  return out;
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.size() + h.size();
  if (n > kMaxVertices) throw Error(ErrorCode::Oversize, "union exceeds 64 vertices");
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + g.size(), v + g.size());
  return out;
}

/// G[X]. Vertex i of the result is the i-th smallest member of X.
inline Graph induced(const Graph& g, VertexSet x) {
  require_set(g, x);
  const std::vector<Vertex> members = x.to_vector();
  Graph out(static_cast<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.has_edge(members[i], members[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    if (g.has_labels()) out.set_label(static_cast<Vertex>(i), g.labels()[members[i]]);
  }
  return out;
}

/// G - X.
inline Graph remove_vertices(const Graph& g, VertexSet x) { return induced(g, g.vertices() - x); }

/// Graph with vertex v renamed perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph out(g.size());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

/// Vertices reachable from `from` inside `within`, with every path step
/// inside `within`. `from` must lie in `within`.
inline VertexSet reach_within(const Graph& g, VertexSet from, VertexSet within, int radius = kMaxVertices) {
  VertexSet seen = from & within;
  VertexSet frontier = seen;
  for (int step = 0; step < radius && !frontier.empty(); ++step) {
    VertexSet next = (g.neighbors(frontier) & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// N^r[v]: vertices at distance at most r.
inline VertexSet ball(const Graph& g, Vertex v, int r, VertexSet within) {
  if (!g.has_vertex(v)) throw Error(ErrorCode::InvalidVertex, "ball centre out of range");
  if (r < 0) throw Error(ErrorCode::PreconditionViolated, "negative radius");
  return reach_within(g, VertexSet{v}, within | VertexSet{v}, r);
}
inline VertexSet ball(const Graph& g, Vertex v, int r) { return ball(g, v, r, g.vertices()); }

/// N^r[X] = union of the balls around members of X.
inline VertexSet ball(const Graph& g, VertexSet x, int r) {
  require_set(g, x);
  return reach_within(g, x, g.vertices(), r);
}

/// N^r(v): vertices at distance exactly r.
inline VertexSet shell(const Graph& g, Vertex v, int r) {
  if (r == 0) return ball(g, v, 0);
  return ball(g, v, r) - ball(g, v, r - 1);
}

inline constexpr int kUnreachable = -1;

/// Breadth-first distances from source inside `within` (kUnreachable elsewhere).
inline std::vector<int> distances(const Graph& g, Vertex source, VertexSet within) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), kUnreachable);
  if (!within.contains(source)) return dist;
  VertexSet seen{source};
  VertexSet frontier = seen;
  dist[source] = 0;
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next = (g.neighbors(frontier) & within) - seen;
    for (Vertex w : next) dist[w] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}
inline std::vector<int> distances(const Graph& g, Vertex source) {
  return distances(g, source, g.vertices());
}

/// Distance between two vertex sets in g, or kUnreachable.
inline int set_distance(const Graph& g, VertexSet a, VertexSet b) {
  if (a.empty() || b.empty()) return kUnreachable;
  if (a.intersects(b)) return 0;
  VertexSet seen = a;
  VertexSet frontier = a;
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next = g.neighbors(frontier) - seen;
    if (next.intersects(b)) return d;
    seen |= next;
    frontier = next;
  }
  return kUnreachable;
}

/// True iff X is nonempty and G[X] is connected.
inline bool is_connected(const Graph& g, VertexSet x) {
  if (x.empty()) return false;
  return reach_within(g, VertexSet{x.front()}, x) == x;
}
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

/// X covers Y: every vertex of Y has a neighbour in X.
inline bool covers(const Graph& g, VertexSet x, VertexSet y) {
  for (Vertex v : y)
    if (!g.neighbors(v).intersects(x)) return false;
  return true;
}

/// Disjoint and no edge between them.
inline bool anticomplete(const Graph& g, VertexSet a, VertexSet b) {
  return !a.intersects(b) && !g.neighbors(a).intersects(b);
}

enum class PairRelation { Complete, Anticomplete, Mixed, Overlapping };

inline const char* to_string(PairRelation r) {
  switch (r) {
    case PairRelation::Complete: return "complete";
    case PairRelation::Anticomplete: return "anticomplete";
    case PairRelation::Mixed: return "mixed";
    case PairRelation::Overlapping: return "overlapping";
  }
  return "?";
}

struct PairVerdict {
  PairRelation relation;
  /// Set when one side is empty, so the pair is vacuously both complete and
  /// anticomplete. Such pairs are reported as Anticomplete.
  bool degenerate = false;
  friend bool operator==(const PairVerdict&, const PairVerdict&) = default;
};

inline PairVerdict pair_relation(const Graph& g, VertexSet a, VertexSet b) {
  require_set(g, a);
  require_set(g, b);
  if (a.intersects(b)) return {PairRelation::Overlapping, false};
  if (a.empty() || b.empty()) return {PairRelation::Anticomplete, true};
  bool all = true;
  bool none = true;
  for (Vertex v : a) {
    const VertexSet hits = g.neighbors(v) & b;
    if (hits != b) all = false;
    if (!hits.empty()) none = false;
  }
  if (all) return {PairRelation::Complete, false};
  if (none) return {PairRelation::Anticomplete, false};
  return {PairRelation::Mixed, false};
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.size()), -1);
  for (Vertex s = 0; s < g.size(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Checks that `path` lists the vertices of an induced path of g in order.
inline bool is_induced_path(const Graph& g, const std::vector<Vertex>& path) {
  VertexSet seen;
  for (Vertex v : path) {
    if (!g.has_vertex(v) || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < path.size(); ++i)
    for (std::size_t j = i + 1; j < path.size(); ++j)
      if (g.has_edge(path[i], path[j]) != (j == i + 1)) return false;
  return true;
}

}  // namespace pivotminor
