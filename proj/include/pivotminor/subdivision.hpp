#pragma once

// Path replacements, (proper) fuzzy odd subdivisions and filletings.
//
// Vertex order of every generated graph: base vertices first, then the
// interiors of the replacement paths in sorted base-edge order, each listed
// from the smaller endpoint.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pivotminor/error.hpp"
#include "pivotminor/graph.hpp"

namespace pivotminor {

/// A chord p_pos -- p_{pos+2} (Next) or p_pos -- p_{pos-2} (Prev) on the
/// replacement path p_0 = u, ..., p_len = v of a plan edge.
struct Fuzz {
  enum class Attach { Next, Prev };
  int pos = 1;
  Attach attach = Attach::Next;
  friend bool operator==(const Fuzz&, const Fuzz&) = default;
};

struct EdgePlan {
  Vertex u = 0;
  Vertex v = 0;
  int len = 1;
  std::optional<Fuzz> fuzz;
};

struct SubdivisionPlan {
  Graph base;
  std::vector<EdgePlan> edges;

  /// Every edge of `base` with length len and no fuzz.
  static SubdivisionPlan uniform(const Graph& base, int len) {
    SubdivisionPlan p{base, {}};
    for (auto [u, v] : base.edges()) p.edges.push_back({u, v, len, std::nullopt});
    return p;
  }
};

/// Injective map from base vertices to vertices of a candidate graph.
using BranchMap = std::vector<Vertex>;

inline BranchMap identity_branch_map(int n) {
  BranchMap m(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) m[v] = v;
  return m;
}

struct BuiltPlan {
  Graph graph;
  std::vector<Edge> base_edges;  // sorted
  /// paths[i]: the vertices p_0 .. p_len for base_edges[i], from the smaller end.
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::optional<Edge>> fuzz_edges;
};

namespace detail {

struct NormalEdge {
  Vertex u;
  Vertex v;
  int len;
  std::optional<int> chord;  // chord from p_chord to p_{chord+2}
};

inline std::vector<NormalEdge> normalize_plan(const SubdivisionPlan& plan, bool allow_fuzz) {
  const Graph& base = plan.base;
  std::map<Edge, NormalEdge> seen;
  for (const EdgePlan& e : plan.edges) {
    const std::string name = std::to_string(e.u) + "-" + std::to_string(e.v);
    if (!base.has_edge(e.u, e.v)) throw Error(ErrorCode::InvalidPlan, "plan edge " + name + " not in base");
    if (e.len < 1) throw Error(ErrorCode::InvalidPlan, "edge " + name + " has length below 1");
    std::optional<int> chord;
    if (e.fuzz) {
      if (!allow_fuzz) throw Error(ErrorCode::InvalidPlan, "fuzz not allowed on edge " + name);
      const int p = e.fuzz->pos;
      const int q = e.fuzz->attach == Fuzz::Attach::Next ? p + 2 : p - 2;
      const int lo = std::min(p, q);
      const int hi = std::max(p, q);
      if (lo < 1 || hi > e.len - 1) {
        throw Error(ErrorCode::InvalidPlan, "fuzz on edge " + name + " must join two internal vertices");
      }
      // Mirror positions when the plan lists the edge from its larger end.
      chord = e.u < e.v ? lo : e.len - hi;
    }
    Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!seen.emplace(key, NormalEdge{key.first, key.second, e.len, chord}).second) {
      throw Error(ErrorCode::InvalidPlan, "edge " + name + " listed twice");
    }
  }
  if (seen.size() != base.edge_count()) throw Error(ErrorCode::InvalidPlan, "plan does not cover every base edge");
  std::vector<NormalEdge> out;
  for (auto& [key, e] : seen) out.push_back(e);
  return out;
}

inline BuiltPlan build(const SubdivisionPlan& plan, bool allow_fuzz) {
  const auto edges = normalize_plan(plan, allow_fuzz);
  int n = plan.base.size();
  for (const auto& e : edges) n += e.len - 1;
  if (n > kMaxVertices) throw Error(ErrorCode::Oversize, "plan needs " + std::to_string(n) + " vertices");
  BuiltPlan out{Graph(n), {}, {}, {}};
  if (plan.base.has_labels())
    for (Vertex v = 0; v < plan.base.size(); ++v) out.graph.set_label(v, plan.base.labels()[v]);
  Vertex next = plan.base.size();
  for (const auto& e : edges) {
    std::vector<Vertex> path{e.u};
    for (int k = 1; k < e.len; ++k) path.push_back(next++);
    path.push_back(e.v);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) out.graph.add_edge(path[k], path[k + 1]);
    std::optional<Edge> fe;
    if (e.chord) {
      fe = Edge{path[*e.chord], path[*e.chord + 2]};
      out.graph.add_edge(fe->first, fe->second);
    }
    out.base_edges.emplace_back(e.u, e.v);
    out.paths.push_back(std::move(path));
    out.fuzz_edges.push_back(fe);
  }
  return out;
}

}  // namespace detail

/// Each edge e of h becomes an induced path of length plan.len(e).
inline Graph path_replacement(const Graph& h, const SubdivisionPlan& plan) {
  if (!(plan.base == h)) throw Error(ErrorCode::InvalidPlan, "plan base differs from the given graph");
  return detail::build(plan, false).graph;
}

inline BuiltPlan build_plan(const SubdivisionPlan& plan, bool allow_fuzz = true) {
  return detail::build(plan, allow_fuzz);
}

/// H^t: every edge replaced by a path of length t+1.
inline Graph uniform_subdivision(const Graph& h, int t) {
  if (t < 0) throw Error(ErrorCode::InvalidPlan, "negative subdivision count");
  return path_replacement(h, SubdivisionPlan::uniform(h, t + 1));
}

/// Proper fuzzy odd subdivision: every length odd and at least 3.
inline BuiltPlan build_pfos_layout(const SubdivisionPlan& plan) {
  for (const auto& e : plan.edges) {
    if (e.len < 3 || e.len % 2 == 0) {
      throw Error(ErrorCode::InvalidPlan, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                              " has length " + std::to_string(e.len) +
                                              "; a proper fuzzy odd subdivision needs an odd length of at least 3");
    }
  }
  return detail::build(plan, true);
}

inline Graph build_pfos(const SubdivisionPlan& plan) { return build_pfos_layout(plan).graph; }

// ---- fuzzy odd paths ------------------------------------------------------

struct FuzzyPathVerdict {
  bool accepted = false;
  std::vector<Vertex> path;  // u ... v
  std::optional<Edge> fuzz;
  std::string reason;
  int length() const { return static_cast<int>(path.size()) - 1; }
};

namespace detail {

/// Orders x as a path from u to v when g[x] is exactly such a path
/// (ignoring the edge `skip`, if any).
inline std::optional<std::vector<Vertex>> trace_path(const Graph& g, VertexSet x, Vertex u, Vertex v,
                                                     std::optional<Edge> skip = std::nullopt) {
  auto nb = [&](Vertex a) {
    VertexSet s = g.neighbors(a) & x;
    if (skip) {
      if (a == skip->first) s.erase(skip->second);
      if (a == skip->second) s.erase(skip->first);
    }
    return s;
  };
  std::vector<Vertex> path{u};
  Vertex prev = -1;
  Vertex cur = u;
  while (cur != v) {
    VertexSet next = nb(cur);
    if (prev >= 0) next.erase(prev);
    if (next.size() != 1) return std::nullopt;
    prev = cur;
    cur = next.front();
    if (std::find(path.begin(), path.end(), cur) != path.end()) return std::nullopt;
    path.push_back(cur);
  }
  if (nb(v).size() != 1 && path.size() > 1) return std::nullopt;
  if (static_cast<int>(path.size()) != x.size()) return std::nullopt;
  return path;
}

}  // namespace detail

/// Is g[x] a fuzzy odd path between u and v: an odd u-v path, possibly plus
/// one edge between internal vertices that lies in a triangle?
inline FuzzyPathVerdict check_fuzzy_odd_path(const Graph& g, VertexSet x, Vertex u, Vertex v) {
  FuzzyPathVerdict out;
  require_set(g, x);
  if (!x.contains(u) || !x.contains(v)) {
    out.reason = "endpoints must belong to the vertex set";
    return out;
  }
  if (u == v) {
    out.reason = "endpoints coincide";
    return out;
  }
  std::size_t m = 0;
  for (Vertex a : x) m += static_cast<std::size_t>((g.neighbors(a) & x).size());
  m /= 2;
  const auto n = static_cast<std::size_t>(x.size());
  if (m + 1 == n) {
    auto path = detail::trace_path(g, x, u, v);
    if (!path) {
      out.reason = "not a path between the endpoints";
      return out;
    }
    out.path = *path;
  } else if (m == n) {
    // The extra edge must be a chord p_i p_{i+2} with both ends internal.
    for (Vertex a : x) {
      for (Vertex b : g.neighbors(a) & x) {
        if (b <= a) continue;
        auto path = detail::trace_path(g, x, u, v, Edge{a, b});
        if (!path) continue;
        const auto ia = std::find(path->begin(), path->end(), a) - path->begin();
        const auto ib = std::find(path->begin(), path->end(), b) - path->begin();
        const auto lo = std::min(ia, ib);
        const auto hi = std::max(ia, ib);
        const auto last = static_cast<std::ptrdiff_t>(path->size()) - 1;
        if (hi - lo == 2 && lo >= 1 && hi <= last - 1) {
          out.path = *path;
          out.fuzz = Edge{a, b};
          break;
        }
      }
      if (out.fuzz) break;
    }
    if (!out.fuzz) {
      out.reason = "extra edge is not an internal triangle chord";
      return out;
    }
  } else {
    out.reason = "edge count " + std::to_string(m) + " does not fit a fuzzy path on " + std::to_string(n) + " vertices";
    return out;
  }
  if (out.length() % 2 == 0) {
    out.reason = "path length " + std::to_string(out.length()) + " is even";
    out.path.clear();
    out.fuzz.reset();
    return out;
  }
  out.accepted = true;
  return out;
}

inline FuzzyPathVerdict is_fuzzy_odd_path(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) {
    FuzzyPathVerdict out;
    out.reason = "endpoint out of range";
    return out;
  }
  return check_fuzzy_odd_path(g, g.vertices(), u, v);
}

// ---- decomposition against a base graph -----------------------------------

struct SubdivisionVerdict {
  bool accepted = false;
  std::string reason;
  std::vector<Edge> base_edges;  // sorted
  /// Per base edge: the path from bm[u] to bm[v] (u < v in the base).
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::optional<Edge>> fuzz_edges;
};

enum class PathRule { Plain, ProperFuzzyOdd };

/// Splits g into branch vertices bm(V(base)) and one replacement path per
/// base edge with nothing else. Plain: induced paths of any length >= 1.
/// ProperFuzzyOdd: fuzzy odd paths of length at least 3.
inline SubdivisionVerdict decompose_subdivision(const Graph& g, const Graph& base, const BranchMap& bm,
                                                PathRule rule) {
  SubdivisionVerdict out;
  auto reject = [&](std::string why) {
    out.accepted = false;
    out.reason = std::move(why);
    out.paths.clear();
    out.fuzz_edges.clear();
    out.base_edges.clear();
    return out;
  };
  if (bm.size() != static_cast<std::size_t>(base.size())) return reject("branch map size differs from base order");
  VertexSet branch;
  for (Vertex b : bm) {
    if (!g.has_vertex(b)) return reject("branch image " + std::to_string(b) + " out of range");
    if (branch.contains(b)) return reject("branch map is not injective");
    branch.insert(b);
  }
  for (Vertex x = 0; x < base.size(); ++x)
    if (g.degree(bm[x]) < base.degree(x)) return reject("branch image of " + std::to_string(x) + " has too small a degree");
  std::vector<Vertex> base_of(static_cast<std::size_t>(g.size()), -1);
  for (Vertex x = 0; x < base.size(); ++x) base_of[bm[x]] = x;

  // Components of g - branch, each attached to exactly two branch vertices.
  std::map<Edge, VertexSet> interior_of;
  VertexSet rest = g.vertices() - branch;
  while (!rest.empty()) {
    VertexSet comp = reach_within(g, VertexSet{rest.front()}, rest);
    rest -= comp;
    VertexSet attach = g.neighbors(comp) & branch;
    if (attach.size() != 2) {
      return reject("component " + to_string(comp) + " attaches to " + std::to_string(attach.size()) +
                    " branch vertices");
    }
    Vertex a = base_of[attach.front()];
    Vertex b = base_of[(attach - VertexSet{attach.front()}).front()];
    Edge key{std::min(a, b), std::max(a, b)};
    if (!base.has_edge(key.first, key.second)) {
      return reject("component " + to_string(comp) + " joins non-adjacent base vertices " + std::to_string(a) + "," +
                    std::to_string(b));
    }
    if (!interior_of.emplace(key, comp).second) {
      return reject("two components replace base edge " + std::to_string(key.first) + "-" + std::to_string(key.second));
    }
  }
  for (auto [a, b] : base.edges()) {
    const Vertex ga = bm[a];
    const Vertex gb = bm[b];
    VertexSet members{ga, gb};
    auto it = interior_of.find(Edge{a, b});
    if (it != interior_of.end()) members |= it->second;
    const std::string name = std::to_string(a) + "-" + std::to_string(b);
    if (rule == PathRule::Plain) {
      auto path = detail::trace_path(g, members, ga, gb);
      if (!path) return reject("edge " + name + " is not replaced by an induced path");
      out.paths.push_back(*path);
      out.fuzz_edges.push_back(std::nullopt);
    } else {
      if (it == interior_of.end()) return reject("edge " + name + " is not subdivided");
      FuzzyPathVerdict fp = check_fuzzy_odd_path(g, members, ga, gb);
      if (!fp.accepted) return reject("edge " + name + ": " + fp.reason);
      if (fp.length() < 3) return reject("edge " + name + " has length below 3");
      out.paths.push_back(fp.path);
      out.fuzz_edges.push_back(fp.fuzz);
    }
    out.base_edges.emplace_back(a, b);
  }
  // Branch vertices may touch each other only as length-1 replacements.
  for (Vertex a = 0; a < base.size(); ++a)
    for (Vertex b = a + 1; b < base.size(); ++b)
      if (g.has_edge(bm[a], bm[b]) && (!base.has_edge(a, b) || interior_of.contains(Edge{a, b}))) {
        return reject("stray edge between branch vertices " + std::to_string(a) + "," + std::to_string(b));
      }
  out.accepted = true;
  return out;
}

inline SubdivisionVerdict is_pfos(const Graph& g, const Graph& base, const BranchMap& bm) {
  return decompose_subdivision(g, base, bm, PathRule::ProperFuzzyOdd);
}

// ---- filleting ------------------------------------------------------------

inline bool is_linear_forest(const Graph& g, const std::vector<Edge>& f) {
  Graph forest(g.size());
  for (auto [u, v] : f) {
    if (!g.has_edge(u, v) || forest.has_edge(u, v)) return false;
    forest.add_edge(u, v);
  }
  for (Vertex v = 0; v < g.size(); ++v)
    if (forest.degree(v) > 2) return false;
  // A cycle would be a component with as many edges as vertices.
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = reach_within(forest, VertexSet{left.front()}, left);
    left -= comp;
    std::size_t twice = 0;
    for (Vertex v : comp) twice += static_cast<std::size_t>(forest.degree(v));
    if (twice / 2 + 1 != static_cast<std::size_t>(comp.size())) return false;
  }
  return true;
}

/// Subdivide every edge outside f exactly counts(e) >= 1 times and no edge
/// of f. Missing counts read as 0.
inline Graph fillet(const Graph& g, const std::vector<Edge>& f, const std::map<Edge, int>& counts) {
  auto key = [](Edge e) { return Edge{std::min(e.first, e.second), std::max(e.first, e.second)}; };
  std::map<Edge, int> c;
  for (auto [e, k] : counts) {
    if (!g.has_edge(e.first, e.second)) throw Error(ErrorCode::InvalidPlan, "count given for a non-edge");
    if (!c.emplace(key(e), k).second) throw Error(ErrorCode::InvalidPlan, "count given twice");
  }
  std::map<Edge, bool> in_f;
  for (Edge e : f) {
    if (!g.has_edge(e.first, e.second)) throw Error(ErrorCode::InvalidPlan, "F contains a non-edge");
    in_f[key(e)] = true;
  }
  SubdivisionPlan plan{g, {}};
  for (Edge e : g.edges()) {
    const int k = c.contains(e) ? c[e] : 0;
    const std::string name = std::to_string(e.first) + "-" + std::to_string(e.second);
    if (in_f.contains(e) && k != 0) throw Error(ErrorCode::InvalidPlan, "edge " + name + " of F must not be subdivided");
    if (!in_f.contains(e) && k < 1) throw Error(ErrorCode::InvalidPlan, "edge " + name + " outside F must be subdivided");
    plan.edges.push_back({e.first, e.second, k + 1, std::nullopt});
  }
  return path_replacement(g, plan);
}

}  // namespace pivotminor
