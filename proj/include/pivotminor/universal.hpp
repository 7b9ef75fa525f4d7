#pragma once

// Universal hosts and explicit pivot-minor witnesses for the four
// universality constructions:
//   SquareClique             K_r^2
//   FuzzyOddCliqueSub        any proper fuzzy odd subdivision of K_r
//   ComplementCubeCliqueJoin complement(K_r^3) + K_1
//   ComplementMod3           complement of K_{r+1} with every edge replaced
//                            by a path of length 1 mod 3 (at least 4)

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pivotminor/codec.hpp"
#include "pivotminor/error.hpp"
#include "pivotminor/graph.hpp"
#include "pivotminor/pivot.hpp"
#include "pivotminor/subdivision.hpp"

namespace pivotminor {

enum class UniversalKind { SquareClique, FuzzyOddCliqueSub, ComplementCubeCliqueJoin, ComplementMod3 };

inline const std::vector<UniversalKind>& all_universal_kinds() {
  static const std::vector<UniversalKind> kinds{UniversalKind::SquareClique, UniversalKind::FuzzyOddCliqueSub,
                                                UniversalKind::ComplementCubeCliqueJoin,
                                                UniversalKind::ComplementMod3};
  return kinds;
}

inline const char* to_string(UniversalKind k) {
  switch (k) {
    case UniversalKind::SquareClique: return "square-clique";
    case UniversalKind::FuzzyOddCliqueSub: return "fuzzy-odd-clique-sub";
    case UniversalKind::ComplementCubeCliqueJoin: return "complement-cube-clique-join";
    case UniversalKind::ComplementMod3: return "complement-mod3";
  }
  return "?";
}

inline UniversalKind parse_universal_kind(const std::string& s) {
  for (UniversalKind k : all_universal_kinds())
    if (s == to_string(k)) return k;
  if (s == "a") return UniversalKind::SquareClique;
  if (s == "b") return UniversalKind::FuzzyOddCliqueSub;
  if (s == "c") return UniversalKind::ComplementCubeCliqueJoin;
  if (s == "d") return UniversalKind::ComplementMod3;
  throw Error(ErrorCode::MalformedInput, "unknown universal kind '" + s + "'");
}

struct UniversalOptions {
  int max_r = 4;
  /// Host for FuzzyOddCliqueSub: a plan over K_r. Defaults to all lengths 5
  /// with a triangle chord p1-p3 on the first edge.
  std::optional<SubdivisionPlan> pfos_plan;
  /// Host for ComplementMod3: a plan over K_{r+1}. Defaults to all lengths 4.
  std::optional<SubdivisionPlan> mod3_plan;
};

struct UniversalInstance {
  UniversalKind kind;
  int r = 0;
  Graph host;
  PivotWitness witness;
};

inline SubdivisionPlan default_pfos_plan(int r) {
  SubdivisionPlan plan = SubdivisionPlan::uniform(complete_graph(r), 5);
  if (!plan.edges.empty()) plan.edges.front().fuzz = Fuzz{1, Fuzz::Attach::Next};
  return plan;
}

inline SubdivisionPlan default_mod3_plan(int r) { return SubdivisionPlan::uniform(complete_graph(r + 1), 4); }

namespace detail {

inline std::string pair_name(Vertex i, Vertex j) { return std::to_string(i) + "_" + std::to_string(j); }

inline void label_layout(Graph& g, const BuiltPlan& layout) {
  for (std::size_t e = 0; e < layout.paths.size(); ++e) {
    const auto& p = layout.paths[e];
    g.set_label(p.front(), "x" + std::to_string(p.front()));
    g.set_label(p.back(), "x" + std::to_string(p.back()));
    for (std::size_t k = 1; k + 1 < p.size(); ++k) {
      g.set_label(p[k], "p" + pair_name(p.front(), p.back()) + "." + std::to_string(k));
    }
  }
}

inline void check_pattern(const Graph& pattern, int r, const UniversalOptions& opt) {
  if (pattern.size() < 1) throw Error(ErrorCode::PreconditionViolated, "pattern must have a vertex");
  if (r > opt.max_r) {
    throw Error(ErrorCode::Oversize, "r=" + std::to_string(r) + " exceeds the configured maximum " +
                                         std::to_string(opt.max_r));
  }
  if (pattern.size() > r) throw Error(ErrorCode::PreconditionViolated, "pattern larger than r");
}

/// Deletes x_i for pattern.size() <= i < r.
inline void drop_unused_branches(WitnessBuilder& b, const std::vector<Vertex>& branch_originals, int used) {
  std::vector<Vertex> extra(branch_originals.begin() + used, branch_originals.end());
  b.remove_original(extra);
}

/// Final stage on a graph isomorphic to K_r^2 whose pair (i,j) path is
/// x_i y z x_j: pivot yz for each pattern edge, then delete all y and z.
inline void square_clique_stage(WitnessBuilder& b, const Graph& pattern, const std::vector<Vertex>& branch_originals,
                                const std::vector<Edge>& pairs, const std::vector<std::vector<Vertex>>& paths_original) {
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    auto [i, j] = pairs[e];
    if (i < pattern.size() && j < pattern.size() && pattern.has_edge(i, j)) {
      b.pivot(b.current(paths_original[e][1]), b.current(paths_original[e][2]));
    }
  }
  std::vector<Vertex> helpers;
  for (const auto& p : paths_original) helpers.insert(helpers.end(), p.begin() + 1, p.end() - 1);
  b.remove_original(helpers);
  drop_unused_branches(b, branch_originals, pattern.size());
}

/// Final stage on complement(K_r^3) + K_1 with pair paths x_i a1 a2 a3 x_j
/// (in the uncomplemented graph) and join vertex u: for each non-edge ij of
/// the pattern pivot u a2 then a1 a3; delete the helpers and u.
inline void cube_stage(WitnessBuilder& b, const Graph& pattern, const std::vector<Vertex>& branch_originals,
                       Vertex u_original, const std::vector<Edge>& pairs,
                       const std::vector<std::vector<Vertex>>& paths_original) {
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    auto [i, j] = pairs[e];
    if (i < pattern.size() && j < pattern.size() && !pattern.has_edge(i, j)) {
      const auto& p = paths_original[e];
      b.pivot(b.current(u_original), b.current(p[2]));
      b.pivot(b.current(p[1]), b.current(p[3]));
    }
  }
  std::vector<Vertex> helpers;
  for (const auto& p : paths_original) helpers.insert(helpers.end(), p.begin() + 1, p.end() - 1);
  helpers.push_back(u_original);
  b.remove_original(helpers);
  drop_unused_branches(b, branch_originals, pattern.size());
}

inline std::vector<std::vector<Vertex>> to_original(const WitnessBuilder& b,
                                                    const std::vector<std::vector<Vertex>>& paths) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& p : paths) {
    std::vector<Vertex> q;
    for (Vertex v : p) q.push_back(b.original(v));
    out.push_back(std::move(q));
  }
  return out;
}

inline BranchMap current_branch_map(const WitnessBuilder& b, const std::vector<Vertex>& branch_originals) {
  BranchMap bm;
  for (Vertex o : branch_originals) bm.push_back(b.current(o));
  return bm;
}

// ---- SquareClique ---------------------------------------------------------

inline UniversalInstance emit_square_clique(const Graph& pattern, const UniversalOptions& opt) {
  const int r = pattern.size();
  check_pattern(pattern, r, opt);
  BuiltPlan layout = build_plan(SubdivisionPlan::uniform(complete_graph(r), 3), false);
  Graph host = layout.graph;
  for (Vertex i = 0; i < r; ++i) host.set_label(i, "x" + std::to_string(i));
  for (std::size_t e = 0; e < layout.paths.size(); ++e) {
    const auto& p = layout.paths[e];
    host.set_label(p[1], "y" + pair_name(p[0], p[3]));
    host.set_label(p[2], "z" + pair_name(p[0], p[3]));
  }
  WitnessBuilder b(host);
  std::vector<Vertex> branch(static_cast<std::size_t>(r));
  for (Vertex i = 0; i < r; ++i) branch[i] = i;
  square_clique_stage(b, pattern, branch, layout.base_edges, layout.paths);
  return {UniversalKind::SquareClique, r, host, b.witness()};
}

// ---- FuzzyOddCliqueSub ----------------------------------------------------

struct Reduction {
  Vertex x;
  Vertex y;
};

/// Candidate (x, y) pairs in scan order: sorted edges, both orientations,
/// first the plain configuration (induced w-x-y-z, all of degree 2), then
/// the fuzzy one (N(x) = {w,y,z}, N(y) = {x,z}, deg w = 2, deg z = 3).
inline std::vector<Reduction> reduction_candidates(const Graph& g, VertexSet branch) {
  std::vector<Reduction> out;
  for (auto [a, b] : g.edges()) {
    for (auto [x, y] : {Edge{a, b}, Edge{b, a}}) {
      if (branch.contains(x) || branch.contains(y)) continue;
      const VertexSet nx = g.neighbors(x) - VertexSet{y};
      const VertexSet ny = g.neighbors(y) - VertexSet{x};
      bool plain = false;
      if (g.degree(x) == 2 && g.degree(y) == 2) {
        const Vertex w = nx.front();
        const Vertex z = ny.front();
        plain = w != z && g.degree(w) == 2 && g.degree(z) == 2 && !g.has_edge(w, y) && !g.has_edge(x, z) &&
                !g.has_edge(w, z);
      }
      bool fuzzy = false;
      if (g.degree(x) == 3 && g.degree(y) == 2) {
        const Vertex z = ny.front();
        if (nx.contains(z)) {
          const Vertex w = (nx - VertexSet{z}).front();
          fuzzy = g.degree(w) == 2 && g.degree(z) == 3;
        }
      }
      if (plain || fuzzy) out.push_back({x, y});
    }
  }
  return out;
}

inline UniversalInstance emit_fuzzy_odd(const Graph& pattern, const UniversalOptions& opt) {
  SubdivisionPlan plan = opt.pfos_plan ? *opt.pfos_plan : default_pfos_plan(pattern.size());
  const int r = plan.base.size();
  check_pattern(pattern, r, opt);
  const Graph kr = complete_graph(r);
  if (!(plan.base == kr)) throw Error(ErrorCode::InvalidPlan, "host plan must be over a complete graph");
  BuiltPlan layout = build_pfos_layout(plan);
  Graph host = layout.graph;
  label_layout(host, layout);
  std::vector<Vertex> branch(static_cast<std::size_t>(r));
  for (Vertex i = 0; i < r; ++i) branch[i] = i;

  WitnessBuilder b(host);
  while (true) {
    const Graph& g = b.graph();
    const BranchMap bm = current_branch_map(b, branch);
    SubdivisionVerdict dec = is_pfos(g, kr, bm);
    if (!dec.accepted) throw Error(ErrorCode::PreconditionViolated, "intermediate graph is not a PFOS: " + dec.reason);
    bool square = true;
    for (std::size_t e = 0; e < dec.paths.size(); ++e)
      if (dec.paths[e].size() != 4 || dec.fuzz_edges[e]) square = false;
    if (square) {
      square_clique_stage(b, pattern, branch, dec.base_edges, to_original(b, dec.paths));
      break;
    }
    VertexSet bset = VertexSet::from(bm);
    bool reduced = false;
    for (Reduction c : reduction_candidates(g, bset)) {
      Graph next = remove_vertices(pivot(g, c.x, c.y), VertexSet{c.x, c.y});
      BranchMap nbm;
      for (Vertex v : bm) nbm.push_back(v - (v > c.x ? 1 : 0) - (v > c.y ? 1 : 0));
      if (!is_pfos(next, kr, nbm).accepted) continue;
      const Vertex ox = b.original(c.x);
      const Vertex oy = b.original(c.y);
      b.pivot(c.x, c.y);
      b.remove_original({ox, oy});
      reduced = true;
      break;
    }
    if (!reduced) {
      throw Error(ErrorCode::PreconditionViolated, "no reducible configuration in " + encode_graph6(g));
    }
  }
  return {UniversalKind::FuzzyOddCliqueSub, r, host, b.witness()};
}

// ---- ComplementCubeCliqueJoin -------------------------------------------------

inline UniversalInstance emit_cube(const Graph& pattern, const UniversalOptions& opt) {
  const int r = pattern.size();
  check_pattern(pattern, r, opt);
  BuiltPlan layout = build_plan(SubdivisionPlan::uniform(complete_graph(r), 4), false);
  Graph host = join(complement(layout.graph), Graph(1));
  const Vertex u = host.size() - 1;
  for (Vertex i = 0; i < r; ++i) host.set_label(i, "x" + std::to_string(i));
  for (const auto& p : layout.paths)
    for (int k = 1; k <= 3; ++k) host.set_label(p[k], "x" + pair_name(p[0], p[4]) + "^" + std::to_string(k));
  host.set_label(u, "u");
  WitnessBuilder b(host);
  std::vector<Vertex> branch(static_cast<std::size_t>(r));
  for (Vertex i = 0; i < r; ++i) branch[i] = i;
  cube_stage(b, pattern, branch, u, layout.base_edges, layout.paths);
  return {UniversalKind::ComplementCubeCliqueJoin, r, host, b.witness()};
}

// ---- ComplementMod3 -------------------------------------------------------

inline UniversalInstance emit_mod3(const Graph& pattern, const UniversalOptions& opt) {
  SubdivisionPlan plan = opt.mod3_plan ? *opt.mod3_plan : default_mod3_plan(pattern.size());
  const int r = plan.base.size() - 1;
  check_pattern(pattern, r, opt);
  if (!(plan.base == complete_graph(r + 1))) throw Error(ErrorCode::InvalidPlan, "host plan must be over a complete graph");
  for (const auto& e : plan.edges) {
    if (e.len < 4 || e.len % 3 != 1) {
      throw Error(ErrorCode::InvalidPlan, "lengths must be 1 mod 3 and at least 4");
    }
  }
  BuiltPlan layout = build_plan(plan, false);
  Graph host = complement(layout.graph);
  label_layout(host, layout);
  const Graph kr = complete_graph(r);
  const Vertex w = r;  // the branch vertex that becomes the join vertex
  std::vector<Vertex> branch(static_cast<std::size_t>(r));
  for (Vertex i = 0; i < r; ++i) branch[i] = i;

  WitnessBuilder b(host);
  std::vector<Vertex> at_w;
  for (std::size_t e = 0; e < layout.paths.size(); ++e) {
    if (layout.base_edges[e].second != w) continue;
    const auto& p = layout.paths[e];
    at_w.insert(at_w.end(), p.begin() + 1, p.end() - 1);
  }
  b.remove_original(at_w);

  while (true) {
    const Graph& g = b.graph();
    const Vertex u = b.current(w);
    if (g.degree(u) != g.size() - 1) throw Error(ErrorCode::PreconditionViolated, "join vertex lost a neighbour");
    // The uncomplemented subdivision of K_r, in current indices minus u.
    Graph h = complement(remove_vertices(g, VertexSet{u}));
    auto lift = [&](Vertex v) { return v >= u ? v + 1 : v; };
    BranchMap bm_h;
    for (Vertex o : branch) {
      const Vertex c = b.current(o);
      bm_h.push_back(c > u ? c - 1 : c);
    }
    SubdivisionVerdict dec = decompose_subdivision(h, kr, bm_h, PathRule::Plain);
    if (!dec.accepted) throw Error(ErrorCode::PreconditionViolated, "intermediate graph lost its shape: " + dec.reason);
    std::vector<std::vector<Vertex>> paths;
    bool cube = true;
    for (auto& p : dec.paths) {
      std::vector<Vertex> q;
      for (Vertex v : p) q.push_back(lift(v));
      if (p.size() != 5) cube = false;
      if ((p.size() - 1) % 3 != 1) throw Error(ErrorCode::PreconditionViolated, "path length left 1 mod 3");
      paths.push_back(std::move(q));
    }
    if (cube) {
      cube_stage(b, pattern, branch, w, dec.base_edges, to_original(b, paths));
      break;
    }
    // Lexicographically least x1..x5 inside a path of length at least 7,
    // with x2, x3, x4 internal.
    std::optional<std::vector<Vertex>> best;
    for (const auto& p : paths) {
      if (p.size() < 8) continue;
      for (std::size_t k = 0; k + 4 < p.size(); ++k) {
        std::vector<Vertex> seg(p.begin() + static_cast<std::ptrdiff_t>(k), p.begin() + static_cast<std::ptrdiff_t>(k) + 5);
        std::vector<Vertex> rev(seg.rbegin(), seg.rend());
        for (auto* s : {&seg, &rev})
          if (!best || *s < *best) best = *s;
      }
    }
    const auto& x = *best;
    const Vertex o2 = b.original(x[1]);
    const Vertex o3 = b.original(x[2]);
    const Vertex o4 = b.original(x[3]);
    b.pivot(u, x[2]);
    b.pivot(b.current(o2), b.current(o4));
    b.remove_original({o2, o3, o4});
  }
  return {UniversalKind::ComplementMod3, r, host, b.witness()};
}

}  // namespace detail

/// Host graph and a witness that `pattern` is a pivot-minor of it. The
/// witness is produced by following the construction step by step; callers
/// should still check it with verify_witness.
inline UniversalInstance universal_host_and_witness(const Graph& pattern, UniversalKind kind,
                                                    const UniversalOptions& opt = {}) {
  switch (kind) {
    case UniversalKind::SquareClique: return detail::emit_square_clique(pattern, opt);
    case UniversalKind::FuzzyOddCliqueSub: return detail::emit_fuzzy_odd(pattern, opt);
    case UniversalKind::ComplementCubeCliqueJoin: return detail::emit_cube(pattern, opt);
    case UniversalKind::ComplementMod3: return detail::emit_mod3(pattern, opt);
  }
  throw Error(ErrorCode::MalformedInput, "unknown kind");
}

}  // namespace pivotminor
