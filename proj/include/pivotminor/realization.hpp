#pragma once

// delta-realizations of rooted caterpillars and (T', r, kappa)-frames.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pivotminor/embedding.hpp"
#include "pivotminor/graph.hpp"
#include "pivotminor/mass.hpp"
#include "pivotminor/rational.hpp"
#include "pivotminor/structure.hpp"

namespace pivotminor {

/// sets[v] is X_v for vertex v of the rooted caterpillar `shape`.
struct Realization {
  Graph shape;
  Vertex head = 0;
  std::vector<VertexSet> sets;
  Rational delta = 0;
};

inline StructureVerdict validate_realization(const MassedGraph& mg, const Realization& real) {
  using R = StructureVerdict;
  const Graph& g = mg.graph();
  const Graph& n = real.shape;
  if (real.sets.size() != static_cast<std::size_t>(n.size())) {
    throw Error(ErrorCode::InvalidSet, "one set per caterpillar vertex required");
  }
  for (const VertexSet& x : real.sets) require_set(g, x, "realization set");
  if (!n.has_vertex(real.head)) return R::reject("realization.caterpillar", {real.head}, "head out of range");
  const CaterpillarVerdict cat = is_rooted_caterpillar(n, real.head);
  if (!cat.accepted) return R::reject("realization.caterpillar", {}, cat.reason);

  for (Vertex u = 0; u < n.size(); ++u)
    for (Vertex v = u + 1; v < n.size(); ++v)
      if (real.sets[u].intersects(real.sets[v])) {
        return R::reject("realization.disjoint", {u, v}, "X" + std::to_string(u) + " meets X" + std::to_string(v));
      }
  // On an edge the vertex nearer the head is covered by the farther one.
  const std::vector<int> depth = distances(n, real.head);
  for (auto [u, v] : n.edges()) {
    const Vertex far = depth[u] > depth[v] ? u : v;
    const Vertex near = far == u ? v : u;
    if (!covers(g, real.sets[far], real.sets[near])) {
      return R::reject("realization.cover", {far, near}, "X" + std::to_string(far) + " does not cover X" + std::to_string(near));
    }
  }
  for (Vertex u = 0; u < n.size(); ++u)
    for (Vertex v = u + 1; v < n.size(); ++v)
      if (!n.has_edge(u, v) && !anticomplete(g, real.sets[u], real.sets[v])) {
        return R::reject("realization.anticomplete", {u, v},
                         "X" + std::to_string(u) + " and X" + std::to_string(v) + " touch for a non-edge");
      }
  const Rational mh = mg(real.sets[real.head]);
  if (mh < real.delta) {
    return R::reject("realization.head_mass", {real.head}, "mu(X_h) = " + to_string(mh) + " < " + to_string(real.delta));
  }
  for (Vertex u = 0; u < n.size(); ++u) {
    if (u == real.head) continue;
    if (!is_connected(g, real.sets[u])) return R::reject("realization.connected", {u}, "X" + std::to_string(u) + " is not connected");
  }
  for (Vertex u = 0; u < n.size(); ++u) {
    if (u == real.head) continue;
    if (!is_dominant(mg, real.sets[u], real.delta)) {
      return R::reject("realization.dominant", {u}, "X" + std::to_string(u) + " is not " + to_string(real.delta) + "-dominant");
    }
  }
  return R::accept();
}

/// T = G[tree] must be isomorphic to `shape`; leaf_sets pairs each leaf v of
/// T (a vertex of G) with X_v.
struct Frame {
  Graph shape;
  VertexSet tree;
  std::vector<std::pair<Vertex, VertexSet>> leaf_sets;
  int r = 1;
  Rational kappa = 0;
};

inline StructureVerdict validate_frame(const MassedGraph& mg, const Frame& fr) {
  using R = StructureVerdict;
  const Graph& g = mg.graph();
  require_set(g, fr.tree, "frame tree");
  for (const auto& [leaf, x] : fr.leaf_sets) {
    if (!g.has_vertex(leaf)) throw Error(ErrorCode::InvalidVertex, "frame leaf out of range");
    require_set(g, x, "frame leaf set");
  }
  if (fr.r < 0) throw Error(ErrorCode::PreconditionViolated, "negative radius");

  const Graph t = induced(g, fr.tree);
  const std::vector<Vertex> host = fr.tree.to_vector();
  const CaterpillarVerdict cat = is_caterpillar(t);
  if (!cat.accepted) return R::reject("frame.shape", {}, "G[T] is not a caterpillar: " + cat.reason);
  if (cat.spine.empty()) return R::reject("frame.shape", {}, "T needs a vertex of degree at least two");
  if (fr.shape.size() != t.size() || fr.shape.edge_count() != t.edge_count() || !induced_embedding(fr.shape, t)) {
    return R::reject("frame.shape", {}, "G[T] is not isomorphic to the given caterpillar");
  }
  VertexSet inner;
  for (Vertex s : cat.spine) inner.insert(host[s]);
  VertexSet leaves;
  for (Vertex l : cat.leaves) leaves.insert(host[l]);
  VertexSet listed;
  for (const auto& [leaf, x] : fr.leaf_sets) {
    if (!leaves.contains(leaf) || listed.contains(leaf)) {
      return R::reject("frame.leaves", {leaf}, "vertex " + std::to_string(leaf) + " is not a fresh leaf of T");
    }
    listed.insert(leaf);
  }
  if (listed != leaves) return R::reject("frame.leaves", {}, "some leaf of T has no set");

  auto attach = [&](Vertex leaf) { return (g.neighbors(leaf) & inner).front(); };
  for (const auto& [v, x] : fr.leaf_sets) {
    const Vertex xv = attach(v);
    if (!x.contains(v) || x.contains(xv)) {
      return R::reject("frame.leaf_set", {v}, "X_v must contain v and not its attachment");
    }
    VertexSet others = inner;
    others.erase(xv);
    if (!anticomplete(g, x, others)) return R::reject("frame.leaf_set", {v}, "X_v touches another spine vertex");
  }
  for (std::size_t s = 0; s < fr.leaf_sets.size(); ++s)
    for (std::size_t t2 = s + 1; t2 < fr.leaf_sets.size(); ++t2)
      if (!anticomplete(g, fr.leaf_sets[s].second, fr.leaf_sets[t2].second)) {
        return R::reject("frame.anticomplete", {fr.leaf_sets[s].first, fr.leaf_sets[t2].first}, "leaf sets touch");
      }
  for (const auto& [v, x] : fr.leaf_sets) {
    const Vertex xv = attach(v);
    if (!is_r_centre(g, x | VertexSet{xv}, xv, fr.r)) {
      return R::reject("frame.centre", {v}, std::to_string(xv) + " is not an " + std::to_string(fr.r) + "-centre");
    }
  }
  for (const auto& [v, x] : fr.leaf_sets) {
    if ((g.neighbors(attach(v)) & x) != VertexSet{v}) {
      return R::reject("frame.unique_neighbour", {v}, "v is not the only neighbour of its attachment in X_v");
    }
  }
  for (const auto& [v, x] : fr.leaf_sets) {
    if (!is_dominant(mg, x | VertexSet{attach(v)}, fr.kappa)) {
      return R::reject("frame.dominant", {v}, "X_v + x^v is not " + to_string(fr.kappa) + "-dominant");
    }
  }
  return R::accept();
}

}  // namespace pivotminor
