#pragma once

// Massed graphs: a graph with a normalized, monotone, subadditive set function.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pivotminor/error.hpp"
#include "pivotminor/graph.hpp"
#include "pivotminor/rational.hpp"

namespace pivotminor {

inline constexpr int kChromaticLimit = 16;

namespace detail {

// Can x be properly coloured with k colours? Colours are assigned in vertex
// order and a new colour is only opened as max-used + 1.
inline bool colourable(const Graph& g, const std::vector<Vertex>& order, std::size_t at, int k,
                       std::vector<int>& colour, int used) {
  if (at == order.size()) return true;
  const Vertex v = order[at];
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool clash = false;
    for (Vertex w : g.neighbors(v))
      if (colour[w] == c) {
        clash = true;
        break;
      }
    if (clash) continue;
    colour[v] = c;
    if (colourable(g, order, at + 1, k, colour, std::max(used, c + 1))) return true;
    colour[v] = -1;
  }
  return false;
}

}  // namespace detail

/// Exact chromatic number of g[x] by increasing-k backtracking, vertices
/// ordered by decreasing degree inside x.
inline int chromatic_number(const Graph& g, VertexSet x) {
  require_set(g, x);
  if (x.empty()) return 0;
  std::vector<Vertex> order = x.to_vector();
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return (g.neighbors(a) & x).size() > (g.neighbors(b) & x).size();
  });
  const Graph sub = induced(g, x);
  std::vector<Vertex> local(static_cast<std::size_t>(g.size()), -1);
  {
    Vertex i = 0;
    for (Vertex v : x) local[v] = i++;
  }
  for (Vertex& v : order) v = local[v];
  for (int k = 1;; ++k) {
    std::vector<int> colour(static_cast<std::size_t>(sub.size()), -1);
    if (detail::colourable(sub, order, 0, k, colour, 0)) return k;
  }
}

inline int chromatic_number(const Graph& g) { return chromatic_number(g, g.vertices()); }

enum class MassKind { Uniform, Weighted, ChromaticNormalized };

inline const char* to_string(MassKind k) {
  switch (k) {
    case MassKind::Uniform: return "uniform";
    case MassKind::Weighted: return "weighted";
    case MassKind::ChromaticNormalized: return "chromatic";
  }
  return "?";
}

class MassedGraph {
 public:
  static MassedGraph uniform(Graph g) {
    if (g.size() == 0) throw Error(ErrorCode::InvalidMass, "a mass needs at least one vertex");
    return MassedGraph(std::move(g), MassKind::Uniform, {});
  }

  /// Per-vertex nonnegative weights summing to 1.
  static MassedGraph weighted(Graph g, std::vector<Rational> weights) {
    if (weights.size() != static_cast<std::size_t>(g.size())) {
      throw Error(ErrorCode::InvalidMass, "expected " + std::to_string(g.size()) + " weights");
    }
    Rational total = 0;
    for (const Rational& w : weights) {
      if (w < Rational(0)) throw Error(ErrorCode::InvalidMass, "negative weight " + to_string(w));
      total += w;
    }
    if (total != Rational(1)) throw Error(ErrorCode::InvalidMass, "weights sum to " + to_string(total) + ", not 1");
    return MassedGraph(std::move(g), MassKind::Weighted, std::move(weights));
  }

  /// chi(G[X]) / chi(G).
  static MassedGraph chromatic(Graph g) {
    if (g.size() == 0) throw Error(ErrorCode::InvalidMass, "a mass needs at least one vertex");
    if (g.size() > kChromaticLimit) {
      throw Error(ErrorCode::Oversize, "chromatic mass is exact only up to " + std::to_string(kChromaticLimit) +
                                           " vertices");
    }
    return MassedGraph(std::move(g), MassKind::ChromaticNormalized, {});
  }

  const Graph& graph() const { return g_; }
  MassKind kind() const { return kind_; }
  const std::vector<Rational>& weights() const { return weights_; }
  int size() const { return g_.size(); }

  Rational operator()(VertexSet x) const {
    require_set(g_, x);
    switch (kind_) {
      case MassKind::Uniform: return Rational(x.size(), g_.size());
      case MassKind::Weighted: {
        Rational s = 0;
        for (Vertex v : x) s += weights_[v];
        return s;
      }
      case MassKind::ChromaticNormalized: return Rational(chi(x), chi(g_.vertices()));
    }
    return 0;
  }
  Rational operator()(Vertex v) const { return (*this)(VertexSet{v}); }

 private:
  MassedGraph(Graph g, MassKind kind, std::vector<Rational> weights)
      : g_(std::move(g)), kind_(kind), weights_(std::move(weights)) {
    if (kind_ == MassKind::ChromaticNormalized) {
      chi_cache_ = std::make_shared<std::vector<std::int8_t>>(std::size_t{1} << g_.size(), -1);
    }
  }

  int chi(VertexSet x) const {
    auto& slot = (*chi_cache_)[x.bits()];
    if (slot < 0) slot = static_cast<std::int8_t>(chromatic_number(g_, x));
    return slot;
  }

  Graph g_;
  MassKind kind_;
  std::vector<Rational> weights_;
  std::shared_ptr<std::vector<std::int8_t>> chi_cache_;
};

/// mu(N[X]) >= delta.
inline bool is_dominant(const MassedGraph& mg, VertexSet x, const Rational& delta) {
  return mg(mg.graph().closed_neighbors(x)) >= delta;
}

}  // namespace pivotminor
