#pragma once

// Coherence, focusedness and the strong Erdos-Hajnal ratio, all exact.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pivotminor/error.hpp"
#include "pivotminor/graph.hpp"
#include "pivotminor/mass.hpp"
#include "pivotminor/rational.hpp"

namespace pivotminor {

inline constexpr int kSweepLimit = 24;
inline constexpr int kFocusLimit = 20;

/// Lexicographic order of the sorted member lists.
inline bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const Vertex x = std::countr_zero(diff);
  // Members below x agree. The side holding x wins unless the other side
  // stops there (it is then a proper prefix).
  if (a.contains(x)) return (b.bits() >> x) != 0;
  return (a.bits() >> x) == 0;
}

inline bool lex_less(std::pair<VertexSet, VertexSet> p, std::pair<VertexSet, VertexSet> q) {
  if (p.first != q.first) return lex_less(p.first, q.first);
  return lex_less(p.second, q.second);
}

struct AnticompletePair {
  VertexSet a;
  VertexSet b;
  Rational value = 0;  // min(mu(A), mu(B)); 0 with empty sets when no pair exists
};

namespace detail {
inline void check_tier(const Graph& g, int limit, const char* what) {
  if (g.size() > limit) {
    throw Error(ErrorCode::Oversize, std::string(what) + " is exhaustive only up to " + std::to_string(limit) +
                                         " vertices");
  }
}
}  // namespace detail

/// Maximizes min(mu(A), mu(B)) over anticomplete pairs by sweeping every
/// seed S against V \ N[S]. A monotone mass makes this exact.
inline AnticompletePair max_anticomplete_pair(const MassedGraph& mg, int limit = kSweepLimit) {
  const Graph& g = mg.graph();
  detail::check_tier(g, limit, "anticomplete sweep");
  AnticompletePair best;
  bool found = false;
  const std::uint64_t all = g.vertices().bits();
  if (mg.kind() == MassKind::Uniform) {
    // Same sweep on integer sizes.
    int best_size = 0;
    for (std::uint64_t mask = 1; mask <= all && mask != 0; ++mask) {
      const VertexSet s(mask);
      const VertexSet rest = g.vertices() - g.closed_neighbors(s);
      if (rest.empty()) continue;
      const int v = std::min(s.size(), rest.size());
      if (!found || v > best_size || (v == best_size && lex_less({s, rest}, {best.a, best.b}))) {
        best = {s, rest, 0};
        best_size = v;
        found = true;
      }
    }
    best.value = Rational(best_size, g.size());
    return best;
  }
  for (std::uint64_t mask = 1; mask <= all && mask != 0; ++mask) {
    const VertexSet s(mask);
    const VertexSet rest = g.vertices() - g.closed_neighbors(s);
    if (rest.empty()) continue;
    const Rational ms = mg(s);
    const Rational mr = mg(rest);
    const Rational v = ms < mr ? ms : mr;
    if (!found || v > best.value || (v == best.value && lex_less({s, rest}, {best.a, best.b}))) {
      best = {s, rest, v};
      found = true;
    }
  }
  return best;
}

struct Violation {
  enum class Kind { VertexMass, NeighborhoodMass, BallMass, AnticompletePair, FocusWitness };
  Kind kind = Kind::VertexMass;
  Vertex vertex = -1;
  int r = 0;
  VertexSet a;
  VertexSet b;
  VertexSet z;
  Rational mass = 0;
};

inline const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::VertexMass: return "VertexMass";
    case Violation::Kind::NeighborhoodMass: return "NeighborhoodMass";
    case Violation::Kind::BallMass: return "BallMass";
    case Violation::Kind::AnticompletePair: return "AnticompletePair";
    case Violation::Kind::FocusWitness: return "FocusWitness";
  }
  return "?";
}

struct CoherenceVerdict {
  bool coherent = true;
  std::optional<Violation> violation;
};

namespace detail {
inline CoherenceVerdict violated(Violation v) { return {false, v}; }

inline std::optional<Violation> pair_violation(const MassedGraph& mg, const Rational& eps) {
  AnticompletePair p = max_anticomplete_pair(mg);
  if (!p.a.empty() && p.value >= eps) {
    Violation v;
    v.kind = Violation::Kind::AnticompletePair;
    v.a = p.a;
    v.b = p.b;
    v.mass = p.value;
    return v;
  }
  return std::nullopt;
}
}  // namespace detail

/// epsilon-coherent: mu(v) < eps, mu(N(v)) < eps for all v, and every
/// anticomplete pair has a side of mass < eps. Bullets are checked in that
/// order, vertices ascending.
inline CoherenceVerdict check_coherent(const MassedGraph& mg, const Rational& eps) {
  const Graph& g = mg.graph();
  detail::check_tier(g, kSweepLimit, "coherence check");
  for (Vertex v = 0; v < g.size(); ++v) {
    const Rational m = mg(v);
    if (m >= eps) {
      Violation out;
    out.kind = Violation::Kind::VertexMass;
      out.vertex = v;
      out.mass = m;
      return detail::violated(out);
    }
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    const Rational m = mg(g.neighbors(v));
    if (m >= eps) {
      Violation out;
    out.kind = Violation::Kind::NeighborhoodMass;
      out.vertex = v;
      out.mass = m;
      return detail::violated(out);
    }
  }
  if (auto p = detail::pair_violation(mg, eps)) return detail::violated(*p);
  return {};
}

/// (eps, r)-coherent: mu(N^r[v]) < eps for all v and the anticomplete bullet.
inline CoherenceVerdict check_r_coherent(const MassedGraph& mg, const Rational& eps, int r) {
  if (r < 1) throw Error(ErrorCode::PreconditionViolated, "r must be at least 1");
  const Graph& g = mg.graph();
  detail::check_tier(g, kSweepLimit, "coherence check");
  for (Vertex v = 0; v < g.size(); ++v) {
    const Rational m = mg(ball(g, v, r));
    if (m >= eps) {
      Violation out;
    out.kind = Violation::Kind::BallMass;
      out.vertex = v;
      out.r = r;
      out.mass = m;
      return detail::violated(out);
    }
  }
  if (auto p = detail::pair_violation(mg, eps)) return detail::violated(*p);
  return {};
}

/// Does Z break focusedness: mu(Z) >= delta while every in-Z ball has less
/// than half of mu(Z)?
inline bool breaks_focus(const MassedGraph& mg, VertexSet z, const Rational& delta, int r) {
  const Rational mz = mg(z);
  if (mz < delta) return false;
  for (Vertex v : z)
    if (mg(ball(mg.graph(), v, r, z)) * 2 >= mz) return false;
  return true;
}

/// (delta, r)-focused, by enumerating Z in order of size then lexicographic;
/// the first offender is the reported witness.
inline CoherenceVerdict check_focused(const MassedGraph& mg, const Rational& delta, int r,
                                      int limit = kFocusLimit) {
  if (r < 1) throw Error(ErrorCode::PreconditionViolated, "r must be at least 1");
  const Graph& g = mg.graph();
  detail::check_tier(g, limit, "focus check");
  const int n = g.size();
  std::optional<VertexSet> bad;
  auto rec = [&](auto&& self, Vertex from, int left, VertexSet z) -> void {
    if (bad) return;
    if (left == 0) {
      if (breaks_focus(mg, z, delta, r)) bad = z;
      return;
    }
    for (Vertex v = from; v <= n - left && !bad; ++v) self(self, v + 1, left - 1, z | VertexSet{v});
  };
  for (int k = 1; k <= n && !bad; ++k) rec(rec, 0, k, VertexSet{});
  if (!bad) return {};
  Violation out;
    out.kind = Violation::Kind::FocusWitness;
  out.z = *bad;
  out.r = r;
  out.mass = mg(*bad);
  return detail::violated(out);
}

enum class Polarity { Complete, Anticomplete };

inline const char* to_string(Polarity p) { return p == Polarity::Complete ? "Complete" : "Anticomplete"; }

struct EhRatio {
  Rational value = 0;
  VertexSet a;
  VertexSet b;
  Polarity polarity = Polarity::Anticomplete;
};

/// max over disjoint complete or anticomplete pairs of min(|A|,|B|) / n.
/// Anticomplete wins ties.
inline EhRatio eh_ratio(const Graph& g) {
  detail::check_tier(g, kSweepLimit, "eh_ratio");
  if (g.size() == 0) return {};
  AnticompletePair anti = max_anticomplete_pair(MassedGraph::uniform(g));
  AnticompletePair comp = max_anticomplete_pair(MassedGraph::uniform(complement(g)));
  if (comp.value > anti.value) return {comp.value, comp.a, comp.b, Polarity::Complete};
  return {anti.value, anti.a, anti.b, Polarity::Anticomplete};
}

}  // namespace pivotminor
