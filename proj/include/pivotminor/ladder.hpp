#pragma once

// k-ladders, their ticks and the parity of the P_c paths.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pivotminor/graph.hpp"
#include "pivotminor/mass.hpp"
#include "pivotminor/rational.hpp"
#include "pivotminor/structure.hpp"

namespace pivotminor {

/// Families A_0..A_{k-1}, B_0.., C_0.. (ladder indices are 0-based).
struct Ladder {
  std::vector<VertexSet> a;
  std::vector<VertexSet> b;
  std::vector<VertexSet> c;

  int k() const { return static_cast<int>(a.size()); }
  VertexSet all() const {
    VertexSet out;
    for (int i = 0; i < k(); ++i) out |= a[i] | b[i] | c[i];
    return out;
  }
};

namespace detail {

inline std::string set_name(char family, int i) { return std::string(1, family) + std::to_string(i); }

inline void require_ladder_shape(const Graph& g, const Ladder& lad) {
  if (lad.b.size() != lad.a.size() || lad.c.size() != lad.a.size()) {
    throw Error(ErrorCode::InvalidSet, "ladder families must have equal length");
  }
  for (int i = 0; i < lad.k(); ++i) {
    require_set(g, lad.a[i], "A set");
    require_set(g, lad.b[i], "B set");
    require_set(g, lad.c[i], "C set");
  }
}

}  // namespace detail

/// First failing ladder bullet. half_cleaned adds B_i anticomplete to C_j
/// (i < j); kappa adds mu(C_i) >= kappa.
inline StructureVerdict validate_ladder(const Graph& g, const Ladder& lad, bool half_cleaned = false,
                                        const MassedGraph* mg = nullptr,
                                        std::optional<Rational> kappa = std::nullopt) {
  detail::require_ladder_shape(g, lad);
  const int k = lad.k();
  using R = StructureVerdict;
  // Flattened order A_0.., B_0.., C_0..
  std::vector<std::pair<char, int>> names;
  std::vector<VertexSet> sets;
  for (auto [fam, vec] : {std::pair{'A', &lad.a}, std::pair{'B', &lad.b}, std::pair{'C', &lad.c}}) {
    for (int i = 0; i < k; ++i) {
      names.emplace_back(fam, i);
      sets.push_back((*vec)[i]);
    }
  }
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (std::size_t t = s + 1; t < sets.size(); ++t)
      if (sets[s].intersects(sets[t])) {
        return R::reject("ladder.disjoint", {names[s].second, names[t].second},
                         detail::set_name(names[s].first, names[s].second) + " meets " +
                             detail::set_name(names[t].first, names[t].second));
      }
  for (int i = 0; i < k; ++i) {
    if (!is_connected(g, lad.a[i])) return R::reject("ladder.A_connected", {i}, "A" + std::to_string(i) + " is not connected");
    if (!covers(g, lad.a[i], lad.b[i])) return R::reject("ladder.A_covers_B", {i}, "A" + std::to_string(i) + " does not cover B" + std::to_string(i));
    if (!covers(g, lad.b[i], lad.c[i])) return R::reject("ladder.B_covers_C", {i}, "B" + std::to_string(i) + " does not cover C" + std::to_string(i));
  }
  for (int i = 0; i < k; ++i)
    if (!anticomplete(g, lad.a[i], lad.c[i])) {
      return R::reject("ladder.A_anticomplete_C", {i}, "edge between A" + std::to_string(i) + " and C" + std::to_string(i));
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && !anticomplete(g, lad.a[i], lad.a[j] | lad.b[j] | lad.c[j])) {
        return R::reject("ladder.A_anticomplete_other", {i, j},
                         "A" + std::to_string(i) + " touches ladder index " + std::to_string(j));
      }
  if (half_cleaned) {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (!anticomplete(g, lad.b[i], lad.c[j])) {
          return R::reject("ladder.half_cleaned", {i, j}, "edge between B" + std::to_string(i) + " and C" + std::to_string(j));
        }
  }
  if (kappa) {
    if (mg == nullptr) throw Error(ErrorCode::PreconditionViolated, "a mass bound needs a massed graph");
    for (int i = 0; i < k; ++i) {
      const Rational m = (*mg)(lad.c[i]);
      if (m < *kappa) {
        return R::reject("ladder.mass", {i}, "mu(C" + std::to_string(i) + ") = " + to_string(m) + " < " + to_string(*kappa));
      }
    }
  }
  return R::accept();
}

inline StructureVerdict validate_ladder(const MassedGraph& mg, const Ladder& lad, bool half_cleaned,
                                        std::optional<Rational> kappa) {
  return validate_ladder(mg.graph(), lad, half_cleaned, &mg, kappa);
}

/// An I-tick: paths[t] runs from q_{index[t]} to the common centre x_I.
struct Tick {
  std::vector<int> index;
  std::vector<std::vector<Vertex>> paths;

  Vertex centre() const { return paths.empty() || paths.front().empty() ? -1 : paths.front().back(); }
  VertexSet vertices() const {
    VertexSet out;
    for (const auto& p : paths) out |= VertexSet::from(p);
    return out;
  }
};

inline StructureVerdict validate_tick(const Graph& g, const Ladder& lad, const Tick& tick) {
  detail::require_ladder_shape(g, lad);
  using R = StructureVerdict;
  const std::size_t m = tick.index.size();
  if (m == 0 || tick.paths.size() != m) return R::reject("tick.index", {}, "need one path per index and at least one index");
  for (std::size_t t = 0; t < m; ++t) {
    const int i = tick.index[t];
    if (i < 0 || i >= lad.k()) return R::reject("tick.index", {i}, "ladder index out of range");
    for (std::size_t s = 0; s < t; ++s)
      if (tick.index[s] == i) return R::reject("tick.index", {i}, "repeated ladder index");
  }
  const Vertex x = tick.centre();
  for (std::size_t t = 0; t < m; ++t) {
    const auto& p = tick.paths[t];
    const int i = tick.index[t];
    if (p.empty() || !is_induced_path(g, p)) return R::reject("tick.path", {i}, "Q" + std::to_string(i) + " is not an induced path");
    if (p.back() != x) return R::reject("tick.path", {i}, "Q" + std::to_string(i) + " does not end at the centre");
    for (std::size_t s = 0; s < t; ++s)
      if (tick.paths[s].front() == p.front()) return R::reject("tick.path", {tick.index[s], i}, "ends q coincide");
  }
  std::vector<VertexSet> body(m);  // Q_i \ {x}
  for (std::size_t t = 0; t < m; ++t) {
    body[t] = VertexSet::from(tick.paths[t]);
    body[t].erase(x);
  }
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s + 1; t < m; ++t)
      if (!anticomplete(g, body[s], body[t])) {
        return R::reject("tick.pairwise_anticomplete", {tick.index[s], tick.index[t]},
                         "Q" + std::to_string(tick.index[s]) + " and Q" + std::to_string(tick.index[t]) + " touch away from the centre");
      }
  const VertexSet ladder = lad.all();
  for (std::size_t t = 0; t < m; ++t) {
    VertexSet rest = VertexSet::from(tick.paths[t]);
    rest.erase(tick.paths[t].front());
    if (!anticomplete(g, rest, ladder)) {
      return R::reject("tick.clear_of_ladder", {tick.index[t]}, "Q" + std::to_string(tick.index[t]) + " minus q touches the ladder");
    }
  }
  for (std::size_t t = 0; t < m; ++t) {
    const int i = tick.index[t];
    const Vertex q = tick.paths[t].front();
    if (ladder.contains(q)) return R::reject("tick.q_outside", {i}, "q" + std::to_string(i) + " lies in the ladder");
    if (!(g.neighbors(q) & ladder).subset_of(lad.a[i])) {
      return R::reject("tick.q_neighbours", {i}, "q" + std::to_string(i) + " has a ladder neighbour outside A" + std::to_string(i));
    }
  }
  for (std::size_t t = 0; t < m; ++t) {
    const int i = tick.index[t];
    if (!is_connected(g, lad.a[i] | VertexSet{tick.paths[t].front()})) {
      return R::reject("tick.A_q_connected", {i}, "A" + std::to_string(i) + " + q" + std::to_string(i) + " is not connected");
    }
  }
  return R::accept();
}

enum class TickClass { Odd, Even, Mixed, Invalid };

inline const char* to_string(TickClass c) {
  switch (c) {
    case TickClass::Odd: return "odd";
    case TickClass::Even: return "even";
    case TickClass::Mixed: return "mixed";
    case TickClass::Invalid: return "invalid";
  }
  return "?";
}

/// P_c from c to the centre, with b its single B vertex.
struct PcPath {
  int index = 0;
  Vertex c = -1;
  Vertex b = -1;
  std::vector<Vertex> path;
  int length() const { return static_cast<int>(path.size()) - 1; }
};

struct TickClassification {
  TickClass cls = TickClass::Invalid;
  StructureVerdict verdict;
  std::vector<PcPath> paths;
  /// No C vertex at all: both parities hold, reported as Even.
  bool vacuous = false;
};

/// Shortest c..x path in G[Q_i + A_i + B_i + C_i] meeting C_i only in c and
/// B_i exactly once, least vertex sequence among those. In a valid tick the
/// second vertex is forced into B_i, so this is b then a shortest path that
/// avoids B_i and C_i.
inline std::optional<PcPath> minimal_pc(const Graph& g, const Ladder& lad, int i, const std::vector<Vertex>& q_path,
                                        Vertex x, Vertex c) {
  const VertexSet free = VertexSet::from(q_path) | lad.a[i];
  std::optional<PcPath> best;
  for (Vertex b : g.neighbors(c) & lad.b[i]) {
    auto tail = least_shortest_path(g, b, x, free | VertexSet{b});
    if (!tail) continue;
    if (best && static_cast<int>(tail->size()) >= best->length()) continue;
    PcPath p;
    p.index = i;
    p.c = c;
    p.b = b;
    p.path.push_back(c);
    p.path.insert(p.path.end(), tail->begin(), tail->end());
    best = std::move(p);
  }
  return best;
}

inline TickClassification classify_tick(const Graph& g, const Ladder& lad, const Tick& tick) {
  TickClassification out;
  out.verdict = validate_ladder(g, lad);
  if (out.verdict) out.verdict = validate_tick(g, lad, tick);
  if (!out.verdict) return out;
  const Vertex x = tick.centre();
  bool odd = false;
  bool even = false;
  for (std::size_t t = 0; t < tick.index.size(); ++t) {
    const int i = tick.index[t];
    for (Vertex c : lad.c[i]) {
      auto p = minimal_pc(g, lad, i, tick.paths[t], x, c);
      if (!p) throw Error(ErrorCode::PreconditionViolated, "no P_c path although the tick is valid");
      (p->length() % 2 ? odd : even) = true;
      out.paths.push_back(std::move(*p));
    }
  }
  out.vacuous = out.paths.empty();
  out.cls = odd && even ? TickClass::Mixed : odd ? TickClass::Odd : TickClass::Even;
  return out;
}

struct TickFamilyClassification {
  TickClass cls = TickClass::Invalid;
  std::vector<TickClassification> ticks;
};

/// Common parity of several ticks; vacuous ticks do not vote.
inline TickFamilyClassification classify_ticks(const Graph& g, const Ladder& lad, const std::vector<Tick>& ticks) {
  TickFamilyClassification out;
  bool odd = false;
  bool even = false;
  bool invalid = false;
  for (const Tick& t : ticks) {
    out.ticks.push_back(classify_tick(g, lad, t));
    const TickClassification& c = out.ticks.back();
    if (c.cls == TickClass::Invalid) invalid = true;
    if (c.cls == TickClass::Mixed) odd = even = true;
    if (!c.vacuous && c.cls == TickClass::Odd) odd = true;
    if (!c.vacuous && c.cls == TickClass::Even) even = true;
  }
  if (invalid) out.cls = TickClass::Invalid;
  else if (odd && even) out.cls = TickClass::Mixed;
  else out.cls = odd ? TickClass::Odd : TickClass::Even;
  return out;
}

}  // namespace pivotminor
