#pragma once

// Greedy assembly of a proper fuzzy odd subdivision of K_n from a
// half-cleaned ladder with n parity-uniform, pairwise anticomplete ticks.
//
// Pairs {i, j} of ticks are taken in lexicographic order. Tick i gives its
// ladder indices, ascending, to its partners in increasing order. For each
// pair the least adjacent (c, c') with c in C_s, c' in C_s' and both outside
// N^3 of earlier picks is chosen, and P_c + P_c' (or that minus c, c') closes
// the fuzzy odd path between the two centres.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pivotminor/error.hpp"
#include "pivotminor/graph.hpp"
#include "pivotminor/ladder.hpp"
#include "pivotminor/mass.hpp"
#include "pivotminor/rational.hpp"
#include "pivotminor/structure.hpp"
#include "pivotminor/subdivision.hpp"

namespace pivotminor {

struct AssemblyPick {
  int tick_i = 0;
  int tick_j = 0;
  int s = 0;   // ladder index used by tick_i
  int s2 = 0;  // ladder index used by tick_j
  Vertex c = -1;
  Vertex c2 = -1;
  VertexSet path;  // vertex set of the fuzzy odd path between the centres
};

struct Assembly {
  VertexSet vertices;
  std::vector<Vertex> centres;  // branch vertex of K_n vertex t
  std::vector<AssemblyPick> picks;
  SubdivisionVerdict check;     // is_pfos on G[vertices]
};

struct AssemblyResult {
  std::optional<Assembly> value;
  std::optional<NoProgress> stall;
  /// mu(C_i) >= n(n-1) eps for every ladder index.
  bool mass_preconditions = false;
  explicit operator bool() const { return value.has_value(); }
};

namespace detail {

inline void require_assembly_input(const Graph& g, const Ladder& lad, const std::vector<Tick>& ticks,
                                   const TickFamilyClassification& cls) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::PreconditionViolated, why); };
  const StructureVerdict lv = validate_ladder(g, lad, true);
  if (!lv) fail("ladder rejected at " + lv.bullet + ": " + lv.detail);
  for (const auto& t : cls.ticks)
    if (t.cls == TickClass::Invalid) fail("tick rejected at " + t.verdict.bullet + ": " + t.verdict.detail);
  if (cls.cls == TickClass::Mixed) fail("ticks are not parity uniform");
  const int n = static_cast<int>(ticks.size());
  if (n == 0) fail("need at least one tick");
  if (lad.k() != n * (n - 1)) fail("a ladder for K_n needs n(n-1) indices");
  std::vector<int> owner(static_cast<std::size_t>(lad.k()), -1);
  for (int t = 0; t < n; ++t) {
    if (static_cast<int>(ticks[t].index.size()) != n - 1) fail("every tick needs n-1 ladder indices");
    for (int i : ticks[t].index) {
      if (owner[i] >= 0) fail("ladder index " + std::to_string(i) + " is used by two ticks");
      owner[i] = t;
    }
  }
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!anticomplete(g, ticks[s].vertices(), ticks[t].vertices())) fail("ticks are not pairwise anticomplete");
}

}  // namespace detail

inline AssemblyResult assemble_pfos(const MassedGraph& mg, const Ladder& lad, const std::vector<Tick>& ticks,
                                    const Rational& eps) {
  const Graph& g = mg.graph();
  const TickFamilyClassification cls = classify_ticks(g, lad, ticks);
  detail::require_assembly_input(g, lad, ticks, cls);
  const int n = static_cast<int>(ticks.size());

  AssemblyResult out;
  out.mass_preconditions = true;
  for (int i = 0; i < lad.k(); ++i)
    if (mg(lad.c[i]) < Rational(n * (n - 1)) * eps) out.mass_preconditions = false;

  std::map<Vertex, const PcPath*> pc;
  for (const auto& t : cls.ticks)
    for (const PcPath& p : t.paths) pc[p.c] = &p;
  std::vector<std::vector<int>> slots;
  for (const Tick& t : ticks) {
    slots.push_back(t.index);
    std::sort(slots.back().begin(), slots.back().end());
  }

  Assembly as;
  for (const Tick& t : ticks) as.centres.push_back(t.centre());
  VertexSet forbidden;
  int m = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ++m;
      AssemblyPick pick;
      pick.tick_i = i;
      pick.tick_j = j;
      pick.s = slots[i][j - 1];
      pick.s2 = slots[j][i];
      const VertexSet cs = lad.c[pick.s] - forbidden;
      const VertexSet cs2 = lad.c[pick.s2] - forbidden;
      for (Vertex c : cs) {
        const VertexSet hit = g.neighbors(c) & cs2;
        if (!hit.empty()) {
          pick.c = c;
          pick.c2 = hit.front();
          break;
        }
      }
      if (pick.c < 0) {
        out.stall = NoProgress{"assembly.edge", m,
                               "no eligible edge between C" + std::to_string(pick.s) + " and C" + std::to_string(pick.s2)};
        return out;
      }
      forbidden |= ball(g, VertexSet{pick.c, pick.c2}, 3);
      const VertexSet both = VertexSet::from(pc.at(pick.c)->path) | VertexSet::from(pc.at(pick.c2)->path);
      for (VertexSet cand : {both, both - VertexSet{pick.c, pick.c2}}) {
        if (check_fuzzy_odd_path(g, cand, as.centres[i], as.centres[j]).accepted) {
          pick.path = cand;
          break;
        }
      }
      if (pick.path.empty()) {
        out.stall = NoProgress{"assembly.path", m, "neither union of P_c paths is a fuzzy odd path"};
        return out;
      }
      as.vertices |= pick.path;
      as.picks.push_back(pick);
    }
  }
  for (Vertex x : as.centres) as.vertices.insert(x);

  // Independent recheck of the union against K_n.
  std::vector<Vertex> local(static_cast<std::size_t>(g.size()), -1);
  {
    Vertex idx = 0;
    for (Vertex w : as.vertices) local[w] = idx++;
  }
  BranchMap bm;
  for (Vertex x : as.centres) bm.push_back(local[x]);
  as.check = is_pfos(induced(g, as.vertices), complete_graph(n), bm);
  if (!as.check.accepted) {
    out.stall = NoProgress{"assembly.pfos", 0, as.check.reason};
    return out;
  }
  out.value = std::move(as);
  return out;
}

}  // namespace pivotminor
