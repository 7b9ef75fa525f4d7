#pragma once

// Constructive search for an induced fuzzy odd u-v path inside A + B, by the
// layer argument: BFS layers of X_u, first-touch sets D_A^j, then either a
// layer of X_v meets D_A^{j_A} with enough mass (case 1) or not (case 2).
//
// Every "choose with mass at least t" step falls back to "choose nonempty"
// when no candidate reaches t, so small instances still get a search. A stall
// is reported as NoProgress and never as absence.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pivotminor/error.hpp"
#include "pivotminor/graph.hpp"
#include "pivotminor/mass.hpp"
#include "pivotminor/rational.hpp"
#include "pivotminor/structure.hpp"
#include "pivotminor/subdivision.hpp"

namespace pivotminor {

inline constexpr int kFuzzyPathMaxRadius = 16;

struct FuzzyPathQuery {
  Vertex u = 0;
  VertexSet xu;
  VertexSet a;
  Vertex v = 0;
  VertexSet xv;
  VertexSet b;
  int r = 1;
  Rational eps = 0;
};

struct FuzzyPathTrace {
  /// 0: u and v adjacent; 1 or 2: the case that produced the path.
  int branch = 0;
  int j_a = -1;
  int j_b = -1;
  bool swapped = false;
  /// Every choice met its mass threshold.
  bool mass_guided = true;
  /// mu(A), mu(B) reach the bound of the lemma.
  bool mass_preconditions = false;
};

struct FuzzyPathResult {
  std::optional<FuzzyPathVerdict> path;
  std::optional<NoProgress> stall;
  FuzzyPathTrace trace;
  explicit operator bool() const { return path.has_value(); }
};

namespace detail {

struct Layers {
  std::vector<VertexSet> level;  // L^j, j = 0..r
  std::vector<VertexSet> touch;  // N(L^j)
};

inline Layers bfs_layers(const Graph& g, Vertex root, VertexSet x, int r) {
  Layers out;
  const std::vector<int> d = distances(g, root, x);
  out.level.assign(static_cast<std::size_t>(r) + 1, VertexSet{});
  for (Vertex w : x)
    if (d[w] >= 0 && d[w] <= r) out.level[d[w]].insert(w);
  for (VertexSet l : out.level) out.touch.push_back(g.neighbors(l));
  return out;
}

inline VertexSet touched_before(const Layers& l, int j) {
  VertexSet out;
  for (int p = 0; p < j; ++p) out |= l.touch[p];
  return out;
}

class FuzzySearch {
 public:
  FuzzySearch(const MassedGraph& mg, const FuzzyPathQuery& q, FuzzyPathTrace& trace)
      : mg_(mg), g_(mg.graph()), q_(q), trace_(trace) {
    big_ = Rational((std::int64_t{1} << (2 * q.r + 3)) + 3) * q.eps;
  }

  /// Either a validated path (as a vertex set) or the failing step.
  std::variant<VertexSet, NoProgress> run() {
    la_ = bfs_layers(g_, q_.u, q_.xu, q_.r);
    da_.clear();
    for (int j = 0; j <= q_.r; ++j) da_.push_back((q_.a - q_.xu) & (la_.touch[j] - touched_before(la_, j)));
    auto ja = pick([&](int j) { return da_[j]; }, [&](int) { return big_; });
    if (!ja) return NoProgress{"D_A", 0, "every first-touch set of X_u inside A is empty"};
    ja_ = *ja;
    trace_.j_a = ja_;
    VertexSet earlier;
    for (int p = 0; p < ja_; ++p) earlier |= da_[p];
    b_prime_ = q_.b - earlier;
    lb_ = bfs_layers(g_, q_.v, q_.xv, q_.r);

    // Case 1 when some layer of X_v reaches D_A^{j_A} with mass 4^j eps.
    std::optional<int> massed;
    for (int j = 0; j <= q_.r && !massed; ++j)
      if (mg_(lb_.touch[j] & da_[ja_]) >= Rational(std::int64_t{1} << (2 * j)) * q_.eps) massed = j;
    if (massed) return case_one(*massed);
    auto second = case_two();
    if (std::holds_alternative<VertexSet>(second)) return second;
    const FuzzyPathTrace saved = trace_;
    for (int j = 0; j <= q_.r; ++j)
      if (!(lb_.touch[j] & da_[ja_]).empty()) {
        trace_.mass_guided = false;
        auto first = case_one(j);
        if (std::holds_alternative<VertexSet>(first)) return first;
        break;
      }
    trace_ = saved;
    return second;
  }

 private:
  // Least j whose set reaches its threshold, else least nonempty.
  template <class SetAt, class Threshold>
  std::optional<int> pick(SetAt set_at, Threshold threshold) {
    for (int j = 0; j <= q_.r; ++j)
      if (mg_(set_at(j)) >= threshold(j) && !set_at(j).empty()) return j;
    for (int j = 0; j <= q_.r; ++j)
      if (!set_at(j).empty()) {
        trace_.mass_guided = false;
        return j;
      }
    return std::nullopt;
  }

  // Inclusion-minimal S inside `pool` with mu(N(S) & z) >= eps, by deleting
  // members in ascending order; falls back to N(S) & z nonempty.
  std::optional<VertexSet> minimal_reaching(VertexSet pool, VertexSet z) {
    auto mass_ok = [&](VertexSet s) { return mg_(g_.neighbors(s) & z) >= q_.eps && !(g_.neighbors(s) & z).empty(); };
    auto nonempty = [&](VertexSet s) { return !(g_.neighbors(s) & z).empty(); };
    auto shrink = [&](auto ok) {
      VertexSet s = pool;
      for (Vertex w : pool) {
        VertexSet t = s;
        t.erase(w);
        if (ok(t)) s = t;
      }
      return s;
    };
    if (mass_ok(pool)) return shrink(mass_ok);
    if (!nonempty(pool)) return std::nullopt;
    trace_.mass_guided = false;
    return shrink(nonempty);
  }

  // Adjacent b1 in z - N(s), b2 in N(s) & z, least pair; else just b2.
  std::pair<std::optional<Vertex>, Vertex> pick_bs(VertexSet s, VertexSet z) {
    const VertexSet near = g_.neighbors(s) & z;
    for (Vertex b1 : z - near)
      if (!(g_.neighbors(b1) & near).empty()) return {b1, (g_.neighbors(b1) & near).front()};
    trace_.mass_guided = false;
    return {std::nullopt, near.front()};
  }

  std::vector<Vertex> path_in(Vertex from, Vertex to, VertexSet within) {
    return *least_shortest_path(g_, from, to, within);
  }

  Vertex anchor(Vertex b) { return (g_.neighbors(b) & la_.level[ja_]).front(); }

  bool valid(VertexSet p) {
    FuzzyPathVerdict ver = check_fuzzy_odd_path(g_, p, q_.u, q_.v);
    return ver.accepted && ver.length() <= 2 * q_.r + 3 && p.subset_of(q_.a | q_.b);
  }

  // Tries P_1' (through b1, b2, middle) then P_2' (through b2, middle).
  std::optional<VertexSet> close(std::optional<Vertex> b1, Vertex b2, VertexSet middle) {
    if (b1) {
      const VertexSet p1 = VertexSet::from(path_in(q_.u, anchor(*b1), q_.xu)) | VertexSet{*b1, b2} | middle;
      if (valid(p1)) return p1;
    }
    const VertexSet p2 = VertexSet::from(path_in(q_.u, anchor(b2), q_.xu)) | VertexSet{b2} | middle;
    if (valid(p2)) return p2;
    return std::nullopt;
  }

  std::variant<VertexSet, NoProgress> case_one(int jb) {
    trace_.branch = 1;
    trace_.j_b = jb;
    const VertexSet z = (lb_.touch[jb] & da_[ja_]) - touched_before(lb_, jb);
    if (z.empty()) return NoProgress{"case1.Z", jb, "D_A^{j_A} meets only earlier layers of X_v"};
    auto l = minimal_reaching(lb_.level[jb], z);
    if (!l) return NoProgress{"case1.L", jb, "no layer vertex of X_v reaches Z"};
    auto [b1, b2] = pick_bs(*l, z);
    const Vertex c = (g_.neighbors(b2) & *l).front();
    const VertexSet middle = VertexSet::from(path_in(q_.v, c, q_.xv));
    if (auto p = close(b1, b2, middle)) return *p;
    return NoProgress{"case1.path", jb, "neither candidate is an induced fuzzy odd path"};
  }

  std::variant<VertexSet, NoProgress> case_two() {
    trace_.branch = 2;
    const VertexSet z = da_[ja_] - g_.neighbors(q_.xv);
    if (z.empty()) return NoProgress{"case2.Z", ja_, "every vertex of D_A^{j_A} touches X_v"};
    std::vector<VertexSet> db;
    for (int j = 0; j <= q_.r; ++j) db.push_back((b_prime_ - q_.xv) & (lb_.touch[j] - touched_before(lb_, j)));
    auto jb = pick([&](int j) { return db[j]; }, [&](int) { return Rational(3) * q_.eps; });
    if (!jb) return NoProgress{"case2.D_B", 0, "every first-touch set of X_v inside B' is empty"};
    trace_.j_b = *jb;
    auto d = minimal_reaching(db[*jb], z);
    if (!d) return NoProgress{"case2.D", *jb, "no vertex of D_B^{j_B} has a neighbour in Z"};
    auto [b1, b2] = pick_bs(*d, z);
    const Vertex c1 = (g_.neighbors(b2) & *d).front();
    const Vertex c2 = (g_.neighbors(c1) & lb_.level[*jb]).front();
    const VertexSet middle = VertexSet{c1} | VertexSet::from(path_in(q_.v, c2, q_.xv));
    if (auto p = close(b1, b2, middle)) return *p;
    return NoProgress{"case2.path", *jb, "neither candidate is an induced fuzzy odd path"};
  }

  const MassedGraph& mg_;
  const Graph& g_;
  const FuzzyPathQuery& q_;
  FuzzyPathTrace& trace_;
  Rational big_;
  Layers la_;
  Layers lb_;
  std::vector<VertexSet> da_;
  int ja_ = 0;
  VertexSet b_prime_;
};

inline void require_fuzzy_query(const Graph& g, const FuzzyPathQuery& q) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::PreconditionViolated, why); };
  for (VertexSet s : {q.xu, q.a, q.xv, q.b}) require_set(g, s);
  if (q.r < 1) fail("r must be at least 1");
  if (q.r > kFuzzyPathMaxRadius) throw Error(ErrorCode::Oversize, "radius above " + std::to_string(kFuzzyPathMaxRadius));
  if (q.eps <= Rational(0)) fail("epsilon must be positive");
  if (q.u == q.v) fail("endpoints coincide");
  if (!q.xu.contains(q.u) || !q.xu.subset_of(q.a)) fail("need u in X_u inside A");
  if (!q.xv.contains(q.v) || !q.xv.subset_of(q.b)) fail("need v in X_v inside B");
  if (!is_r_centre(g, q.xu, q.u, q.r)) fail("u is not an r-centre of X_u");
  if (!is_r_centre(g, q.xv, q.v, q.r)) fail("v is not an r-centre of X_v");
  if (!q.a.subset_of(g.closed_neighbors(q.xu))) fail("A is not inside N[X_u]");
  if (!q.b.subset_of(g.closed_neighbors(q.xv))) fail("B is not inside N[X_v]");
}

}  // namespace detail

/// Mass bound on A and B under which the search is guaranteed to succeed in
/// an eps-coherent graph: (r(r+1)(2^{2r+3}+3) + 1) eps.
inline Rational fuzzy_path_mass_bound(int r, const Rational& eps) {
  const std::int64_t t = (std::int64_t{1} << (2 * r + 3)) + 3;
  return Rational(std::int64_t{r} * (r + 1) * t + 1) * eps;
}

inline FuzzyPathResult find_fuzzy_odd_path(const MassedGraph& mg, const FuzzyPathQuery& query) {
  const Graph& g = mg.graph();
  if (!g.has_vertex(query.u) || !g.has_vertex(query.v)) throw Error(ErrorCode::InvalidVertex, "endpoint out of range");
  detail::require_fuzzy_query(g, query);
  FuzzyPathResult out;
  const Rational bound = fuzzy_path_mass_bound(query.r, query.eps);
  out.trace.mass_preconditions = mg(query.a) >= bound && mg(query.b) >= bound;
  if (g.has_edge(query.u, query.v)) {
    out.path = check_fuzzy_odd_path(g, VertexSet{query.u, query.v}, query.u, query.v);
    return out;
  }
  if (!anticomplete(g, query.xu, query.xv)) {
    throw Error(ErrorCode::PreconditionViolated, "X_u and X_v are not anticomplete");
  }
  // The layer argument runs from the side of mass below eps.
  FuzzyPathQuery q = query;
  if (mg(q.xu) >= q.eps && mg(q.xv) < q.eps) {
    std::swap(q.u, q.v);
    std::swap(q.xu, q.xv);
    std::swap(q.a, q.b);
    out.trace.swapped = true;
  }
  auto found = detail::FuzzySearch(mg, q, out.trace).run();
  if (auto* stall = std::get_if<NoProgress>(&found)) {
    out.stall = *stall;
    return out;
  }
  FuzzyPathVerdict ver = check_fuzzy_odd_path(g, std::get<VertexSet>(found), query.u, query.v);
  if (!ver.accepted) throw Error(ErrorCode::PreconditionViolated, "internal check failed: " + ver.reason);
  out.path = std::move(ver);
  return out;
}

}  // namespace pivotminor
