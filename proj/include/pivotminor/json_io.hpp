#pragma once

// JSON encodings of graphs, masses and proof objects.
//
// Graphs are graph6 strings or {"n": k, "edges": [[u, v], ...]}. Vertex sets
// are ascending index arrays. Rationals are "p/q" strings; plain integers are
// accepted on input.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pivotminor/assembly.hpp"
#include "pivotminor/codec.hpp"
#include "pivotminor/coherence.hpp"
#include "pivotminor/error.hpp"
#include "pivotminor/fuzzy_path_lemma.hpp"
#include "pivotminor/graph.hpp"
#include "pivotminor/ladder.hpp"
#include "pivotminor/mass.hpp"
#include "pivotminor/rational.hpp"
#include "pivotminor/realization.hpp"
#include "pivotminor/structure.hpp"
#include "pivotminor/subdivision.hpp"

namespace pivotminor {

using Json = nlohmann::json;

namespace detail {

[[noreturn]] inline void bad_json(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_json(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline int to_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad_json(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace detail

inline Json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) detail::bad_json("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

inline Json set_to_json(VertexSet s) { return s.to_vector(); }

inline VertexSet set_from_json(const Json& j) {
  if (!j.is_array()) detail::bad_json("vertex set must be an array");
  VertexSet out;
  for (const Json& x : j) {
    const int v = detail::to_int(x, "vertex");
    if (v < 0 || v >= kMaxVertices) throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
    out.insert(v);
  }
  return out;
}

inline Json sets_to_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet s : sets) out.push_back(set_to_json(s));
  return out;
}

inline std::vector<VertexSet> sets_from_json(const Json& j) {
  if (!j.is_array()) detail::bad_json("expected an array of vertex sets");
  std::vector<VertexSet> out;
  for (const Json& s : j) out.push_back(set_from_json(s));
  return out;
}

inline Json vertices_to_json(const std::vector<Vertex>& p) { return p; }

inline std::vector<Vertex> vertices_from_json(const Json& j) {
  if (!j.is_array()) detail::bad_json("expected a vertex list");
  std::vector<Vertex> out;
  for (const Json& x : j) out.push_back(detail::to_int(x, "vertex"));
  return out;
}

inline Json graph_to_json(const Graph& g) { return encode_graph6(g); }

inline Graph graph_from_json(const Json& j) {
  if (j.is_string()) return decode_graph6(j.get<std::string>());
  const int n = detail::to_int(detail::field(j, "n"), "n");
  if (n < 0) detail::bad_json("negative order");
  if (n > kMaxVertices) throw Error(ErrorCode::Oversize, "graph with " + std::to_string(n) + " vertices");
  Graph g(n);
  for (const Json& e : detail::field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) detail::bad_json("edge must be a pair");
    g.add_edge(detail::to_int(e[0], "vertex"), detail::to_int(e[1], "vertex"));
  }
  return g;
}

inline Json mass_to_json(const MassedGraph& mg) {
  Json m;
  switch (mg.kind()) {
    case MassKind::Uniform: m["kind"] = "uniform"; break;
    case MassKind::ChromaticNormalized: m["kind"] = "chromatic"; break;
    case MassKind::Weighted: {
      m["kind"] = "weighted";
      Json w = Json::array();
      for (const Rational& x : mg.weights()) w.push_back(rational_to_json(x));
      m["weights"] = w;
      break;
    }
  }
  return m;
}

/// {"graph": ..., "mass": {"kind": "uniform" | "chromatic" | "weighted", "weights": [...]}}.
/// A missing mass means uniform.
inline MassedGraph massed_graph_from_json(const Json& j) {
  Graph g = graph_from_json(detail::field(j, "graph"));
  if (!j.contains("mass")) return MassedGraph::uniform(std::move(g));
  const Json& m = j.at("mass");
  const Json& kind = detail::field(m, "kind");
  if (kind == "uniform") return MassedGraph::uniform(std::move(g));
  if (kind == "chromatic") return MassedGraph::chromatic(std::move(g));
  if (kind == "weighted") {
    std::vector<Rational> w;
    for (const Json& x : detail::field(m, "weights")) w.push_back(rational_from_json(x));
    return MassedGraph::weighted(std::move(g), std::move(w));
  }
  detail::bad_json("unknown mass kind");
}

inline Json massed_graph_to_json(const MassedGraph& mg) {
  return Json{{"graph", graph_to_json(mg.graph())}, {"mass", mass_to_json(mg)}};
}

// ---- proof objects --------------------------------------------------------

inline Json ladder_to_json(const Ladder& lad) {
  return Json{{"a", sets_to_json(lad.a)}, {"b", sets_to_json(lad.b)}, {"c", sets_to_json(lad.c)}};
}

inline Ladder ladder_from_json(const Json& j) {
  return Ladder{sets_from_json(detail::field(j, "a")), sets_from_json(detail::field(j, "b")),
                sets_from_json(detail::field(j, "c"))};
}

inline Json tick_to_json(const Tick& t) {
  Json paths = Json::array();
  for (const auto& p : t.paths) paths.push_back(vertices_to_json(p));
  return Json{{"index", t.index}, {"paths", paths}};
}

inline Tick tick_from_json(const Json& j) {
  Tick t;
  for (const Json& i : detail::field(j, "index")) t.index.push_back(detail::to_int(i, "ladder index"));
  for (const Json& p : detail::field(j, "paths")) t.paths.push_back(vertices_from_json(p));
  return t;
}

inline std::vector<Tick> ticks_from_json(const Json& j) {
  if (!j.is_array()) detail::bad_json("ticks must be an array");
  std::vector<Tick> out;
  for (const Json& t : j) out.push_back(tick_from_json(t));
  return out;
}

inline Json realization_to_json(const Realization& r) {
  return Json{{"shape", graph_to_json(r.shape)},
              {"head", r.head},
              {"sets", sets_to_json(r.sets)},
              {"delta", rational_to_json(r.delta)}};
}

inline Realization realization_from_json(const Json& j) {
  return Realization{graph_from_json(detail::field(j, "shape")), detail::to_int(detail::field(j, "head"), "head"),
                     sets_from_json(detail::field(j, "sets")), rational_from_json(detail::field(j, "delta"))};
}

inline Json frame_to_json(const Frame& f) {
  Json leaves = Json::array();
  for (const auto& [v, x] : f.leaf_sets) leaves.push_back(Json{{"leaf", v}, {"set", set_to_json(x)}});
  return Json{{"shape", graph_to_json(f.shape)},
              {"tree", set_to_json(f.tree)},
              {"leaf_sets", leaves},
              {"r", f.r},
              {"kappa", rational_to_json(f.kappa)}};
}

inline Frame frame_from_json(const Json& j) {
  Frame f;
  f.shape = graph_from_json(detail::field(j, "shape"));
  f.tree = set_from_json(detail::field(j, "tree"));
  for (const Json& l : detail::field(j, "leaf_sets")) {
    f.leaf_sets.emplace_back(detail::to_int(detail::field(l, "leaf"), "leaf"), set_from_json(detail::field(l, "set")));
  }
  if (j.contains("r")) f.r = detail::to_int(j.at("r"), "r");
  f.kappa = rational_from_json(detail::field(j, "kappa"));
  return f;
}

inline Json fuzzy_query_to_json(const FuzzyPathQuery& q) {
  return Json{{"u", q.u}, {"xu", set_to_json(q.xu)}, {"a", set_to_json(q.a)},
              {"v", q.v}, {"xv", set_to_json(q.xv)}, {"b", set_to_json(q.b)},
              {"r", q.r}, {"eps", rational_to_json(q.eps)}};
}

inline FuzzyPathQuery fuzzy_query_from_json(const Json& j) {
  FuzzyPathQuery q;
  q.u = detail::to_int(detail::field(j, "u"), "u");
  q.xu = set_from_json(detail::field(j, "xu"));
  q.a = set_from_json(detail::field(j, "a"));
  q.v = detail::to_int(detail::field(j, "v"), "v");
  q.xv = set_from_json(detail::field(j, "xv"));
  q.b = set_from_json(detail::field(j, "b"));
  if (j.contains("r")) q.r = detail::to_int(j.at("r"), "r");
  q.eps = rational_from_json(detail::field(j, "eps"));
  return q;
}

// ---- verdicts -------------------------------------------------------------

inline Json structure_verdict_to_json(const StructureVerdict& v) {
  Json out{{"accepted", v.accepted}};
  if (!v.accepted) {
    out["bullet"] = v.bullet;
    out["indices"] = v.indices;
    out["detail"] = v.detail;
  }
  return out;
}

inline Json no_progress_to_json(const NoProgress& p) {
  return Json{{"step", p.step}, {"index", p.index}, {"detail", p.detail}};
}

inline Json fuzzy_path_to_json(const FuzzyPathVerdict& v) {
  Json out{{"accepted", v.accepted}, {"path", vertices_to_json(v.path)}, {"length", v.length()}};
  if (v.fuzz) out["fuzz"] = Json::array({v.fuzz->first, v.fuzz->second});
  if (!v.accepted) out["reason"] = v.reason;
  return out;
}

inline Json violation_to_json(const Violation& v) {
  Json out{{"kind", to_string(v.kind)}, {"mass", rational_to_json(v.mass)}};
  if (v.vertex >= 0) out["vertex"] = v.vertex;
  if (v.r > 0) out["r"] = v.r;
  if (!v.a.empty() || !v.b.empty()) {
    out["a"] = set_to_json(v.a);
    out["b"] = set_to_json(v.b);
  }
  if (!v.z.empty()) out["z"] = set_to_json(v.z);
  return out;
}

inline Json coherence_to_json(const CoherenceVerdict& v) {
  Json out{{"coherent", v.coherent}};
  if (v.violation) out["violation"] = violation_to_json(*v.violation);
  return out;
}

inline Json eh_ratio_to_json(const EhRatio& e) {
  return Json{{"value", rational_to_json(e.value)}, {"polarity", to_string(e.polarity)},
              {"a", set_to_json(e.a)}, {"b", set_to_json(e.b)}};
}

inline Json tick_classification_to_json(const TickClassification& t) {
  Json paths = Json::array();
  for (const PcPath& p : t.paths) {
    paths.push_back(Json{{"index", p.index}, {"c", p.c}, {"b", p.b}, {"path", vertices_to_json(p.path)},
                         {"length", p.length()}});
  }
  return Json{{"class", to_string(t.cls)}, {"verdict", structure_verdict_to_json(t.verdict)},
              {"paths", paths}, {"vacuous", t.vacuous}};
}

inline Json assembly_to_json(const AssemblyResult& r) {
  Json out{{"mass_preconditions", r.mass_preconditions}};
  if (r.stall) out["stall"] = no_progress_to_json(*r.stall);
  if (r.value) {
    const Assembly& a = *r.value;
    Json picks = Json::array();
    for (const AssemblyPick& p : a.picks) {
      picks.push_back(Json{{"ticks", Json::array({p.tick_i, p.tick_j})},
                           {"slots", Json::array({p.s, p.s2})},
                           {"edge", Json::array({p.c, p.c2})},
                           {"path", set_to_json(p.path)}});
    }
    out["vertices"] = set_to_json(a.vertices);
    out["centres"] = vertices_to_json(a.centres);
    out["picks"] = picks;
    out["pfos"] = a.check.accepted;
  }
  return out;
}

}  // namespace pivotminor
