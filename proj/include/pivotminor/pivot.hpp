#pragma once

// The pivot G ^ uv and pivot/delete witnesses.

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pivotminor/canonical.hpp"
#include "pivotminor/error.hpp"
#include "pivotminor/graph.hpp"

namespace pivotminor {

struct PivotClasses {
  VertexSet v1;  // N(u) \ N[v]
  VertexSet v2;  // N(v) \ N[u]
  VertexSet v3;  // N(u) & N(v)
};

inline PivotClasses pivot_classes(const Graph& g, Vertex u, Vertex v) {
  return {g.neighbors(u) - g.closed_neighbors(v), g.neighbors(v) - g.closed_neighbors(u),
          g.neighbors(u) & g.neighbors(v)};
}

namespace detail {
inline void toggle_between(Graph& g, VertexSet a, VertexSet b) {
  for (Vertex x : a)
    for (Vertex y : b) g.toggle_edge(x, y);
}
}  // namespace detail

/// G ^ uv: toggle every pair across (V1,V2), (V2,V3), (V1,V3), then swap the
/// adjacency of u and v. Display labels stay on their indices.
inline Graph pivot(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) {
    throw Error(ErrorCode::InvalidVertex, "pivot vertex out of range");
  }
  if (!g.has_edge(u, v)) {
    throw Error(ErrorCode::NotAnEdge, std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  }
  const PivotClasses c = pivot_classes(g, u, v);
  Graph out = g;
  detail::toggle_between(out, c.v1, c.v2);
  detail::toggle_between(out, c.v2, c.v3);
  detail::toggle_between(out, c.v1, c.v3);
  out.swap_vertices(u, v);
  return out;
}

struct PivotStep {
  enum class Kind { Pivot, Delete };
  Kind kind = Kind::Delete;
  Vertex u = -1;
  Vertex v = -1;  // unused for Delete

  static PivotStep pivot(Vertex a, Vertex b) { return {Kind::Pivot, a, b}; }
  static PivotStep remove(Vertex a) { return {Kind::Delete, a, -1}; }
  bool is_pivot() const { return kind == Kind::Pivot; }

  friend bool operator==(const PivotStep&, const PivotStep&) = default;
  friend auto operator<=>(const PivotStep&, const PivotStep&) = default;
};

inline std::string to_string(const PivotStep& s) {
  if (s.is_pivot()) return "P " + std::to_string(s.u) + " " + std::to_string(s.v);
  return "D " + std::to_string(s.u);
}

/// Steps name vertices by their index in the original host.
struct PivotWitness {
  std::vector<PivotStep> steps;
  std::optional<Graph> claimed_target;

  std::size_t pivot_count() const {
    std::size_t k = 0;
    for (const auto& s : steps) k += s.is_pivot() ? 1 : 0;
    return k;
  }
  std::size_t delete_count() const { return steps.size() - pivot_count(); }
};

inline std::string format_witness(const PivotWitness& w) {
  std::string out;
  for (const auto& s : w.steps) out += to_string(s) + "\n";
  return out;
}

inline PivotWitness parse_witness(std::istream& in) {
  PivotWitness w;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    long long a = -1;
    long long b = -1;
    std::string extra;
    const std::string where = "witness line " + std::to_string(lineno);
    if (tag == "P") {
      if (!(fields >> a >> b) || (fields >> extra)) throw Error(ErrorCode::MalformedInput, where + ": expected 'P u v'");
      w.steps.push_back(PivotStep::pivot(static_cast<Vertex>(a), static_cast<Vertex>(b)));
    } else if (tag == "D") {
      if (!(fields >> a) || (fields >> extra)) throw Error(ErrorCode::MalformedInput, where + ": expected 'D v'");
      w.steps.push_back(PivotStep::remove(static_cast<Vertex>(a)));
    } else {
      throw Error(ErrorCode::MalformedInput, where + ": unknown step '" + tag + "'");
    }
  }
  return w;
}

inline PivotWitness parse_witness(const std::string& text) {
  std::istringstream in(text);
  return parse_witness(in);
}

struct AppliedWitness {
  Graph graph;
  /// original_of[i] is the host index of vertex i of the result.
  std::vector<Vertex> original_of;
};

/// Folds the steps over g. Deletions reindex densely; steps keep naming
/// vertices by their host index and are translated through the audit map.
inline AppliedWitness apply_witness(const Graph& g, const PivotWitness& w) {
  AppliedWitness state{g, {}};
  for (Vertex v = 0; v < g.size(); ++v) state.original_of.push_back(v);
  std::vector<Vertex> current_of(static_cast<std::size_t>(g.size()));
  for (Vertex v = 0; v < g.size(); ++v) current_of[v] = v;

  auto locate = [&](Vertex original, std::size_t step) {
    if (original < 0 || original >= g.size() || current_of[original] < 0) {
      throw Error(ErrorCode::MissingVertex,
                  "step " + std::to_string(step) + " names absent vertex " + std::to_string(original), step);
    }
    return current_of[original];
  };

  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const PivotStep& s = w.steps[i];
    if (s.is_pivot()) {
      const Vertex a = locate(s.u, i);
      const Vertex b = locate(s.v, i);
      if (a == b || !state.graph.has_edge(a, b)) {
        throw Error(ErrorCode::NotAnEdge,
                    "step " + std::to_string(i) + ": " + std::to_string(s.u) + "-" + std::to_string(s.v) +
                        " is not an edge",
                    i);
      }
      state.graph = pivot(state.graph, a, b);
    } else {
      const Vertex a = locate(s.u, i);
      state.graph = remove_vertices(state.graph, VertexSet{a});
      current_of[s.u] = -1;
      state.original_of.erase(state.original_of.begin() + a);
      for (std::size_t k = static_cast<std::size_t>(a); k < state.original_of.size(); ++k) {
        current_of[state.original_of[k]] = static_cast<Vertex>(k);
      }
    }
  }
  return state;
}

/// Applies steps to a working copy while recording them against host
/// indices, for emitters that reason about the current graph.
class WitnessBuilder {
 public:
  explicit WitnessBuilder(const Graph& host) : graph_(host) {
    for (Vertex v = 0; v < host.size(); ++v) original_of_.push_back(v);
  }

  const Graph& graph() const { return graph_; }
  Vertex original(Vertex current) const { return original_of_[current]; }
  const std::vector<Vertex>& original_of() const { return original_of_; }
  /// Current index of a host vertex, or -1 once deleted.
  Vertex current(Vertex original) const {
    auto it = std::find(original_of_.begin(), original_of_.end(), original);
    return it == original_of_.end() ? -1 : static_cast<Vertex>(it - original_of_.begin());
  }

  void pivot(Vertex u, Vertex v) {
    graph_ = pivotminor::pivot(graph_, u, v);
    witness_.steps.push_back(PivotStep::pivot(original_of_[u], original_of_[v]));
  }
  void remove(Vertex v) {
    if (!graph_.has_vertex(v)) throw Error(ErrorCode::MissingVertex, "vertex " + std::to_string(v));
    witness_.steps.push_back(PivotStep::remove(original_of_[v]));
    graph_ = remove_vertices(graph_, VertexSet{v});
    original_of_.erase(original_of_.begin() + v);
  }
  /// Deletes host vertices given by their original indices, in the given order.
  void remove_original(const std::vector<Vertex>& originals) {
    for (Vertex o : originals) {
      const Vertex c = current(o);
      if (c < 0) throw Error(ErrorCode::MissingVertex, "host vertex " + std::to_string(o) + " already deleted");
      remove(c);
    }
  }

  const PivotWitness& witness() const { return witness_; }

 private:
  Graph graph_;
  std::vector<Vertex> original_of_;
  PivotWitness witness_;
};

struct WitnessVerdict {
  bool accepted = false;
  /// On Accept: result vertex i maps to target vertex isomorphism[i].
  std::vector<Vertex> isomorphism;
  /// Host index of each result vertex.
  std::vector<Vertex> original_of;
  std::optional<std::size_t> failing_step;
  std::string reason;
};

/// Accept iff applying w to host yields a graph isomorphic to target.
inline WitnessVerdict verify_witness(const Graph& host, const Graph& target, const PivotWitness& w) {
  WitnessVerdict verdict;
  AppliedWitness applied;
  try {
    applied = apply_witness(host, w);
  } catch (const Error& e) {
    verdict.failing_step = e.step();
    verdict.reason = e.what();
    return verdict;
  }
  verdict.original_of = applied.original_of;
  if (applied.graph.size() != target.size()) {
    verdict.reason = "result has " + std::to_string(applied.graph.size()) + " vertices, target has " +
                     std::to_string(target.size());
    return verdict;
  }
  auto iso = find_isomorphism(applied.graph, target, kMaxVertices);
  if (!iso) {
    verdict.reason = "canonical mismatch: result " + encode_graph6(applied.graph) + " vs target " +
                     encode_graph6(target);
    return verdict;
  }
  verdict.accepted = true;
  verdict.isomorphism = *iso;
  return verdict;
}

}  // namespace pivotminor
