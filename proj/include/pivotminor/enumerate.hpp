#pragma once

// Small-graph enumeration: one representative per isomorphism class, grown
// vertex by vertex (every class on n vertices has a vertex-deleted subgraph
// on n-1 vertices).

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "pivotminor/canonical.hpp"
#include "pivotminor/graph.hpp"

namespace pivotminor {

/// Canonical representatives of all graphs on exactly n vertices, ordered
/// by graph6 of the canonical form.
inline std::vector<Graph> graphs_up_to_isomorphism(int n) {
  if (n < 0 || n > 10) throw Error(ErrorCode::Oversize, "enumeration limited to 10 vertices");
  std::vector<Graph> layer{Graph(0)};
  for (int k = 1; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const Graph& g : layer) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
        Graph h(k);
        for (auto [a, b] : g.edges()) h.add_edge(a, b);
        for (Vertex w : VertexSet(nb)) h.add_edge(w, k - 1);
        CanonicalForm form = canonical(h, kMaxVertices);
        next.try_emplace(form.key(), form.graph());
      }
    }
    layer.clear();
    for (auto& [key, g] : next) layer.push_back(std::move(g));
  }
  return layer;
}

/// All classes on 1..n vertices, ordered by (order, canonical graph6).
inline std::vector<Graph> graphs_up_to_isomorphism_through(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    auto layer = graphs_up_to_isomorphism(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Every labelled graph on exactly n vertices, in edge-bitmask order.
inline std::vector<Graph> labeled_graphs(int n) {
  if (n < 0 || n > 6) throw Error(ErrorCode::Oversize, "labelled enumeration limited to 6 vertices");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace pivotminor
