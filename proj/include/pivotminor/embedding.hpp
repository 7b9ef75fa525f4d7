#pragma once

// Induced subgraph embedding by backtracking over pattern vertices in index
// order, so the first map found is the lexicographically least one.

#include <cstdint>
#include <optional>
#include <vector>

#include "pivotminor/budget.hpp"
#include "pivotminor/graph.hpp"

namespace pivotminor {

struct EmbeddingOptions {
  /// Optional per-pattern-vertex candidate sets in the host.
  std::vector<VertexSet> domains;
  std::uint64_t budget = Budget::kDefaultLimit;
};

namespace detail {

class Embedder {
 public:
  Embedder(const Graph& pattern, const Graph& host, const EmbeddingOptions& opt)
      : p_(pattern), h_(host), opt_(opt), budget_(opt.budget), map_(static_cast<std::size_t>(pattern.size()), -1) {}

  std::optional<std::vector<Vertex>> run() {
    if (p_.size() > h_.size()) return std::nullopt;
    if (extend(0, VertexSet{})) return map_;
    return std::nullopt;
  }

 private:
  bool extend(Vertex p, VertexSet used) {
    budget_.tick("induced_embedding");
    if (p == p_.size()) return true;
    VertexSet cand = h_.vertices() - used;
    if (!opt_.domains.empty()) cand &= opt_.domains[p];
    for (Vertex q = 0; q < p; ++q) {
      const VertexSet row = h_.neighbors(map_[q]);
      cand = p_.has_edge(p, q) ? (cand & row) : (cand - row);
      if (cand.empty()) return false;
    }
    for (Vertex w : cand) {
      map_[p] = w;
      if (extend(p + 1, used | VertexSet{w})) return true;
    }
    map_[p] = -1;
    return false;
  }

  const Graph& p_;
  const Graph& h_;
  const EmbeddingOptions& opt_;
  Budget budget_;
  std::vector<Vertex> map_;
};

}  // namespace detail

/// Injective phi with u~v iff phi(u)~phi(v). nullopt is a proof of absence;
/// running out of budget throws BudgetExhausted instead.
inline std::optional<std::vector<Vertex>> induced_embedding(const Graph& pattern, const Graph& host,
                                                            const EmbeddingOptions& opt = {}) {
  if (!opt.domains.empty() && opt.domains.size() != static_cast<std::size_t>(pattern.size())) {
    throw Error(ErrorCode::InvalidSet, "one domain per pattern vertex required");
  }
  return detail::Embedder(pattern, host, opt).run();
}

inline std::optional<std::vector<Vertex>> induced_embedding(const Graph& pattern, const Graph& host,
                                                            std::uint64_t budget) {
  EmbeddingOptions opt;
  opt.budget = budget;
  return induced_embedding(pattern, host, opt);
}

}  // namespace pivotminor
