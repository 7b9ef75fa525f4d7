#pragma once

// Canonical labelling by colour refinement plus individualisation over the
// first non-singleton cell. Every leaf of the search tree is examined (twins
// are collapsed, since swapping twins is an automorphism), so the result is
// exact for every order; the size cap only bounds running time.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pivotminor/codec.hpp"
#include "pivotminor/error.hpp"
#include "pivotminor/graph.hpp"

namespace pivotminor {

inline constexpr int kDefaultCanonicalLimit = 12;

struct CanonicalForm {
  int n = 0;
  /// Adjacency rows of the canonically relabelled graph.
  std::vector<std::uint64_t> rows;
  /// perm[v] is the canonical position of source vertex v.
  std::vector<Vertex> perm;

  Graph graph() const {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : VertexSet(rows[u] & ~low_mask(u + 1))) g.add_edge(u, v);
    return g;
  }
  /// Upper-triangle bits in graph6 column order.
  std::string bits() const {
    std::string out;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i) out.push_back((rows[i] >> j) & 1U ? '1' : '0');
    return out;
  }
  /// graph6 of the canonical graph; equal keys iff isomorphic.
  std::string key() const { return encode_graph6(graph()); }

  // Identity of the isomorphism class only; the certificate is ignored.
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.rows == b.rows;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.rows <=> b.rows;
  }
};

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.size()) {}

  CanonicalForm run() {
    std::vector<int> colors(static_cast<std::size_t>(n_), 0);
    refine(colors);
    search(colors);
    CanonicalForm out;
    out.n = n_;
    out.rows = best_rows_;
    out.perm = best_perm_;
    return out;
  }

 private:
  // Equitable refinement: colour by (own colour, sorted neighbour colours).
  void refine(std::vector<int>& colors) const {
    int classes = count_classes(colors);
    while (true) {
      std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
      for (Vertex v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.push_back(colors[v]);
        std::vector<int> nb;
        for (Vertex w : g_.neighbors(v)) nb.push_back(colors[w]);
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
      }
      std::vector<std::vector<int>> sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (Vertex v = 0; v < n_; ++v) {
        colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
      }
      const int next = static_cast<int>(sorted.size());
      if (next == classes) return;
      classes = next;
    }
  }

  static int count_classes(const std::vector<int>& colors) {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  bool twins(Vertex a, Vertex b) const {
    return (g_.row(a) & ~bit(b)) == (g_.row(b) & ~bit(a));
  }

  void search(const std::vector<int>& colors) {
    // First non-singleton cell, by colour value.
    std::vector<int> count(static_cast<std::size_t>(n_), 0);
    for (int c : colors) ++count[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      bool redundant = false;
      for (Vertex t : tried) {
        if (twins(t, v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried.push_back(v);
      std::vector<int> next(colors.size());
      for (Vertex w = 0; w < n_; ++w) next[w] = 2 * colors[w] + (w != v ? 1 : 0);
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<int>& colors) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) {
      std::uint64_t r = 0;
      for (Vertex w : g_.neighbors(v)) r |= bit(colors[w]);
      rows[colors[v]] = r;
    }
    if (best_perm_.empty() || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_perm_ = colors;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<Vertex> best_perm_;
};

}  // namespace detail

inline CanonicalForm canonical(const Graph& g, int limit = kDefaultCanonicalLimit) {
  if (g.size() > limit) {
    throw Error(ErrorCode::Oversize, "canonical form requested for " + std::to_string(g.size()) +
                                         " vertices, tier limit " + std::to_string(limit));
  }
  if (g.size() == 0) return CanonicalForm{};
  return detail::Canonizer(g).run();
}

/// An isomorphism g -> h as a vertex map, when one exists.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h,
                                                           int limit = kDefaultCanonicalLimit) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
  const CanonicalForm cg = canonical(g, limit);
  const CanonicalForm ch = canonical(h, limit);
  if (cg != ch) return std::nullopt;
  std::vector<Vertex> inv_h(static_cast<std::size_t>(h.size()));
  for (Vertex v = 0; v < h.size(); ++v) inv_h[ch.perm[v]] = v;
  std::vector<Vertex> map(static_cast<std::size_t>(g.size()));
  for (Vertex v = 0; v < g.size(); ++v) map[v] = inv_h[cg.perm[v]];
  return map;
}

inline bool is_isomorphic(const Graph& g, const Graph& h, int limit = kDefaultCanonicalLimit) {
  return find_isomorphism(g, h, limit).has_value();
}

}  // namespace pivotminor
