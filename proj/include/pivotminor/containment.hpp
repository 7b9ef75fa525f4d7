#pragma once

// Exhaustive search for an induced subdivision of a base graph whose
// replacement paths satisfy a length rule. Meant for tiny hosts.

#include <cstdint>
#include <optional>
#include <vector>

#include "pivotminor/budget.hpp"
#include "pivotminor/error.hpp"
#include "pivotminor/graph.hpp"
#include "pivotminor/subdivision.hpp"

namespace pivotminor {

/// Replacement paths of length L with L >= min_length and L = residue mod
/// modulus, optionally carrying one triangle chord.
struct LengthRule {
  int modulus = 2;
  int residue = 1;
  int min_length = 3;
  bool allow_fuzz = true;

  bool admits(int length) const {
    return length >= min_length && ((length % modulus) + modulus) % modulus == ((residue % modulus) + modulus) % modulus;
  }
};

inline LengthRule pfos_rule() { return {2, 1, 3, true}; }

struct ContainmentOptions {
  std::uint64_t budget = Budget::kDefaultLimit;
  int max_host = 14;
  /// Candidates for branch images; all host vertices when empty.
  std::optional<VertexSet> branch_domain;
  LengthRule rule = pfos_rule();
};

struct InducedSubdivision {
  BranchMap branch;
  std::vector<Edge> base_edges;
  /// Host vertices from branch[u] to branch[v], per sorted base edge.
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::optional<Edge>> fuzz_edges;
  VertexSet vertices;
};

namespace detail {

class SubdivisionSearch {
 public:
  SubdivisionSearch(const Graph& host, const Graph& base, const ContainmentOptions& opt)
      : host_(host), base_(base), opt_(opt), budget_(opt.budget), edges_(base.edges()) {}

  std::optional<InducedSubdivision> run() {
    bm_.assign(static_cast<std::size_t>(base_.size()), -1);
    if (place_branch(0)) return result_;
    return std::nullopt;
  }

 private:
  bool place_branch(Vertex x) {
    if (x == base_.size()) return route(0);
    const VertexSet domain = opt_.branch_domain ? *opt_.branch_domain & host_.vertices() : host_.vertices();
    for (Vertex h : domain - used_) {
      budget_.tick("induced subdivision search");
      bool ok = true;
      for (Vertex y = 0; y < x && ok; ++y) {
        if (!host_.has_edge(h, bm_[y])) continue;
        // Adjacent branch images are only usable as a length-1 replacement.
        ok = base_.has_edge(x, y) && opt_.rule.admits(1);
      }
      if (!ok) continue;
      bm_[x] = h;
      used_.insert(h);
      branch_.insert(h);
      if (place_branch(x + 1)) return true;
      used_.erase(h);
      branch_.erase(h);
      bm_[x] = -1;
    }
    return false;
  }

  bool route(std::size_t e) {
    if (e == edges_.size()) return finish();
    const Vertex a = bm_[edges_[e].first];
    const Vertex b = bm_[edges_[e].second];
    if (host_.has_edge(a, b)) {
      paths_.push_back({a, b});
      fuzz_.push_back(std::nullopt);
      if (route(e + 1)) return true;
      paths_.pop_back();
      fuzz_.pop_back();
      return false;
    }
    std::vector<Vertex> path{a};
    return extend(e, path, std::nullopt, b);
  }

  bool extend(std::size_t e, std::vector<Vertex>& path, std::optional<Edge> chord, Vertex target) {
    budget_.tick("induced subdivision search");
    const Vertex cur = path.back();
    for (Vertex w : host_.neighbors(cur) - used_) {
      // Only cur, the target, and at most one triangle chord back to the
      // vertex two steps behind may touch w among the chosen vertices.
      VertexSet touched = host_.neighbors(w) & used_;
      touched.erase(cur);
      const bool closes = touched.contains(target);
      touched.erase(target);
      std::optional<Edge> next_chord = chord;
      if (!touched.empty()) {
        if (!opt_.rule.allow_fuzz || chord || touched.size() != 1 || path.size() < 3) continue;
        const Vertex back = path[path.size() - 2];
        if (touched.front() != back || back == path.front()) continue;
        next_chord = Edge{std::min(back, w), std::max(back, w)};
      }
      path.push_back(w);
      used_.insert(w);
      bool found = false;
      if (closes) {
        // w is the last interior vertex; a chord ending at it is internal.
        const int length = static_cast<int>(path.size());
        if (opt_.rule.admits(length)) {
          path.push_back(target);
          paths_.push_back(path);
          fuzz_.push_back(next_chord);
          found = route(e + 1);
          if (!found) {
            paths_.pop_back();
            fuzz_.pop_back();
          }
          path.pop_back();
        }
      } else {
        found = extend(e, path, next_chord, target);
      }
      if (found) return true;
      used_.erase(w);
      path.pop_back();
    }
    return false;
  }

  bool finish() {
    InducedSubdivision out;
    out.branch = bm_;
    out.base_edges = edges_;
    out.paths = paths_;
    out.fuzz_edges = fuzz_;
    out.vertices = used_;
    // Independent recount: the induced subgraph has exactly the path edges
    // and chords.
    std::size_t expected = 0;
    for (std::size_t i = 0; i < paths_.size(); ++i) expected += paths_[i].size() - 1 + (fuzz_[i] ? 1 : 0);
    if (induced(host_, used_).edge_count() != expected) {
      throw Error(ErrorCode::PreconditionViolated, "internal: assembled subdivision is not induced");
    }
    result_ = std::move(out);
    return true;
  }

  const Graph& host_;
  const Graph& base_;
  const ContainmentOptions& opt_;
  Budget budget_;
  std::vector<Edge> edges_;
  BranchMap bm_;
  VertexSet used_;
  VertexSet branch_;
  std::vector<std::vector<Vertex>> paths_;
  std::vector<std::optional<Edge>> fuzz_;
  std::optional<InducedSubdivision> result_;
};

}  // namespace detail

/// First induced subdivision found in branch-then-path lexicographic order,
/// or nullopt when none exists. Throws BudgetExhausted instead of guessing.
inline std::optional<InducedSubdivision> find_induced_subdivision(const Graph& host, const Graph& base,
                                                                  const ContainmentOptions& opt = {}) {
  if (host.size() > opt.max_host) {
    throw Error(ErrorCode::Oversize, "host has " + std::to_string(host.size()) + " vertices; limit is " +
                                         std::to_string(opt.max_host));
  }
  if (opt.rule.modulus < 1) throw Error(ErrorCode::InvalidPlan, "modulus must be positive");
  return detail::SubdivisionSearch(host, base, opt).run();
}

/// Induced proper fuzzy odd subdivision of base inside host. Every result is
/// rechecked with is_pfos on the induced subgraph.
inline std::optional<InducedSubdivision> contains_induced_pfos(const Graph& host, const Graph& base,
                                                               ContainmentOptions opt = {}) {
  opt.rule = pfos_rule();
  auto found = find_induced_subdivision(host, base, opt);
  if (found) {
    const std::vector<Vertex> members = found->vertices.to_vector();
    BranchMap local;
    for (Vertex b : found->branch) local.push_back(static_cast<Vertex>(std::find(members.begin(), members.end(), b) - members.begin()));
    if (!is_pfos(induced(host, found->vertices), base, local).accepted) {
      throw Error(ErrorCode::PreconditionViolated, "internal: search result fails the PFOS check");
    }
  }
  return found;
}

}  // namespace pivotminor
