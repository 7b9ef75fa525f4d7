#pragma once

// Batch commands behind the command-line tool. Each returns a Report; the
// tool only parses flags, reads inputs and prints.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pivotminor/assembly.hpp"
#include "pivotminor/canonical.hpp"
#include "pivotminor/codec.hpp"
#include "pivotminor/coherence.hpp"
#include "pivotminor/enumerate.hpp"
#include "pivotminor/error.hpp"
#include "pivotminor/fuzzy_path_lemma.hpp"
#include "pivotminor/json_io.hpp"
#include "pivotminor/ladder.hpp"
#include "pivotminor/pivot.hpp"
#include "pivotminor/pivot_search.hpp"
#include "pivotminor/realization.hpp"
#include "pivotminor/subdivision.hpp"
#include "pivotminor/universal.hpp"

namespace pivotminor {

inline constexpr const char* kToolName = "pivotminor";
inline constexpr const char* kToolVersion = "0.1.0";

namespace verdict {
inline constexpr const char* kAccept = "Accept";
inline constexpr const char* kReject = "Reject";
inline constexpr const char* kError = "Error";
inline constexpr const char* kBudget = "BudgetExhausted";
}  // namespace verdict

enum ExitCode : int { kExitAccept = 0, kExitReject = 1, kExitInput = 2, kExitBudget = 3 };

/// Process-wide default for Report::timing.
inline bool& report_timing_default() {
  static bool on = false;
  return on;
}

class Report {
 public:
  Json command = Json::object();
  /// graph6 lines for the graph-producing commands.
  std::string text;
  /// Adds wall_time_ms to each item; off by default so reports stay byte-stable.
  bool timing = report_timing_default();
  Json extra_summary = Json::object();

  const std::vector<Json>& items() const { return items_; }

  /// Runs body, which fills value/witness and returns the verdict. Library
  /// errors become Error or BudgetExhausted items.
  void run(Json id, const std::string& operation, const std::function<const char*(Json& item)>& body) {
    Json item{{"id", std::move(id)}, {"operation", operation}};
    const auto start = std::chrono::steady_clock::now();
    try {
      item["verdict"] = body(item);
    } catch (const Error& e) {
      item["verdict"] = e.code() == ErrorCode::BudgetExhausted ? verdict::kBudget : verdict::kError;
      item["error"] = e.what();
    }
    if (timing) {
      const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
      item["wall_time_ms"] = static_cast<double>(us.count()) / 1000.0;
    }
    items_.push_back(std::move(item));
  }

  int count(const char* v) const {
    return static_cast<int>(std::count_if(items_.begin(), items_.end(), [&](const Json& i) { return i["verdict"] == v; }));
  }

  int exit_code() const {
    if (count(verdict::kBudget) > 0) return kExitBudget;
    if (count(verdict::kError) > 0) return kExitInput;
    if (count(verdict::kReject) > 0) return kExitReject;
    return kExitAccept;
  }

  Json to_json() const {
    Json summary = extra_summary;
    summary["items"] = items_.size();
    summary["accept"] = count(verdict::kAccept);
    summary["reject"] = count(verdict::kReject);
    summary["error"] = count(verdict::kError);
    summary["budget_exhausted"] = count(verdict::kBudget);
    return Json{{"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
                {"command", command},
                {"items", items_},
                {"summary", summary}};
  }

  std::string dump() const { return to_json().dump(2) + "\n"; }

 private:
  std::vector<Json> items_;
};

inline const char* accept_if(bool ok) { return ok ? verdict::kAccept : verdict::kReject; }

// ---- verify-lemmas --------------------------------------------------------

inline constexpr int kVerifyLemmasMaxR = 4;

struct VerifyLemmasOptions {
  std::uint64_t budget = Budget::kDefaultLimit;
  /// Hosts above this order are not searched independently.
  int confirm_max_host = 12;
};

/// Every graph on 1..r_max vertices up to isomorphism, ordered by
/// (order, canonical graph6).
inline std::vector<Graph> lemma_patterns(int r_max) {
  if (r_max > kVerifyLemmasMaxR) throw Error(ErrorCode::Oversize, "r_max is at most " + std::to_string(kVerifyLemmasMaxR));
  std::vector<std::pair<std::pair<int, std::string>, Graph>> keyed;
  for (int n = 1; n <= r_max; ++n)
    for (const Graph& g : graphs_up_to_isomorphism(n)) {
      const Graph c = canonical(g).graph();
      keyed.push_back({{n, encode_graph6(c)}, c});
    }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Graph> out;
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

inline Report cmd_verify_lemmas(int r_max, const std::vector<UniversalKind>& kinds, const VerifyLemmasOptions& opt = {}) {
  Report report;
  if (kinds.empty()) return report;
  const std::vector<Graph> patterns = lemma_patterns(r_max);
  for (UniversalKind kind : kinds) {
    for (const Graph& pattern : patterns) {
      const std::string g6 = encode_graph6(pattern);
      report.run(std::string(to_string(kind)) + "/" + g6, "universal_host_and_witness", [&](Json& item) {
        UniversalOptions uo;
        uo.max_r = std::max(uo.max_r, r_max);
        const UniversalInstance inst = universal_host_and_witness(pattern, kind, uo);
        const WitnessVerdict wv = verify_witness(inst.host, pattern, inst.witness);
        Json value{{"kind", to_string(kind)}, {"pattern", g6}, {"r", inst.r}, {"host", encode_graph6(inst.host)},
                   {"host_order", inst.host.size()}, {"pivots", inst.witness.pivot_count()},
                   {"deletions", inst.witness.delete_count()}, {"verified", wv.accepted}};
        if (!wv.accepted) value["reason"] = wv.reason;
        item["witness"] = format_witness(inst.witness);

        std::string confirm = "skipped";
        if (inst.host.size() <= opt.confirm_max_host) {
          SearchOptions so;
          so.budget = opt.budget;
          so.canonical_limit = kMaxVertices;
          try {
            auto found = find_pivot_minor(inst.host, pattern, so);
            if (!found) {
              confirm = "not_found";
            } else {
              confirm = verify_witness(inst.host, pattern, *found).accepted ? "confirmed" : "not_found";
              value["search_pivots"] = found->pivot_count();
            }
          } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExhausted) throw;
            confirm = "budget_exhausted";
          }
        }
        value["confirmation"] = confirm;
        item["value"] = value;
        if (confirm == "budget_exhausted" && wv.accepted) return verdict::kBudget;
        return accept_if(wv.accepted && confirm != "not_found");
      });
    }
  }
  return report;
}

// ---- survey and coherence -------------------------------------------------

struct CoherenceQuery {
  Rational eps = Rational(1, 2);
  std::optional<int> r;
  std::optional<Rational> delta;
};

inline Json coherence_checks(const MassedGraph& mg, const CoherenceQuery& q, bool& all_hold) {
  Json out;
  all_hold = true;
  CoherenceVerdict c = check_coherent(mg, q.eps);
  all_hold = all_hold && c.coherent;
  out["coherent"] = coherence_to_json(c);
  out["coherent"]["eps"] = rational_to_json(q.eps);
  if (q.r) {
    CoherenceVerdict rc = check_r_coherent(mg, q.eps, *q.r);
    all_hold = all_hold && rc.coherent;
    out["r_coherent"] = coherence_to_json(rc);
    out["r_coherent"]["eps"] = rational_to_json(q.eps);
    out["r_coherent"]["r"] = *q.r;
  }
  if (q.delta) {
    const int r = q.r.value_or(1);
    CoherenceVerdict f = check_focused(mg, *q.delta, r);
    all_hold = all_hold && f.coherent;
    out["focused"] = coherence_to_json(f);
    out["focused"]["delta"] = rational_to_json(*q.delta);
    out["focused"]["r"] = r;
  }
  return out;
}

inline Rational median(std::vector<Rational> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  if (xs.size() % 2 == 1) return xs[m];
  return (xs[m - 1] + xs[m]) / Rational(2);
}

/// Uniform mass on every graph. Coherence outcomes are data here, so only
/// failures to evaluate make an item non-Accept.
inline Report cmd_survey(const std::vector<Graph>& corpus, const CoherenceQuery& q) {
  Report report;
  std::vector<Rational> ratios;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    report.run(static_cast<int>(i), "survey", [&](Json& item) {
      item["input"] = encode_graph6(g);
      const EhRatio eh = eh_ratio(g);
      Json value{{"n", g.size()}, {"eh_ratio", eh_ratio_to_json(eh)}};
      if (g.size() > 0) {
        bool hold = false;
        value.update(coherence_checks(MassedGraph::uniform(g), q, hold));
      }
      ratios.push_back(eh.value);
      item["value"] = value;
      return verdict::kAccept;
    });
  }
  if (!ratios.empty()) {
    report.extra_summary["eh_ratio_min"] = rational_to_json(*std::min_element(ratios.begin(), ratios.end()));
    report.extra_summary["eh_ratio_median"] = rational_to_json(median(ratios));
  }
  return report;
}

/// Accept iff every requested property holds.
inline Report cmd_coherence(const std::vector<MassedGraph>& graphs, const CoherenceQuery& q) {
  Report report;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    report.run(static_cast<int>(i), "coherence", [&](Json& item) {
      item["input"] = encode_graph6(graphs[i].graph());
      bool hold = false;
      Json value = coherence_checks(graphs[i], q, hold);
      value["mass"] = mass_to_json(graphs[i]);
      item["value"] = value;
      return accept_if(hold);
    });
  }
  return report;
}

// ---- pass-through commands ------------------------------------------------

inline void emit_graph(Report& report, Json& item, const Graph& g) {
  const std::string g6 = encode_graph6(g);
  report.text += g6 + "\n";
  item["value"] = Json{{"graph", g6}, {"n", g.size()}, {"m", g.edge_count()}};
}

inline Report cmd_pivot(const std::vector<Graph>& graphs, Vertex u, Vertex v) {
  Report report;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    report.run(static_cast<int>(i), "pivot", [&](Json& item) {
      item["input"] = encode_graph6(graphs[i]);
      emit_graph(report, item, pivot(graphs[i], u, v));
      return verdict::kAccept;
    });
  }
  return report;
}

/// Applies the witness to each host; with a target the result must be
/// isomorphic to it.
inline Report cmd_apply_witness(const std::vector<Graph>& hosts, const PivotWitness& w, const std::optional<Graph>& target) {
  Report report;
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    report.run(static_cast<int>(i), target ? "verify_witness" : "apply_witness", [&](Json& item) {
      item["input"] = encode_graph6(hosts[i]);
      item["witness"] = format_witness(w);
      if (!target) {
        emit_graph(report, item, apply_witness(hosts[i], w).graph);
        return verdict::kAccept;
      }
      const WitnessVerdict wv = verify_witness(hosts[i], *target, w);
      Json value{{"accepted", wv.accepted}, {"target", encode_graph6(*target)}};
      if (wv.accepted) {
        value["isomorphism"] = wv.isomorphism;
        const Graph result = apply_witness(hosts[i], w).graph;
        report.text += encode_graph6(result) + "\n";
        value["graph"] = encode_graph6(result);
      } else {
        value["reason"] = wv.reason;
        if (wv.failing_step) value["failing_step"] = *wv.failing_step;
      }
      item["value"] = value;
      return accept_if(wv.accepted);
    });
  }
  return report;
}

inline Report cmd_search(const std::vector<Graph>& hosts, const Graph& pattern, const SearchOptions& opt) {
  Report report;
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    report.run(static_cast<int>(i), "find_pivot_minor", [&](Json& item) {
      item["input"] = encode_graph6(hosts[i]);
      const auto found = find_pivot_minor(hosts[i], pattern, opt);
      Json value{{"pattern", encode_graph6(pattern)}, {"found", found.has_value()}};
      if (found) {
        item["witness"] = format_witness(*found);
        const bool ok = verify_witness(hosts[i], pattern, *found).accepted;
        value["verified"] = ok;
        value["pivots"] = found->pivot_count();
        item["value"] = value;
        return accept_if(ok);
      }
      item["value"] = value;
      return verdict::kReject;
    });
  }
  return report;
}

inline Report cmd_construct_subdivision(const std::vector<Graph>& graphs, int t) {
  Report report;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    report.run(static_cast<int>(i), "uniform_subdivision", [&](Json& item) {
      item["input"] = encode_graph6(graphs[i]);
      emit_graph(report, item, uniform_subdivision(graphs[i], t));
      return verdict::kAccept;
    });
  }
  return report;
}

/// Every edge becomes a path of length len; fuzz_edge (an index into the
/// sorted edge list) gets a triangle chord at its first interior vertex.
inline Report cmd_construct_pfos(const std::vector<Graph>& graphs, int len, std::optional<int> fuzz_edge) {
  Report report;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    report.run(static_cast<int>(i), "build_pfos", [&](Json& item) {
      item["input"] = encode_graph6(graphs[i]);
      SubdivisionPlan plan = SubdivisionPlan::uniform(graphs[i], len);
      if (fuzz_edge) {
        if (*fuzz_edge < 0 || *fuzz_edge >= static_cast<int>(plan.edges.size()))
          throw Error(ErrorCode::InvalidPlan, "fuzz edge index out of range");
        plan.edges[static_cast<std::size_t>(*fuzz_edge)].fuzz = Fuzz{1, Fuzz::Attach::Next};
      }
      const Graph g = build_pfos(plan);
      emit_graph(report, item, g);
      const SubdivisionVerdict check = is_pfos(g, graphs[i], identity_branch_map(graphs[i].size()));
      item["value"]["pfos"] = check.accepted;
      return accept_if(check.accepted);
    });
  }
  return report;
}

/// Edges outside forest are subdivided count times; forest edges are kept.
inline Report cmd_construct_fillet(const std::vector<Graph>& graphs, const std::vector<Edge>& forest, int count) {
  Report report;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    report.run(static_cast<int>(i), "fillet", [&](Json& item) {
      const Graph& g = graphs[i];
      item["input"] = encode_graph6(g);
      std::map<Edge, int> counts;
      std::vector<Edge> f;
      for (Edge e : forest) f.push_back({std::min(e.first, e.second), std::max(e.first, e.second)});
      for (Edge e : g.edges())
        if (std::find(f.begin(), f.end(), e) == f.end()) counts[e] = count;
      emit_graph(report, item, fillet(g, forest, counts));
      return verdict::kAccept;
    });
  }
  return report;
}

// ---- proof objects --------------------------------------------------------

/// One JSON object per proof object:
///   {"type": "ladder" | "tick" | "realization" | "frame" | "fuzzy_path" | "assembly",
///    "graph": ..., "mass": ..., plus the fields of that type}.
inline Report cmd_validate(const Json& doc) {
  Report report;
  const Json objects = doc.is_array() ? doc : Json::array({doc});
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const Json& obj = objects[i];
    const std::string type = obj.is_object() && obj.contains("type") && obj["type"].is_string() ? obj["type"].get<std::string>() : "";
    report.run(static_cast<int>(i), "validate_" + (type.empty() ? std::string("unknown") : type), [&](Json& item) {
      const MassedGraph mg = massed_graph_from_json(obj);
      if (type == "ladder") {
        const Ladder lad = ladder_from_json(detail::field(obj, "ladder"));
        const bool half = obj.value("half_cleaned", false);
        std::optional<Rational> kappa;
        if (obj.contains("kappa")) kappa = rational_from_json(obj["kappa"]);
        const StructureVerdict v = validate_ladder(mg, lad, half, kappa);
        item["value"] = structure_verdict_to_json(v);
        return accept_if(v.accepted);
      }
      if (type == "tick") {
        const Ladder lad = ladder_from_json(detail::field(obj, "ladder"));
        const std::vector<Tick> ticks = ticks_from_json(detail::field(obj, "ticks"));
        const TickFamilyClassification cls = classify_ticks(mg.graph(), lad, ticks);
        Json per = Json::array();
        for (const auto& t : cls.ticks) per.push_back(tick_classification_to_json(t));
        item["value"] = Json{{"class", to_string(cls.cls)}, {"ticks", per}};
        return accept_if(cls.cls == TickClass::Odd || cls.cls == TickClass::Even);
      }
      if (type == "realization") {
        const StructureVerdict v = validate_realization(mg, realization_from_json(detail::field(obj, "realization")));
        item["value"] = structure_verdict_to_json(v);
        return accept_if(v.accepted);
      }
      if (type == "frame") {
        const StructureVerdict v = validate_frame(mg, frame_from_json(detail::field(obj, "frame")));
        item["value"] = structure_verdict_to_json(v);
        return accept_if(v.accepted);
      }
      if (type == "fuzzy_path") {
        const FuzzyPathResult res = find_fuzzy_odd_path(mg, fuzzy_query_from_json(detail::field(obj, "query")));
        Json value{{"branch", res.trace.branch}, {"swapped", res.trace.swapped},
                   {"mass_guided", res.trace.mass_guided}, {"mass_preconditions", res.trace.mass_preconditions}};
        if (res.path) value["path"] = fuzzy_path_to_json(*res.path);
        if (res.stall) value["stall"] = no_progress_to_json(*res.stall);
        item["value"] = value;
        return accept_if(res.path && res.path->accepted);
      }
      if (type == "assembly") {
        const Ladder lad = ladder_from_json(detail::field(obj, "ladder"));
        const std::vector<Tick> ticks = ticks_from_json(detail::field(obj, "ticks"));
        const AssemblyResult res = assemble_pfos(mg, lad, ticks, rational_from_json(detail::field(obj, "eps")));
        item["value"] = assembly_to_json(res);
        return accept_if(res.value.has_value());
      }
      throw Error(ErrorCode::MalformedInput, "unknown proof object type '" + type + "'");
    });
  }
  return report;
}

// ---- random corpora -------------------------------------------------------

/// count graphs G(n, 1/2) with n uniform in [1, max_n]; fixed by seed.
inline std::vector<Graph> random_corpus(int count, int max_n, std::uint64_t seed) {
  if (max_n < 1 || max_n > kMaxVertices) throw Error(ErrorCode::Oversize, "random order out of range");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(max_n)) + 1;
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() & 1U) g.add_edge(u, v);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace pivotminor
