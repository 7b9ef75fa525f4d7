#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pivotminor/commands.hpp"

using namespace pivotminor;

namespace {

struct Common {
  std::string input = "-";
  std::string json_out;
  std::uint64_t budget = Budget::kDefaultLimit;
  std::string epsilon = "1/2";
  std::string delta;
  int r = 0;  // 0: not given
  std::uint64_t seed = 0;
  bool timing = false;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Graph> read_input_graphs(const std::string& path) {
  std::istringstream in(read_text(path));
  return read_graphs(in);
}

// Accepts a graph6 string or a path to a file holding exactly one graph.
Graph graph_argument(const std::string& arg) {
  std::ifstream probe(arg);
  if (probe) return parse_graph(read_text(arg));
  return decode_graph6(arg);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

Edge parse_edge(const std::string& s) {
  const auto sep = s.find_first_of(",-");
  if (sep == std::string::npos) throw Error(ErrorCode::MalformedInput, "edge must look like u,v");
  try {
    return {std::stoi(s.substr(0, sep)), std::stoi(s.substr(sep + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::MalformedInput, "bad edge '" + s + "'");
  }
}

CoherenceQuery coherence_query(const Common& c) {
  CoherenceQuery q;
  q.eps = parse_rational(c.epsilon);
  if (c.r > 0) q.r = c.r;
  if (!c.delta.empty()) q.delta = parse_rational(c.delta);
  return q;
}

int emit(Report& report, const Common& c, bool graph_output, const std::string& name, Json args) {
  if (!c.input.empty()) args["input"] = c.input;
  report.command = Json{{"name", name}, {"args", args}};
  const std::string json = report.dump();
  if (!c.json_out.empty()) {
    std::ofstream out(c.json_out, std::ios::binary);
    if (!out) throw Error(ErrorCode::MalformedInput, "cannot write '" + c.json_out + "'");
    out << json;
  }
  if (graph_output) {
    std::cout << report.text;
  } else if (c.json_out.empty()) {
    std::cout << json;
  }
  for (const Json& item : report.items())
    if (item.contains("error")) std::cerr << item["error"].get<std::string>() << "\n";
  return report.exit_code();
}

void add_common(CLI::App* app, Common& c, bool with_input = true) {
  if (with_input) app->add_option("--input", c.input, "graph6 or edge-list file, '-' for stdin");
  app->add_option("--json-out", c.json_out, "write the JSON report here");
  app->add_option("--budget", c.budget, "search step budget");
  app->add_flag("--timing", c.timing, "record wall time per item");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pivot-minor algebra, constructions, coherence and proof-object checks"};
  app.require_subcommand(1);
  Common c;

  auto* verify = app.add_subcommand("verify-lemmas", "emit and check universal hosts for small patterns");
  add_common(verify, c, false);
  int r_max = 3;
  std::string kinds = "all";
  int confirm_max = 12;
  verify->add_option("--r-max", r_max, "largest pattern order (at most 4)");
  verify->add_option("--kinds", kinds, "comma list of kinds, 'all' or '' for none");
  verify->add_option("--confirm-max-host", confirm_max, "largest host confirmed by search");

  auto* survey = app.add_subcommand("survey", "eh_ratio and coherence over a corpus");
  add_common(survey, c);
  int random_count = 0;
  int random_n = 8;
  survey->add_option("--epsilon", c.epsilon, "p/q");
  survey->add_option("--delta", c.delta, "p/q");
  survey->add_option("--r", c.r, "radius");
  survey->add_option("--random", random_count, "survey this many random graphs instead of --input");
  survey->add_option("--random-n", random_n, "largest random order");
  survey->add_option("--seed", c.seed, "seed for --random");

  auto* coh = app.add_subcommand("coherence", "check coherence of each input graph");
  add_common(coh, c);
  std::string mass = "uniform";
  coh->add_option("--epsilon", c.epsilon, "p/q");
  coh->add_option("--delta", c.delta, "p/q");
  coh->add_option("--r", c.r, "radius");
  coh->add_option("--mass", mass, "uniform or chromatic")->check(CLI::IsMember({"uniform", "chromatic"}));

  auto* piv = app.add_subcommand("pivot", "pivot an edge, or apply a witness");
  add_common(piv, c);
  std::string edge;
  std::string witness_path;
  std::string target;
  piv->add_option("--edge", edge, "u,v");
  piv->add_option("--witness", witness_path, "witness file ('P u v' / 'D v' lines)");
  piv->add_option("--target", target, "graph6 or file; verify the witness against it");

  auto* search = app.add_subcommand("search", "find a pivot-minor witness");
  add_common(search, c);
  std::string pattern;
  search->add_option("--pattern", pattern, "graph6 or file")->required();

  auto* construct = app.add_subcommand("construct", "subdivision, pfos or fillet of each input graph");
  add_common(construct, c);
  std::string kind;
  int t = 1;
  int len = 3;
  std::optional<int> fuzz_edge;
  std::string forest;
  int count = 1;
  construct->add_option("kind", kind, "subdivision | pfos | fillet")
      ->required()
      ->check(CLI::IsMember({"subdivision", "pfos", "fillet"}));
  construct->add_option("--t", t, "subdivision vertices per edge");
  construct->add_option("--len", len, "pfos path length");
  construct->add_option("--fuzz-edge", fuzz_edge, "index of the edge that gets a triangle chord (needs --len >= 5)");
  construct->add_option("--forest", forest, "fillet: edges kept, e.g. 0-1,1-2");
  construct->add_option("--count", count, "fillet: subdivisions per other edge");

  auto* validate = app.add_subcommand("validate", "check proof objects given as JSON");
  add_common(validate, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  report_timing_default() = c.timing;
  try {
    if (verify->parsed()) {
      std::vector<UniversalKind> ks;
      if (kinds == "all") {
        ks = all_universal_kinds();
      } else {
        for (const std::string& k : split(kinds, ',')) ks.push_back(parse_universal_kind(k));
      }
      VerifyLemmasOptions opt;
      opt.budget = c.budget;
      opt.confirm_max_host = confirm_max;
      Report rep = cmd_verify_lemmas(r_max, ks, opt);
      Json args{{"r_max", r_max}, {"kinds", kinds}, {"budget", c.budget}, {"confirm_max_host", confirm_max}};
      c.input = "";
      return emit(rep, c, false, "verify-lemmas", args);
    }
    if (survey->parsed()) {
      const CoherenceQuery q = coherence_query(c);
      std::vector<Graph> corpus =
          random_count > 0 ? random_corpus(random_count, random_n, c.seed) : read_input_graphs(c.input);
      Report rep = cmd_survey(corpus, q);
      Json args{{"epsilon", c.epsilon}};
      if (q.r) args["r"] = *q.r;
      if (q.delta) args["delta"] = c.delta;
      if (random_count > 0) {
        args["random"] = random_count;
        args["random_n"] = random_n;
        args["seed"] = c.seed;
      }
      return emit(rep, c, false, "survey", args);
    }
    if (coh->parsed()) {
      const CoherenceQuery q = coherence_query(c);
      std::vector<MassedGraph> gs;
      for (Graph& g : read_input_graphs(c.input))
        gs.push_back(mass == "chromatic" ? MassedGraph::chromatic(std::move(g)) : MassedGraph::uniform(std::move(g)));
      Report rep = cmd_coherence(gs, q);
      Json args{{"epsilon", c.epsilon}, {"mass", mass}};
      if (q.r) args["r"] = *q.r;
      if (q.delta) args["delta"] = c.delta;
      return emit(rep, c, false, "coherence", args);
    }
    if (piv->parsed()) {
      if (edge.empty() == witness_path.empty()) throw Error(ErrorCode::MalformedInput, "give exactly one of --edge, --witness");
      const std::vector<Graph> graphs = read_input_graphs(c.input);
      if (!edge.empty()) {
        const Edge e = parse_edge(edge);
        Report rep = cmd_pivot(graphs, e.first, e.second);
        return emit(rep, c, true, "pivot", Json{{"edge", edge}});
      }
      const PivotWitness w = parse_witness(read_text(witness_path));
      std::optional<Graph> tg;
      if (!target.empty()) tg = graph_argument(target);
      Report rep = cmd_apply_witness(graphs, w, tg);
      Json args{{"witness", witness_path}};
      if (tg) args["target"] = encode_graph6(*tg);
      return emit(rep, c, true, "pivot", args);
    }
    if (search->parsed()) {
      SearchOptions opt;
      opt.budget = c.budget;
      opt.canonical_limit = kMaxVertices;
      const Graph pat = graph_argument(pattern);
      Report rep = cmd_search(read_input_graphs(c.input), pat, opt);
      return emit(rep, c, false, "search", Json{{"pattern", encode_graph6(pat)}, {"budget", c.budget}});
    }
    if (construct->parsed()) {
      const std::vector<Graph> graphs = read_input_graphs(c.input);
      Report rep;
      Json args{{"kind", kind}};
      if (kind == "subdivision") {
        rep = cmd_construct_subdivision(graphs, t);
        args["t"] = t;
      } else if (kind == "pfos") {
        rep = cmd_construct_pfos(graphs, len, fuzz_edge);
        args["len"] = len;
        if (fuzz_edge) args["fuzz_edge"] = *fuzz_edge;
      } else {
        std::vector<Edge> f;
        for (const std::string& e : split(forest, ',')) f.push_back(parse_edge(e));
        rep = cmd_construct_fillet(graphs, f, count);
        args["forest"] = forest;
        args["count"] = count;
      }
      return emit(rep, c, true, "construct", args);
    }
    if (validate->parsed()) {
      Json doc;
      try {
        doc = Json::parse(read_text(c.input));
      } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
      }
      Report rep = cmd_validate(doc);
      return emit(rep, c, false, "validate", Json::object());
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExhausted ? kExitBudget : kExitInput;
  }
  return kExitInput;
}
