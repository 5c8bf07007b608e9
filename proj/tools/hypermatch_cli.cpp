#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "hypermatch/applications.hpp"
#include "hypermatch/edge_coloring.hpp"
#include "hypermatch/generators.hpp"
#include "hypermatch/matching_rounding.hpp"
#include "hypermatch/oracles.hpp"
#include "hypermatch/packing_mis.hpp"
#include "hypermatch/text_format.hpp"

using namespace hypermatch;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOracle = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Empty path or "-" means stdout.
void emit(const std::string& path, std::string_view text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

struct Options {
  // generate
  std::string family;
  std::size_t n = 0, m = 0, r = 0, d = 0;
  double p = 0.5;
  // run / verify
  std::string algo, kind, in, out, solution, json_path, lists;
  std::uint64_t seed = 1;
  std::string eps = "1";
  std::optional<std::size_t> lambda, arboricity, rank_bound, bound;
  std::optional<std::int64_t> max_color;
  std::optional<double> slack;
  bool oracle = false;
  bool almost_maximal = false;
};

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json ledger_json(const RoundLedger& ledger) {
  json entries = json::array();
  for (const auto& e : ledger.entries()) {
    entries.push_back({{"label", e.label}, {"formula", e.formula}, {"rounds", e.rounds}, {"calls", e.calls}});
  }
  return {{"entries", entries}, {"total", ledger.total()}};
}

json summary(const Hypergraph& h, bool graph) {
  return {{"kind", graph ? "graph" : "hypergraph"},
          {"n", h.num_vertices()},
          {"m", h.num_edges()},
          {"r", h.rank()},
          {"delta", h.max_degree()}};
}

struct Report {
  json verdicts = json::array();
  json oracle = json::object();
  bool ok = true;

  void verdict(const std::string& name, bool pass, const std::string& witness = {}) {
    json v{{"name", name}, {"pass", pass}};
    if (!witness.empty()) v["witness"] = witness;
    verdicts.push_back(v);
    ok = ok && pass;
  }
};

/// Runs an oracle; without --oracle an over-budget instance is recorded as
/// skipped instead of failing the run.
template <typename F>
bool try_oracle(const Options& opt, Report& rep, const std::string& name, F&& f) {
  try {
    f();
    return true;
  } catch (const OracleBudgetExceeded& e) {
    if (opt.oracle) throw;
    rep.oracle[name] = {{"skipped", e.what()}};
    return false;
  }
}

std::size_t rank_bound_for(const Options& opt, const Graph& g, json& params) {
  if (opt.rank_bound) {
    params["r"] = *opt.rank_bound;
    return *opt.rank_bound;
  }
  const std::size_t r = std::max<std::size_t>(1, neighborhood_independence_oracle(g));
  params["r"] = r;
  params["r_source"] = "oracle";
  return r;
}

std::size_t arboricity_for(const std::optional<std::size_t>& given, const Graph& g, json& params, const char* key) {
  if (given) {
    params[key] = *given;
    return *given;
  }
  const std::size_t a = std::max<std::size_t>(1, arboricity_oracle(g));
  params[key] = a;
  params[std::string(key) + "_source"] = "oracle";
  return a;
}

Graph read_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::vector<std::uint32_t> to_ids(const std::vector<EdgeId>& v) { return {v.begin(), v.end()}; }

void add_edge_coloring_verdicts(Report& rep, json& sol, const EdgeColoringVerdict& v, std::optional<std::int64_t> cap) {
  rep.verdict("proper", v.proper, v.proper ? "" : v.witness);
  rep.verdict("in_lists", v.in_lists, v.in_lists ? "" : v.witness);
  sol["palette_max"] = v.max_color;
  if (cap) {
    sol["palette_bound"] = *cap;
    rep.verdict("palette_bound", v.max_color <= *cap,
                v.max_color <= *cap ? "" : "max color " + std::to_string(v.max_color) + " > " + std::to_string(*cap));
  }
}

int cmd_generate(const Options& opt) {
  std::mt19937_64 rng(opt.seed);
  std::string text;
  const std::string& f = opt.family;
  if (f == "random-hypergraph") {
    text = format_hypergraph(random_hypergraph(opt.n, opt.m, opt.r, rng));
  } else if (f == "random-graph") {
    text = format_graph(random_graph(opt.n, opt.p, rng));
  } else if (f == "d-regular") {
    text = format_graph(random_regular(opt.n, opt.d, rng));
  } else if (f == "star") {
    text = format_graph(star_graph(opt.n));
  } else if (f == "cycle") {
    text = format_graph(cycle_graph(opt.n));
  } else if (f == "path") {
    text = format_graph(path_graph(opt.n));
  } else if (f == "complete") {
    text = format_graph(complete_graph(opt.n));
  } else if (f == "line-graph-of") {
    if (opt.in.empty()) throw UsageError("line-graph-of needs --in");
    text = format_graph(line_graph(parse_any_as_hypergraph(read_file(opt.in))));
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  emit(opt.out, text);
  return kExitOk;
}

int cmd_run(const Options& opt) {
  if (opt.in.empty()) throw UsageError("run needs --in");
  const std::string text = read_file(opt.in);
  const std::string& a = opt.algo;
  const Rational eps = Rational::parse(opt.eps);

  RoundLedger ledger;
  Report rep;
  json params = json::object();
  json sol = json::object();
  json instance;
  std::string out_text;

  if (a == "maximal-matching" || a == "approx-matching") {
    const Hypergraph h = parse_any_as_hypergraph(text);
    instance = summary(h, looks_like_graph(text));
    Matching m;
    if (a == "maximal-matching") {
      if (opt.slack) params["slack"] = *opt.slack;
      const auto res = maximal_matching(h, opt.slack, &ledger);
      m = res.matching;
      sol["iterations"] = res.iterations;
      sol["unblocked"] = res.unblocked.size();
      const auto v = validate_matching(h, m, !opt.slack);
      rep.verdict("valid", v.valid, v.witness);
      if (!opt.slack) {
        rep.verdict("maximal", v.maximal, v.witness);
        const double r = static_cast<double>(h.rank());
        const auto cap = static_cast<std::size_t>(
            std::ceil(32.0 * r * r * r * std::log2(std::max<double>(2.0, static_cast<double>(h.num_vertices()))))) + 1;
        sol["iteration_bound"] = cap;
        rep.verdict("iteration_bound", res.iterations <= cap);
      }
    } else {
      m = approx_max_matching(h, &ledger);
      const auto v = validate_matching(h, m, false);
      rep.verdict("valid", v.valid, v.witness);
    }
    sol["size"] = m.size();
    try_oracle(opt, rep, "max_matching", [&] {
      const auto opt_size = max_matching_oracle(h).size;
      const std::size_t r = std::max<std::size_t>(1, h.rank());
      const std::size_t factor = a == "maximal-matching" ? r : 32 * r * r * r;
      rep.oracle["max_matching"] = {{"opt", opt_size}, {"factor", factor}};
      rep.verdict("approximation", m.size() * factor >= opt_size,
                  std::to_string(m.size()) + " * " + std::to_string(factor) + " vs OPT " + std::to_string(opt_size));
    });
    out_text = format_id_list(to_ids(m.edges));
  } else if (a == "edge-color" || a == "list-edge-color" || a == "rand-edge-color" || a == "arb-edge-color") {
    const Graph g = parse_graph(text);
    instance = summary(g.as_hypergraph(), true);
    EdgeColoring c;
    std::optional<std::int64_t> cap;
    std::optional<EdgeLists> lists;
    const auto two_delta = static_cast<std::int64_t>(2 * g.max_degree()) - 1;
    if (a == "edge-color") {
      c = edge_color(g, &ledger);
      cap = std::max<std::int64_t>(two_delta, 0);
    } else if (a == "list-edge-color") {
      lists = opt.lists.empty() ? default_lists(g) : parse_edge_lists(read_file(opt.lists), g.num_edges());
      params["lists"] = opt.lists.empty() ? "default" : opt.lists;
      c = list_edge_color(g, *lists, &ledger);
    } else if (a == "rand-edge-color") {
      params["seed"] = opt.seed;
      RandomizedStats stats;
      c = randomized_edge_color(g, opt.seed, &ledger, &stats);
      sol["trial_rounds"] = stats.trial_rounds;
      sol["uncolored_after_trials"] = stats.uncolored_after_trials;
      sol["leftover_components"] = stats.leftover_components;
      sol["largest_component"] = stats.largest_component;
      cap = std::max<std::int64_t>(two_delta, 0);
    } else {
      const auto arb = static_cast<std::int64_t>(arboricity_for(opt.arboricity, g, params, "arboricity"));
      params["eps"] = eps.str();
      c = arboricity_edge_color(g, arb, eps, &ledger);
      cap = arboricity_palette(g, arb, eps);
    }
    const auto v = validate_edge_coloring(g, c.colors, lists ? &*lists : nullptr);
    add_edge_coloring_verdicts(rep, sol, v, cap);
    out_text = format_id_values(c.colors);
  } else if (a == "mis" || a == "vertex-color") {
    const Graph g = parse_graph(text);
    instance = summary(g.as_hypergraph(), true);
    const std::size_t r = rank_bound_for(opt, g, params);
    if (a == "mis") {
      const auto res = maximal_independent_set(g, r, &ledger);
      sol["size"] = res.nodes.size();
      sol["iterations"] = res.iterations;
      const auto v = validate_independent_set(g, res.nodes);
      rep.verdict("independent", v.independent, v.witness);
      rep.verdict("maximal", v.maximal, v.witness);
      try_oracle(opt, rep, "max_independent_set", [&] {
        const auto best = max_independent_set_oracle(g).size;
        rep.oracle["max_independent_set"] = {{"opt", best}, {"factor", r}};
        rep.verdict("approximation", res.nodes.size() * r >= best,
                    std::to_string(res.nodes.size()) + " * " + std::to_string(r) + " vs OPT " + std::to_string(best));
      });
      out_text = format_id_list(to_ids(res.nodes));
    } else {
      std::optional<VertexLists> lists;
      if (!opt.lists.empty()) {
        lists = parse_edge_lists(read_file(opt.lists), g.num_vertices());
        params["lists"] = opt.lists;
      }
      const auto colors = vertex_color(g, r, lists ? &*lists : nullptr, &ledger);
      const auto v = validate_vertex_coloring(g, colors, lists ? &*lists : nullptr);
      rep.verdict("proper", v.proper, v.proper ? "" : v.witness);
      rep.verdict("in_lists", v.in_lists, v.in_lists ? "" : v.witness);
      sol["palette_max"] = v.max_color;
      if (!lists) {
        const auto cap = static_cast<std::int64_t>(g.max_degree()) + 1;
        sol["palette_bound"] = cap;
        rep.verdict("palette_bound", v.max_color <= cap);
      }
      out_text = format_id_values(colors);
    }
  } else if (a == "approx-graph-matching") {
    const Graph g = parse_graph(text);
    instance = summary(g.as_hypergraph(), true);
    params["eps"] = eps.str();
    params["mode"] = opt.almost_maximal ? "almost-maximal" : "exact";
    const auto res = approx_max_graph_matching(g, eps, opt.almost_maximal ? MatchingMode::almost_maximal : MatchingMode::exact,
                                               &ledger);
    std::string witness;
    rep.verdict("valid", is_graph_matching(g, res.edges, &witness), witness);
    sol["size"] = res.edges.size();
    json phases = json::array();
    for (const auto& ph : res.phases) {
      phases.push_back({{"length", ph.length}, {"paths", ph.paths_found}, {"augmented", ph.augmented},
                        {"size", ph.matching_size}, {"dropped_nodes", ph.dropped_nodes}});
    }
    sol["phases"] = phases;
    try_oracle(opt, rep, "max_matching", [&] {
      const auto best = max_matching_oracle(g.as_hypergraph()).size;
      // size >= OPT / (1 + f*eps) with f = 1 (exact) or 2 (almost-maximal).
      const std::int64_t f = opt.almost_maximal ? 2 : 1;
      const auto lhs = static_cast<std::int64_t>(res.edges.size()) * (eps.den + f * eps.num);
      const auto rhs = static_cast<std::int64_t>(best) * eps.den;
      rep.oracle["max_matching"] = {{"opt", best}};
      rep.verdict("approximation", lhs >= rhs, std::to_string(res.edges.size()) + " vs OPT " + std::to_string(best));
    });
    out_text = format_id_list(to_ids(res.edges));
  } else if (a == "orientation" || a == "pseudo-forests") {
    const Graph g = parse_graph(text);
    instance = summary(g.as_hypergraph(), true);
    const std::size_t lambda = arboricity_for(opt.lambda, g, params, "lambda");
    params["eps"] = eps.str();
    const auto res = low_outdegree_orientation(g, lambda, eps, &ledger);
    sol["bound"] = res.bound;
    sol["iterations"] = res.iterations.size();
    sol["max_iterations"] = res.max_iterations;
    const auto v = validate_orientation(g, res.orientation, res.bound);
    rep.verdict("consistent", v.consistent, v.consistent ? "" : v.witness);
    rep.verdict("out_degree_bound", v.within_bound, v.within_bound ? "" : v.witness);
    sol["max_out_degree"] = v.max_out_degree;
    if (a == "orientation") {
      out_text = format_pairs(orientation_pairs(g, res.orientation));
    } else {
      const auto cls = pseudo_forest_decomposition(g, res.orientation);
      const auto pv = validate_pseudo_forests(g, cls, res.bound);
      rep.verdict("pseudo_forests", pv.ok, pv.witness);
      sol["classes"] = pv.classes;
      out_text = format_id_values(cls);
    }
  } else {
    throw UsageError("unknown algorithm '" + a + "'");
  }

  if (!opt.out.empty()) emit(opt.out, out_text);
  json report{{"schema", "hypermatch.run/1"},
              {"timestamp", timestamp()},
              {"algorithm", {{"name", a}, {"params", params}}},
              {"seed", opt.seed},
              {"instance", instance},
              {"solution", sol},
              {"verdicts", rep.verdicts},
              {"oracle", rep.oracle},
              {"ledger", ledger_json(ledger)},
              {"ok", rep.ok}};
  const std::string dumped = report.dump(2) + "\n";
  emit(opt.json_path, dumped);
  return rep.ok ? kExitOk : kExitVerify;
}

int cmd_verify(const Options& opt) {
  if (opt.in.empty() || opt.solution.empty()) throw UsageError("verify needs --in and --solution");
  const std::string text = read_file(opt.in);
  const std::string sol_text = read_file(opt.solution);
  const std::string& k = opt.kind;
  Report rep;
  json details = json::object();

  if (k == "matching" || k == "maximal-matching") {
    const Hypergraph h = parse_any_as_hypergraph(text);
    const auto ids = parse_id_list(sol_text);
    const auto v = validate_matching(h, Matching{{ids.begin(), ids.end()}}, k == "maximal-matching");
    rep.verdict("valid", v.valid, v.witness);
    if (k == "maximal-matching") rep.verdict("maximal", v.maximal, v.witness);
    details["size"] = ids.size();
  } else if (k == "edge-coloring") {
    std::optional<EdgeLists> lists;
    EdgeColoringVerdict v;
    if (looks_like_graph(text)) {
      const Graph g = parse_graph(text);
      const auto colors = parse_id_values(sol_text, g.num_edges());
      if (!opt.lists.empty()) lists = parse_edge_lists(read_file(opt.lists), g.num_edges());
      v = validate_edge_coloring(g, colors, lists ? &*lists : nullptr);
    } else {
      const Hypergraph h = parse_hypergraph(text);
      const auto colors = parse_id_values(sol_text, h.num_edges());
      if (!opt.lists.empty()) lists = parse_edge_lists(read_file(opt.lists), h.num_edges());
      v = validate_edge_coloring(h, colors, lists ? &*lists : nullptr);
    }
    add_edge_coloring_verdicts(rep, details, v, opt.max_color);
  } else if (k == "independent-set" || k == "mis") {
    const Graph g = read_graph(opt.in);
    const auto ids = parse_id_list(sol_text);
    const auto v = validate_independent_set(g, {ids.begin(), ids.end()});
    rep.verdict("independent", v.independent, v.witness);
    if (k == "mis") rep.verdict("maximal", v.maximal, v.witness);
    details["size"] = ids.size();
  } else if (k == "vertex-coloring") {
    const Graph g = read_graph(opt.in);
    const auto colors = parse_id_values(sol_text, g.num_vertices());
    std::optional<VertexLists> lists;
    if (!opt.lists.empty()) lists = parse_edge_lists(read_file(opt.lists), g.num_vertices());
    const auto v = validate_vertex_coloring(g, colors, lists ? &*lists : nullptr);
    rep.verdict("proper", v.proper, v.proper ? "" : v.witness);
    rep.verdict("in_lists", v.in_lists, v.in_lists ? "" : v.witness);
    details["palette_max"] = v.max_color;
    if (opt.max_color) rep.verdict("palette_bound", v.max_color <= *opt.max_color);
  } else if (k == "graph-matching") {
    const Graph g = read_graph(opt.in);
    const auto ids = parse_id_list(sol_text);
    std::string witness;
    rep.verdict("valid", is_graph_matching(g, {ids.begin(), ids.end()}, &witness), witness);
    details["size"] = ids.size();
  } else if (k == "orientation") {
    const Graph g = read_graph(opt.in);
    const Orientation o = orientation_from_pairs(g, parse_pairs(sol_text));
    std::size_t bound = SIZE_MAX;
    if (opt.bound) {
      bound = *opt.bound;
    } else if (opt.lambda) {
      bound = orientation_bound(*opt.lambda, Rational::parse(opt.eps));
    }
    const auto v = validate_orientation(g, o, bound);
    rep.verdict("consistent", v.consistent, v.consistent ? "" : v.witness);
    if (bound != SIZE_MAX) {
      rep.verdict("out_degree_bound", v.within_bound, v.within_bound ? "" : v.witness);
      details["bound"] = bound;
    }
    details["max_out_degree"] = v.max_out_degree;
  } else if (k == "pseudo-forests") {
    const Graph g = read_graph(opt.in);
    const auto cls = parse_id_values(sol_text, g.num_edges());
    const auto v = validate_pseudo_forests(g, cls, opt.bound.value_or(0));
    rep.verdict("pseudo_forests", v.ok, v.witness);
    details["classes"] = v.classes;
  } else {
    throw UsageError("unknown kind '" + k + "'");
  }

  json out{{"schema", "hypermatch.verify/1"}, {"kind", k}, {"verdicts", rep.verdicts}, {"details", details}, {"ok", rep.ok}};
  const std::string dumped = out.dump(2) + "\n";
  emit(opt.json_path, dumped);
  return rep.ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed matching, coloring and MIS algorithms on hypergraphs"};
  app.require_subcommand(1);
  Options opt;

  auto* gen = app.add_subcommand("generate", "Write a deterministic instance");
  gen->add_option("--family", opt.family,
                  "random-hypergraph | random-graph | d-regular | star | cycle | path | complete | line-graph-of")
      ->required();
  gen->add_option("--n", opt.n, "node count");
  gen->add_option("--m", opt.m, "hyperedge count (random-hypergraph)");
  gen->add_option("--r", opt.r, "rank (random-hypergraph)");
  gen->add_option("--p", opt.p, "edge probability (random-graph)");
  gen->add_option("--d", opt.d, "degree (d-regular)");
  gen->add_option("--seed", opt.seed);
  gen->add_option("--in", opt.in, "source instance (line-graph-of)");
  gen->add_option("--out", opt.out, "output path; stdout when omitted");

  auto* run = app.add_subcommand("run", "Run an algorithm, validate and report");
  run->add_option("--algo", opt.algo,
                  "maximal-matching | approx-matching | edge-color | list-edge-color | rand-edge-color | mis | "
                  "vertex-color | approx-graph-matching | orientation | pseudo-forests | arb-edge-color")
      ->required();
  run->add_option("--in", opt.in, "instance file")->required();
  run->add_option("--out", opt.out, "solution file");
  run->add_option("--json", opt.json_path, "report path; stdout when omitted");
  run->add_option("--seed", opt.seed);
  run->add_option("--eps", opt.eps, "rational, e.g. 1/3");
  run->add_option("--lambda", opt.lambda, "arboricity bound for orientation");
  run->add_option("--arboricity", opt.arboricity, "arboricity for arb-edge-color");
  run->add_option("--slack", opt.slack, "stop maximal matching early, 0 < slack < 1");
  run->add_option("--r", opt.rank_bound, "neighborhood independence bound for mis / vertex-color");
  run->add_option("--lists", opt.lists, "'id: c1 c2 ...' list file");
  run->add_flag("--oracle", opt.oracle, "require oracle comparison; exit 3 over budget");
  run->add_flag("--almost-maximal", opt.almost_maximal, "approx-graph-matching with early-stopped phases");

  auto* ver = app.add_subcommand("verify", "Validate a solution file against an instance");
  ver->add_option("--kind", opt.kind,
                  "matching | maximal-matching | edge-coloring | independent-set | mis | vertex-coloring | "
                  "graph-matching | orientation | pseudo-forests")
      ->required();
  ver->add_option("--in", opt.in, "instance file")->required();
  ver->add_option("--solution", opt.solution, "solution file")->required();
  ver->add_option("--lists", opt.lists);
  ver->add_option("--max-color", opt.max_color);
  ver->add_option("--bound", opt.bound, "out-degree / class bound");
  ver->add_option("--lambda", opt.lambda);
  ver->add_option("--eps", opt.eps);
  ver->add_option("--json", opt.json_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(opt);
    if (run->parsed()) return cmd_run(opt);
    return cmd_verify(opt);
  } catch (const OracleBudgetExceeded& e) {
    std::cerr << "error: oracle budget exceeded: " << e.what() << "\n";
    return kExitOracle;
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
}
