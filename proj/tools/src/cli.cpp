#include "gfactor_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "gfactor/canonical.hpp"
#include "gfactor/census.hpp"
#include "gfactor/conditions.hpp"
#include "gfactor/construct.hpp"
#include "gfactor/generators.hpp"
#include "gfactor/graph6.hpp"
#include "gfactor/linalg.hpp"
#include "gfactor/search.hpp"
#include "gfactor/spectral.hpp"

namespace gfactor::cli {

namespace {

/// Raised for bad flag combinations that CLI11 cannot express.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string num(double x) {
  if (std::abs(x) < 1e-12) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string summary(const Graph& g) {
  return encode_graph6(g) + "  (n = " + std::to_string(g.order()) + ", m = " + std::to_string(g.edge_count()) +
         ", " + describe(g) + ")";
}

struct GraphInput {
  std::string graph6;
  std::string edges_path;

  void attach(CLI::App* cmd) {
    auto* g6 = cmd->add_option("--graph6", graph6, "graph in graph6 format");
    auto* edges = cmd->add_option("--edges", edges_path, "edge-list file ('u v' per line, optional 'order N')");
    g6->excludes(edges);
  }

  Graph load() const {
    if (!graph6.empty()) return decode_graph6(graph6);
    if (edges_path.empty()) throw UsageError("one of --graph6 or --edges is required");
    std::ifstream in(edges_path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + edges_path + "' for reading");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_edge_list(text.str());
  }
};

void print_matrix(std::ostream& out, const char* name, const IntMatrix& m) {
  out << name << " =\n";
  for (const auto& row : matrix_rows(m)) out << "  " << row << "\n";
}

nlohmann::json stats_json(const SearchStats& s) {
  return {{"nodes_expanded", s.nodes_expanded},
          {"prunes_by_rule", s.prunes_by_rule},
          {"witnesses_found", s.witnesses_found},
          {"exhausted", s.exhausted}};
}

nlohmann::json pair_json(const FactorPair& p) {
  const Graph h = graph_from_key(p.first);
  const Graph k = graph_from_key(p.second);
  return {{"h_graph6", encode_graph6(h)}, {"k_graph6", encode_graph6(k)}, {"h", describe(h)}, {"k", describe(k)}};
}

// factor ---------------------------------------------------------------------

struct FactorArgs {
  GraphInput input;
  bool all = false;
  std::uint64_t node_limit = 100'000'000;
  bool include_trivial = false;
  bool json = false;
};

int cmd_factor(const FactorArgs& a, std::ostream& out) {
  const Graph g = a.input.load();
  SearchConfig cfg;
  cfg.node_limit = a.node_limit;
  cfg.include_trivial = a.include_trivial;

  Verdict verdict;
  ConditionReport report;
  SearchStats stats;
  std::vector<Factorization> witnesses;
  if (a.all) {
    report = screen(g);
    if (report.ruled_out()) {
      verdict = Verdict::no;
    } else if (g.order() > cfg.order_cap) {
      verdict = Verdict::unknown;
    } else {
      SearchResult result = factor_search(g, cfg);
      stats = result.stats;
      witnesses = std::move(result.witnesses);
      verdict = !witnesses.empty() ? Verdict::yes : stats.exhausted ? Verdict::no : Verdict::unknown;
    }
  } else {
    cfg.mode = SearchMode::first;
    FactorizabilityResult result = is_factorizable(g, cfg);
    verdict = result.verdict;
    report = std::move(result.screen);
    stats = result.stats;
    if (result.witness) witnesses.push_back(std::move(*result.witness));
  }
  const std::set<FactorPair> pairs = dedup_pairs(witnesses);

  if (a.json) {
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : witnesses) ws.push_back(witness_to_json(w));
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : pairs) ps.push_back(pair_json(p));
    out << nlohmann::json{{"graph6", encode_graph6(g)},
                          {"n", g.order()},
                          {"verdict", to_string(verdict)},
                          {"screen", to_json(report)},
                          {"stats", stats_json(stats)},
                          {"witnesses", ws},
                          {"pairs", ps}}
               .dump(2)
        << "\n";
    return kExitOk;
  }

  out << "graph: " << summary(g) << "\n";
  out << "screen: " << to_string(report.verdict) << "\n";
  for (const auto& r : report.rules) {
    if (r.status == RuleStatus::ruled_out) out << "  " << r.rule_id << ": " << r.detail << "\n";
  }
  out << "verdict: " << to_string(verdict) << "\n";
  if (!report.ruled_out()) {
    out << "search: " << stats.nodes_expanded << " nodes, " << (stats.exhausted ? "exhausted" : "not exhausted")
        << ", " << witnesses.size() << " labeled witness" << (witnesses.size() == 1 ? "" : "es") << "\n";
  }
  if (!pairs.empty()) {
    out << "factor pairs:\n";
    for (const auto& p : pairs) {
      const auto j = pair_json(p);
      out << "  {" << j["h"].get<std::string>() << ", " << j["k"].get<std::string>() << "}  (graph6 "
          << j["h_graph6"].get<std::string>() << ", " << j["k_graph6"].get<std::string>() << ")\n";
    }
  }
  if (!witnesses.empty()) {
    const Factorization& w = witnesses.front();
    out << "witness" << (witnesses.size() > 1 ? " 1" : "") << (w.trivial ? " (trivial)" : "") << ":\n";
    print_matrix(out, "A", w.a);
    print_matrix(out, "B", w.b);
    print_matrix(out, "C", w.c);
  }
  return kExitOk;
}

// check ----------------------------------------------------------------------

int cmd_check(const GraphInput& input, bool json, std::ostream& out) {
  const Graph g = input.load();
  const ConditionReport report = screen(g);
  if (json) {
    out << to_json(report).dump(2) << "\n";
    return kExitOk;
  }
  out << "graph: " << summary(g) << "\n";
  out << "verdict: " << to_string(report.verdict) << (report.trivial ? " (edgeless: trivially factorizable)" : "")
      << "\n";
  for (const auto& r : report.rules) {
    out << "  " << r.rule_id << "  " << to_string(r.status) << "  " << r.paper_ref;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << "\n";
  }
  return kExitOk;
}

// spectral -------------------------------------------------------------------

int cmd_spectral(const GraphInput& input, double tol, bool json, std::ostream& out) {
  const Graph g = input.load();
  const Spectrum s = eigen_sym(adjacency(g), tol);
  const bool bipartite = is_bipartite(g);
  std::optional<PerronData> p;
  if (is_connected(g)) p = perron(g, tol);

  if (json) {
    nlohmann::json j{{"graph6", encode_graph6(g)},
                     {"spectrum", s.values},
                     {"lambda_max", s.max()},
                     {"lambda_min", s.min()},
                     {"bipartite", bipartite},
                     {"symmetric_spectrum", spectrum_is_symmetric(s)},
                     {"perron", nullptr}};
    if (p) j["perron"] = {{"value", p->value}, {"vector", p->vector}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "graph: " << summary(g) << "\n";
  out << "spectrum: " << format_values(s.values) << "\n";
  out << "lambda_max: " << num(s.max()) << "\n";
  out << "lambda_min: " << num(s.min()) << "\n";
  out << "bipartite: " << (bipartite ? "yes" : "no") << "\n";
  out << "symmetric spectrum: " << (spectrum_is_symmetric(s) ? "yes" : "no") << "\n";
  if (p) {
    out << "perron value: " << num(p->value) << "\n";
    out << "perron vector: " << format_values(p->vector) << "\n";
  } else {
    out << "perron: not defined (graph disconnected)\n";
  }
  return kExitOk;
}

// construct ------------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  std::optional<int> n;
  std::string graph6;
  double tol = kDefaultTolerance;
  bool json = false;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  ConstructionKind kind;
  ConstructionParams params;
  if (a.kind == "double") {
    kind = ConstructionKind::doubled_graph;
    if (a.graph6.empty()) throw UsageError("--kind double requires --graph6");
    params.graph = decode_graph6(a.graph6);
  } else {
    kind = a.kind == "cycle" ? ConstructionKind::cycle_product : ConstructionKind::disconnected_counterexample;
    if (!a.n) throw UsageError("--kind " + a.kind + " requires --n");
    params.n = a.n;
  }
  const Factorization f = construct(kind, params);
  const ViolationList violations = validate_factorization(f, a.tol);
  const double lg = lambda_max(f.g, a.tol);
  const double lh = lambda_max(f.h, a.tol);
  const double lk = lambda_max(f.k, a.tol);

  if (a.json) {
    nlohmann::json j = witness_to_json(f);
    j["kind"] = a.kind;
    j["lambda_max_g"] = lg;
    j["lambda_max_h"] = lh;
    j["lambda_max_k"] = lk;
    j["lambda_max_product"] = lh * lk;
    j["violations"] = to_json(violations);
    out << j.dump(2) << "\n";
    return violations.empty() ? kExitOk : kExitFailure;
  }
  out << "construction: " << a.kind << "\n";
  out << "G: " << summary(f.g) << "\n";
  out << "H: " << summary(f.h) << "\n";
  out << "K: " << summary(f.k) << "\n";
  print_matrix(out, "A", f.a);
  print_matrix(out, "B", f.b);
  print_matrix(out, "C", f.c);
  out << "product: BC = A (exact)\n";
  out << "lambda_max(G) = " << num(lg) << "\n";
  out << "lambda_max(H) * lambda_max(K) = " << num(lh * lk) << " (" << num(lh) << " * " << num(lk) << ")\n";
  out << "validation: " << violations.size() << " violation" << (violations.size() == 1 ? "" : "s") << "\n";
  for (const auto& v : violations) {
    out << "  " << v.assertion_id << ": expected " << v.expected << "; observed " << v.observed << "\n";
  }
  return violations.empty() ? kExitOk : kExitFailure;
}

// census ---------------------------------------------------------------------

struct CensusArgs {
  int order = 0;
  std::string out_path;
  int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::uint64_t seed = kDefaultSeed;
  bool keep_going = false;
  bool allow_order_8 = false;
  double tol = kDefaultTolerance;
  std::uint64_t node_limit = 100'000'000;
};

int cmd_census(const CensusArgs& a, std::ostream& out, std::ostream& err) {
  CensusOptions opts;
  opts.search.node_limit = a.node_limit;
  opts.tol = a.tol;
  opts.seed = a.seed;
  opts.jobs = a.jobs;
  opts.keep_going = a.keep_going;
  opts.allow_order_8 = a.allow_order_8;
  if (a.order == 8 && a.allow_order_8) {
    opts.search.order_cap = 8;
    err << "warning: order 8 has 12346 classes; expect a run of many hours\n";
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<CensusRecord> records;
  try {
    records = run_census(a.order, opts);
  } catch (const TheoremViolationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  write_catalog(records, a.out_path);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::size_t yes = 0, no = 0, unknown = 0, flagged = 0;
  for (const auto& r : records) {
    yes += r.verdict == Verdict::yes;
    no += r.verdict == Verdict::no;
    unknown += r.verdict == Verdict::unknown;
    flagged += !r.violations.empty();
  }
  out << "order " << a.order << ": " << records.size() << " classes, " << yes << " factorizable, " << no << " not, "
      << unknown << " unknown\n";
  out << "catalog: " << a.out_path << "\n";
  if (flagged) out << "records with theorem violations: " << flagged << "\n";
  err << "census finished in " << num(seconds) << " s with " << opts.jobs << " job" << (opts.jobs == 1 ? "" : "s")
      << "\n";
  return flagged && !a.keep_going ? kExitFailure : kExitOk;
}

// verify ---------------------------------------------------------------------

int cmd_verify(const std::string& path, double tol, std::uint64_t seed, bool json, std::ostream& out) {
  const TheoremReport report = verify_catalog(read_catalog(path), tol, seed);
  if (json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << format_report(report);
  }
  return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix-product factorization of small graphs", "gfactor"};
  app.require_subcommand(1);

  FactorArgs factor;
  auto* factor_cmd = app.add_subcommand("factor", "decide whether a graph is a matrix product and list witnesses");
  factor.input.attach(factor_cmd);
  factor_cmd->add_flag("--all", factor.all, "enumerate every witness on the canonical labeling");
  factor_cmd->add_option("--node-limit", factor.node_limit, "search node budget")->capture_default_str();
  factor_cmd->add_flag("--include-trivial", factor.include_trivial, "also report witnesses with a zero factor");
  factor_cmd->add_flag("--json", factor.json, "JSON output");

  GraphInput check_input;
  bool check_json = false;
  auto* check_cmd = app.add_subcommand("check", "apply the necessary-condition screen");
  check_input.attach(check_cmd);
  check_cmd->add_flag("--json", check_json, "JSON output");

  GraphInput spectral_input;
  double spectral_tol = kDefaultTolerance;
  bool spectral_json = false;
  auto* spectral_cmd = app.add_subcommand("spectral", "spectrum, spectral radius and Perron vector");
  spectral_input.attach(spectral_cmd);
  spectral_cmd->add_option("--tol", spectral_tol, "numerical tolerance")->capture_default_str();
  spectral_cmd->add_flag("--json", spectral_json, "JSON output");

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "build one of the standard factorizations");
  construct_cmd->add_option("--kind", construct_args.kind, "construction")
      ->required()
      ->check(CLI::IsMember({"cycle", "double", "counterexample"}));
  auto* n_opt = construct_cmd->add_option("--n", construct_args.n, "size parameter (cycle, counterexample)");
  auto* g6_opt = construct_cmd->add_option("--graph6", construct_args.graph6, "input graph (double)");
  n_opt->excludes(g6_opt);
  construct_cmd->add_option("--tol", construct_args.tol, "numerical tolerance")->capture_default_str();
  construct_cmd->add_flag("--json", construct_args.json, "JSON output");

  CensusArgs census_args;
  auto* census_cmd = app.add_subcommand("census", "enumerate every graph of one order and write a catalog");
  census_cmd->add_option("--order", census_args.order, "graph order")->required()->check(CLI::Range(1, 8));
  census_cmd->add_option("--out", census_args.out_path, "catalog path (JSON Lines)")->required();
  census_cmd->add_option("--jobs", census_args.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  census_cmd->add_option("--seed", census_args.seed, "random seed")->capture_default_str();
  census_cmd->add_flag("--keep-going", census_args.keep_going, "record theorem violations instead of aborting");
  census_cmd->add_flag("--allow-order-8", census_args.allow_order_8, "permit the order-8 census");
  census_cmd->add_option("--tol", census_args.tol, "numerical tolerance")->capture_default_str();
  census_cmd->add_option("--node-limit", census_args.node_limit, "search node budget per graph")
      ->capture_default_str();

  std::string verify_path;
  double verify_tol = kDefaultTolerance;
  std::uint64_t verify_seed = kDefaultSeed;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "recheck a catalog against every registered theorem");
  verify_cmd->add_option("--catalog", verify_path, "catalog path (JSON Lines)")->required();
  verify_cmd->add_option("--tol", verify_tol, "numerical tolerance")->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "random seed")->capture_default_str();
  verify_cmd->add_flag("--json", verify_json, "JSON output");

  std::vector<const char*> argv{"gfactor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*factor_cmd) return cmd_factor(factor, out);
    if (*check_cmd) return cmd_check(check_input, check_json, out);
    if (*spectral_cmd) return cmd_spectral(spectral_input, spectral_tol, spectral_json, out);
    if (*construct_cmd) return cmd_construct(construct_args, out);
    if (*census_cmd) return cmd_census(census_args, out, err);
    if (*verify_cmd) return cmd_verify(verify_path, verify_tol, verify_seed, verify_json, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace gfactor::cli
