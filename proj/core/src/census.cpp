#include "gfactor/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "gfactor/canonical.hpp"
#include "gfactor/graph6.hpp"
#include "gfactor/linalg.hpp"

namespace gfactor {

namespace {

constexpr std::size_t kMaxStoredViolations = 20;
constexpr std::size_t kMaxListedFailures = 10;

StoredWitness store(const Factorization& f) {
  return StoredWitness{matrix_rows(f.a), matrix_rows(f.b), matrix_rows(f.c), encode_graph6(f.h), encode_graph6(f.k),
                       f.trivial};
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool allow_order_8) {
  const int cap = allow_order_8 ? 8 : kDefaultCensusCap;
  if (n < 1 || n > cap) {
    throw ParameterError("census order must be in [1, " + std::to_string(cap) + "], got " + std::to_string(n) +
                         (n == 8 ? " (order 8 needs the explicit flag)" : ""));
  }
  std::vector<Graph> level{Graph(1)};
  for (int order = 2; order <= n; ++order) {
    std::map<std::string, Graph> classes;
    const Row new_vertex_mask = (Row{1} << (order - 1)) - 1;
    for (const Graph& base : level) {
      for (Row neighbours = 0; neighbours <= new_vertex_mask; ++neighbours) {
        std::vector<Row> rows(base.rows().begin(), base.rows().end());
        for (int v = 0; v < order - 1; ++v) {
          if ((neighbours >> v) & 1U) rows[static_cast<std::size_t>(v)] |= Row{1} << (order - 1);
        }
        rows.push_back(neighbours);
        auto form = canonical_form(Graph::from_rows(order, std::move(rows)));
        classes.try_emplace(form.key, std::move(form.graph));
      }
    }
    level.clear();
    for (auto& [key, g] : classes) level.push_back(std::move(g));
    if (level.size() != kGraphCounts[order - 1]) {
      throw Error("enumeration produced " + std::to_string(level.size()) + " classes of order " +
                  std::to_string(order) + ", expected " + std::to_string(kGraphCounts[order - 1]));
    }
  }
  return level;
}

CensusRecord census_record(const Graph& input, const CensusOptions& options) {
  const Graph g = fixed_graph(input);
  CensusRecord rec;
  rec.n = g.order();
  rec.graph6 = encode_graph6(g);
  rec.canonical_key = canonical_key(g);
  rec.edge_count = g.edge_count();
  rec.connected = is_connected(g);
  rec.bipartite = is_bipartite(g);
  rec.regular = is_regular(g);
  rec.screen = screen(g);
  rec.lambda_max = lambda_max(g, options.tol);

  if (rec.screen.ruled_out()) {
    rec.verdict = Verdict::no;
    return rec;
  }

  SearchConfig cfg = options.search;
  cfg.mode = SearchMode::all;
  std::map<FactorPair, StoredWitness> pairs;
  std::set<std::pair<std::string, std::string>> seen_violations;
  const SearchStats stats = search_witnesses(g, cfg, [&](const WitnessBits& w) {
    const Factorization f = to_factorization(g, w);
    const ValidationResult result = validate_detailed(f, options.tol);
    for (auto& v : result.violations()) {
      if (rec.violations.size() < kMaxStoredViolations && seen_violations.emplace(v.assertion_id, v.observed).second) {
        rec.violations.push_back(std::move(v));
      }
    }
    if (result.exploratory.component_iso_applicable) {
      rec.component_iso_evidence = result.exploratory.components_isomorphic;
    }
    auto key = factor_pair_of(f);
    if (!pairs.contains(key)) pairs.emplace(std::move(key), store(f));
    return true;
  });

  for (auto& [key, w] : pairs) rec.factor_pairs.push_back(std::move(w));
  if (!rec.factor_pairs.empty()) {
    rec.verdict = Verdict::yes;
  } else {
    rec.verdict = stats.exhausted ? Verdict::no : Verdict::unknown;
  }

  if (!rec.violations.empty() && !options.keep_going) throw TheoremViolationError(to_json(rec).dump(2));
  return rec;
}

std::vector<CensusRecord> run_census(int n, const CensusOptions& options) {
  if (n > options.search.order_cap) {
    throw ParameterError("census order " + std::to_string(n) + " exceeds the search cap " +
                         std::to_string(options.search.order_cap));
  }
  const std::vector<Graph> graphs = enumerate_graphs(n, options.allow_order_8);
  std::vector<CensusRecord> records(graphs.size());

  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(graphs.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<bool> abort{false};

  auto worker = [&] {
    while (!abort) {
      const std::size_t i = next++;
      if (i >= graphs.size()) return;
      try {
        records[i] = census_record(graphs[i], options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        abort = true;
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

nlohmann::json to_json(const StoredWitness& w) {
  return {{"a", w.a}, {"b", w.b}, {"c", w.c}, {"h_graph6", w.h_graph6}, {"k_graph6", w.k_graph6}, {"trivial", w.trivial}};
}

nlohmann::json to_json(const CensusRecord& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& w : r.factor_pairs) pairs.push_back(to_json(w));
  return {{"n", r.n},
          {"graph6", r.graph6},
          {"canonical_key", r.canonical_key},
          {"edge_count", r.edge_count},
          {"connected", r.connected},
          {"bipartite", r.bipartite},
          {"regular", r.regular},
          {"screen", to_json(r.screen)},
          {"verdict", to_string(r.verdict)},
          {"factor_pairs", pairs},
          {"lambda_max", r.lambda_max},
          {"violations", to_json(r.violations)},
          {"component_iso_evidence",
           r.component_iso_evidence ? nlohmann::json(*r.component_iso_evidence) : nlohmann::json(nullptr)}};
}

namespace {

template <typename T>
T record_field(const nlohmann::json& j, const char* name, std::size_t line) {
  if (!j.contains(name)) throw SchemaError(std::string("missing field '") + name + "'", line);
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw SchemaError(std::string("field '") + name + "' has the wrong type", line);
  }
}

}  // namespace

CensusRecord census_record_from_json(const nlohmann::json& j, std::size_t line) {
  if (!j.is_object()) throw SchemaError("record is not a JSON object", line);
  CensusRecord r;
  r.n = record_field<int>(j, "n", line);
  r.graph6 = record_field<std::string>(j, "graph6", line);
  r.canonical_key = record_field<std::string>(j, "canonical_key", line);
  r.edge_count = record_field<int>(j, "edge_count", line);
  r.connected = record_field<bool>(j, "connected", line);
  r.bipartite = record_field<bool>(j, "bipartite", line);
  r.regular = record_field<bool>(j, "regular", line);
  try {
    r.screen = condition_report_from_json(record_field<nlohmann::json>(j, "screen", line));
    r.violations = violation_list_from_json(record_field<nlohmann::json>(j, "violations", line));
    for (const auto& w : record_field<nlohmann::json>(j, "factor_pairs", line)) {
      const RawWitness raw = witness_from_json(w);
      r.factor_pairs.push_back(StoredWitness{w.at("a").get<std::vector<std::string>>(),
                                             w.at("b").get<std::vector<std::string>>(),
                                             w.at("c").get<std::vector<std::string>>(), raw.h_graph6, raw.k_graph6,
                                             raw.trivial});
    }
  } catch (const SchemaError& e) {
    if (e.line() != 0) throw;
    throw SchemaError(std::string(e.what()).substr(std::string("line 0: ").size()), line);
  }
  try {
    r.verdict = verdict_from_string(record_field<std::string>(j, "verdict", line));
  } catch (const ParameterError& e) {
    throw SchemaError(std::string("field 'verdict': ") + e.what(), line);
  }
  r.lambda_max = record_field<double>(j, "lambda_max", line);
  if (!j.contains("component_iso_evidence")) throw SchemaError("missing field 'component_iso_evidence'", line);
  const auto& iso = j.at("component_iso_evidence");
  if (iso.is_boolean()) {
    r.component_iso_evidence = iso.get<bool>();
  } else if (!iso.is_null()) {
    throw SchemaError("field 'component_iso_evidence' has the wrong type", line);
  }
  return r;
}

std::string catalog_to_string(const std::vector<CensusRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

std::vector<CensusRecord> catalog_from_string(const std::string& text) {
  std::vector<CensusRecord> out;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaError(std::string("invalid JSON: ") + e.what(), number);
    }
    out.push_back(census_record_from_json(j, number));
  }
  return out;
}

void write_catalog(const std::vector<CensusRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << catalog_to_string(records);
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<CensusRecord> read_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return catalog_from_string(buffer.str());
}

std::uint64_t TheoremReport::total_violations() const {
  std::uint64_t total = 0;
  for (const auto& a : assertions) total += a.violations;
  return total;
}

namespace {

class ReportBuilder {
 public:
  ReportBuilder() {
    add("catalog", "stored fields agree with recomputation");
    add("product", "stored witness satisfies BC = A exactly");
    for (const auto& id : rule_ids()) add(id, evaluate_rule(id, Graph(1)).paper_ref);
    for (const auto& id : assertion_ids()) add(id, assertion_ref(id));
  }

  void check(const std::string& id, bool holds, const std::string& where, const std::string& detail) {
    auto& t = report_.assertions[index_.at(id)];
    ++t.instances_checked;
    if (!holds) {
      ++t.violations;
      if (t.failures.size() < kMaxListedFailures) t.failures.push_back(where + ": " + detail);
    }
  }

  TheoremReport& report() { return report_; }

 private:
  void add(const std::string& id, const std::string& ref) {
    index_[id] = report_.assertions.size();
    report_.assertions.push_back(AssertionTally{id, ref, 0, 0, {}});
  }

  TheoremReport report_;
  std::map<std::string, std::size_t> index_;
};

std::optional<std::string> complete_family_name(const Graph& g) {
  const int n = g.order();
  if (g.edge_count() == n * (n - 1) / 2) return "K" + std::to_string(n);
  if (n < 2 || !is_connected(g)) return std::nullopt;
  const auto parts = bipartition_of(g);
  if (!parts) return std::nullopt;
  const auto a = parts->left.size();
  const auto b = parts->right.size();
  if (static_cast<std::size_t>(g.edge_count()) != a * b) return std::nullopt;
  return "K" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b));
}

}  // namespace

TheoremReport verify_catalog(const std::vector<CensusRecord>& records, double tol, std::uint64_t seed) {
  ReportBuilder builder;
  ExploratoryTally two_sided{"two_sided_edge_bound",
                             "|E(G)| >= max(|E(H)|,|E(K)|) without isolated factor vertices; positive = holds"};
  ExploratoryTally unguarded{"unguarded_v4_edge_bound",
                             "2|E(G)| <= |E(H)||E(K)| for n > 4 without requiring connected factors; positive = holds"};
  ExploratoryTally component_iso{"v10_components_isomorphic",
                                 "two components of G in V10 situations; positive = isomorphic"};
  ExploratoryTally eigenbasis{"common_eigenbasis", "seeded simultaneous diagonalization of (A,B,C); positive = found"};
  std::vector<FamilyVerdict> families;

  for (const auto& rec : records) {
    ++builder.report().records_checked;
    const std::string& where = rec.graph6;
    Graph g(1);
    try {
      g = decode_graph6(rec.graph6);
    } catch (const Error& e) {
      builder.check("catalog", false, where, e.what());
      continue;
    }

    const ConditionReport fresh = screen(g);
    std::string mismatch;
    if (g.order() > kMaxCanonicalOrder) {
      mismatch = "order above canonicalization cap";
    } else if (canonical_key(g) != rec.canonical_key || fixed_graph(g) != g) {
      mismatch = "graph6 is not the canonical form for the stored key";
    } else if (rec.n != g.order() || rec.edge_count != g.edge_count() || rec.connected != is_connected(g) ||
               rec.bipartite != is_bipartite(g) || rec.regular != is_regular(g)) {
      mismatch = "stored invariants differ from recomputation";
    } else if (!(rec.screen == fresh)) {
      mismatch = "stored screen differs from recomputation";
    } else if ((rec.verdict == Verdict::yes) != !rec.factor_pairs.empty()) {
      mismatch = "verdict " + to_string(rec.verdict) + " with " + std::to_string(rec.factor_pairs.size()) + " pairs";
    } else if (fresh.ruled_out() && rec.verdict != Verdict::no) {
      mismatch = "ruled out by screening but verdict " + to_string(rec.verdict);
    } else if (std::abs(rec.lambda_max - lambda_max(g, tol)) > tol * std::max(1.0, rec.lambda_max)) {
      mismatch = "stored lambda_max differs from recomputation";
    } else if (!rec.violations.empty()) {
      mismatch = std::to_string(rec.violations.size()) + " stored violations";
    }
    builder.check("catalog", mismatch.empty(), where, mismatch);

    for (const auto& rule : fresh.rules) {
      if (rule.status != RuleStatus::ruled_out) continue;
      builder.check(rule.rule_id, rec.factor_pairs.empty() && rec.verdict != Verdict::yes, where,
                    "ruled out (" + rule.detail + ") yet a witness is stored");
    }

    if (rec.verdict == Verdict::yes) {
      if (auto name = complete_family_name(g)) families.push_back({*name, rec.graph6, to_string(rec.verdict)});
    } else if (auto name = complete_family_name(g)) {
      families.push_back({*name, rec.graph6, to_string(rec.verdict)});
    }

    for (const auto& stored : rec.factor_pairs) {
      ++builder.report().witnesses_checked;
      std::optional<Factorization> f;
      try {
        f = Factorization::make(matrix_from_rows(stored.a), matrix_from_rows(stored.b), matrix_from_rows(stored.c));
        builder.check("product", true, where, "");
      } catch (const Error& e) {
        builder.check("product", false, where, e.what());
        continue;
      }
      if (canonical_key(f->g) != rec.canonical_key) {
        builder.check("catalog", false, where, "witness product is not isomorphic to the record's graph");
      }
      const ValidationResult result = validate_detailed(*f, tol);
      for (const auto& o : result.outcomes) {
        if (o.applicable) builder.check(o.assertion_id, o.holds, where, o.expected + "; observed " + o.observed);
      }
      const auto& ex = result.exploratory;
      if (ex.two_sided_edge_bound_applicable) {
        ++two_sided.instances;
        two_sided.positive += ex.two_sided_edge_bound_holds ? 1 : 0;
      }
      if (ex.unguarded_edge_bound_applicable) {
        ++unguarded.instances;
        unguarded.positive += ex.unguarded_edge_bound_holds ? 1 : 0;
      }
      if (ex.component_iso_applicable) {
        ++component_iso.instances;
        component_iso.positive += ex.components_isomorphic ? 1 : 0;
      }
      ++eigenbasis.instances;
      eigenbasis.positive += common_eigenbasis(f->a, f->b, f->c, tol, seed) ? 1 : 0;
    }
  }

  TheoremReport report = std::move(builder.report());
  report.exploratory = {two_sided, unguarded, component_iso, eigenbasis};
  report.complete_families = std::move(families);
  return report;
}

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json assertions = nlohmann::json::array();
  for (const auto& a : r.assertions) {
    assertions.push_back({{"assertion_id", a.assertion_id},
                          {"paper_ref", a.paper_ref},
                          {"instances_checked", a.instances_checked},
                          {"violations", a.violations},
                          {"failures", a.failures}});
  }
  nlohmann::json exploratory = nlohmann::json::array();
  for (const auto& e : r.exploratory) {
    exploratory.push_back(
        {{"name", e.name}, {"description", e.description}, {"instances", e.instances}, {"positive", e.positive}});
  }
  nlohmann::json families = nlohmann::json::array();
  for (const auto& f : r.complete_families) {
    families.push_back({{"family", f.family}, {"graph6", f.graph6}, {"verdict", f.verdict}});
  }
  return {{"records_checked", r.records_checked},
          {"witnesses_checked", r.witnesses_checked},
          {"total_violations", r.total_violations()},
          {"assertions", assertions},
          {"exploratory", exploratory},
          {"complete_families", families}};
}

TheoremReport theorem_report_from_json(const nlohmann::json& j) {
  try {
    TheoremReport r;
    r.records_checked = j.at("records_checked").get<std::uint64_t>();
    r.witnesses_checked = j.at("witnesses_checked").get<std::uint64_t>();
    for (const auto& a : j.at("assertions")) {
      r.assertions.push_back(AssertionTally{a.at("assertion_id").get<std::string>(), a.at("paper_ref").get<std::string>(),
                                            a.at("instances_checked").get<std::uint64_t>(),
                                            a.at("violations").get<std::uint64_t>(),
                                            a.at("failures").get<std::vector<std::string>>()});
    }
    for (const auto& e : j.at("exploratory")) {
      r.exploratory.push_back(ExploratoryTally{e.at("name").get<std::string>(), e.at("description").get<std::string>(),
                                               e.at("instances").get<std::uint64_t>(),
                                               e.at("positive").get<std::uint64_t>()});
    }
    for (const auto& f : j.at("complete_families")) {
      r.complete_families.push_back(FamilyVerdict{f.at("family").get<std::string>(), f.at("graph6").get<std::string>(),
                                                  f.at("verdict").get<std::string>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed theorem report: ") + e.what(), 0);
  }
}

std::string format_report(const TheoremReport& r) {
  std::ostringstream out;
  out << "records checked:   " << r.records_checked << "\n";
  out << "witnesses checked: " << r.witnesses_checked << "\n\n";
  out << "assertion  instances  violations  status\n";
  for (const auto& a : r.assertions) {
    char line[96];
    std::snprintf(line, sizeof line, "%-9s  %9llu  %10llu  %s\n", a.assertion_id.c_str(),
                  static_cast<unsigned long long>(a.instances_checked), static_cast<unsigned long long>(a.violations),
                  a.violations ? "VIOLATED" : a.instances_checked ? "fired" : "not exercised");
    out << line;
    for (const auto& f : a.failures) out << "    " << f << "\n";
  }
  out << "\nexploratory:\n";
  for (const auto& e : r.exploratory) {
    out << "  " << e.name << ": " << e.positive << "/" << e.instances << "  (" << e.description << ")\n";
  }
  if (!r.complete_families.empty()) {
    out << "\ncomplete and complete bipartite graphs:\n";
    for (const auto& f : r.complete_families) out << "  " << f.family << " (" << f.graph6 << "): " << f.verdict << "\n";
  }
  out << "\n" << (r.passed() ? "PASS" : "FAIL") << ": " << r.total_violations() << " violations\n";
  return out.str();
}

}  // namespace gfactor
