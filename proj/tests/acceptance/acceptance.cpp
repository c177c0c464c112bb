// Acceptance run: one [PASS]/[FAIL] line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "triples.hpp"
#include "gfactor/canonical.hpp"
#include "gfactor/census.hpp"
#include "gfactor/conditions.hpp"
#include "gfactor/construct.hpp"
#include "gfactor/generators.hpp"
#include "gfactor/graph6.hpp"
#include "gfactor/linalg.hpp"
#include "gfactor/search.hpp"
#include "gfactor/spectral.hpp"

namespace {

using namespace gfactor;

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<Graph> graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    for (auto& g : enumerate_graphs(k)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<CensusRecord> census_up_to(int n) {
  std::vector<CensusRecord> out;
  for (int k = 1; k <= n; ++k) {
    auto part = run_census(k, CensusOptions{});
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string signature(const std::vector<Factorization>& ws) {
  std::string s;
  for (const auto& w : ws) {
    for (const auto& r : matrix_rows(w.b)) s += r;
    s += '|';
    for (const auto& r : matrix_rows(w.c)) s += r;
    s += ';';
  }
  return s;
}

Outcome transcribed_triples() {
  const Factorization one =
      Factorization::make(triples::hexagon_product(), triples::two_triangles(), triples::matching_i_to_i_plus_3());
  const Factorization two = Factorization::make(triples::two_squares(), triples::square_and_two_edges(),
                                                triples::two_edges_and_square());
  const auto v1 = validate_factorization(one);
  const auto v2 = validate_factorization(two);
  return {v1.empty() && v2.empty(), "6x6 and 8x8 triples: BC = A exactly; violations " + std::to_string(v1.size()) +
                                        " and " + std::to_string(v2.size())};
}

Outcome hexagon_factorization() {
  const auto decided = is_factorizable(cycle(6));
  const auto pairs = dedup_pairs(factor_search(cycle(6)).witnesses);
  FactorPair want{canonical_key(disjoint_copies(complete(3), 2)), canonical_key(matching(3))};
  if (want.second < want.first) std::swap(want.first, want.second);
  const bool has = pairs.contains(want);
  return {decided.verdict == Verdict::yes && has,
          "verdict " + to_string(decided.verdict) + ", {2K3, 3K2} " + (has ? "present" : "missing") + " among " +
              std::to_string(pairs.size()) + " pair(s)"};
}

Outcome oracle_equivalence() {
  SearchConfig cfg;
  cfg.include_trivial = true;
  cfg.node_limit = UINT64_MAX;
  int graphs = 0;
  int mismatches = 0;
  std::size_t witnesses = 0;
  for (const auto& g : graphs_up_to(5)) {
    ++graphs;
    const SearchResult r = factor_search(g, cfg);
    const auto naive = factor_naive(g);
    witnesses += naive.size();
    if (!r.stats.exhausted || signature(r.witnesses) != signature(naive)) ++mismatches;
  }
  return {graphs == 52 && mismatches == 0, std::to_string(graphs) + " graphs, " + std::to_string(witnesses) +
                                               " labeled witnesses, " + std::to_string(mismatches) + " mismatches"};
}

Outcome tree_theorem() {
  int trees = 0;
  int failures = 0;
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      if (classify_acyclic(g).kind != AcyclicKind::tree) continue;
      ++trees;
      const SearchResult r = factor_search(g);
      const ConditionReport s = screen(g);
      auto fired = [&](const std::string& id) { return evaluate_rule(id, g).status == RuleStatus::ruled_out; };
      const bool parity = n % 2 == 0 ? fired("R1") : fired("R2");
      if (!r.witnesses.empty() || !r.stats.exhausted || !s.ruled_out() || !parity || !fired("R3")) ++failures;
    }
  }
  return {trees == 1 + 1 + 2 + 3 + 6 + 11 && failures == 0,
          std::to_string(trees) + " trees on 2..7 vertices, " + std::to_string(failures) + " failures"};
}

Outcome lambda_multiplicativity() {
  int checked = 0;
  int violations = 0;
  double worst = 0.0;
  for (const auto& g : graphs_up_to(6)) {
    if (!is_connected(g)) continue;
    for (const auto& w : factor_search(g).witnesses) {
      ++checked;
      const double lg = lambda_max(w.g);
      const double rhs = lambda_max(w.h) * lambda_max(w.k);
      const double gap = std::abs(lg - rhs);
      worst = std::max(worst, gap);
      if (gap > 1e-9 * std::max(1.0, lg)) ++violations;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  return {violations == 0 && checked > 0, std::to_string(checked) + " factorizations with connected G, max gap " +
                                              buf + ", " + std::to_string(violations) + " violations"};
}

Outcome counterexample() {
  const Factorization f = disconnected_counterexample(3);
  const double lg = lambda_max(f.g);
  const double product = lambda_max(f.h) * lambda_max(f.k);
  char buf[96];
  std::snprintf(buf, sizeof buf, "lambda_max(G) = %.12g, lambda_max(H) lambda_max(K) = %.12g", lg, product);
  return {std::abs(lg - 2.0) <= 1e-9 && std::abs(product - 4.0) <= 1e-9, buf};
}

Outcome hoffman_equivalence() {
  int graphs = 0;
  int certificates = 0;
  int failures = 0;
  for (const auto& g : graphs_up_to(6)) {
    ++graphs;
    const IntMatrix a = adjacency(g);
    const auto cert = hoffman_polynomial(a);
    if (cert.has_value() != (is_connected(g) && is_regular(g))) ++failures;
    if (cert) {
      ++certificates;
      if (!(evaluate_polynomial(cert->coefficients, a) == RationalMatrix(IntMatrix::all_ones(g.order())))) ++failures;
    }
  }
  const auto c4 = hoffman_polynomial(adjacency(cycle(4)));
  const bool c4_ok = c4 && c4->coefficients == std::vector<mpq_class>{0, 1, mpq_class(1, 2), 0};
  return {graphs == 208 && failures == 0 && c4_ok,
          std::to_string(graphs) + " graphs, " + std::to_string(certificates) + " certificates, " +
              std::to_string(failures) + " failures; C4 gives x + x^2/2: " + (c4_ok ? "yes" : "no")};
}

Outcome primitivity_equivalence() {
  int graphs = 0;
  int primitive = 0;
  int failures = 0;
  for (const auto& g : graphs_up_to(6)) {
    ++graphs;
    const auto k = primitivity_exponent(adjacency(g));
    const bool expected = g.order() > 1 && is_connected(g) && !is_bipartite(g);
    if (k.has_value() != expected) ++failures;
    if (k) {
      ++primitive;
      if (*k > wielandt_bound(g.order())) ++failures;
    }
  }
  return {failures == 0, std::to_string(graphs) + " graphs, " + std::to_string(primitive) + " primitive, " +
                             std::to_string(failures) + " failures"};
}

Outcome theorem_suite(const std::vector<CensusRecord>& catalog) {
  const TheoremReport report = verify_catalog(catalog);
  std::istringstream table(format_report(report));
  for (std::string line; std::getline(table, line);) std::cout << "    | " << line << "\n";
  std::string fired;
  std::string silent;
  for (const auto& a : report.assertions) {
    std::string& bucket = a.instances_checked ? fired : silent;
    bucket += (bucket.empty() ? "" : " ") + a.assertion_id;
  }
  return {report.passed(), std::to_string(report.total_violations()) + " violations; fired: " + fired +
                               "; hypotheses absent at n <= 6: " + (silent.empty() ? "none" : silent)};
}

Outcome determinism() {
  const std::string first = catalog_to_string(run_census(6, CensusOptions{}));
  const std::string second = catalog_to_string(run_census(6, CensusOptions{}));
  CensusOptions parallel;
  parallel.jobs = 4;
  const std::string third = catalog_to_string(run_census(6, parallel));
  return {first == second && first == third,
          std::to_string(first.size()) + " bytes; repeat " + (first == second ? "identical" : "differs") +
              ", 4 jobs " + (first == third ? "identical" : "differs")};
}

Outcome performance() {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const auto six = run_census(6, CensusOptions{});
  const double s6 = std::chrono::duration<double>(clock::now() - t0).count();
  const auto t1 = clock::now();
  const auto seven = run_census(7, CensusOptions{});
  const double s7 = std::chrono::duration<double>(clock::now() - t1).count();
  const TheoremReport report = verify_catalog(seven);
  char buf[160];
  std::snprintf(buf, sizeof buf, "n = 6: %zu classes in %.2f s; n = 7: %zu classes in %.2f s, %llu violations",
                six.size(), s6, seven.size(), s7, static_cast<unsigned long long>(report.total_violations()));
  return {six.size() == 156 && seven.size() == 1044 && s6 < 300.0 && s7 < 7200.0 && report.passed(), buf};
}

}  // namespace

int main() {
  std::cout << "building the n <= 6 catalog..." << std::endl;
  const std::vector<CensusRecord> catalog = census_up_to(6);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1  transcribed 6x6 and 8x8 triples multiply exactly", transcribed_triples},
      {"AC2  C6 factors as {2K3, 3K2}", hexagon_factorization},
      {"AC3  search equals brute force on order <= 5", oracle_equivalence},
      {"AC4  trees on 2..7 vertices are not factorizable", tree_theorem},
      {"AC5  lambda_max multiplicative for connected G", lambda_multiplicativity},
      {"AC6  disconnected counterexample 2 vs 4", counterexample},
      {"AC7  Hoffman polynomial iff connected regular", hoffman_equivalence},
      {"AC8  primitive iff connected non-bipartite", primitivity_equivalence},
      {"AC9  theorem suite over the n <= 6 catalog", [&] { return theorem_suite(catalog); }},
      {"AC10 census bytes are deterministic", determinism},
      {"AC11 census performance envelope", performance},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char time[32];
    std::snprintf(time, sizeof time, "%.2f s", seconds);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << "  (" << time << ")  " << o.detail << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
