#include <gtest/gtest.h>

#include <unistd.h>
#include <filesystem>
#include <map>

#include "gfactor/canonical.hpp"
#include "gfactor/census.hpp"
#include "gfactor/error.hpp"
#include "gfactor/generators.hpp"
#include "gfactor/graph6.hpp"

namespace gfactor {
namespace {

const std::vector<CensusRecord>& census_of(int n) {
  static std::map<int, std::vector<CensusRecord>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, run_census(n, CensusOptions{})).first;
  return it->second;
}

const CensusRecord& record_for(const Graph& g) {
  const std::string key = canonical_key(g);
  for (const auto& r : census_of(g.order())) {
    if (r.canonical_key == key) return r;
  }
  throw std::runtime_error("no record for " + encode_graph6(g));
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gfactor_" + name + "_" + std::to_string(::getpid()) + ".jsonl");
}

TEST(Census, OrderThreeHasOnlyTheEdgelessFactorization) {
  const auto& records = census_of(3);
  ASSERT_EQ(records.size(), 4U);
  int yes = 0;
  for (const auto& r : records) {
    if (r.verdict == Verdict::yes) {
      ++yes;
      EXPECT_EQ(r.edge_count, 0);
    }
  }
  EXPECT_EQ(yes, 1);
}

TEST(Census, HexagonRecord) {
  const CensusRecord& r = record_for(cycle(6));
  EXPECT_EQ(r.verdict, Verdict::yes);
  bool found = false;
  for (const auto& w : r.factor_pairs) {
    const std::string h = describe(decode_graph6(w.h_graph6));
    const std::string k = describe(decode_graph6(w.k_graph6));
    found = found || (h == "2K3" && k == "3K2") || (h == "3K2" && k == "2K3");
  }
  EXPECT_TRUE(found);
  EXPECT_NEAR(r.lambda_max, 2.0, 1e-9);
}

TEST(Census, RecordInvariants) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& r : census_of(n)) {
      EXPECT_EQ(r.verdict == Verdict::yes, !r.factor_pairs.empty()) << r.graph6;
      if (r.screen.ruled_out()) EXPECT_EQ(r.verdict, Verdict::no) << r.graph6;
      if (r.verdict == Verdict::yes) EXPECT_EQ(r.edge_count % 2, 0) << r.graph6;
      EXPECT_TRUE(r.violations.empty()) << r.graph6;
      EXPECT_NE(r.verdict, Verdict::unknown) << r.graph6;
    }
  }
}

TEST(Census, TreesAndOddForestsAreNotFactorizable) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& r : census_of(n)) {
      const Graph g = decode_graph6(r.graph6);
      const AcyclicClass ac = classify_acyclic(g);
      if (ac.kind == AcyclicKind::has_cycle || has_isolated_vertex(g)) continue;
      if (ac.kind == AcyclicKind::tree || ac.component_count % 2 == 1) EXPECT_EQ(r.verdict, Verdict::no) << r.graph6;
    }
  }
}

TEST(Census, ParallelRunMatchesSerial) {
  CensusOptions opts;
  opts.jobs = 4;
  EXPECT_EQ(catalog_to_string(run_census(5, opts)), catalog_to_string(census_of(5)));
}

TEST(Census, DeterministicBytes) {
  EXPECT_EQ(catalog_to_string(run_census(6, CensusOptions{})), catalog_to_string(census_of(6)));
}

TEST(Census, RejectsOrderAboveSearchCap) {
  CensusOptions opts;
  opts.search.order_cap = 4;
  EXPECT_THROW(run_census(5, opts), ParameterError);
}

TEST(Catalog, FileRoundTrip) {
  const auto path = temp_file("roundtrip");
  write_catalog(census_of(5), path.string());
  EXPECT_EQ(read_catalog(path.string()), census_of(5));
  write_catalog({}, path.string());
  EXPECT_EQ(std::filesystem::file_size(path), 0U);
  EXPECT_TRUE(read_catalog(path.string()).empty());
  std::filesystem::remove(path);
}

TEST(Catalog, MissingFieldNamesFieldAndLine) {
  nlohmann::json second = to_json(census_of(4)[1]);
  second.erase("lambda_max");
  const std::string text = to_json(census_of(4)[0]).dump() + "\n" + second.dump() + "\n";
  try {
    catalog_from_string(text);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_NE(std::string(e.what()).find("lambda_max"), std::string::npos);
  }
}

TEST(Catalog, BadJsonAndMissingFile) {
  EXPECT_THROW(catalog_from_string("{not json\n"), SchemaError);
  EXPECT_THROW(read_catalog("/nonexistent/catalog.jsonl"), IoError);
}

TEST(Verify, FullSmallCensusPasses) {
  std::vector<CensusRecord> all;
  for (int n = 1; n <= 6; ++n) all.insert(all.end(), census_of(n).begin(), census_of(n).end());
  const TheoremReport report = verify_catalog(all);
  EXPECT_TRUE(report.passed()) << format_report(report);
  EXPECT_EQ(report.records_checked, 208U);
  EXPECT_EQ(theorem_report_from_json(to_json(report)), report);
}

TEST(Verify, HexagonRecordAlone) {
  const TheoremReport report = verify_catalog({record_for(cycle(6))});
  EXPECT_TRUE(report.passed());
  for (const auto& a : report.assertions) {
    if (a.assertion_id == "V1" || a.assertion_id == "V13") EXPECT_GE(a.instances_checked, 1U) << a.assertion_id;
  }
}

TEST(Verify, CorruptedWitnessBitIsReported) {
  CensusRecord r = record_for(cycle(6));
  std::string& row = r.factor_pairs.front().c[0];
  const auto pos = row.find('1');
  row[pos] = '0';
  const TheoremReport report = verify_catalog({r});
  EXPECT_FALSE(report.passed());
  for (const auto& a : report.assertions) {
    if (a.assertion_id != "product") continue;
    EXPECT_EQ(a.violations, 1U);
    ASSERT_FALSE(a.failures.empty());
    EXPECT_EQ(a.failures.front().rfind(r.graph6, 0), 0U);
  }
}

TEST(Verify, ForgedVerdictIsCaught) {
  CensusRecord r = record_for(path(4));
  r.verdict = Verdict::yes;
  r.factor_pairs = record_for(edgeless(4)).factor_pairs;
  ASSERT_FALSE(r.factor_pairs.empty());
  const TheoremReport report = verify_catalog({r});
  EXPECT_FALSE(report.passed());
}

TEST(Verify, ReportsCompleteFamilies) {
  const TheoremReport report = verify_catalog(census_of(4));
  bool saw_k4 = false;
  for (const auto& f : report.complete_families) saw_k4 = saw_k4 || f.family == "K4";
  EXPECT_TRUE(saw_k4);
  EXPECT_NE(format_report(report).find("PASS"), std::string::npos);
}

}  // namespace
}  // namespace gfactor
