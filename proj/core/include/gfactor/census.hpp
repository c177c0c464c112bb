#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfactor/conditions.hpp"
#include "gfactor/error.hpp"
#include "gfactor/search.hpp"
#include "gfactor/spectral.hpp"

namespace gfactor {

/// Number of isomorphism classes of graphs of order 1..8.
inline constexpr std::uint64_t kGraphCounts[] = {1, 2, 4, 11, 34, 156, 1044, 12346};

inline constexpr int kDefaultCensusCap = 7;

/// One representative witness per unordered factor pair, with matrices as
/// row bit-strings (the witness JSON shape).
struct StoredWitness {
  std::vector<std::string> a, b, c;
  std::string h_graph6;
  std::string k_graph6;
  bool trivial = false;

  bool operator==(const StoredWitness&) const = default;
};

struct CensusRecord {
  int n = 0;
  std::string graph6;
  std::string canonical_key;
  int edge_count = 0;
  bool connected = false;
  bool bipartite = false;
  bool regular = false;
  ConditionReport screen;
  Verdict verdict = Verdict::unknown;
  std::vector<StoredWitness> factor_pairs;
  double lambda_max = 0.0;
  ViolationList violations;
  std::optional<bool> component_iso_evidence;

  bool operator==(const CensusRecord&) const = default;
};

/// One representative per isomorphism class, canonical labeling, ordered by
/// canonical key. Built by extending every class of order n - 1 by one
/// vertex; the class count is checked against kGraphCounts. Order 8 must be
/// requested explicitly.
std::vector<Graph> enumerate_graphs(int n, bool allow_order_8 = false);

struct CensusOptions {
  SearchConfig search;
  double tol = kDefaultTolerance;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
  bool keep_going = false;
  bool allow_order_8 = false;
};

/// Raised when a witness violates a registered theorem and keep_going is off.
class TheoremViolationError : public Error {
 public:
  explicit TheoremViolationError(const std::string& record_dump)
      : Error("theorem violation in census record:\n" + record_dump) {}
};

/// Screening, witness search, per-witness validation and spectral data for
/// a single graph.
CensusRecord census_record(const Graph& g, const CensusOptions& options);

/// census_record over enumerate_graphs(n), distributed over options.jobs
/// workers; output order is the enumeration order whatever the job count.
std::vector<CensusRecord> run_census(int n, const CensusOptions& options);

nlohmann::json to_json(const StoredWitness& w);
nlohmann::json to_json(const CensusRecord& r);
CensusRecord census_record_from_json(const nlohmann::json& j, std::size_t line = 0);

/// JSON Lines, one record per line.
std::string catalog_to_string(const std::vector<CensusRecord>& records);
std::vector<CensusRecord> catalog_from_string(const std::string& text);
void write_catalog(const std::vector<CensusRecord>& records, const std::string& path);
std::vector<CensusRecord> read_catalog(const std::string& path);

struct AssertionTally {
  std::string assertion_id;
  std::string paper_ref;
  std::uint64_t instances_checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> failures;  // "graph6: detail", capped

  bool operator==(const AssertionTally&) const = default;
};

struct ExploratoryTally {
  std::string name;
  std::string description;
  std::uint64_t instances = 0;
  std::uint64_t positive = 0;  // meaning depends on the tally, see description

  bool operator==(const ExploratoryTally&) const = default;
};

struct FamilyVerdict {
  std::string family;  // "K5", "K2,3", ...
  std::string graph6;
  std::string verdict;

  bool operator==(const FamilyVerdict&) const = default;
};

struct TheoremReport {
  std::uint64_t records_checked = 0;
  std::uint64_t witnesses_checked = 0;
  std::vector<AssertionTally> assertions;  // catalog, product, R1..R4, V1..V13
  std::vector<ExploratoryTally> exploratory;
  std::vector<FamilyVerdict> complete_families;

  std::uint64_t total_violations() const;
  bool passed() const { return total_violations() == 0; }
  bool operator==(const TheoremReport&) const = default;
};

/// Recomputes every stored verdict and witness from scratch and tallies each
/// registered assertion. Violations are reported, never thrown.
TheoremReport verify_catalog(const std::vector<CensusRecord>& records, double tol = kDefaultTolerance,
                             std::uint64_t seed = kDefaultSeed);

nlohmann::json to_json(const TheoremReport& r);
TheoremReport theorem_report_from_json(const nlohmann::json& j);
std::string format_report(const TheoremReport& r);

}  // namespace gfactor
