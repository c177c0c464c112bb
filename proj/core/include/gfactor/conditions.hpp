#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "gfactor/factorization.hpp"
#include "gfactor/graph.hpp"
#include "gfactor/spectral.hpp"

namespace gfactor {

enum class RuleStatus { pass, ruled_out, inconclusive };

std::string to_string(RuleStatus s);
RuleStatus rule_status_from_string(const std::string& s);

struct RuleRecord {
  std::string rule_id;
  RuleStatus status;
  std::string paper_ref;  // name of the result the rule rests on
  std::string detail;

  bool operator==(const RuleRecord&) const = default;
};

/// Necessary-condition verdicts for one graph. `verdict` is ruled_out when any
/// rule fires and inconclusive otherwise; `trivial` marks edgeless graphs,
/// which factor as 0 = 0 * 0.
struct ConditionReport {
  std::string graph_key;
  RuleStatus verdict;
  bool trivial;
  std::vector<RuleRecord> rules;

  bool ruled_out() const noexcept { return verdict == RuleStatus::ruled_out; }
  bool operator==(const ConditionReport&) const = default;
};

/// Rule ids in evaluation order: R1 edge parity, R2 C4-free parity,
/// R3 tree, R4 forest with an odd number of components.
const std::vector<std::string>& rule_ids();

ConditionReport screen(const Graph& g);

/// Throws ParameterError for an id outside rule_ids().
RuleRecord evaluate_rule(const std::string& rule_id, const Graph& g);

struct Violation {
  std::string assertion_id;
  std::string expected;
  std::string observed;
  std::string paper_ref;

  bool operator==(const Violation&) const = default;
};

using ViolationList = std::vector<Violation>;

/// Outcome of one registered assertion on one factorization. `applicable`
/// is false when the hypotheses do not hold (the assertion is vacuous).
struct AssertionOutcome {
  std::string assertion_id;
  bool applicable;
  bool holds;
  std::string expected;
  std::string observed;
};

/// Observations recorded for the census but never asserted.
struct ExploratoryObservations {
  /// |E(G)| >= max(|E(H)|, |E(K)|) when neither factor has isolated vertices.
  bool two_sided_edge_bound_applicable = false;
  bool two_sided_edge_bound_holds = true;
  /// 2|E(G)| <= |E(H)||E(K)| with n > 4 and no isolated vertices, without
  /// requiring connected factors.
  bool unguarded_edge_bound_applicable = false;
  bool unguarded_edge_bound_holds = true;
  /// When G splits into two components under the bipartite-factor
  /// connectivity hypotheses: are the components isomorphic?
  bool component_iso_applicable = false;
  bool components_isomorphic = false;
};

struct ValidationResult {
  std::vector<AssertionOutcome> outcomes;  // one per id in assertion_ids()
  ExploratoryObservations exploratory;

  ViolationList violations() const;
};

/// V1..V13.
const std::vector<std::string>& assertion_ids();
const std::string& assertion_ref(const std::string& assertion_id);

/// Re-checks BC == A exactly (throwing ProductMismatch on failure) and then
/// evaluates every registered assertion.
ValidationResult validate_detailed(const Factorization& f, double tol = kDefaultTolerance);

ViolationList validate_factorization(const Factorization& f, double tol = kDefaultTolerance);

nlohmann::json to_json(const RuleRecord& r);
nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const ViolationList& v);

/// Parsers throw SchemaError (line 0) naming the missing or mistyped field.
ConditionReport condition_report_from_json(const nlohmann::json& j);
ViolationList violation_list_from_json(const nlohmann::json& j);

}  // namespace gfactor
