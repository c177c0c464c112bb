#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gfactor/conditions.hpp"
#include "gfactor/factorization.hpp"
#include "gfactor/graph.hpp"

namespace gfactor {

enum class SearchMode { first, all };

/// Forward-checking rules applied during the backtracking search. Leaves are
/// always verified exactly, so switching a rule off only costs nodes.
struct PruneRules {
  bool entry = true;             // P1: lower <= A_ij <= upper off the diagonal
  bool diagonal = true;          // P2: N_B(i) and N_C(i) disjoint
  bool degree = true;            // P3: deg_B(i) * deg_C(i) = deg_A(i) still reachable
  bool component_degree = true;  // P4: closed components share the other factor's degree
};

struct SearchConfig {
  SearchMode mode = SearchMode::all;
  std::uint64_t node_limit = 100'000'000;
  /// When false, witnesses with a zero factor are reported only for an
  /// edgeless target that has no other witness.
  bool include_trivial = false;
  int order_cap = 7;
  PruneRules pruning;
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::map<std::string, std::uint64_t> prunes_by_rule;  // keys P1..P4
  std::uint64_t witnesses_found = 0;
  bool exhausted = false;
};

/// Factor pair (B, C) of a witness as adjacency bit-rows.
struct WitnessBits {
  std::vector<Row> b;
  std::vector<Row> c;

  bool trivial() const;
  bool operator==(const WitnessBits&) const = default;
};

/// Order used for deterministic output: B's rows as bit-strings, then C's.
bool witness_less(const WitnessBits& x, const WitnessBits& y);

/// Called for every witness found; return false to stop the search.
using WitnessVisitor = std::function<bool(const WitnessBits&)>;

/// Backtracking search for all (B, C) with BC == adjacency(target), on the
/// given labeling. Variables are the upper triangles of B and C, interleaved
/// vertex by vertex, highest-degree vertex of the target first.
SearchStats search_witnesses(const Graph& target, const SearchConfig& cfg, const WitnessVisitor& visit);

/// The canonical relabeling of g (see canonical_form).
Graph fixed_graph(const Graph& g);
IntMatrix fix_labeling(const Graph& g);

Factorization to_factorization(const Graph& target, const WitnessBits& w);

/// Brute force over every pair of adjacency matrices; order <= 5 only.
/// Includes trivial witnesses. Ordered by witness_less.
std::vector<Factorization> factor_naive(const Graph& g);

struct SearchResult {
  std::vector<Factorization> witnesses;  // ordered by witness_less
  SearchStats stats;
};

/// factor_search on fix_labeling(g). Throws UnsupportedSizeError above
/// cfg.order_cap.
SearchResult factor_search(const Graph& g, const SearchConfig& cfg = {});

/// Unordered pair of canonical keys, first <= second.
struct FactorPair {
  std::string first;
  std::string second;

  auto operator<=>(const FactorPair&) const = default;
};

FactorPair factor_pair_of(const Factorization& f);
std::set<FactorPair> dedup_pairs(const std::vector<Factorization>& witnesses);

enum class Verdict { yes, no, unknown };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct FactorizabilityResult {
  Verdict verdict;
  std::optional<Factorization> witness;
  ConditionReport screen;
  SearchStats stats;
};

/// Screens first; a ruled-out graph is "no" without search. Otherwise a
/// first-witness search decides yes, exhausted-without-witness decides no,
/// and a hit node limit (or an order beyond the cap) is "unknown".
FactorizabilityResult is_factorizable(const Graph& g, const SearchConfig& cfg = {});

}  // namespace gfactor
