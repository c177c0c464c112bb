#pragma once

#include <string>

#include "gfactor/graph.hpp"

namespace gfactor {

/// Exhaustive-permutation canonicalization is only offered up to this order.
inline constexpr int kMaxCanonicalOrder = 8;

struct CanonicalForm {
  /// Upper triangle of the minimal relabeling as '0'/'1', in graph6 bit order
  /// (column by column: (0,1), (0,2), (1,2), (0,3), ...).
  std::string key;
  /// permute(g, labeling) == graph.
  Permutation labeling;
  Graph graph;
};

/// Lexicographically minimal upper-triangle bit-string over all relabelings,
/// found by branch and bound on key prefixes. Throws UnsupportedSizeError for
/// orders above kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);

inline std::string canonical_key(const Graph& g) { return canonical_form(g).key; }

/// Graph whose upper triangle is `key`; inverse of canonical_key on canonical graphs.
Graph graph_from_key(const std::string& key);

}  // namespace gfactor
