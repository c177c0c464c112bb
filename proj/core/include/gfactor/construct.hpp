#pragma once

#include <optional>

#include "gfactor/factorization.hpp"
#include "gfactor/graph.hpp"

namespace gfactor {

enum class ConstructionKind { cycle_product, doubled_graph, disconnected_counterexample };

struct ConstructionParams {
  std::optional<int> n;        // cycle_product, disconnected_counterexample
  std::optional<Graph> graph;  // doubled_graph
};

/// C_2n = (n K2) * (2 C_n): B matches i with n + i, C is two n-cycles on
/// {0..n-1} and {n..2n-1}. Requires n >= 3.
Factorization cycle_product(int n);

/// diag(M, M) = [[0, M], [M, 0]] * [[0, I], [I, 0]] for a connected
/// non-bipartite graph with adjacency M. Also checks that the first factor is
/// connected.
Factorization doubled_graph(const Graph& g);

/// 2 C_2n = (n K2 + 2 C_n) * (2 C_n + n K2) on 4n vertices. Requires n >= 3.
Factorization disconnected_counterexample(int n);

/// Dispatches on `kind`; the result has already passed the exact product check.
Factorization construct(ConstructionKind kind, const ConstructionParams& params);

}  // namespace gfactor
