#include "gfactor/construct.hpp"

#include "gfactor/error.hpp"
#include "gfactor/generators.hpp"
#include "gfactor/linalg.hpp"

namespace gfactor {

namespace {

void require_cycle_size(int n) {
  if (n < 3) throw ParameterError("construction needs n >= 3, got " + std::to_string(n));
}

}  // namespace

Factorization cycle_product(int n) {
  require_cycle_size(n);
  return Factorization::from_factors(matching(n), disjoint_copies(cycle(n), 2));
}

Factorization doubled_graph(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("doubled_graph: input not connected");
  if (is_bipartite(g)) throw PreconditionError("doubled_graph: input bipartite");
  const int n = g.order();
  if (2 * n > kMaxOrder) throw UnsupportedSizeError("doubled_graph: order " + std::to_string(2 * n) + " exceeds 64");

  std::vector<Edge> cross;
  for (auto [u, v] : g.edges()) {
    cross.emplace_back(u, n + v);
    cross.emplace_back(v, n + u);
  }
  std::vector<Edge> swap;
  for (int i = 0; i < n; ++i) swap.emplace_back(i, n + i);
  const Graph h = Graph::from_edges(2 * n, cross);
  const Graph k = Graph::from_edges(2 * n, swap);
  if (!is_connected(h)) throw Error("doubled_graph: first factor is not connected");
  return Factorization::from_factors(h, k);
}

Factorization disconnected_counterexample(int n) {
  require_cycle_size(n);
  const Graph two_cycles = disjoint_copies(cycle(n), 2);
  return Factorization::from_factors(disjoint_union(matching(n), two_cycles), disjoint_union(two_cycles, matching(n)));
}

Factorization construct(ConstructionKind kind, const ConstructionParams& params) {
  switch (kind) {
    case ConstructionKind::cycle_product:
      if (!params.n) throw ParameterError("cycle_product needs n");
      return cycle_product(*params.n);
    case ConstructionKind::doubled_graph:
      if (!params.graph) throw ParameterError("doubled_graph needs a graph");
      return doubled_graph(*params.graph);
    case ConstructionKind::disconnected_counterexample:
      if (!params.n) throw ParameterError("disconnected_counterexample needs n");
      return disconnected_counterexample(*params.n);
  }
  throw ParameterError("unknown construction kind");
}

}  // namespace gfactor
