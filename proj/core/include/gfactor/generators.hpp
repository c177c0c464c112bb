#pragma once

#include <span>
#include <string>
#include <vector>

#include "gfactor/graph.hpp"

namespace gfactor {

Graph complete(int n);
Graph cycle(int n);  // n >= 3
Graph path(int n);
Graph star(int n);   // centre 0, n - 1 leaves
Graph edgeless(int n);

/// n disjoint edges {i, n + i} on 2n vertices.
Graph matching(int n);

/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);

/// Vertices of `second` are shifted by first.order().
Graph disjoint_union(const Graph& first, const Graph& second);

/// `copies` disjoint copies of g, copy c occupying vertices [c*n, (c+1)*n).
Graph disjoint_copies(const Graph& g, int copies);

/// Tree on sequence.size() + 2 vertices; labels must lie in [0, size + 2).
Graph tree_from_pruefer(std::span<const int> sequence);

enum class Family {
  complete,
  cycle,
  path,
  star,
  matching,
  complete_bipartite,
  disjoint_union,
  edgeless,
  tree_from_pruefer,
};

struct FamilyParams {
  std::vector<int> sizes;       // n, or (a, b) for complete_bipartite
  std::vector<Graph> operands;  // disjoint_union
  std::vector<int> pruefer;     // tree_from_pruefer
};

Graph generate(Family family, const FamilyParams& params);

/// Component-wise name such as "2K3", "3K2" or "C6 + K1". Components outside
/// the named families print as their graph6 string in brackets.
std::string describe(const Graph& g);

}  // namespace gfactor
