#pragma once

// Independent reference implementations used to check the library. None of
// them calls into the code under test beyond the Graph value type.

#include <gmpxx.h>

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gfactor/graph.hpp"
#include "gfactor/int_matrix.hpp"

namespace gfactor::oracle {

/// Minimum upper-triangle string (graph6 bit order) over all n! relabelings.
std::string brute_force_key(const Graph& g);

/// Every labeled graph on n vertices, in mask order.
std::vector<Graph> all_labeled_graphs(int n);

/// Distinct brute_force_key values over all labeled graphs of order n, sorted.
std::vector<std::string> brute_force_classes(int n);

/// Coefficients c_0..c_n of det(xI - A) by Faddeev-LeVerrier, exactly.
std::vector<mpq_class> characteristic_polynomial(const IntMatrix& a);

double evaluate(const std::vector<mpq_class>& poly, double x);

/// trace(A^k) for k = 0..up_to, with plain integer walks.
std::vector<long long> closed_walk_counts(const Graph& g, int up_to);

/// Connectivity by depth-first search.
bool dfs_connected(const Graph& g);

/// Smallest k such that every ordered pair (i, j) is joined by a walk of
/// length exactly k, searching k up to n^2 - 2n + 2.
std::optional<int> walk_exponent(const Graph& g);

Graph random_graph(int n, double p, std::mt19937_64& rng);
Permutation random_permutation(int n, std::mt19937_64& rng);

}  // namespace gfactor::oracle
