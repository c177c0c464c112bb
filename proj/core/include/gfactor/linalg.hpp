#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "gfactor/graph.hpp"
#include "gfactor/int_matrix.hpp"

namespace gfactor {

IntMatrix adjacency(const Graph& g);

/// Exact product. Throws ParameterError on an order mismatch.
IntMatrix multiply(const IntMatrix& m, const IntMatrix& n);

struct EntryViolation {
  int row;
  int col;
  std::string reason;
};

/// Either the graph of an adjacency matrix or the first (row-major) entry
/// that disqualifies it.
struct AdjacencyCheck {
  std::optional<Graph> graph;
  std::optional<EntryViolation> violation;

  explicit operator bool() const noexcept { return graph.has_value(); }
};

AdjacencyCheck as_adjacency(const IntMatrix& m);

/// Graph view of an adjacency matrix; throws PreconditionError otherwise.
Graph require_adjacency(const IntMatrix& m);

IntMatrix power(const IntMatrix& m, unsigned k);

struct PositivityProfile {
  bool all_positive;
  std::vector<int> zero_rows;
};

PositivityProfile positivity_profile(const IntMatrix& m);

/// sum_{i=0}^{n-1} a^i > 0, evaluated exactly.
bool connected_by_powers(const IntMatrix& a);

/// n^2 - 2n + 2, the sharp exponent bound for primitive n x n 0-1 matrices.
int wielandt_bound(int n);

/// Smallest k <= wielandt_bound(n) with a^k > 0.
std::optional<int> primitivity_exponent(const IntMatrix& a);

/// Coefficients a_0..a_{n-1} with sum_i a_i A^i == J.
struct HoffmanCertificate {
  std::vector<mpq_class> coefficients;
};

/// Exact rational solve over span{I, A, ..., A^{n-1}}. Free coefficients of
/// the solution are fixed to zero, so the certificate is deterministic.
std::optional<HoffmanCertificate> hoffman_polynomial(const IntMatrix& a);

/// sum_i coefficients[i] * a^i, exactly.
RationalMatrix evaluate_polynomial(const std::vector<mpq_class>& coefficients, const IntMatrix& a);

bool commute(const IntMatrix& m, const IntMatrix& n);

struct BipartitePowers {
  std::optional<int> even_k;  // smallest even k with (B12 B12^T)^k > 0
  std::optional<int> odd_k;   // smallest odd k with positive cross blocks of a^k
};

/// Power structure of a bipartite adjacency matrix with cross block B12
/// (rows = parts.left, columns = parts.right). The even search runs up to
/// max(2, wielandt_bound(|left|)) and the odd search up to twice that plus
/// one. A bipartition with an empty side yields both absent.
BipartitePowers bipartite_power_structure(const IntMatrix& a, const Bipartition& parts);

}  // namespace gfactor
