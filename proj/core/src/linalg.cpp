#include "gfactor/linalg.hpp"

#include <bit>

#include "gfactor/error.hpp"

namespace gfactor {

namespace {

void require_same_order(const IntMatrix& m, const IntMatrix& n) {
  if (m.order() != n.order()) {
    throw ParameterError("matrix order mismatch: " + std::to_string(m.order()) + " vs " + std::to_string(n.order()));
  }
}

// Zero pattern of a non-negative matrix product: row i of (X Y) is the union
// of the rows k of Y over k in row i of X. Positivity of powers only depends
// on this pattern, so the iteration stays exact without growing integers.
using Pattern = std::vector<Row>;

Pattern pattern_product(const Pattern& x, const Pattern& y) {
  Pattern out(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (Row r = x[i]; r; r &= r - 1) out[i] |= y[static_cast<std::size_t>(std::countr_zero(r))];
  }
  return out;
}

bool pattern_full(const Pattern& p, Row mask) {
  for (Row r : p) {
    if ((r & mask) != mask) return false;
  }
  return true;
}

}  // namespace

IntMatrix adjacency(const Graph& g) {
  IntMatrix m(g.order());
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (g.has_edge(i, j)) m(i, j) = 1;
    }
  }
  return m;
}

IntMatrix multiply(const IntMatrix& m, const IntMatrix& n) {
  require_same_order(m, n);
  const int size = m.order();
  IntMatrix out(size);
  for (int i = 0; i < size; ++i) {
    for (int k = 0; k < size; ++k) {
      const mpz_class& lhs = m(i, k);
      if (sgn(lhs) == 0) continue;
      for (int j = 0; j < size; ++j) out(i, j) += lhs * n(k, j);
    }
  }
  return out;
}

AdjacencyCheck as_adjacency(const IntMatrix& m) {
  const int size = m.order();
  if (size < 1) return {std::nullopt, EntryViolation{0, 0, "empty matrix"}};
  if (size > kMaxOrder) return {std::nullopt, EntryViolation{0, 0, "order exceeds 64"}};
  std::vector<Row> rows(static_cast<std::size_t>(size), 0);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const mpz_class& v = m(i, j);
      if (v != 0 && v != 1) return {std::nullopt, EntryViolation{i, j, "entry " + v.get_str() + " is not 0 or 1"}};
      if (i == j && v != 0) return {std::nullopt, EntryViolation{i, j, "nonzero diagonal entry"}};
      if (v != m(j, i)) return {std::nullopt, EntryViolation{i, j, "asymmetric entry"}};
      if (v == 1) rows[static_cast<std::size_t>(i)] |= Row{1} << j;
    }
  }
  return {Graph::from_rows(size, std::move(rows)), std::nullopt};
}

Graph require_adjacency(const IntMatrix& m) {
  auto check = as_adjacency(m);
  if (!check) {
    const auto& v = *check.violation;
    throw PreconditionError("not an adjacency matrix at (" + std::to_string(v.row) + "," + std::to_string(v.col) +
                            "): " + v.reason);
  }
  return std::move(*check.graph);
}

IntMatrix power(const IntMatrix& m, unsigned k) {
  IntMatrix result = IntMatrix::identity(m.order());
  IntMatrix base = m;
  while (k > 0) {
    if (k & 1U) result = multiply(result, base);
    k >>= 1U;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

PositivityProfile positivity_profile(const IntMatrix& m) {
  PositivityProfile profile{true, {}};
  for (int i = 0; i < m.order(); ++i) {
    bool zero_row = true;
    for (int j = 0; j < m.order(); ++j) {
      if (sgn(m(i, j)) > 0) {
        zero_row = false;
      } else {
        profile.all_positive = false;
      }
      if (sgn(m(i, j)) != 0) zero_row = false;
    }
    if (zero_row) profile.zero_rows.push_back(i);
  }
  return profile;
}

bool connected_by_powers(const IntMatrix& a) {
  require_adjacency(a);
  const int n = a.order();
  IntMatrix sum = IntMatrix::identity(n);
  IntMatrix term = IntMatrix::identity(n);
  for (int i = 1; i < n; ++i) {
    term = multiply(term, a);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) sum(r, c) += term(r, c);
    }
  }
  return positivity_profile(sum).all_positive;
}

int wielandt_bound(int n) { return n * n - 2 * n + 2; }

std::optional<int> primitivity_exponent(const IntMatrix& a) {
  const Graph g = require_adjacency(a);
  const Row mask = g.vertex_mask();
  const Pattern base(g.rows().begin(), g.rows().end());
  Pattern current = base;
  const int bound = wielandt_bound(g.order());
  for (int k = 1; k <= bound; ++k) {
    if (pattern_full(current, mask)) return k;
    current = pattern_product(current, base);
  }
  return std::nullopt;
}

RationalMatrix evaluate_polynomial(const std::vector<mpq_class>& coefficients, const IntMatrix& a) {
  const int n = a.order();
  RationalMatrix out(n, n);
  IntMatrix term = IntMatrix::identity(n);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i > 0) term = multiply(term, a);
    if (coefficients[i] == 0) continue;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) out(r, c) += coefficients[i] * term(r, c);
    }
  }
  return out;
}

std::optional<HoffmanCertificate> hoffman_polynomial(const IntMatrix& a) {
  require_adjacency(a);
  const int n = a.order();
  const int rows = n * n;
  // Augmented system: column i holds vec(A^i), the last column vec(J).
  RationalMatrix system(rows, n + 1);
  IntMatrix term = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    if (i > 0) term = multiply(term, a);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) system(r * n + c, i) = term(r, c);
    }
  }
  for (int r = 0; r < rows; ++r) system(r, n) = 1;

  std::vector<int> pivot_cols;
  int pivot_row = 0;
  for (int col = 0; col < n && pivot_row < rows; ++col) {
    int found = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (system(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivot_row) {
      for (int c = 0; c <= n; ++c) std::swap(system(found, c), system(pivot_row, c));
    }
    const mpq_class inv = 1 / system(pivot_row, col);
    for (int c = col; c <= n; ++c) system(pivot_row, c) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row || system(r, col) == 0) continue;
      const mpq_class factor = system(r, col);
      for (int c = col; c <= n; ++c) system(r, c) -= factor * system(pivot_row, c);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  for (int r = pivot_row; r < rows; ++r) {
    if (system(r, n) != 0) return std::nullopt;
  }

  HoffmanCertificate cert{std::vector<mpq_class>(static_cast<std::size_t>(n), mpq_class(0))};
  for (std::size_t p = 0; p < pivot_cols.size(); ++p) {
    cert.coefficients[static_cast<std::size_t>(pivot_cols[p])] = system(static_cast<int>(p), n);
  }
  if (!(evaluate_polynomial(cert.coefficients, a) == RationalMatrix(IntMatrix::all_ones(n)))) {
    throw Error("Hoffman solve produced a certificate that does not reproduce J");
  }
  return cert;
}

bool commute(const IntMatrix& m, const IntMatrix& n) {
  require_same_order(m, n);
  return multiply(m, n) == multiply(n, m);
}

BipartitePowers bipartite_power_structure(const IntMatrix& a, const Bipartition& parts) {
  const Graph g = require_adjacency(a);
  if (!parts.is_valid_for(g)) throw PreconditionError("bipartition is not a valid 2-coloring of the graph");
  if (parts.left.empty() || parts.right.empty()) return {};

  const auto p = static_cast<int>(parts.left.size());
  const auto q = static_cast<int>(parts.right.size());
  // Cross block B12 and its transpose as patterns over local indices.
  Pattern cross(static_cast<std::size_t>(p), 0);
  Pattern cross_t(static_cast<std::size_t>(q), 0);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      if (g.has_edge(parts.left[static_cast<std::size_t>(i)], parts.right[static_cast<std::size_t>(j)])) {
        cross[static_cast<std::size_t>(i)] |= Row{1} << j;
        cross_t[static_cast<std::size_t>(j)] |= Row{1} << i;
      }
    }
  }
  const Row left_mask = p == 64 ? ~Row{0} : (Row{1} << p) - 1;
  const Row right_mask = q == 64 ? ~Row{0} : (Row{1} << q) - 1;

  int even_cap = std::max(2, wielandt_bound(p));
  if (even_cap % 2) ++even_cap;
  const int odd_cap = 2 * even_cap + 1;

  BipartitePowers out;
  const Pattern square = pattern_product(cross, cross_t);
  Pattern square_power = square;  // (B12 B12^T)^1
  for (int k = 1; k <= even_cap; ++k) {
    if (k % 2 == 0 && pattern_full(square_power, left_mask)) {
      out.even_k = k;
      break;
    }
    square_power = pattern_product(square_power, square);
  }

  // Cross block of a^(2m+1) is (B12 B12^T)^m B12, and symmetrically for the
  // lower block; both must be positive.
  const Pattern square_t = pattern_product(cross_t, cross);
  Pattern upper = cross;
  Pattern lower = cross_t;
  for (int k = 1; k <= odd_cap; k += 2) {
    if (pattern_full(upper, right_mask) && pattern_full(lower, left_mask)) {
      out.odd_k = k;
      break;
    }
    upper = pattern_product(square, upper);
    lower = pattern_product(square_t, lower);
  }
  return out;
}

}  // namespace gfactor
