#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gfactor/graph.hpp"
#include "gfactor/int_matrix.hpp"

namespace gfactor {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Eigenvalues sorted descending.
struct Spectrum {
  std::vector<double> values;
  double tolerance = kDefaultTolerance;

  double max() const { return values.front(); }
  double min() const { return values.back(); }
};

struct PerronData {
  double value;
  std::vector<double> vector;  // unit Euclidean norm, positive entries
};

/// Dense row-major real symmetric matrix.
struct DenseMatrix {
  int order = 0;
  std::vector<double> entries;

  double operator()(int i, int j) const { return entries[static_cast<std::size_t>(i * order + j)]; }
  double& operator()(int i, int j) { return entries[static_cast<std::size_t>(i * order + j)]; }
};

DenseMatrix to_dense(const IntMatrix& m);

struct EigenDecomposition {
  std::vector<double> values;  // descending
  DenseMatrix vectors;         // column k pairs with values[k]
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass drops below
/// `tol`, followed by one polishing sweep.
EigenDecomposition jacobi_eigen(const DenseMatrix& m, double tol);

/// Throws PreconditionError for a non-symmetric input.
Spectrum eigen_sym(const IntMatrix& m, double tol = kDefaultTolerance);

double lambda_max(const Graph& g, double tol = kDefaultTolerance);

/// Power iteration on A + I from the all-ones vector (the shift keeps the
/// iteration convergent on bipartite graphs). Throws PreconditionError on a
/// disconnected graph.
PerronData perron(const Graph& g, double tol = kDefaultTolerance);

/// values[i] + values[n-1-i] within 2*tol of zero for every i.
bool spectrum_is_symmetric(const Spectrum& s);

/// Orthonormal basis stored column-wise in a DenseMatrix.
using Basis = DenseMatrix;

/// Diagonalizes r*b + s*c for seeded random (r, s) and accepts the basis when
/// it diagonalizes a, b and c to within `tol`. Up to five draws. Throws
/// PreconditionError unless a, b, c are symmetric and pairwise commuting.
std::optional<Basis> common_eigenbasis(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                                       double tol = kDefaultTolerance, std::uint64_t seed = kDefaultSeed);

struct ProductCheck {
  double lhs;  // lambda_max(G)
  double rhs;  // lambda_max(H) * lambda_max(K)
  bool holds;
};

ProductCheck lambda_max_product_check(const Graph& g, const Graph& h, const Graph& k,
                                      double tol = kDefaultTolerance);

struct RadiusCheck {
  bool holds;
  std::string detail;
};

/// Every component of G, H and K shares its parent's spectral radius and none
/// of the three graphs has an isolated vertex.
RadiusCheck component_radius_check(const Graph& g, const Graph& h, const Graph& k,
                                   double tol = kDefaultTolerance);

/// Decimal list at 12 significant digits, e.g. "[2, 1, -1]".
std::string format_values(const std::vector<double>& values);

}  // namespace gfactor
