#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "gfactor/error.hpp"
#include "gfactor/graph.hpp"
#include "gfactor/int_matrix.hpp"

namespace gfactor {

/// Thrown when B*C differs from A; names the first differing entry.
class ProductMismatch : public PreconditionError {
 public:
  ProductMismatch(int row, int col, const std::string& got, const std::string& want)
      : PreconditionError("B*C differs from A at (" + std::to_string(row) + "," + std::to_string(col) +
                          "): " + got + " != " + want),
        row_(row),
        col_(col) {}
  int row() const noexcept { return row_; }
  int col() const noexcept { return col_; }

 private:
  int row_;
  int col_;
};

/// A verified witness A = BC together with its graph views G, H, K.
struct Factorization {
  IntMatrix a, b, c;
  Graph g, h, k;
  bool trivial;  // B or C is the zero matrix

  /// Checks the product identity exactly first, then that A, B, C are
  /// adjacency matrices. Throws ProductMismatch / PreconditionError.
  static Factorization make(IntMatrix a, IntMatrix b, IntMatrix c);

  /// A computed as adjacency(h) * adjacency(k); throws if that is not an
  /// adjacency matrix.
  static Factorization from_factors(const Graph& h, const Graph& k);
};

/// Unverified triple as read from JSON.
struct RawWitness {
  IntMatrix a, b, c;
  std::string h_graph6;
  std::string k_graph6;
  bool trivial = false;
};

/// Rows rendered as '0'/'1' strings. Entries outside {0,1} are rejected.
std::vector<std::string> matrix_rows(const IntMatrix& m);
IntMatrix matrix_from_rows(const std::vector<std::string>& rows);

/// {a, b, c: row bit-strings, h_graph6, k_graph6, trivial}
nlohmann::json witness_to_json(const Factorization& f);

/// Throws SchemaError (line 0) on a malformed object.
RawWitness witness_from_json(const nlohmann::json& j);

}  // namespace gfactor
