#include "gfactor/factorization.hpp"

#include "gfactor/graph6.hpp"
#include "gfactor/linalg.hpp"

namespace gfactor {

namespace {

bool is_zero(const IntMatrix& m) {
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) {
      if (m(i, j) != 0) return false;
    }
  }
  return true;
}

}  // namespace

Factorization Factorization::make(IntMatrix a, IntMatrix b, IntMatrix c) {
  const IntMatrix product = multiply(b, c);
  if (product.order() != a.order()) throw ParameterError("factor order differs from product order");
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) {
      if (product(i, j) != a(i, j)) throw ProductMismatch(i, j, product(i, j).get_str(), a(i, j).get_str());
    }
  }
  Graph g = require_adjacency(a);
  Graph h = require_adjacency(b);
  Graph k = require_adjacency(c);
  const bool trivial = is_zero(b) || is_zero(c);
  return Factorization{std::move(a), std::move(b), std::move(c), std::move(g), std::move(h), std::move(k), trivial};
}

Factorization Factorization::from_factors(const Graph& h, const Graph& k) {
  IntMatrix b = adjacency(h);
  IntMatrix c = adjacency(k);
  IntMatrix a = multiply(b, c);
  return make(std::move(a), std::move(b), std::move(c));
}

std::vector<std::string> matrix_rows(const IntMatrix& m) {
  std::vector<std::string> rows;
  for (int i = 0; i < m.order(); ++i) {
    std::string row;
    for (int j = 0; j < m.order(); ++j) {
      if (m(i, j) == 0) {
        row += '0';
      } else if (m(i, j) == 1) {
        row += '1';
      } else {
        throw ParameterError("matrix entry " + m(i, j).get_str() + " cannot be written as a bit");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_rows(const std::vector<std::string>& rows) {
  const int n = static_cast<int>(rows.size());
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (row.size() != rows.size()) throw ParameterError("matrix row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) {
      const char ch = row[static_cast<std::size_t>(j)];
      if (ch != '0' && ch != '1') throw ParameterError("matrix row " + std::to_string(i) + " has a non-bit character");
      m(i, j) = ch == '1' ? 1 : 0;
    }
  }
  return m;
}

nlohmann::json witness_to_json(const Factorization& f) {
  return nlohmann::json{{"a", matrix_rows(f.a)},
                        {"b", matrix_rows(f.b)},
                        {"c", matrix_rows(f.c)},
                        {"h_graph6", encode_graph6(f.h)},
                        {"k_graph6", encode_graph6(f.k)},
                        {"trivial", f.trivial}};
}

RawWitness witness_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("witness is not an object", 0);
  for (const char* field : {"a", "b", "c", "h_graph6", "k_graph6", "trivial"}) {
    if (!j.contains(field)) throw SchemaError(std::string("witness missing field '") + field + "'", 0);
  }
  try {
    return RawWitness{matrix_from_rows(j.at("a").get<std::vector<std::string>>()),
                      matrix_from_rows(j.at("b").get<std::vector<std::string>>()),
                      matrix_from_rows(j.at("c").get<std::vector<std::string>>()),
                      j.at("h_graph6").get<std::string>(), j.at("k_graph6").get<std::string>(),
                      j.at("trivial").get<bool>()};
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("witness field has wrong type: ") + e.what(), 0);
  } catch (const ParameterError& e) {
    throw SchemaError(std::string("witness matrix malformed: ") + e.what(), 0);
  }
}

}  // namespace gfactor
