#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace gfactor {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(int order);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int order);
  static IntMatrix all_ones(int order);

  int order() const noexcept { return order_; }
  const mpz_class& operator()(int i, int j) const { return entries_[index(i, j)]; }
  mpz_class& operator()(int i, int j) { return entries_[index(i, j)]; }

  bool is_symmetric() const;

  /// Rows of space-separated integers, one per line.
  std::string to_string() const;

  bool operator==(const IntMatrix& other) const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(j);
  }

  int order_;
  std::vector<mpz_class> entries_;
};

/// Exact rational n x m matrix (rectangular, used for linear solves).
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);
  explicit RationalMatrix(const IntMatrix& m);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const mpq_class& operator()(int i, int j) const { return entries_[index(i, j)]; }
  mpq_class& operator()(int i, int j) { return entries_[index(i, j)]; }

  bool operator==(const RationalMatrix& other) const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_;
  int cols_;
  std::vector<mpq_class> entries_;
};

}  // namespace gfactor
