#include "gfactor/int_matrix.hpp"

#include "gfactor/error.hpp"

namespace gfactor {

IntMatrix::IntMatrix(int order) : order_(order) {
  if (order < 0) throw ParameterError("matrix order must be non-negative");
  entries_.resize(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw ParameterError("matrix literal is not square");
    int j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(int order) {
  IntMatrix m(order);
  for (int i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(int order) {
  IntMatrix m(order);
  for (auto& e : m.entries_) e = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < order_; ++i) {
    for (int j = i + 1; j < order_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::string IntMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      if (j > 0) out += ' ';
      out += (*this)(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return order_ == other.order_ && entries_ == other.entries_;
}

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ParameterError("matrix dimensions must be non-negative");
  entries_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.order(), m.order()) {
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) (*this)(i, j) = mpq_class(m(i, j));
  }
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

}  // namespace gfactor
