#include "weylpoly/rational_linalg.hpp"

namespace weylpoly {

RationalMatrix RationalMatrix::from_integer_columns(const std::vector<Weight>& cols) {
  if (cols.empty()) return {};
  RationalMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a(*this);
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw std::domain_error("determinant of non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a(*this);
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const Rational p = a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / p;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Rational> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

std::vector<Rational> RationalMatrix::multiply_integer(const Weight& v) const {
  std::vector<Rational> rv(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) rv[i] = v[i];
  return multiply(rv);
}

}  // namespace weylpoly
