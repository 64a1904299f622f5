#pragma once

#include <stdexcept>
#include <vector>

#include "weylpoly/numeric.hpp"

namespace weylpoly {

// Dense rational matrices, just big enough for the rank-sized solves this
// library needs (Cartan matrix inversion, cone-membership systems). Rank
// never exceeds single digits, so plain Gauss-Jordan is the right tool.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RationalMatrix from_integer_columns(const std::vector<Weight>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  // Inverse by Gauss-Jordan with partial (first nonzero) pivoting.
  // Throws std::domain_error on a singular matrix.
  RationalMatrix inverse() const;

  Rational determinant() const;

  std::vector<Rational> multiply(const std::vector<Rational>& v) const;
  std::vector<Rational> multiply_integer(const Weight& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace weylpoly
