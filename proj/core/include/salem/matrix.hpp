#pragma once

// Dense square-or-rectangular integer matrices over GMP integers.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "salem/polyarith.hpp"

namespace salem {

using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Row-major construction; all rows must have equal length.
  explicit IntMatrix(const std::vector<std::vector<Integer>>& rows);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<std::vector<Integer>> to_rows() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);

IntMatrix transpose(const IntMatrix& a);
Integer trace(const IntMatrix& a);
/// a^n by repeated squaring; a must be square.
IntMatrix matrix_pow(const IntMatrix& a, unsigned long n);
/// Fraction-free Gaussian elimination (Bareiss).
Integer determinant(const IntMatrix& a);
bool is_symmetric(const IntMatrix& a);
bool is_zero(const IntMatrix& a);

/// Block-diagonal sum diag(a, b).
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// det(x I - a), monic of degree n, by the Faddeev-LeVerrier recurrence
/// over the integers (each division is checked to be exact).
IntPoly char_poly(const IntMatrix& a);

/// Companion matrix of a monic polynomial (last column holds -c_0..-c_{n-1}).
IntMatrix companion_matrix(const IntPoly& p);

Integer dot(const IntVector& u, const IntVector& v);

std::string to_string(const IntMatrix& a);

}  // namespace salem
