#pragma once

// Dense matrices over Z with exact determinant, characteristic polynomial,
// inverse and integer kernel.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "salemkit/polycore.hpp"

namespace salemkit {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::vector<Integer>> to_rows() const;
  IntMatrix transpose() const;

  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& c, IntMatrix m);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& m);
// det(tI - M), via Faddeev-LeVerrier with exact division.
IntPoly characteristic_polynomial(const IntMatrix& m);
// p(M) by Horner's rule.
IntMatrix evaluate_at(const IntPoly& p, const IntMatrix& m);
// Inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
// Block diagonal [a 0; 0 b].
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

// Rows form a basis of {v in Z^n : m v = 0}, in row Hermite normal form.
// The basis comes from a unimodular transform, so the sublattice is saturated.
IntMatrix integer_kernel(const IntMatrix& m);
// Row Hermite normal form (pivots positive, entries above pivots reduced).
IntMatrix hermite_normal_form(const IntMatrix& m);

}  // namespace salemkit
