#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lagfe/rational.hpp"

namespace lagfe {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  /// rows x cols zero matrix.
  RatMatrix(std::size_t rows, std::size_t cols);
  /// Row-major entries; throws DimensionMismatchError unless entries.size() == rows*cols.
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<Rational>& entries() const { return entries_; }

  RatMatrix transposed() const;

  /// Matrix-vector product; x.size() must equal cols().
  std::vector<Rational> apply(std::span<const Rational> x) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws NonSquareError for non-square input.
Rational mat_det(const RatMatrix& a);

/// Exact X with A X = B by Gauss-Jordan elimination.
/// Throws NonSquareError, DimensionMismatchError, SingularMatrixError.
RatMatrix mat_solve(const RatMatrix& a, const RatMatrix& b);

/// Exact rank by fraction-free elimination.
std::size_t mat_rank(const RatMatrix& a);

/// Inverse of a square nonsingular matrix.
RatMatrix mat_inverse(const RatMatrix& a);

}  // namespace lagfe
