#pragma once

#include <span>
#include <vector>

#include "lagfe/matrix.hpp"
#include "lagfe/rational.hpp"

namespace lagfe {

using Point = std::vector<Rational>;

/// x -> translation + matrix * x, from R^{matrix.cols()} to R^{matrix.rows()}.
struct AffineMap {
  RatMatrix matrix;
  Point translation;

  std::size_t domain_dim() const { return matrix.cols(); }
  std::size_t codomain_dim() const { return matrix.rows(); }

  static AffineMap identity(std::size_t n);

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Throws DimensionMismatchError unless translation matches the matrix rows.
AffineMap make_affine(RatMatrix matrix, Point translation);

Point affine_apply(const AffineMap& f, std::span<const Rational> x);
/// g o f
AffineMap affine_compose(const AffineMap& g, const AffineMap& f);
/// Throws NonSquareError or SingularMatrixError.
AffineMap affine_inverse(const AffineMap& f);

}  // namespace lagfe
