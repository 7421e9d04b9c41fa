#include "lagfe/affine_map.hpp"

#include "lagfe/errors.hpp"

namespace lagfe {

AffineMap AffineMap::identity(std::size_t n) { return {RatMatrix::identity(n), Point(n)}; }

AffineMap make_affine(RatMatrix matrix, Point translation) {
  if (translation.size() != matrix.rows()) throw DimensionMismatchError("translation length differs from matrix rows");
  return {std::move(matrix), std::move(translation)};
}

Point affine_apply(const AffineMap& f, std::span<const Rational> x) {
  Point y = f.matrix.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += f.translation[i];
  return y;
}

AffineMap affine_compose(const AffineMap& g, const AffineMap& f) {
  if (g.domain_dim() != f.codomain_dim()) throw DimensionMismatchError("affine composition size mismatch");
  return {g.matrix * f.matrix, affine_apply(g, f.translation)};
}

AffineMap affine_inverse(const AffineMap& f) {
  if (!f.matrix.is_square()) throw NonSquareError("inverse of a non-square affine map");
  RatMatrix inv = mat_inverse(f.matrix);
  Point t = inv.apply(f.translation);
  for (auto& x : t) x = -x;
  return {std::move(inv), std::move(t)};
}

}  // namespace lagfe
