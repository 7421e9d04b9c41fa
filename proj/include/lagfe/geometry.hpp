#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lagfe/affine_map.hpp"
#include "lagfe/polynomial.hpp"

namespace lagfe {

/// d+1 points of R^d. Affine independence is checked on demand, not enforced.
class VertexFamily {
 public:
  /// Throws DimensionMismatchError unless there are d+1 points of dimension d, d >= 1.
  explicit VertexFamily(std::vector<Point> vertices);

  std::size_t d() const { return v_.size() - 1; }
  const Point& operator[](std::size_t i) const { return v_[i]; }
  const std::vector<Point>& vertices() const { return v_; }

  friend bool operator==(const VertexFamily&, const VertexFamily&) = default;

 private:
  std::vector<Point> v_;
};

VertexFamily reference_vertices(std::size_t d);

/// rank of (v_1 - v_0, ..., v_d - v_0) equals d
bool is_affinely_independent(const VertexFamily& v);

/// Throws BoundsError on an empty list, DimensionMismatchError on mixed dims.
Point isobarycenter(std::span<const Point> points);

/// 1 - sum X_j for i = 0, X_i otherwise.
Polynomial reference_lagrange_p1(std::size_t d, std::size_t i);

/// x -> v_0 + A x, A with columns v_i - v_0. Defined for degenerate families too.
AffineMap geometric_mapping(const VertexFamily& v);

/// lambda_i = reference_lagrange_p1(d, i) o (geometric mapping)^-1.
/// Throws DegenerateSimplexError.
std::vector<Polynomial> barycentric_polynomials(const VertexFamily& v);

/// Closed reference simplex: x_i >= 0 and sum x_i <= 1.
bool in_reference_simplex(std::span<const Rational> x);
/// Closed simplex membership via barycentric signs. Throws DegenerateSimplexError.
bool in_simplex(const VertexFamily& v, std::span<const Rational> x);

/// lambda_i(x) = 0. Throws DegenerateSimplexError, BoundsError.
bool face_hyperplane_contains(const VertexFamily& v, std::size_t i, std::span<const Rational> x);

/// x -> v_{pi(0)} + B x, B with columns v_{pi(j)} - v_{pi(0)}, j in [1..l],
/// where l = pi.size() - 1 in [1..d]. Throws BoundsError if pi is not injective.
AffineMap l_face_mapping(const VertexFamily& v, std::span<const std::size_t> pi);

/// l_face_mapping with pi = theta_i^{d-1}; maps R^{d-1} onto H_i.
AffineMap hyperface_mapping(const VertexFamily& v, std::size_t i);

/// l_face_mapping with a permutation of [0..d]. Throws BoundsError otherwise.
AffineMap permutation_mapping(const VertexFamily& v, std::span<const std::size_t> pi);

/// [c_i^d(0), ..., c_i^d(d)]
std::vector<std::size_t> circular_permutation(std::size_t d, std::size_t i);

}  // namespace lagfe
