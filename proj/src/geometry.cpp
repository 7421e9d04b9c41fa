#include "lagfe/geometry.hpp"

#include <algorithm>

#include "lagfe/errors.hpp"
#include "lagfe/multi_index.hpp"

namespace lagfe {

VertexFamily::VertexFamily(std::vector<Point> vertices) : v_(std::move(vertices)) {
  if (v_.size() < 2) throw DimensionMismatchError("a vertex family needs d+1 points with d >= 1");
  for (const auto& p : v_) {
    if (p.size() != v_.size() - 1) throw DimensionMismatchError("vertex dimension must equal d");
  }
}

VertexFamily reference_vertices(std::size_t d) {
  if (d == 0) throw BoundsError("dimension must be at least 1");
  std::vector<Point> v(d + 1, Point(d));
  for (std::size_t i = 1; i <= d; ++i) v[i][i - 1] = Rational(1);
  return VertexFamily(std::move(v));
}

namespace {

// columns v_{pi(j)} - v_{pi(0)}, j = 1..l
RatMatrix difference_matrix(const VertexFamily& v, std::span<const std::size_t> pi) {
  const std::size_t d = v.d();
  const std::size_t l = pi.size() - 1;
  RatMatrix m(d, l);
  const Point& base = v[pi[0]];
  for (std::size_t j = 1; j <= l; ++j) {
    for (std::size_t r = 0; r < d; ++r) m(r, j - 1) = v[pi[j]][r] - base[r];
  }
  return m;
}

std::vector<std::size_t> identity_perm(std::size_t d) {
  std::vector<std::size_t> p(d + 1);
  for (std::size_t j = 0; j <= d; ++j) p[j] = j;
  return p;
}

void require_independent(const VertexFamily& v) {
  if (!is_affinely_independent(v)) throw DegenerateSimplexError("vertices are not affinely independent");
}

}  // namespace

bool is_affinely_independent(const VertexFamily& v) {
  const auto id = identity_perm(v.d());
  return mat_rank(difference_matrix(v, id)) == v.d();
}

Point isobarycenter(std::span<const Point> points) {
  if (points.empty()) throw BoundsError("isobarycenter of an empty list");
  Point g(points[0].size());
  for (const auto& p : points) {
    if (p.size() != g.size()) throw DimensionMismatchError("points of different dimensions");
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += p[i];
  }
  const Rational w = Rational::make(1, static_cast<std::int64_t>(points.size()));
  for (auto& x : g) x *= w;
  return g;
}

Polynomial reference_lagrange_p1(std::size_t d, std::size_t i) {
  if (d == 0) throw BoundsError("dimension must be at least 1");
  if (i > d) throw BoundsError("reference Lagrange index outside [0..d]");
  if (i >= 1) return Polynomial::variable(d, i);
  Polynomial p = Polynomial::constant(d, Rational(1));
  for (std::size_t j = 1; j <= d; ++j) p -= Polynomial::variable(d, j);
  return p;
}

AffineMap geometric_mapping(const VertexFamily& v) { return l_face_mapping(v, identity_perm(v.d())); }

std::vector<Polynomial> barycentric_polynomials(const VertexFamily& v) {
  require_independent(v);
  const AffineMap inv = affine_inverse(geometric_mapping(v));
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i <= v.d(); ++i) out.push_back(compose_affine(reference_lagrange_p1(v.d(), i), inv));
  return out;
}

bool in_reference_simplex(std::span<const Rational> x) {
  Rational s;
  for (const auto& xi : x) {
    if (xi.sign() < 0) return false;
    s += xi;
  }
  return s <= Rational(1);
}

bool in_simplex(const VertexFamily& v, std::span<const Rational> x) {
  if (x.size() != v.d()) throw DimensionMismatchError("point dimension differs from the simplex dimension");
  require_independent(v);
  // barycentric coordinates 1..d are the reference coordinates of the preimage
  const Point xh = affine_apply(affine_inverse(geometric_mapping(v)), x);
  return in_reference_simplex(xh);
}

bool face_hyperplane_contains(const VertexFamily& v, std::size_t i, std::span<const Rational> x) {
  if (i > v.d()) throw BoundsError("face index outside [0..d]");
  if (x.size() != v.d()) throw DimensionMismatchError("point dimension differs from the simplex dimension");
  require_independent(v);
  const Point xh = affine_apply(affine_inverse(geometric_mapping(v)), x);
  if (i >= 1) return xh[i - 1].is_zero();
  Rational s(1);
  for (const auto& c : xh) s -= c;
  return s.is_zero();
}

AffineMap l_face_mapping(const VertexFamily& v, std::span<const std::size_t> pi) {
  const std::size_t d = v.d();
  if (pi.size() < 2 || pi.size() > d + 1) throw BoundsError("face dimension l must lie in [1..d]");
  std::vector<bool> seen(d + 1, false);
  for (std::size_t j : pi) {
    if (j > d) throw BoundsError("vertex label outside [0..d]");
    if (seen[j]) throw BoundsError("face labelling is not injective");
    seen[j] = true;
  }
  return {difference_matrix(v, pi), v[pi[0]]};
}

AffineMap hyperface_mapping(const VertexFamily& v, std::size_t i) {
  const std::size_t d = v.d();
  if (d < 2) throw BoundsError("hyperface mappings need d >= 2");
  if (i > d) throw BoundsError("face index outside [0..d]");
  std::vector<std::size_t> pi(d);
  for (std::size_t j = 0; j < d; ++j) pi[j] = jump_enum(d - 1, i, j);
  return l_face_mapping(v, pi);
}

AffineMap permutation_mapping(const VertexFamily& v, std::span<const std::size_t> pi) {
  if (pi.size() != v.d() + 1) throw BoundsError("a permutation of [0..d] is required");
  return l_face_mapping(v, pi);
}

std::vector<std::size_t> circular_permutation(std::size_t d, std::size_t i) {
  std::vector<std::size_t> p(d + 1);
  for (std::size_t j = 0; j <= d; ++j) p[j] = circular_perm(d, i, j);
  return p;
}

}  // namespace lagfe
