#include <doctest.h>

#include "lagfe/errors.hpp"
#include "lagfe/geometry.hpp"

using lagfe::Point;
using lagfe::Polynomial;
using lagfe::Rational;
using lagfe::VertexFamily;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return Rational::make(n, d); }
Polynomial X(std::size_t d, std::size_t i) { return Polynomial::variable(d, i); }
Polynomial C(std::size_t d, Rational c) { return Polynomial::constant(d, c); }

// triangle (0,0), (2,0), (0,2)
VertexFamily tri() { return VertexFamily({{0, 0}, {2, 0}, {0, 2}}); }

}  // namespace

TEST_CASE("vertex families") {
  CHECK(lagfe::reference_vertices(2) == VertexFamily({{0, 0}, {1, 0}, {0, 1}}));
  CHECK_THROWS_AS((VertexFamily({{0, 0}, {1, 0}})), lagfe::DimensionMismatchError);
  CHECK_THROWS_AS((VertexFamily({{0}, {1, 0}})), lagfe::DimensionMismatchError);
  CHECK(lagfe::is_affinely_independent(tri()));
  CHECK_FALSE(lagfe::is_affinely_independent(VertexFamily({{0, 0}, {1, 1}, {3, 3}})));
  CHECK(lagfe::isobarycenter(tri().vertices()) == Point{r(2, 3), r(2, 3)});
}

TEST_CASE("geometric mapping") {
  const auto f = lagfe::geometric_mapping(tri());
  CHECK(f.matrix == lagfe::RatMatrix{{2, 0}, {0, 2}});
  CHECK(f.translation == Point{0, 0});
  CHECK(lagfe::geometric_mapping(lagfe::reference_vertices(3)) == lagfe::AffineMap::identity(3));
  const VertexFamily seg({{3}, {-1}});
  CHECK(lagfe::affine_apply(lagfe::geometric_mapping(seg), Point{r(1, 4)}) == Point{2});
}

TEST_CASE("barycentric coordinates") {
  const auto lam = lagfe::barycentric_polynomials(tri());
  REQUIRE(lam.size() == 3);
  CHECK(lam[0] == C(2, 1) - r(1, 2) * X(2, 1) - r(1, 2) * X(2, 2));
  CHECK(lam[1] == r(1, 2) * X(2, 1));
  CHECK(lam[2] == r(1, 2) * X(2, 2));
  CHECK(lam[0] + lam[1] + lam[2] == C(2, 1));
  CHECK(lagfe::reference_lagrange_p1(2, 0) == C(2, 1) - X(2, 1) - X(2, 2));
  CHECK(lagfe::reference_lagrange_p1(2, 2) == X(2, 2));
  CHECK_THROWS_AS((lagfe::barycentric_polynomials(VertexFamily({{0, 0}, {1, 1}, {2, 2}}))), lagfe::DegenerateSimplexError);
}

TEST_CASE("simplex membership") {
  CHECK(lagfe::in_reference_simplex(Point{r(1, 3), r(1, 3)}));
  CHECK(lagfe::in_reference_simplex(Point{1, 0}));
  CHECK_FALSE(lagfe::in_reference_simplex(Point{r(2, 3), r(2, 3)}));
  CHECK_FALSE(lagfe::in_reference_simplex(Point{r(-1, 100), 0}));
  CHECK(lagfe::in_simplex(tri(), Point{1, 1}));
  CHECK_FALSE(lagfe::in_simplex(tri(), Point{r(3, 2), 1}));
  // relabelled vertices describe the same set
  const VertexFamily perm({{0, 2}, {0, 0}, {2, 0}});
  CHECK(lagfe::in_simplex(perm, Point{1, 1}));
  CHECK_FALSE(lagfe::in_simplex(perm, Point{r(3, 2), 1}));
}

TEST_CASE("face hyperplanes") {
  // H_0 is x + y = 2, H_1 is x = 0, H_2 is y = 0
  CHECK(lagfe::face_hyperplane_contains(tri(), 0, Point{5, -3}));
  CHECK_FALSE(lagfe::face_hyperplane_contains(tri(), 0, Point{1, 0}));
  CHECK(lagfe::face_hyperplane_contains(tri(), 1, Point{0, 7}));
  CHECK(lagfe::face_hyperplane_contains(tri(), 2, Point{-4, 0}));
  CHECK_FALSE(lagfe::face_hyperplane_contains(tri(), 2, Point{-4, r(1, 9)}));
}

TEST_CASE("face mappings") {
  const std::vector<std::size_t> pi{2, 0};
  const auto f = lagfe::l_face_mapping(tri(), pi);
  CHECK(lagfe::affine_apply(f, Point{0}) == Point{0, 2});
  CHECK(lagfe::affine_apply(f, Point{1}) == Point{0, 0});
  CHECK_THROWS_AS((lagfe::l_face_mapping(tri(), std::vector<std::size_t>{1, 1})), lagfe::BoundsError);
  CHECK_THROWS_AS((lagfe::l_face_mapping(tri(), std::vector<std::size_t>{0})), lagfe::BoundsError);
  CHECK_THROWS_AS((lagfe::l_face_mapping(tri(), std::vector<std::size_t>{0, 3})), lagfe::BoundsError);

  // hyperface 1 drops vertex 1: reference (0), (1) -> v0, v2
  const auto h = lagfe::hyperface_mapping(tri(), 1);
  CHECK(lagfe::affine_apply(h, Point{0}) == Point{0, 0});
  CHECK(lagfe::affine_apply(h, Point{1}) == Point{0, 2});
  CHECK_THROWS_AS((lagfe::hyperface_mapping(VertexFamily({{0}, {1}}), 0)), lagfe::BoundsError);

  CHECK(lagfe::circular_permutation(2, 0) == std::vector<std::size_t>{1, 2, 0});
  const auto p = lagfe::permutation_mapping(tri(), lagfe::circular_permutation(2, 0));
  CHECK(lagfe::affine_apply(p, Point{0, 0}) == Point{2, 0});
  CHECK(lagfe::affine_apply(p, Point{0, 1}) == Point{0, 0});
  CHECK_THROWS_AS((lagfe::permutation_mapping(tri(), std::vector<std::size_t>{0, 1})), lagfe::BoundsError);
}
