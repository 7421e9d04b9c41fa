#include <doctest.h>

#include "lagfe/element.hpp"
#include "lagfe/errors.hpp"

using lagfe::MultiIndex;
using lagfe::Point;
using lagfe::Polynomial;
using lagfe::Rational;
using lagfe::VertexFamily;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return Rational::make(n, d); }
Polynomial X(std::size_t d, std::size_t i) { return Polynomial::variable(d, i); }
Polynomial C(std::size_t d, Rational c) { return Polynomial::constant(d, c); }

VertexFamily tri() { return VertexFamily({{0, 0}, {2, 0}, {0, 2}}); }
VertexFamily flat() { return VertexFamily({{0, 0}, {1, 1}, {2, 2}}); }

}  // namespace

TEST_CASE("Lagrange nodes") {
  const auto n = lagfe::lagrange_nodes(tri(), 2);
  REQUIRE(n.size() == 6);
  CHECK(n[0].point == Point{0, 0});
  CHECK(n[1].alpha == MultiIndex{1, 0});
  CHECK(n[1].point == Point{1, 0});
  CHECK(n[4].alpha == MultiIndex{1, 1});
  CHECK(n[4].point == Point{1, 1});
  CHECK(n[5].point == Point{0, 2});
  CHECK(lagfe::lagrange_node(VertexFamily({{2}, {6}}), 0, MultiIndex{0}) == Point{4});
  CHECK(lagfe::lagrange_node(lagfe::reference_vertices(3), 3, MultiIndex{1, 0, 2}) == Point{r(1, 3), 0, r(2, 3)});
  CHECK_THROWS_AS((lagfe::lagrange_node(tri(), 2, MultiIndex{2, 1})), lagfe::BoundsError);
  CHECK_THROWS_AS((lagfe::lagrange_node(tri(), 2, MultiIndex{1})), lagfe::DimensionMismatchError);
}

TEST_CASE("sub-vertices") {
  CHECK(lagfe::sub_vertices(tri(), 2) == VertexFamily({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(lagfe::sub_vertices(tri(), 1) == VertexFamily({{0, 0}, {0, 0}, {0, 0}}));
  CHECK_THROWS_AS((lagfe::sub_vertices(tri(), 0)), lagfe::BoundsError);
  CHECK(lagfe::sub_node_identity_check(tri(), 3));
  CHECK_THROWS_AS((lagfe::sub_node_identity_check(tri(), 1)), lagfe::BoundsError);
  CHECK_THROWS_AS((lagfe::sub_node_identity_check(flat(), 2)), lagfe::DegenerateSimplexError);
  CHECK(lagfe::node_image_check(tri(), 4));
}

TEST_CASE("P2 shape functions on the reference triangle") {
  const auto l0 = C(2, 1) - X(2, 1) - X(2, 2);
  const auto l1 = X(2, 1);
  const auto l2 = X(2, 2);
  const auto th = lagfe::shape_functions(lagfe::reference_vertices(2), 2);
  REQUIRE(th.size() == 6);
  // labels (0,0) (1,0) (0,1) (2,0) (1,1) (0,2)
  CHECK(th[0] == l0 * (r(2) * l0 - C(2, 1)));
  CHECK(th[1] == r(4) * l0 * l1);
  CHECK(th[2] == r(4) * l0 * l2);
  CHECK(th[3] == l1 * (r(2) * l1 - C(2, 1)));
  CHECK(th[4] == r(4) * l1 * l2);
  CHECK(th[5] == l2 * (r(2) * l2 - C(2, 1)));
}

TEST_CASE("unisolvence and Vandermonde") {
  const auto vm = lagfe::vandermonde(tri(), 1);
  // rows are nodes (0,0) (2,0) (0,2); columns 1, X1, X2
  CHECK(vm == lagfe::RatMatrix{{1, 0, 0}, {1, 2, 0}, {1, 0, 2}});
  CHECK(lagfe::check_unisolvence(tri(), 3));
  CHECK_FALSE(lagfe::check_unisolvence(flat(), 2));
  CHECK_THROWS_AS((lagfe::shape_functions(flat(), 2)), lagfe::NonUnisolventError);
  CHECK_THROWS_AS((lagfe::build_element(flat(), 2)), lagfe::DegenerateSimplexError);
  CHECK(lagfe::linear_form(tri(), 2, MultiIndex{1, 1}, X(2, 1) * X(2, 2)) == Rational(1));
}

TEST_CASE("built element") {
  const auto el = lagfe::build_element(VertexFamily({{1}, {r(5, 2)}}), 2);
  CHECK(el.d() == 1);
  CHECK(el.nodes == std::vector<Point>{{1}, {r(7, 4)}, {r(5, 2)}});
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t a = 0; a < 3; ++a) CHECK(el.shape_functions[b].eval(el.nodes[a]) == Rational(a == b ? 1 : 0));
  }
}

TEST_CASE("nodes on face hyperplanes") {
  CHECK(lagfe::nodes_on_hyperplane(tri(), 2, 0) == std::vector<MultiIndex>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(lagfe::nodes_on_hyperplane(tri(), 2, 1) == std::vector<MultiIndex>{{0, 0}, {0, 1}, {0, 2}});
  CHECK_THROWS_AS((lagfe::nodes_on_hyperplane(tri(), 2, 3)), lagfe::BoundsError);
  CHECK(lagfe::hyperface_node_transport_check(tri(), 3, 0));
  CHECK(lagfe::hyperface_node_transport_check(tri(), 3, 2));
}

TEST_CASE("factorization on a face hyperplane") {
  const auto lam = lagfe::barycentric_polynomials(tri());
  const auto q = X(2, 1) - r(3) * X(2, 2) + C(2, r(1, 2));
  for (std::size_t i = 0; i <= 2; ++i) CHECK(lagfe::factor_on_hyperplane(tri(), 2, i, lam[i] * q) == q);
  // d = 1: the face is a single vertex
  const VertexFamily seg({{1}, {3}});
  const auto ls = lagfe::barycentric_polynomials(seg);
  CHECK(lagfe::factor_on_hyperplane(seg, 2, 0, ls[0] * X(1, 1)) == X(1, 1));
  CHECK_THROWS_AS((lagfe::factor_on_hyperplane(tri(), 2, 1, lam[1] * q + C(2, 1))), lagfe::NotVanishingError);
  CHECK_THROWS_AS((lagfe::factor_on_hyperplane(tri(), 1, 1, lam[1] * q)), lagfe::BoundsError);
}

TEST_CASE("face unisolvence") {
  const auto th = lagfe::shape_functions(tri(), 2);
  // face 1 is x = 0 and holds labels with alpha_1 = 0: indices 0, 2, 5
  CHECK(lagfe::face_unisolvence_check(tri(), 2, 1, th[3]));
  CHECK(lagfe::face_unisolvence_check(tri(), 2, 1, th[4]));
  CHECK_FALSE(lagfe::face_unisolvence_check(tri(), 2, 1, th[0]));
  CHECK_FALSE(lagfe::face_unisolvence_check(tri(), 2, 1, th[2]));
  const auto c = lagfe::face_unisolvence_conditions(tri(), 2, 1, th[5]);
  CHECK_FALSE(c.nodes_vanish);
  CHECK_FALSE(c.restriction_zero);
  CHECK_THROWS_AS((lagfe::face_unisolvence_check(VertexFamily({{0}, {1}}), 1, 0, X(1, 1))), lagfe::BoundsError);
}
