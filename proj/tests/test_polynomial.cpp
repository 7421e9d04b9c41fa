#include <doctest.h>

#include <random>

#include "lagfe/errors.hpp"
#include "lagfe/polynomial.hpp"

using lagfe::MultiIndex;
using lagfe::Point;
using lagfe::Polynomial;
using lagfe::Rational;

namespace {

Polynomial X(std::size_t d, std::size_t i) { return Polynomial::variable(d, i); }
Polynomial C(std::size_t d, Rational c) { return Polynomial::constant(d, c); }

Point pt(std::initializer_list<Rational> v) { return Point(v); }

Rational rnd(std::mt19937& g) {
  std::uniform_int_distribution<int> n(-9, 9), d(1, 4);
  return Rational::make(n(g), d(g));
}

}  // namespace

TEST_CASE("construction and printing") {
  const auto p = Rational::make(3, 2) * Polynomial::monomial(MultiIndex{2, 0, 1}) - X(3, 2) + C(3, 1);
  CHECK(p.to_string() == "3/2*X1^2*X3 - X2 + 1");
  CHECK(p.coeff(MultiIndex{0, 1, 0}) == Rational(-1));
  CHECK(p.coeff(MultiIndex{1, 1, 1}) == Rational(0));
  CHECK(Polynomial(2).to_string() == "0");
  CHECK(Polynomial(2).degree().is_neg_infinity());
  CHECK(p.degree() == lagfe::Degree::of(3));
  CHECK(lagfe::Degree::neg_infinity() < lagfe::Degree::of(0));
}

TEST_CASE("zero coefficients are pruned") {
  auto p = X(2, 1) + X(2, 2);
  p -= X(2, 2);
  CHECK(p == X(2, 1));
  CHECK(p.terms().size() == 1);
  CHECK((p - p).is_zero());
}

TEST_CASE("evaluation") {
  // p = X1^2 X2 - 3 X2 + 1/2 at (2, -1/3)
  const auto p = X(2, 1) * X(2, 1) * X(2, 2) - Rational(3) * X(2, 2) + C(2, Rational::make(1, 2));
  CHECK(p.eval(pt({2, Rational::make(-1, 3)})) == Rational::make(1, 6));
  CHECK_THROWS_AS((p.eval(pt({1}))), lagfe::DimensionMismatchError);
}

TEST_CASE("ring operations") {
  const auto one = C(1, 1);
  CHECK((one + X(1, 1)) * (one - X(1, 1)) == one - X(1, 1) * X(1, 1));
  const auto a = X(2, 1) + C(2, 2);
  const auto b = X(2, 2) - X(2, 1);
  CHECK(a * b == b * a);
  CHECK(a * (b + a) == a * b + a * a);
  CHECK(Polynomial::monomial(MultiIndex{1, 2}) * Polynomial::monomial(MultiIndex{3, 0}) == Polynomial::monomial(MultiIndex{4, 2}));
  CHECK_THROWS_AS((X(1, 1) + X(2, 1)), lagfe::DimensionMismatchError);
  CHECK_THROWS_AS((Polynomial::variable(2, 3)), lagfe::BoundsError);
}

TEST_CASE("products agree pointwise") {
  std::mt19937 g(17);
  for (int t = 0; t < 20; ++t) {
    Polynomial p(3), q(3);
    for (int j = 0; j < 5; ++j) {
      p.add_term(MultiIndex{unsigned(g() % 3), unsigned(g() % 3), unsigned(g() % 3)}, rnd(g));
      q.add_term(MultiIndex{unsigned(g() % 3), unsigned(g() % 3), unsigned(g() % 3)}, rnd(g));
    }
    const Point x{rnd(g), rnd(g), rnd(g)};
    CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
  }
}

TEST_CASE("partial derivatives") {
  // d/dX1 d/dX2 of X1^2 X2^3 = 6 X1 X2^2
  CHECK(lagfe::partial_derivative(Polynomial::monomial(MultiIndex{2, 3}), MultiIndex{1, 1}) ==
        Rational(6) * Polynomial::monomial(MultiIndex{1, 2}));
  CHECK(lagfe::partial_derivative(Polynomial::monomial(MultiIndex{2, 3}), MultiIndex{3, 0}).is_zero());
  CHECK(lagfe::partial_derivative(X(2, 1), MultiIndex{0, 0}) == X(2, 1));
}

TEST_CASE("division by the last variable") {
  // X1 + X2 + X1 X2^2 = X1 + X2 (1 + X1 X2)
  const auto p = X(2, 1) + X(2, 2) + X(2, 1) * X(2, 2) * X(2, 2);
  const auto [p0, p1] = lagfe::divide_by_last_variable(p);
  CHECK(p0 == X(1, 1));
  CHECK(p1 == C(2, 1) + X(2, 1) * X(2, 2));
  CHECK(lagfe::embed_last(p0) == X(2, 1));
  CHECK(lagfe::zeta_inverse(p0, p1) == p);
  CHECK_THROWS_AS((lagfe::divide_by_last_variable(X(1, 1))), lagfe::DimensionMismatchError);
}

TEST_CASE("Horner coefficients") {
  // total degree 4: 2 + X1 X2 - X1^2 X2^2 + 5 X2^3 -> [2, X1, -X1^2, 5, 0]
  const auto x1 = X(2, 1), x2 = X(2, 2);
  const auto p = C(2, 2) + x1 * x2 - x1 * x1 * x2 * x2 + Rational(5) * x2 * x2 * x2;
  const auto r = lagfe::horner_coefficients(p);
  REQUIRE(r.size() == 5);
  CHECK(r[0] == C(1, 2));
  CHECK(r[1] == X(1, 1));
  CHECK(r[2] == -(X(1, 1) * X(1, 1)));
  CHECK(r[3] == C(1, 5));
  CHECK(r[4].is_zero());
}

TEST_CASE("affine composition") {
  // p(x, y) = x y, f(s) = (2s + 1, s - 1)  ->  2 s^2 - s - 1
  const auto p = X(2, 1) * X(2, 2);
  const lagfe::AffineMap f{lagfe::RatMatrix{{2}, {1}}, Point{1, -1}};
  const auto s = X(1, 1);
  CHECK(lagfe::compose_affine(p, f) == Rational(2) * s * s - s - C(1, 1));
  CHECK(lagfe::compose_affine(C(2, 7), f) == C(1, 7));
  CHECK_THROWS_AS((lagfe::compose_affine(X(3, 1), f)), lagfe::DimensionMismatchError);

  std::mt19937 g(23);
  lagfe::RatMatrix m(3, 2);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 2; ++c) m(r, c) = rnd(g);
  }
  const lagfe::AffineMap h{m, Point{rnd(g), rnd(g), rnd(g)}};
  Polynomial q(3);
  for (int j = 0; j < 6; ++j) q.add_term(MultiIndex{unsigned(g() % 3), unsigned(g() % 3), unsigned(g() % 3)}, rnd(g));
  const auto qh = lagfe::compose_affine(q, h);
  for (int t = 0; t < 10; ++t) {
    const Point y{rnd(g), rnd(g)};
    CHECK(qh.eval(y) == q.eval(lagfe::affine_apply(h, y)));
  }
}

TEST_CASE("univariate Lagrange polynomials") {
  // nodes 0, 1/2, 1: middle one is 4 X (1 - X)
  const std::vector<Rational> a{0, Rational::make(1, 2), 1};
  const auto s = X(1, 1);
  CHECK(lagfe::lagrange_1d(a, 1) == Rational(4) * s - Rational(4) * s * s);
  CHECK(lagfe::lagrange_1d(std::vector<Rational>{3}, 0) == C(1, 1));
  CHECK_THROWS_AS((lagfe::lagrange_1d(std::vector<Rational>{1, 2, 1}, 0)), lagfe::DuplicateNodeError);
  CHECK_THROWS_AS((lagfe::lagrange_1d(a, 3)), lagfe::BoundsError);
}
