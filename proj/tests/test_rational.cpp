#include <doctest.h>

#include <sstream>

#include "lagfe/errors.hpp"
#include "lagfe/rational.hpp"

using lagfe::Rational;

TEST_CASE("canonical form") {
  const auto r = Rational::make(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational::make(0, -7) == Rational(0));
  CHECK(Rational::make(0, -7).denominator() == 1);
  CHECK(Rational::make(mpz_class(10), mpz_class(-25)) == Rational::make(-2, 5));
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS((Rational::make(1, 0)), lagfe::ZeroDenominatorError);
  CHECK_THROWS_AS((Rational(3) / Rational(0)), lagfe::ZeroDenominatorError);
  CHECK_THROWS_AS((Rational(0).pow(-1)), lagfe::ZeroDenominatorError);
  CHECK_THROWS_AS((Rational::parse("1/0")), lagfe::ZeroDenominatorError);
}

TEST_CASE("parse and print round trip") {
  CHECK(Rational::parse("6/-4") == Rational::make(-3, 2));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::make(-3, 2).to_string() == "-3/2");
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational().to_string() == "0");
  for (const char* s : {"7/9", "-1/3", "0", "123456789012345678901234567891/7"}) {
    CHECK(Rational::parse(s).to_string() == s);
  }
  CHECK_THROWS_AS((Rational::parse("abc")), lagfe::ParseError);
  CHECK_THROWS_AS((Rational::parse("1/")), lagfe::ParseError);
  CHECK_THROWS_AS((Rational::parse("")), lagfe::ParseError);
  std::ostringstream os;
  os << Rational::make(2, 6);
  CHECK(os.str() == "1/3");
}

TEST_CASE("field arithmetic") {
  const auto a = Rational::make(1, 3);
  const auto b = Rational::make(1, 6);
  CHECK(a + b == Rational::make(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational::make(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational::make(-1, 3));
  CHECK(Rational::make(2, 3).pow(3) == Rational::make(8, 27));
  CHECK(Rational::make(2, 3).pow(-2) == Rational::make(9, 4));
  CHECK(Rational::make(2, 3).pow(0) == Rational(1));
}

TEST_CASE("ordering") {
  CHECK(Rational::make(1, 3) < Rational::make(1, 2));
  CHECK(Rational::make(-1, 2) < Rational::make(-1, 3));
  CHECK(Rational::make(2, 4) == Rational::make(1, 2));
  CHECK(Rational::make(-5, 3).sign() == -1);
  CHECK(Rational().is_zero());
}

TEST_CASE("harmonic sum beyond 64-bit denominators") {
  // H_n = sum 1/i; compare against the integer recurrence num/den built with mpz
  Rational h;
  mpz_class num = 0, den = 1;
  for (int i = 1; i <= 60; ++i) {
    h += Rational::make(1, i);
    num = num * i + den;
    den *= i;
  }
  CHECK(h == Rational::make(num, den));
  CHECK(h.denominator() > mpz_class("18446744073709551616"));
}
