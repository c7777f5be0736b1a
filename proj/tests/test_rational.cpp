#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "wrp/rational.hpp"

using wrp::Rational;

TEST_CASE("arithmetic is exact and normalized") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK((-Rational(1, 2)).numerator() == -1);
}

TEST_CASE("comparisons are exact, not float-mediated") {
  // 1/3 differs from any finite decimal.
  CHECK(Rational(1, 3) != Rational(333333333, 1000000000));
  CHECK(Rational(1, 3) > Rational(333333333, 1000000000));
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(5) >= Rational(5));
}

TEST_CASE("zero denominators are rejected") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(3) / Rational(0), std::domain_error);
}

TEST_CASE("parse accepts p, p/q and decimals") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("2.5") == Rational(5, 2));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse(".5") == Rational(1, 2));
}

TEST_CASE("parse rejects malformed input") {
  CHECK(!Rational::parse(""));
  CHECK(!Rational::parse("abc"));
  CHECK(!Rational::parse("1/0"));
  CHECK(!Rational::parse("1/"));
  CHECK(!Rational::parse("/2"));
  CHECK(!Rational::parse("1.2.3"));
  CHECK(!Rational::parse("1e3"));
  CHECK(!Rational::parse("2.-5"));
  CHECK(!Rational::parse("1 /2"));
}

TEST_CASE("formatting round-trips through parse") {
  for (Rational r : {Rational(0), Rational(7), Rational(-7), Rational(3, 4),
                     Rational(-13, 6), Rational(100, 3)}) {
    auto back = Rational::parse(r.str());
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(4, 2).str() == "2");
}

TEST_CASE("integrality and sign helpers") {
  CHECK(Rational(4, 2).is_integer());
  CHECK(!Rational(1, 2).is_integer());
  CHECK(Rational(-1, 2).is_negative());
  CHECK(!Rational(0).is_negative());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(1, 3).to_double() == doctest::Approx(0.333333).epsilon(1e-4));
}
