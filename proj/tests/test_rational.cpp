#include <doctest.h>

#include "sympgt/errors.hpp"
#include "sympgt/rational.hpp"

using namespace sympgt;

TEST_CASE("fraction strings always carry a positive denominator") {
  CHECK(to_fraction_string(Rational(0)) == "0/1");
  CHECK(to_fraction_string(Rational(7)) == "7/1");
  CHECK(to_fraction_string(Rational(1) / Rational(-2)) == "-1/2");
  CHECK(to_fraction_string(Rational(-6) / Rational(4)) == "-3/2");
  CHECK(to_fraction_string(Rational(Int("123456789123456789")) / Rational(3)) ==
        "41152263041152263/1");
}

TEST_CASE("parse_fraction inverts to_fraction_string") {
  for (const auto& text : {"0/1", "7/1", "-1/2", "-3/2", "41152263041152263/1"}) {
    CHECK(to_fraction_string(parse_fraction(text)) == text);
  }
}

TEST_CASE("parse_fraction accepts bare integers and sign-on-denominator") {
  CHECK(parse_fraction("5") == Rational(5));
  CHECK(parse_fraction("-5") == Rational(-5));
  CHECK(parse_fraction("1/-2") == Rational(-1) / Rational(2));
  CHECK(parse_fraction("2/4") == Rational(1) / Rational(2));
}

TEST_CASE("parse_fraction rejects malformed input") {
  CHECK_THROWS_AS(parse_fraction(""), ValidationError);
  CHECK_THROWS_AS(parse_fraction("/2"), ValidationError);
  CHECK_THROWS_AS(parse_fraction("1/"), ValidationError);
  CHECK_THROWS_AS(parse_fraction("1/2/3"), ValidationError);
  CHECK_THROWS_AS(parse_fraction("a"), ValidationError);
  CHECK_THROWS_AS(parse_fraction("1.5"), ValidationError);
  CHECK_THROWS_AS(parse_fraction(" 1/2"), ValidationError);
  CHECK_THROWS_AS(parse_fraction("1/0"), ValidationError);
}

TEST_CASE("arithmetic stays exact far beyond 64 bits") {
  Rational x(1);
  for (int i = 1; i <= 60; ++i) x *= Rational(Int(1) << 20, Int(i));
  Rational y = x;
  for (int i = 60; i >= 1; --i) y /= Rational(Int(1) << 20, Int(i));
  CHECK(y == Rational(1));
}
