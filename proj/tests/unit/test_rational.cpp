#include <doctest.h>

#include "signet/rational.hpp"
#include "signet/ratmat.hpp"

using namespace signet;

TEST_CASE("parse_rational reads integers, decimals and fractions exactly") {
  CHECK(parse_rational("-3") == rational(-3));
  CHECK(parse_rational("1.25") == rational(5, 4));
  CHECK(parse_rational("-0.1") == rational(-1, 10));
  CHECK(parse_rational("7/2") == rational(7, 2));
  CHECK(parse_rational("-4/6") == rational(-2, 3));
  CHECK(parse_rational("+2") == rational(2));
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
}

TEST_CASE("rational_from_double is exact on dyadics and integers") {
  CHECK(rational_from_double(0.5) == rational(1, 2));
  CHECK(rational_from_double(-3.0) == rational(-3));
  CHECK(rational_from_double(0.0) == rational(0));
  CHECK(to_double(rational_from_double(0.1)) == 0.1);
}

TEST_CASE("to_string emits terminating decimals or fractions") {
  CHECK(to_string(rational(-3)) == "-3");
  CHECK(to_string(rational(1, 2)) == "0.5");
  CHECK(to_string(rational(-1, 10)) == "-0.1");
  CHECK(to_string(rational(1, 3)) == "1/3");
  CHECK(parse_rational(to_string(rational(7, 20))) == rational(7, 20));
}

TEST_CASE("rational matrix rank and determinant are exact") {
  RatMat m = RatMat::from_rows({{1, 2}, {2, 4}});
  CHECK(m.rank() == 1);
  CHECK(m.determinant() == rational(0));

  RatMat c2 = RatMat::from_rows({{0, 1, 4, 14}, {0, 1, 6, 32}, {0, 1, 6, 30}, {1, 3, 12, 52}});
  CHECK(c2.rank() == 4);
  CHECK(c2.determinant() == rational(4));
}

TEST_CASE("kalman_matrix stacks powers exactly") {
  RatMat a = RatMat::from_rows({{0, 1}, {0, 0}});
  RatMat b(2, 1);
  b(1, 0) = rational(1);
  RatMat k = kalman_matrix(a, b);
  CHECK(k(0, 0) == rational(0));
  CHECK(k(0, 1) == rational(1));
  CHECK(k(1, 0) == rational(1));
  CHECK(k(1, 1) == rational(0));
  CHECK(k.rank() == 2);
}
