#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "magflow/rational.hpp"

using namespace magflow;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(*parse_rational("3") == Rational(3));
  CHECK(*parse_rational("-7") == Rational(-7));
  CHECK(*parse_rational("+5") == Rational(5));
  CHECK(*parse_rational("3/4") == Rational(3, 4));
  CHECK(*parse_rational("-3/4") == Rational(-3, 4));
  CHECK(*parse_rational("  2/6 ") == Rational(1, 3));  // reduced
  // negative denominator canonicalizes
  CHECK(*parse_rational("1/-2") == Rational(-1, 2));
  CHECK(*parse_rational("0") == Rational(0));
  CHECK(*parse_rational("0/5") == Rational(0));
}

TEST_CASE("parse_rational rejects malformed text") {
  CHECK(!parse_rational(""));
  CHECK(!parse_rational("  "));
  CHECK(!parse_rational("a"));
  CHECK(!parse_rational("1.5"));
  CHECK(!parse_rational("1/"));
  CHECK(!parse_rational("/3"));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("1 2"));
  CHECK(!parse_rational("2/3/4"));
  CHECK(!parse_rational("--3"));
}

TEST_CASE("format_rational is the inverse on canonical values") {
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(format_rational(Rational(-5)) == "-5");
  CHECK(format_rational(Rational(1, 3)) == "1/3");
  CHECK(format_rational(Rational(-2, 6)) == "-1/3");
  CHECK(format_rational(Rational(0)) == "0");
  for (const char* s : {"0", "7", "-12", "22/7", "-1/999"})
    CHECK(format_rational(*parse_rational(s)) == s);
}

TEST_CASE("rationals stay exact far beyond 64 bits") {
  Rational big = Rational(1) / 3;
  for (int i = 0; i < 50; ++i) big *= Rational(1000000007);
  Rational back = big;
  for (int i = 0; i < 50; ++i) back /= Rational(1000000007);
  CHECK(back == Rational(1, 3));
  CHECK(to_double(Rational(1, 2)) == 0.5);
  CHECK(to_double(Rational(-3, 4)) == -0.75);
}
