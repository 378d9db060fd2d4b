#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <skewperm/arith.hpp>

using namespace skewperm;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(parse_rational("7") == Rat(7));
  CHECK(parse_rational("-3/4") == Rat(-3, 4));
  CHECK(parse_rational("+3/4") == Rat(3, 4));
  CHECK(parse_rational("2.5") == Rat(5, 2));
  CHECK(parse_rational("-0.125") == Rat(-1, 8));
  CHECK(parse_rational("0") == Rat(0));
  CHECK(parse_rational("-0") == Rat(0));
  CHECK(parse_rational("10/4") == Rat(5, 2));
  CHECK(parse_rational("0.3") == Rat(3, 10));
  CHECK(parse_rational("2.") == Rat(2));   // empty fraction part reads as 0
  CHECK(parse_rational(".5") == Rat(1, 2));  // empty whole part reads as 0
  CHECK(parse_rational("123456789012345678901234567890") ==
        Rat(Int("123456789012345678901234567890")));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("-."), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("--1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("3/"), std::invalid_argument);
}

TEST_CASE("rat_string prints reduced p/q form") {
  CHECK(rat_string(Rat(5)) == "5");
  CHECK(rat_string(Rat(-5)) == "-5");
  CHECK(rat_string(Rat(1, 3)) == "1/3");
  CHECK(rat_string(Rat(-1, 3)) == "-1/3");
  CHECK(rat_string(Rat(4, 2)) == "2");
  CHECK(rat_string(parse_rational("2.5")) == "5/2");
}

TEST_CASE("rat_double approximates the exact value") {
  CHECK(rat_double(Rat(1, 2)) == doctest::Approx(0.5));
  CHECK(rat_double(Rat(-7)) == doctest::Approx(-7.0));
  CHECK(rat_double(Rat(1, 3)) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("rationals round-trip through their string form") {
  for (const char* s : {"0", "-17", "22/7", "-355/113", "5/2"}) {
    CHECK(rat_string(parse_rational(s)) == s);
  }
}
