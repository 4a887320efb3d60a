#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fat/base.hpp"
#include "fat/rational.hpp"

using fat::Rational;

TEST_CASE("normalization and identity") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(1).is_one());
  CHECK(Rational(3, 3).is_one());
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK_THROWS_AS(Rational(1, 0), fat::Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), fat::Error);
}

TEST_CASE("ordering is exact") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(2, 8) == Rational(1, 4));
  // tight comparison: 2/s with s = 8 against 1/4
  CHECK_FALSE(Rational(1, 4) > Rational(2, 8));
}

TEST_CASE("printing and parsing") {
  CHECK(Rational(1, 4).to_string() == "1/4");
  CHECK(Rational(3).to_string() == "3");
  CHECK(fat::decimal_string(Rational(1, 4)) == "0.25");
  CHECK(Rational::parse("1/4") == Rational(1, 4));
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("x/2"), fat::Error);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), fat::Error);
}

TEST_CASE("sum-then-subtract round trip over random small fractions") {
  fat::SplitMix rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    long long an = (long long)rng.below(41) - 20;
    long long ad = (long long)rng.below(20) + 1;
    long long bn = (long long)rng.below(41) - 20;
    long long bd = (long long)rng.below(20) + 1;
    Rational a(an, ad), b(bn, bd);
    CHECK((a + b) - b == a);
    if (bn != 0) CHECK((a * b) / b == a);
  }
}

TEST_CASE("uniform branch masses sum to exactly one") {
  for (int s : {2, 3, 4, 5, 7, 8, 16}) {
    Rational total(0);
    for (int i = 0; i < s; ++i) total += Rational(1, s);
    CHECK(total == Rational(1));
  }
}
