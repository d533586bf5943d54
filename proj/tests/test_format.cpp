#include <doctest.h>

#include "brdyn/format.hpp"

using namespace brdyn;

TEST_CASE("half-to-even rounding") {
  CHECK(round_half_even(Rational(5, 2), 0) == "2");
  CHECK(round_half_even(Rational(7, 2), 0) == "4");
  CHECK(round_half_even(Rational(-5, 2), 0) == "-2");
  CHECK(round_half_even(0.125, 2) == "0.12");
  CHECK(round_half_even(0.375, 2) == "0.38");
  CHECK(round_half_even(Rational(1, 3), 5) == "0.33333");
  CHECK(round_half_even(-0.001, 2) == "0.00");
  CHECK(round_half_even(1.0, 3) == "1.000");
  CHECK(round_half_even(2.5, 0) == "2");
}

TEST_CASE("outward interval rounding") {
  CHECK(interval_string({Rational(1, 3), Rational(2, 3)}, 2) == "[0.33, 0.67]");
  CHECK(interval_string({Rational(-2, 3), Rational(-1, 3)}, 2) == "[-0.67, -0.33]");
  CHECK(interval_string({Rational(1, 4), Rational(1, 4)}, 2) == "[0.25, 0.25]");
  RootEnclosure e = largest_real_root_enclosure(IntPolynomial{-2, 0, 1}, Rational(1, 1000000));
  CHECK(interval_string(e, 4) == "[1.4142, 1.4143]");
}
