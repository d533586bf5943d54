#pragma once

#include <string>

#include "brdyn/intpoly.hpp"

namespace brdyn {

// Fixed-point decimal with `digits` places, ties rounded to even.
std::string round_half_even(const Rational& x, int digits);
std::string round_half_even(double x, int digits);

// "[lo, hi]" rounded outward, so the printed interval still contains the root.
std::string interval_string(const RootEnclosure& e, int digits);

}  // namespace brdyn
