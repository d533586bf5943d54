#include "brdyn/format.hpp"

#include <cmath>

namespace brdyn {

namespace {

enum class Mode { HalfEven, Down, Up };

std::string fixed(const Rational& x, int digits, Mode mode) {
  if (digits < 0) throw BadParameters("digits must be nonnegative");
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational y = abs(x) * scale;
  Integer q = numerator(y) / denominator(y);
  Rational frac = y - Rational(q);
  // Down and Up are directions on the real line, so they swap for x < 0.
  const bool away = mode == Mode::HalfEven
                        ? frac > Rational(1, 2) || (frac == Rational(1, 2) && q % 2 == 1)
                        : frac != 0 && ((mode == Mode::Up) == (x > 0));
  if (away) q += 1;
  std::string s = q.str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
    s.insert(s.size() - digits, ".");
  }
  if (x < 0 && q != 0) s = "-" + s;
  return s;
}

}  // namespace

std::string round_half_even(const Rational& x, int digits) { return fixed(x, digits, Mode::HalfEven); }

std::string round_half_even(double x, int digits) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  return round_half_even(to_rational(x), digits);
}

std::string interval_string(const RootEnclosure& e, int digits) {
  return "[" + fixed(e.lo, digits, Mode::Down) + ", " + fixed(e.hi, digits, Mode::Up) + "]";
}

}  // namespace brdyn
