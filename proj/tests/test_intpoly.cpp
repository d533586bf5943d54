#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "brdyn/families.hpp"
#include "brdyn/intpoly.hpp"

using namespace brdyn;
using cplx = std::complex<long double>;

namespace {

// Closed-form roots, used as an oracle for the iterative solvers.
std::vector<cplx> quadratic_roots(long double a, long double b, long double c) {
  cplx d = std::sqrt(cplx(b * b - 4 * a * c));
  return {(-b + d) / (2 * a), (-b - d) / (2 * a)};
}

std::vector<cplx> cubic_roots(long double a, long double b, long double c, long double d) {
  // Depressed cubic y^3 + p y + q, x = y - b/(3a).
  b /= a, c /= a, d /= a;
  long double p = c - b * b / 3, q = 2 * b * b * b / 27 - b * c / 3 + d;
  cplx disc = std::sqrt(cplx(q * q / 4 + p * p * p / 27));
  cplx u = std::pow(-q / 2 + disc, 1.0L / 3);
  if (std::abs(u) < 1e-18L) u = std::pow(-q / 2 - disc, 1.0L / 3);
  const cplx w(-0.5L, std::sqrt(3.0L) / 2);
  std::vector<cplx> out;
  for (int k = 0; k < 3; ++k) {
    cplx uk = u * std::pow(w, k);
    cplx y = std::abs(uk) < 1e-18L ? cplx(0) : uk - p / (3.0L * uk);
    out.push_back(y - b / 3);
  }
  return out;
}

std::vector<cplx> quartic_roots(long double a, long double b, long double c, long double d, long double e) {
  // Ferrari: depressed quartic y^4 + p y^2 + q y + r with x = y - b/(4a).
  b /= a, c /= a, d /= a, e /= a;
  long double p = c - 3 * b * b / 8, q = b * b * b / 8 - b * c / 2 + d,
              r = -3 * b * b * b * b / 256 + b * b * c / 16 - b * d / 4 + e;
  std::vector<cplx> ys;
  if (std::abs(q) < 1e-18L) {
    for (cplx z : quadratic_roots(1, p, r)) {
      ys.push_back(std::sqrt(z));
      ys.push_back(-std::sqrt(z));
    }
  } else {
    // Resolvent 8 m^3 + 8 p m^2 + (2 p^2 - 8 r) m - q^2 = 0, nonzero root.
    cplx mm = 0;
    for (cplx z : cubic_roots(8, 8 * p, 2 * p * p - 8 * r, -q * q))
      if (std::abs(z) > std::abs(mm)) mm = z;
    cplx s = std::sqrt(2.0L * mm);
    for (int sg : {1, -1}) {
      cplx ss = cplx(sg) * s;
      cplx disc = std::sqrt(-(2.0L * p + 2.0L * mm + cplx(sg) * std::sqrt(2.0L) * q / std::sqrt(mm)));
      ys.push_back((ss + disc) / 2.0L);
      ys.push_back((ss - disc) / 2.0L);
    }
  }
  for (cplx& y : ys) y -= b / 4;
  return ys;
}

long double oracle_largest_real(const IntPolynomial& p) {
  std::vector<long double> c;
  for (const auto& x : p.coeffs()) c.push_back(static_cast<long double>(x));
  std::vector<cplx> r;
  if (p.degree() == 1) r = {cplx(-c[0] / c[1])};
  if (p.degree() == 2) r = quadratic_roots(c[2], c[1], c[0]);
  if (p.degree() == 3) r = cubic_roots(c[3], c[2], c[1], c[0]);
  if (p.degree() == 4) r = quartic_roots(c[4], c[3], c[2], c[1], c[0]);
  long double best = -1;
  for (cplx z : r)
    if (std::abs(z.imag()) < 1e-7L && z.real() > 0) best = std::max(best, z.real());
  return best;
}

// Counts |z| > 1 on Aberth output; the oracle for the exact count.
int numeric_outside(const IntPolynomial& p) {
  int n = 0;
  for (const auto& r : all_roots(p).roots)
    if (std::abs(r.value) > 1 + 1e-7) n += r.multiplicity;
  return n;
}

IntPolynomial random_poly(std::mt19937& rng, int max_deg, int max_coeff) {
  std::uniform_int_distribution<int> deg(1, max_deg), co(-max_coeff, max_coeff);
  for (;;) {
    int d = deg(rng);
    std::vector<Integer> c(d + 1);
    for (auto& x : c) x = co(rng);
    IntPolynomial p(c);
    if (p.degree() >= 1 && p[0] != 0) return p;
  }
}

}  // namespace

TEST_CASE("reciprocal") {
  CHECK(reciprocal(IntPolynomial{-2, -1, 1}) == IntPolynomial{1, -1, -2});
  CHECK(reciprocal(IntPolynomial{1}) == IntPolynomial{1});
  CHECK(reciprocal(IntPolynomial{-1, 1}) == IntPolynomial{1, -1});
  CHECK_THROWS_AS(reciprocal(IntPolynomial{}), ZeroPolynomial);
}

TEST_CASE("salem_boyd examples") {
  const IntPolynomial r1{-2, -1, 1};
  CHECK(salem_boyd(r1, 2, +1) == IntPolynomial{1, -1, -4, -1, 1});
  CHECK(salem_boyd(r1, 4, -1) == IntPolynomial{-1, 1, 2, 0, -2, -1, 1});
  const IntPolynomial p{3, 1, 0, 2};
  CHECK(salem_boyd(p, 0, +1) == p + reciprocal(p));
  CHECK_THROWS_AS(salem_boyd(IntPolynomial{}, 1, 1), ZeroPolynomial);
  CHECK_THROWS_AS(salem_boyd(IntPolynomial{0, 1}, 1, 1), ZeroConstantTerm);
}

TEST_CASE("reciprocity_class") {
  CHECK(reciprocity_class(IntPolynomial{1, -1, -4, -1, 1}) == Reciprocity::Reciprocal);
  CHECK(reciprocity_class(IntPolynomial{-1, 1, 2, 0, -2, -1, 1}) == Reciprocity::AntiReciprocal);
  CHECK(reciprocity_class(IntPolynomial{0, 1, 1}) == Reciprocity::Neither);
}

TEST_CASE("largest_real_root examples") {
  CHECK(largest_real_root(IntPolynomial{-2, 0, -1, 1}) == doctest::Approx(1.69562).epsilon(1e-5));
  CHECK(largest_real_root(IntPolynomial{-1, -1, -1, 1}) == doctest::Approx(1.83929).epsilon(1e-5));
  RootEnclosure e = largest_real_root_enclosure(IntPolynomial{-2, 1}, Rational(1, 1000000));
  CHECK(e.lo <= 2);
  CHECK(e.hi >= 2);
  CHECK(largest_real_root(IntPolynomial{-2, 1}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(largest_real_root(IntPolynomial{1, 0, 1}), NoRealRoot);
}

TEST_CASE("largest_real_root matches closed forms up to degree 4") {
  std::mt19937 rng(7);
  int tested = 0;
  for (int trial = 0; trial < 400; ++trial) {
    IntPolynomial p = random_poly(rng, 4, 5);
    long double want = oracle_largest_real(p);
    if (want <= 0) continue;
    // Skip near-double roots, where the closed forms lose accuracy.
    if (std::abs(static_cast<long double>(evaluate(p.derivative(), to_rational(double(want))))) < 1e-3) continue;
    ++tested;
    CHECK(std::abs(largest_real_root(p) - double(want)) < 1e-10);
  }
  CHECK(tested > 100);
}

TEST_CASE("all_roots examples") {
  auto r = all_roots(IntPolynomial{-2, -1, 1});
  std::vector<double> re;
  for (auto& z : r.roots) re.push_back(z.value.real());
  std::sort(re.begin(), re.end());
  REQUIRE(re.size() == 2);
  CHECK(re[0] == doctest::Approx(-1));
  CHECK(re[1] == doctest::Approx(2));

  auto i = all_roots(IntPolynomial{1, 0, 1});
  REQUIRE(i.roots.size() == 2);
  for (auto& z : i.roots) {
    CHECK(std::abs(z.value.real()) < 1e-12);
    CHECK(std::abs(std::abs(z.value.imag()) - 1) < 1e-12);
  }

  auto r2 = all_roots(IntPolynomial{-2, 0, -1, 1});
  int complex_count = 0;
  for (auto& z : r2.roots) {
    if (std::abs(z.value.imag()) > 1e-9) {
      ++complex_count;
      CHECK(std::abs(z.value) == doctest::Approx(std::sqrt(2 / 1.6956207695598620)).epsilon(1e-6));
    } else {
      CHECK(z.value.real() == doctest::Approx(1.69562).epsilon(1e-5));
    }
  }
  CHECK(complex_count == 2);
  CHECK(r2.total_multiplicity() == 3);
}

TEST_CASE("all_roots total multiplicity and residual") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    IntPolynomial p = random_poly(rng, 8, 4);
    IntPolynomial q = p * p;  // forces repeated roots
    auto rs = all_roots(q);
    CHECK(rs.total_multiplicity() == q.degree());
  }
}

TEST_CASE("mahler_measure") {
  for (int m = 1; m <= 10; ++m) CHECK(mahler_measure(rm_charpoly(m)) == doctest::Approx(2).epsilon(1e-9));
  CHECK(mahler_measure(IntPolynomial{-1, -1, 1}) == doctest::Approx(1.61803).epsilon(1e-5));
  CHECK(mahler_measure(IntPolynomial{1, 1, 1}) == doctest::Approx(1).epsilon(1e-12));
}

TEST_CASE("mahler multiplicativity on samples") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    IntPolynomial p = random_poly(rng, 5, 3), q = random_poly(rng, 5, 3);
    double a = mahler_measure(p * q), b = mahler_measure(p) * mahler_measure(q);
    CHECK(std::abs(a - b) <= 1e-7 * std::max(1.0, b));
  }
}

TEST_CASE("count_outside_unit") {
  CHECK(count_outside_unit(IntPolynomial{-2, -1, 1}) == 1);
  CHECK(count_outside_unit(IntPolynomial{-2, 0, -1, 1}) == 3);
  CHECK(count_outside_unit(IntPolynomial{1, 1, 1}) == 0);
  // Cyclotomic factors are decided exactly.
  CHECK(count_outside_unit(cyclotomic(12) * IntPolynomial{-2, -1, 1}) == 1);
}

TEST_CASE("count_outside_unit agrees with the numeric oracle") {
  std::mt19937 rng(3);
  int tested = 0;
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial p = random_poly(rng, 6, 3);
    int exact;
    try {
      exact = count_outside_unit(p);
    } catch (const BoundaryAmbiguity&) {
      continue;
    }
    ++tested;
    CHECK(exact == numeric_outside(p));
  }
  CHECK(tested > 150);
}

TEST_CASE("divide_exact") {
  IntPolynomial s13 = sigma_charpoly(1, 3);
  CHECK(divide_exact(s13, IntPolynomial{-1, 0, 1}) == IntPolynomial{1, -1, -1, -1, 1});
  IntPolynomial p{4, 0, 3};
  CHECK(divide_exact(p, IntPolynomial{1}) == p);
  CHECK_THROWS_AS(divide_exact(beta_charpoly(1, 1), IntPolynomial{-1, 1}), NotDivisible);
}

TEST_CASE("evaluate") {
  for (int m = 1; m <= 8; ++m) {
    CHECK(evaluate(rm_charpoly(m), 1) == -2);
    for (int n = 1; n <= 8; ++n) CHECK(evaluate(sigma_charpoly(m, n), 1) == 0);
  }
  CHECK(evaluate(IntPolynomial{}, Rational(3, 7)) == 0);
  CHECK(evaluate(IntPolynomial{1, 2, 3}, Rational(1, 2)) == Rational(11, 4));
}

TEST_CASE("reciprocal is an involution and Salem-Boyd terms are (anti-)reciprocal") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial p = random_poly(rng, 6, 3);
    CHECK(reciprocal(reciprocal(p)) == p);
    // n >= 1 keeps the formal degree; at n = 0, P - P_* can lose its top term.
    for (unsigned n = 1; n <= 12; n += 3)
      for (int sign : {1, -1}) {
        IntPolynomial q = salem_boyd(p, n, sign);
        if (q.is_zero()) continue;
        CHECK(reciprocity_class(q) != Reciprocity::Neither);
      }
  }
}

TEST_CASE("largest root of R_m decreases toward 1") {
  double prev = largest_real_root(rm_charpoly(1));
  CHECK(prev == doctest::Approx(2));
  for (int m = 2; m <= 30; ++m) {
    double x = largest_real_root(rm_charpoly(m));
    CHECK(x < prev);
    CHECK(x > 1);
    prev = x;
  }
  CHECK(largest_real_root(rm_charpoly(400)) < 1.02);
}

TEST_CASE("decimal string round trip") {
  IntPolynomial p{-2, -1, 1};
  CHECK(p.to_decimal_strings() == std::vector<std::string>{"-2", "-1", "1"});
  CHECK(IntPolynomial::from_decimal_strings(p.to_decimal_strings()) == p);
}
