#include <doctest.h>

#include <cmath>
#include <sstream>

#include "brdyn/families.hpp"
#include "brdyn/graphdyn.hpp"

using namespace brdyn;

namespace {

// t^{n+1} R_m(t) + sign (1 - t - 2 t^{m+1}), evaluated directly.
long double family_value(int m, int n, int sign, long double t) {
  long double r = std::pow(t, m) * (t - 1) - 2;
  long double rstar = 1 - t - 2 * std::pow(t, m + 1);
  return std::pow(t, n + 1) * r + sign * rstar;
}

// Largest root in (1, 3): scan down from 3 to the first sign change, then
// bisect. The oracle for every dilatation checked below.
double oracle_root(int m, int n, int sign) {
  const long double step = 1e-4L;
  long double hi = 3, lo = hi - step;
  const int s0 = family_value(m, n, sign, hi) > 0 ? 1 : -1;
  while ((family_value(m, n, sign, lo) > 0 ? 1 : -1) == s0) {
    hi = lo;
    lo -= step;
  }
  for (int i = 0; i < 80; ++i) {
    long double mid = (lo + hi) / 2;
    if ((family_value(m, n, sign, mid) > 0 ? 1 : -1) == s0)
      hi = mid;
    else
      lo = mid;
  }
  return static_cast<double>((lo + hi) / 2);
}

}  // namespace

TEST_CASE("family polynomials") {
  CHECK(rm_charpoly(1) == IntPolynomial{-2, -1, 1});
  CHECK(rm_charpoly(2).to_decimal_strings() == std::vector<std::string>{"-2", "0", "-1", "1"});
  CHECK(beta_charpoly(1, 1) == IntPolynomial{1, -1, -4, -1, 1});
  // Equal dilatations through a shared quartic factor, not equal polynomials.
  CHECK(beta_charpoly(2, 3) != sigma_charpoly(1, 4));
  CHECK(exact_quotient(beta_charpoly(2, 3), IntPolynomial{1, -2, 1, -2, 1}) == IntPolynomial{1, 1, 1, 1});
  CHECK(exact_quotient(sigma_charpoly(1, 4), IntPolynomial{1, -2, 1, -2, 1}) == IntPolynomial{-1, -1, 1, 1});
  CHECK(divide_exact(sigma_charpoly(1, 3), IntPolynomial{-1, 0, 1}) == IntPolynomial{1, -1, -1, -1, 1});
  for (int m = 1; m <= 20; ++m) {
    CHECK(evaluate(rm_charpoly(m), Rational(1)) == Rational(-2));
    for (int n = 1; n <= 20; ++n) CHECK(evaluate(sigma_charpoly(m, n), Rational(1)) == Rational(0));
  }
  CHECK_THROWS_AS(beta_charpoly(0, 2), BadParameters);
  CHECK_THROWS_AS(rm_charpoly(0), BadParameters);
}

TEST_CASE("dilatations against a direct bisection oracle") {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 10; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(*classify_beta(m, n).dilatation == doctest::Approx(oracle_root(m, n, +1)).epsilon(1e-11));
      if (n >= m + 2)
        CHECK(*classify_sigma(m, n).dilatation == doctest::Approx(oracle_root(m, n, -1)).epsilon(1e-11));
    }
}

TEST_CASE("frozen dilatations") {
  CHECK(std::log(*classify_sigma(4, 6).dilatation) == doctest::Approx(0.240965).epsilon(1e-6));
  CHECK(*classify_sigma(2, 5).dilatation == doctest::Approx(1.5823).epsilon(5e-4));
  CHECK(largest_real_root(rm_charpoly(2)) == doctest::Approx(1.69562).epsilon(1e-5));
  CHECK(*classify_beta(1, 1).dilatation == doctest::Approx(2.61803).epsilon(1e-5));
  CHECK(*classify_sigma(1, 3).dilatation == doctest::Approx(1.72208).epsilon(1e-5));
  CHECK(penner_floor(2) == doctest::Approx(0.05776).epsilon(1e-4));
}

TEST_CASE("classification") {
  CHECK(classify_sigma(3, 3).kind == TNKind::Periodic);
  CHECK_FALSE(classify_sigma(3, 3).dilatation.has_value());
  CHECK(classify_sigma(3, 4).kind == TNKind::Reducible);
  CHECK(classify_sigma(5, 4).kind == TNKind::Reducible);
  CHECK(classify_sigma(2, 5).kind == TNKind::PseudoAnosov);
  CHECK(classify_beta(2, 2).kind == TNKind::PseudoAnosov);
  CHECK(to_string(TNKind::Reducible) == "Reducible");
}

TEST_CASE("symmetry in m and n") {
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n) {
      CHECK(*classify_beta(m, n).dilatation == doctest::Approx(*classify_beta(n, m).dilatation).epsilon(1e-9));
      CHECK(compare_largest_roots(beta_charpoly(m, n), beta_charpoly(n, m), default_precision_cap()) == 0);
      if (std::abs(m - n) >= 2)
        CHECK(*classify_sigma(m, n).dilatation == doctest::Approx(*classify_sigma(n, m).dilatation).epsilon(1e-9));
    }
  // T_{m,n} is symmetric as a polynomial; S_{m,n} is not, and S_{n,m} with
  // n > m does not carry the dilatation.
  CHECK(beta_charpoly(1, 3) == beta_charpoly(3, 1));
  CHECK(compare_largest_roots(sigma_charpoly(5, 2), sigma_charpoly(2, 5), default_precision_cap()) < 0);
}

TEST_CASE("agreement with the graph maps") {
  for (int m = 1; m <= 15; ++m)
    for (int n = 1; m + n <= 16; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(spectral_radius(transition_matrix(gprime_graph_map(m, n)).entries) ==
            doctest::Approx(*classify_beta(m, n).dilatation).epsilon(1e-9));
      if (n >= m + 2)
        CHECK(spectral_radius(transition_matrix(hmn_graph_map(m, n)).entries) ==
              doctest::Approx(*classify_sigma(m, n).dilatation).epsilon(1e-9));
    }
}

TEST_CASE("beta dominates sigma, and forcing spot checks") {
  const Rational cap = default_precision_cap();
  for (int m = 1; m <= 6; ++m)
    for (int n = m + 2; n <= 10; ++n) {
      CHECK(compare_largest_roots(beta_charpoly(m, n), sigma_charpoly(m, n), cap) > 0);
      CHECK(compare_largest_roots(beta_charpoly(m, n), beta_charpoly(m, n + 1), cap) > 0);
      CHECK(compare_largest_roots(beta_charpoly(m, n), beta_charpoly(m + 1, n), cap) > 0);
      for (int l = m + 2; l <= 12; ++l) CHECK(compare_largest_roots(beta_charpoly(m, n), sigma_charpoly(m, l), cap) > 0);
    }
}

TEST_CASE("interlacing and monotonicity") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = m + 2; n <= 14; ++n) CHECK(verify_interlacing(m, n));
    CHECK(verify_monotonicity(m, m + 12));
  }
  CHECK_THROWS_AS(verify_interlacing(2, 3), BadParameters);
  CHECK_THROWS_AS(verify_monotonicity(2, 4), BadParameters);
}

TEST_CASE("minimality") {
  for (int g = 2; g <= 12; ++g) {
    CAPTURE(g);
    MinimalityResult r = verify_minimality(g);
    CHECK(r.expected);
    CHECK(r.argmin.family == Family::Sigma);
    CHECK(r.argmin.m == g - 1);
    CHECK(r.argmin.n == g + 1);
  }
  // In genus 2 the minimum is attained by both families.
  CHECK(compare_largest_roots(beta_charpoly(2, 3), sigma_charpoly(1, 4), default_precision_cap()) == 0);
}

TEST_CASE("bounds and the Penner floor") {
  for (int g = 2; g <= 50; ++g) {
    CAPTURE(g);
    CHECK(verify_bounds(g));
    CHECK(std::log(*classify_sigma(g - 1, g + 1).dilatation) > penner_floor(g));
  }
  CHECK_THROWS_AS(verify_bounds(1), BadParameters);
}

TEST_CASE("certified comparison") {
  const Rational cap = default_precision_cap();
  CHECK(compare_largest_roots(IntPolynomial{-2, 0, 1}, IntPolynomial{-3, 0, 1}, cap) == -1);
  CHECK(compare_largest_roots(IntPolynomial{-3, 0, 1}, IntPolynomial{-2, 0, 1}, cap) == 1);
  CHECK(compare_largest_roots(IntPolynomial{-2, 0, 1}, IntPolynomial{-4, 0, 2}, cap) == 0);
}

TEST_CASE("table rows") {
  auto rows = family_table(2, 3);
  CHECK(rows.size() == 2 * (3 + 4 + 5));
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].genus() <= rows[i].genus());
  // The first pseudo-Anosov sigma row of genus 2 is the minimiser.
  auto it = std::find_if(rows.begin(), rows.end(), [](const FamilyRow& r) { return r.family == Family::Sigma; });
  REQUIRE(it != rows.end());
  CHECK(it->m == 1);
  CHECK(it->n == 3);

  FamilyRow r = family_row(Family::Sigma, 1, 3);
  nlohmann::json j = r;
  CHECK(j["family"] == "sigma");
  CHECK(j["kind"] == "PseudoAnosov");
  CHECK(j["dilatation"].get<double>() == doctest::Approx(1.72208).epsilon(1e-5));
  CHECK(j["charpoly"].size() == 7);
  CHECK(to_csv(r, 5).starts_with("sigma,1,3,PseudoAnosov,1.72208,"));
  CHECK(to_csv(r, 5).ends_with(",-1 1 2 0 -2 -1 1"));
  const std::string csv = to_csv(r), header = csv_header();
  CHECK(std::count(csv.begin(), csv.end(), ',') == std::count(header.begin(), header.end(), ','));

  FamilyRow periodic = family_row(Family::Sigma, 2, 2);
  CHECK(nlohmann::json(periodic)["dilatation"].is_null());
  CHECK(to_csv(periodic) == "sigma,2,2,Periodic,,,,");
}

TEST_CASE("mahler measures approach 2") {
  for (int m = 1; m <= 20; ++m) CHECK(mahler_measure(rm_charpoly(m)) == doctest::Approx(2).epsilon(1e-9));
  // Monotone for m = 1 only; from m = 2 on the deviation oscillates in n.
  {
    const int m = 1;
    double prev_t = 1e9;
    for (int n = 1; n <= 30; ++n) {
      double t = std::abs(mahler_measure(beta_charpoly(m, n)) - 2);
      CHECK(t < prev_t);
      prev_t = t;
    }
  }
}
