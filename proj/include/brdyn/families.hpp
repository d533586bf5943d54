#pragma once

// The beta and sigma braid families: characteristic polynomials, the
// Thurston-Nielsen verdicts, and checks of the dilatation inequalities.
// Every strict inequality is decided on disjoint root enclosures.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "brdyn/intpoly.hpp"

namespace brdyn {

IntPolynomial rm_charpoly(int m);                 // t^m (t - 1) - 2
IntPolynomial beta_charpoly(int m, int n);        // t^{n+1} R_m + (R_m)_*
IntPolynomial sigma_charpoly(int m, int n);       // t^{n+1} R_m - (R_m)_*, as written; not symmetric in m, n

enum class TNKind { Periodic, Reducible, PseudoAnosov };
std::string to_string(TNKind k);

struct TNClass {
  TNKind kind = TNKind::PseudoAnosov;
  std::optional<IntPolynomial> charpoly;  // pseudo-Anosov only
  std::optional<double> dilatation;
};

TNClass classify_beta(int m, int n, double tol = 1e-12);
TNClass classify_sigma(int m, int n, double tol = 1e-12);

enum class Family { Beta, Sigma };
std::string to_string(Family f);

struct FamilyRow {
  Family family = Family::Beta;
  int m = 0, n = 0;
  TNClass cls;
  std::optional<double> mahler;
  std::optional<double> log_dilatation;
  // Strands m+n+1; a braid on 2g+1 strands lifts to genus g.
  int genus() const { return (m + n) / 2; }
};

FamilyRow family_row(Family f, int m, int n);
void to_json(nlohmann::json& j, const FamilyRow& r);
std::string csv_header();
std::string to_csv(const FamilyRow& r, int digits = 12);

// Largest-root comparison of two polynomials: -1 if root(a) < root(b), +1 if
// greater, 0 if the enclosures still overlap at width `cap`.
int compare_largest_roots(const IntPolynomial& a, const IntPolynomial& b, const Rational& cap);
// The precision floor for every certified comparison below.
Rational default_precision_cap();

bool verify_interlacing(int m, int n, const Rational& cap = default_precision_cap());
bool verify_monotonicity(int m, int n_max, const Rational& cap = default_precision_cap());

struct MinimalityResult {
  FamilyRow argmin;
  bool expected;  // argmin is sigma_{g-1,g+1} and every other row is strictly larger
};
// Only the mirror sigma_{g+1,g-1} may tie with the minimum.
MinimalityResult verify_minimality(int g, const Rational& cap = default_precision_cap());

bool verify_bounds(int g, const Rational& cap = default_precision_cap());
double penner_floor(int g);

// Rows for m+n in [2 g_min, 2 g_max], sorted by (genus, family, dilatation).
std::vector<FamilyRow> family_table(int g_min, int g_max);

}  // namespace brdyn
