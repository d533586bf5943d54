#pragma once

// Exact univariate polynomials over Z and the root machinery built on them:
// Sturm isolation for real roots, Aberth-Ehrlich for complex roots, Mahler
// measure and the count of roots outside the unit circle.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "brdyn/errors.hpp"

namespace brdyn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial monomial(const Integer& c, std::size_t k);
  static IntPolynomial constant(const Integer& c) { return monomial(c, 0); }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  // Coefficient of t^i, zero beyond the degree.
  Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& lead() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const Integer& k);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& k) { return a *= k; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Multiply by t^k.
  IntPolynomial shifted(std::size_t k) const;
  IntPolynomial derivative() const;

  // "t^2 - t - 2"
  std::string to_string(const std::string& var = "t") const;
  // ["-2","-1","1"] as a plain vector of decimal strings.
  std::vector<std::string> to_decimal_strings() const;
  static IntPolynomial from_decimal_strings(const std::vector<std::string>& s);

 private:
  void trim();
  std::vector<Integer> c_;
};

class NotDivisible : public Error {
 public:
  NotDivisible(IntPolynomial remainder)
      : Error("NotDivisible: nonzero remainder " + remainder.to_string()),
        remainder_(std::move(remainder)) {}
  const IntPolynomial& remainder() const { return remainder_; }

 private:
  IntPolynomial remainder_;
};

enum class Reciprocity { Reciprocal, AntiReciprocal, Neither };
std::string to_string(Reciprocity r);

// Coefficient reversal over the full coefficient span, t^d p(1/t).
IntPolynomial reciprocal(const IntPolynomial& p);
// t^n p + sign * p_*, sign = +1 or -1.
IntPolynomial salem_boyd(const IntPolynomial& p, unsigned n, int sign);
Reciprocity reciprocity_class(const IntPolynomial& p);

// Exact quotient p / q; q must have leading coefficient +-1.
IntPolynomial divide_exact(const IntPolynomial& p, const IntPolynomial& q);
Rational evaluate(const IntPolynomial& p, const Rational& x);
// Sign of p(x) without forming the rational value.
int sign_at(const IntPolynomial& p, const Rational& x);

// --- algebra over Z[t] used by the root routines ---
Integer content(const IntPolynomial& p);
// Divided by the content, leading coefficient made positive.
IntPolynomial primitive_part(const IntPolynomial& p);
// Positive multiple of (a mod b), content removed.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
// Quotient a/b where b divides a over Q[t] and both are integral; the result
// is integral by Gauss's lemma when b is primitive.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
// Yun decomposition: pairs (f_i, i) with p = c * prod f_i^i, f_i squarefree.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);
// Strip t^k; returns k through the out argument.
IntPolynomial strip_t_power(const IntPolynomial& p, int* k = nullptr);
// k-th cyclotomic polynomial.
IntPolynomial cyclotomic(unsigned k);

// --- real roots ---
struct RootEnclosure {
  Rational lo, hi;  // root in [lo, hi]
  double mid() const;
  Rational width() const { return hi - lo; }
};

class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);  // p is made squarefree
  // Number of distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const;
  const IntPolynomial& base() const { return seq_.front(); }

 private:
  int variations(const Rational& x) const;
  std::vector<IntPolynomial> seq_;
};

// 1 + max |c_i / c_lead|.
Rational cauchy_bound(const IntPolynomial& p);
// Largest positive real root enclosed to width <= tol.
RootEnclosure largest_real_root_enclosure(const IntPolynomial& p, const Rational& tol);
double largest_real_root(const IntPolynomial& p, double tol = 1e-12);
// Rational approximation of a double, exact binary expansion.
Rational to_rational(double x);

// --- complex roots ---
struct ApproxRoot {
  std::complex<double> value;
  int multiplicity;
};

struct RootSet {
  std::vector<ApproxRoot> roots;
  double residual_bound = 0;
  double tolerance = 0;
  int total_multiplicity() const;
};

// The first attempt runs in double precision; each retry doubles the decimal
// digits (32, 64, 128, 256).
struct AberthOptions {
  int max_sweeps = 200;
  int max_retries = 4;
};

// Simultaneous iteration on each squarefree factor, multiplicities from the
// decomposition. Throws ConvergenceFailure once retries are exhausted.
RootSet all_roots(const IntPolynomial& p, double tol = 1e-12, const AberthOptions& opt = {});
double mahler_measure(const IntPolynomial& p, double tol = 1e-9);
// Roots with |z| > 1 counted with multiplicity. Unit-circle roots are decided
// exactly; any other root within tol of the circle raises BoundaryAmbiguity.
int count_outside_unit(const IntPolynomial& p, double tol = 1e-9);

}  // namespace brdyn
