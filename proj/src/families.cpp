#include "brdyn/families.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "brdyn/format.hpp"

namespace brdyn {

namespace {

void require_mn(int m, int n) {
  if (m < 1 || n < 1) throw BadParameters("family parameters need m, n >= 1");
}

Rational power_of_ten(int k) {
  Integer d = 1;
  for (int i = 0; i < k; ++i) d *= 10;
  return Rational(Integer(1), d);
}

}  // namespace

IntPolynomial rm_charpoly(int m) {
  if (m < 1) throw BadParameters("R_m needs m >= 1");
  return IntPolynomial::monomial(1, m + 1) - IntPolynomial::monomial(1, m) - IntPolynomial::constant(2);
}

IntPolynomial beta_charpoly(int m, int n) {
  require_mn(m, n);
  return salem_boyd(rm_charpoly(m), n + 1, +1);
}

IntPolynomial sigma_charpoly(int m, int n) {
  require_mn(m, n);
  return salem_boyd(rm_charpoly(m), n + 1, -1);
}

std::string to_string(TNKind k) {
  switch (k) {
    case TNKind::Periodic: return "Periodic";
    case TNKind::Reducible: return "Reducible";
    case TNKind::PseudoAnosov: return "PseudoAnosov";
  }
  return "?";
}

std::string to_string(Family f) { return f == Family::Beta ? "beta" : "sigma"; }

TNClass classify_beta(int m, int n, double tol) {
  IntPolynomial p = beta_charpoly(m, n);
  double lam = largest_real_root(p, tol);
  return {TNKind::PseudoAnosov, p, lam};
}

TNClass classify_sigma(int m, int n, double tol) {
  require_mn(m, n);
  if (m == n) return {TNKind::Periodic, std::nullopt, std::nullopt};
  if (std::abs(m - n) == 1) return {TNKind::Reducible, std::nullopt, std::nullopt};
  // sigma_{n,m} is conjugate to the inverse of sigma_{m,n}; the formula only
  // gives the dilatation with the smaller index first.
  IntPolynomial p = sigma_charpoly(std::min(m, n), std::max(m, n));
  double lam = largest_real_root(p, tol);
  return {TNKind::PseudoAnosov, p, lam};
}

FamilyRow family_row(Family f, int m, int n) {
  FamilyRow r;
  r.family = f;
  r.m = m;
  r.n = n;
  r.cls = f == Family::Beta ? classify_beta(m, n) : classify_sigma(m, n);
  if (r.cls.kind == TNKind::PseudoAnosov) {
    r.mahler = mahler_measure(*r.cls.charpoly);
    r.log_dilatation = std::log(*r.cls.dilatation);
  }
  return r;
}

void to_json(nlohmann::json& j, const FamilyRow& r) {
  j = nlohmann::json{{"family", to_string(r.family)}, {"m", r.m}, {"n", r.n}, {"kind", to_string(r.cls.kind)}};
  j["dilatation"] = r.cls.dilatation ? nlohmann::json(*r.cls.dilatation) : nlohmann::json(nullptr);
  j["log_dilatation"] = r.log_dilatation ? nlohmann::json(*r.log_dilatation) : nlohmann::json(nullptr);
  j["mahler"] = r.mahler ? nlohmann::json(*r.mahler) : nlohmann::json(nullptr);
  j["charpoly"] = r.cls.charpoly ? nlohmann::json(r.cls.charpoly->to_decimal_strings()) : nlohmann::json(nullptr);
}

std::string csv_header() { return "family,m,n,kind,dilatation,log_dilatation,mahler,charpoly"; }

std::string to_csv(const FamilyRow& r, int digits) {
  std::ostringstream os;
  auto num = [&](const std::optional<double>& x) { return x ? round_half_even(*x, digits) : std::string(); };
  os << to_string(r.family) << ',' << r.m << ',' << r.n << ',' << to_string(r.cls.kind) << ','
     << num(r.cls.dilatation) << ',' << num(r.log_dilatation) << ',' << num(r.mahler) << ',';
  if (r.cls.charpoly) {
    // Space-separated coefficients, constant term first.
    const auto c = r.cls.charpoly->to_decimal_strings();
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
  }
  return os.str();
}

Rational default_precision_cap() { return power_of_ten(30); }

int compare_largest_roots(const IntPolynomial& a, const IntPolynomial& b, const Rational& cap) {
  for (int digits = 12;; digits += 6) {
    Rational tol = power_of_ten(digits);
    if (tol < cap) tol = cap;
    RootEnclosure ea = largest_real_root_enclosure(a, tol);
    RootEnclosure eb = largest_real_root_enclosure(b, tol);
    if (ea.hi < eb.lo) return -1;
    if (eb.hi < ea.lo) return 1;
    if (tol == cap) return 0;
  }
}

bool verify_interlacing(int m, int n, const Rational& cap) {
  if (m < 1 || n < m + 2) throw BadParameters("interlacing needs m >= 1 and n >= m + 2");
  const IntPolynomial r = rm_charpoly(m);
  return compare_largest_roots(sigma_charpoly(m, n), r, cap) < 0 &&
         compare_largest_roots(r, beta_charpoly(m, n), cap) < 0;
}

bool verify_monotonicity(int m, int n_max, const Rational& cap) {
  if (m < 1 || n_max < m + 3) throw BadParameters("monotonicity needs m >= 1 and n_max >= m + 3");
  for (int n = 1; n < n_max; ++n)
    if (compare_largest_roots(beta_charpoly(m, n), beta_charpoly(m, n + 1), cap) <= 0) return false;
  for (int n = m + 2; n < n_max; ++n)
    if (compare_largest_roots(sigma_charpoly(m, n), sigma_charpoly(m, n + 1), cap) >= 0) return false;
  return true;
}

MinimalityResult verify_minimality(int g, const Rational& cap) {
  if (g < 2) throw BadParameters("minimality needs g >= 2");
  struct Cand {
    Family f;
    int m, n;
    IntPolynomial p;
  };
  std::vector<Cand> cands;
  for (int m = 1; m < 2 * g; ++m) {
    const int n = 2 * g - m;
    cands.push_back({Family::Beta, m, n, beta_charpoly(m, n)});
    if (std::abs(m - n) >= 2) cands.push_back({Family::Sigma, m, n, sigma_charpoly(std::min(m, n), std::max(m, n))});
  }
  // Argmin by certified comparison; ties keep the earlier candidate, so the
  // m < n member of a mirror pair wins.
  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i)
    if (compare_largest_roots(cands[i].p, cands[best].p, cap) < 0) best = i;

  bool expected = cands[best].f == Family::Sigma && cands[best].m == g - 1 && cands[best].n == g + 1;
  for (std::size_t i = 0; expected && i < cands.size(); ++i) {
    if (i == best) continue;
    const bool mirror = cands[i].f == Family::Sigma && cands[i].m == g + 1 && cands[i].n == g - 1;
    const int c = compare_largest_roots(cands[i].p, cands[best].p, cap);
    if (mirror)
      expected = c == 0;
    else
      expected = c > 0;
  }
  return {family_row(cands[best].f, cands[best].m, cands[best].n), expected};
}

double penner_floor(int g) {
  if (g < 2) throw BadParameters("penner_floor needs g >= 2");
  return std::log(2.0) / (12.0 * g - 12.0);
}

bool verify_bounds(int g, const Rational& cap) {
  if (g < 2) throw BadParameters("bounds need g >= 2");
  using Big = boost::multiprecision::cpp_bin_float_50;
  const RootEnclosure e = largest_real_root_enclosure(sigma_charpoly(g - 1, g + 1), cap);
  const Big lo(e.lo), hi(e.hi), mid = (lo + hi) / 2;
  const Big k = log(Big(2) + sqrt(Big(3)));
  bool ok = true;
  ok &= k / (g + 1) < log(lo);
  ok &= log(hi) < k / g;
  const Big identity = pow(mid, g + 1) - (mid + 1 + sqrt(mid * mid + mid + 1));
  ok &= abs(identity) < Big("1e-9");
  ok &= Big(2) + sqrt(Big(3)) < pow(lo, g + 1);
  ok &= pow(hi, g + 1) < Big(3) + sqrt(Big(7));
  ok &= Big(penner_floor(g)) < log(lo);
  return ok;
}

std::vector<FamilyRow> family_table(int g_min, int g_max) {
  if (g_min < 2 || g_max < g_min) throw BadParameters("table needs 2 <= g_min <= g_max");
  std::vector<FamilyRow> rows;
  for (int total = 2 * g_min; total <= 2 * g_max; ++total)
    for (int m = 1; m < total; ++m) {
      rows.push_back(family_row(Family::Beta, m, total - m));
      rows.push_back(family_row(Family::Sigma, m, total - m));
    }
  auto key = [](const FamilyRow& r) {
    // Non-pseudo-Anosov rows sort after the rest of their family.
    double lam = r.cls.dilatation.value_or(HUGE_VAL);
    return std::make_tuple(r.genus(), static_cast<int>(r.family), lam, r.m, r.n);
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return rows;
}

}  // namespace brdyn
