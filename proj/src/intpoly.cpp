#include "brdyn/intpoly.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace brdyn {

namespace mp = boost::multiprecision;

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  c_.reserve(coeffs.size());
  for (long long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPolynomial::lead() const {
  if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
  return c_.back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Integer> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& k) {
  for (auto& c : c_) c *= k;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> v(k, Integer(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long long>(i);
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Integer& c = c_[k];
    if (c == 0) continue;
    Integer a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || k == 0) os << a;
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::vector<std::string> IntPolynomial::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.str());
  return out;
}

IntPolynomial IntPolynomial::from_decimal_strings(const std::vector<std::string>& s) {
  std::vector<Integer> v;
  v.reserve(s.size());
  for (const auto& x : s) {
    std::size_t i = 0;
    if (!x.empty() && (x[0] == '-' || x[0] == '+')) i = 1;
    if (i == x.size() || !std::all_of(x.begin() + i, x.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw ParseError("not a decimal integer: '" + x + "'");
    v.emplace_back(x[0] == '+' ? x.substr(1) : x);
  }
  return IntPolynomial(std::move(v));
}

// ---------------------------------------------------------------------------
// reciprocals, Salem-Boyd, division, evaluation

std::string to_string(Reciprocity r) {
  switch (r) {
    case Reciprocity::Reciprocal: return "Reciprocal";
    case Reciprocity::AntiReciprocal: return "AntiReciprocal";
    case Reciprocity::Neither: return "Neither";
  }
  return "?";
}

IntPolynomial reciprocal(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("reciprocal");
  std::vector<Integer> v(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPolynomial(std::move(v));
}

IntPolynomial salem_boyd(const IntPolynomial& p, unsigned n, int sign) {
  if (p.is_zero()) throw ZeroPolynomial("salem_boyd");
  if (p[0] == 0) throw ZeroConstantTerm("salem_boyd needs p(0) != 0");
  if (sign != 1 && sign != -1) throw BadParameters("sign must be +1 or -1");
  IntPolynomial r = reciprocal(p);
  return sign > 0 ? p.shifted(n) + r : p.shifted(n) - r;
}

Reciprocity reciprocity_class(const IntPolynomial& p) {
  IntPolynomial r = reciprocal(p);
  if (r == p) return Reciprocity::Reciprocal;
  if (r == -p) return Reciprocity::AntiReciprocal;
  return Reciprocity::Neither;
}

namespace {

// Long division over Q. Returns (quotient, remainder) scaled to integers only
// when exact; otherwise flags failure.
struct QDivision {
  std::vector<Rational> q, r;
};

QDivision divide_rational(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw ZeroPolynomial("division by zero polynomial");
  std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
  int db = b.degree();
  int da = a.degree();
  std::vector<Rational> q(da >= db ? da - db + 1 : 0);
  Rational lb = b.lead();
  for (int k = da; k >= db; --k) {
    if (r[k] == 0) continue;
    Rational f = r[k] / lb;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * Rational(b[j]);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return {std::move(q), std::move(r)};
}

IntPolynomial integral_or_throw(const std::vector<Rational>& v, const char* what) {
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (denominator(x) != 1) throw BadParameters(std::string(what) + ": quotient is not integral");
    out.push_back(numerator(x));
  }
  return IntPolynomial(std::move(out));
}

}  // namespace

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  QDivision d = divide_rational(a, b);
  if (!d.r.empty()) {
    // Report the remainder scaled to an integer polynomial.
    Integer den = 1;
    for (const auto& x : d.r) den = boost::multiprecision::lcm(den, denominator(x));
    std::vector<Integer> rem;
    for (const auto& x : d.r) rem.push_back(numerator(Rational(x * den)));
    throw NotDivisible(IntPolynomial(std::move(rem)));
  }
  return integral_or_throw(d.q, "exact_quotient");
}

IntPolynomial divide_exact(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw ZeroPolynomial("divide_exact divisor");
  if (abs(q.lead()) != 1) throw BadParameters("divide_exact needs a +-monic divisor");
  return exact_quotient(p, q);
}

Rational evaluate(const IntPolynomial& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + Rational(p.coeffs()[k]);
  return acc;
}

int sign_at(const IntPolynomial& p, const Rational& x) {
  if (p.is_zero()) return 0;
  const Integer a = numerator(x);
  const Integer b = denominator(x);  // positive
  Integer acc = p.lead();
  Integer bp = 1;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    bp *= b;
    acc = acc * a + c[k] * bp;
  }
  return acc.sign();
}

// ---------------------------------------------------------------------------
// gcd and squarefree machinery

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    g = boost::multiprecision::gcd(g, abs(c));
    if (g == 1) break;
  }
  return g;
}

namespace {

IntPolynomial divide_by_content(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (g == 1) return p;
  std::vector<Integer> v = p.coeffs();
  for (auto& c : v) c /= g;
  return IntPolynomial(std::move(v));
}

}  // namespace

IntPolynomial primitive_part(const IntPolynomial& p) {
  IntPolynomial r = divide_by_content(p);
  if (!r.is_zero() && r.lead() < 0) r = -r;
  return r;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw ZeroPolynomial("pseudo_remainder divisor");
  IntPolynomial r = a;
  const int db = b.degree();
  const Integer lb = b.lead();
  const Integer mag = abs(lb);
  const int sb = lb.sign();
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Integer lr = r.lead();
    r *= mag;
    r -= (b * Integer(sb * lr)).shifted(k);
  }
  return divide_by_content(r);
}

IntPolynomial gcd(const IntPolynomial& a0, const IntPolynomial& b0) {
  IntPolynomial a = primitive_part(a0), b = primitive_part(b0);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(a);
}

IntPolynomial strip_t_power(const IntPolynomial& p, int* k) {
  std::size_t z = 0;
  while (z < p.coeffs().size() && p.coeffs()[z] == 0) ++z;
  if (k) *k = static_cast<int>(z);
  if (z == 0 || p.is_zero()) return p;
  return IntPolynomial(std::vector<Integer>(p.coeffs().begin() + z, p.coeffs().end()));
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree_decomposition");
  std::vector<std::pair<IntPolynomial, int>> out;
  IntPolynomial a = primitive_part(p);
  if (a.degree() <= 0) return out;
  IntPolynomial b = a.derivative();
  IntPolynomial c = gcd(a, b);
  IntPolynomial w = exact_quotient(a, c);
  IntPolynomial y = exact_quotient(b, c);
  IntPolynomial z = y - w.derivative();
  for (int i = 1; w.degree() > 0; ++i) {
    IntPolynomial g = z.is_zero() ? primitive_part(w) : gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    z = y - w.derivative();
  }
  return out;
}

IntPolynomial cyclotomic(unsigned k) {
  if (k == 0) throw BadParameters("cyclotomic index must be >= 1");
  IntPolynomial r = IntPolynomial::monomial(1, k) - IntPolynomial{1};
  for (unsigned d = 1; d < k; ++d)
    if (k % d == 0) r = exact_quotient(r, cyclotomic(d));
  return r;
}

// ---------------------------------------------------------------------------
// Sturm isolation

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("Sturm sequence of zero polynomial");
  IntPolynomial base = p;
  if (p.degree() >= 1) base = exact_quotient(primitive_part(p), gcd(p, p.derivative()));
  seq_.push_back(base);
  if (base.degree() < 1) return;
  seq_.push_back(base.derivative());
  while (true) {
    IntPolynomial r = -pseudo_remainder(seq_[seq_.size() - 2], seq_.back());
    if (r.is_zero()) break;
    seq_.push_back(std::move(r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int v = 0, last = 0;
  for (const auto& q : seq_) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  if (b <= a) return 0;
  return variations(a) - variations(b);
}

Rational cauchy_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("cauchy_bound");
  Integer m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Integer(abs(p[i])));
  return Rational(1) + Rational(m, abs(p.lead()));
}

double RootEnclosure::mid() const {
  Rational m = (lo + hi) / 2;
  return m.convert_to<double>();
}

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw BadParameters("non-finite tolerance");
  int e = 0;
  double f = std::frexp(x, &e);
  // f in [0.5, 1): scale to a 53-bit integer.
  long long mant = static_cast<long long>(std::ldexp(f, 53));
  e -= 53;
  Rational r = Rational(Integer(mant));
  if (e > 0) r *= Rational(Integer(1) << e);
  if (e < 0) r /= Rational(Integer(1) << -e);
  return r;
}

RootEnclosure largest_real_root_enclosure(const IntPolynomial& p, const Rational& tol) {
  if (p.is_zero()) throw ZeroPolynomial("largest_real_root");
  if (tol <= 0) throw BadParameters("tolerance must be positive");
  SturmSequence sturm(p);
  const IntPolynomial& f = sturm.base();
  Rational lo = 0, hi = cauchy_bound(p);
  if (sturm.count(lo, hi) == 0) throw NoRealRoot("no real root in (0, Cauchy bound]");
  // Invariant: the largest positive root lies in (lo, hi].
  bool isolated = false;
  int shi = 0;
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (!isolated) {
      if (sturm.count(mid, hi) >= 1)
        lo = mid;
      else
        hi = mid;
      if (sturm.count(lo, hi) == 1) {
        shi = sign_at(f, hi);
        if (shi == 0) return {hi, hi};
        isolated = true;
      }
      continue;
    }
    int sm = sign_at(f, mid);
    if (sm == 0) return {mid, mid};
    if (sm == shi)
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

double largest_real_root(const IntPolynomial& p, double tol) {
  return largest_real_root_enclosure(p, to_rational(tol)).mid();
}

// ---------------------------------------------------------------------------
// Aberth-Ehrlich

int RootSet::total_multiplicity() const {
  int s = 0;
  for (const auto& r : roots) s += r.multiplicity;
  return s;
}

namespace {

template <class R>
struct Cx {
  R re{0}, im{0};
  Cx() = default;
  Cx(R a, R b) : re(std::move(a)), im(std::move(b)) {}
  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator/(const Cx& a, const Cx& b) {
    R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  R norm() const {
    using std::sqrt;
    return sqrt(re * re + im * im);
  }
};

template <unsigned D>
using BinFloat = mp::number<mp::cpp_bin_float<D>, mp::et_off>;

template <class R>
R epsilon_of() {
  return std::numeric_limits<R>::epsilon();
}

struct AberthResult {
  std::vector<std::complex<double>> roots;
  double max_radius = 0;  // inclusion radius n |f/f'| over all roots
};

// Returns false when the iteration did not converge within max_sweeps or when
// the inclusion radii exceed tol.
template <class R>
bool aberth_at(const IntPolynomial& f, int max_sweeps, double tol, AberthResult& out) {
  using C = Cx<R>;
  const int n = f.degree();
  std::vector<R> c(n + 1), ca(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i] = R(f[i]);
    ca[i] = c[i] < 0 ? R(-c[i]) : c[i];
  }
  const R eps = epsilon_of<R>();
  auto eval = [&](const C& z, C& pz, C& dz, R& env) {
    pz = C(c[n], R(0));
    dz = C(R(0), R(0));
    R az = z.norm();
    env = ca[n];
    for (int i = n - 1; i >= 0; --i) {
      dz = dz * z + pz;
      pz = pz * z + C(c[i], R(0));
      env = env * az + ca[i];
    }
  };

  // Initial guesses on a circle about the centroid of the roots.
  using std::cos;
  using std::pow;
  using std::sin;
  using std::abs;
  R center = -c[n - 1] / (R(n) * c[n]);
  R radius = pow(abs(c[0] / c[n]), R(1) / R(n));
  if (!(radius > 0)) radius = R(1);
  std::vector<C> z(n);
  const R two_pi = R(2) * boost::math::constants::pi<R>();
  for (int k = 0; k < n; ++k) {
    R ang = two_pi * R(k) / R(n) + R(0.4);
    z[k] = C(center + radius * cos(ang), radius * sin(ang));
  }

  std::vector<char> done(n, 0);
  int remaining = n;
  for (int sweep = 0; sweep < max_sweeps && remaining > 0; ++sweep) {
    for (int k = 0; k < n; ++k) {
      if (done[k]) continue;
      C pz, dz;
      R env;
      eval(z[k], pz, dz, env);
      if (pz.norm() <= R(4 * n) * eps * env) {
        done[k] = 1;
        --remaining;
        continue;
      }
      C ratio = pz / dz;
      C sum;
      for (int j = 0; j < n; ++j)
        if (j != k) sum = sum + C(R(1), R(0)) / (z[k] - z[j]);
      C w = ratio / (C(R(1), R(0)) - ratio * sum);
      z[k] = z[k] - w;
    }
  }
  if (remaining > 0) return false;

  out.roots.clear();
  out.max_radius = 0;
  for (int k = 0; k < n; ++k) {
    C pz, dz;
    R env;
    eval(z[k], pz, dz, env);
    R dn = dz.norm();
    double rad = dn > 0 ? static_cast<double>(R(n) * pz.norm() / dn) : HUGE_VAL;
    out.max_radius = std::max(out.max_radius, rad);
    out.roots.emplace_back(static_cast<double>(z[k].re), static_cast<double>(z[k].im));
  }
  return out.max_radius <= tol;
}

AberthResult aberth(const IntPolynomial& f, double tol, const AberthOptions& opt) {
  AberthResult res;
  if (f.degree() == 1) {
    Rational r(-f[0], f[1]);
    res.roots.emplace_back(r.convert_to<double>(), 0.0);
    return res;
  }
  using Attempt = bool (*)(const IntPolynomial&, int, double, AberthResult&);
  static const Attempt ladder[] = {&aberth_at<double>, &aberth_at<BinFloat<32>>, &aberth_at<BinFloat<64>>,
                                   &aberth_at<BinFloat<128>>, &aberth_at<BinFloat<256>>};
  const int attempts = std::min<int>(1 + std::max(0, opt.max_retries), 5);
  for (int i = 0; i < attempts; ++i)
    if (ladder[i](f, opt.max_sweeps, tol, res)) return res;
  throw ConvergenceFailure("Aberth iteration failed for " + f.to_string() + " after " +
                           std::to_string(attempts) + " precision levels");
}

double residual_of(const IntPolynomial& p, std::complex<double> z) {
  using R = BinFloat<32>;
  Cx<R> zz(R(z.real()), R(z.imag()));
  Cx<R> acc(R(p.lead()), R(0));
  for (int i = p.degree() - 1; i >= 0; --i) acc = acc * zz + Cx<R>(R(p[i]), R(0));
  return static_cast<double>(acc.norm());
}

}  // namespace

RootSet all_roots(const IntPolynomial& p, double tol, const AberthOptions& opt) {
  if (p.degree() < 1) throw BadParameters("all_roots needs degree >= 1");
  RootSet rs;
  rs.tolerance = tol;
  int zeros = 0;
  IntPolynomial q = strip_t_power(p, &zeros);
  if (zeros > 0) rs.roots.push_back({{0.0, 0.0}, zeros});
  if (q.degree() >= 1) {
    for (const auto& [f, mult] : squarefree_decomposition(q)) {
      AberthResult ar = aberth(f, tol, opt);
      for (auto z : ar.roots) rs.roots.push_back({z, mult});
    }
  }
  for (const auto& r : rs.roots) rs.residual_bound = std::max(rs.residual_bound, residual_of(p, r.value));
  return rs;
}

double mahler_measure(const IntPolynomial& p, double tol) {
  if (p.is_zero()) throw ZeroPolynomial("mahler_measure");
  double m = std::abs(p.lead().convert_to<double>());
  if (p.degree() < 1) return m;
  RootSet rs = all_roots(p, std::min(tol, 1e-12));
  // Sum logs to avoid overflow on high degree.
  double lg = std::log(m);
  for (const auto& r : rs.roots) {
    double a = std::abs(r.value);
    if (a > 1 + tol) lg += r.multiplicity * std::log(a);
  }
  return std::exp(lg);
}

namespace {

// g reciprocal of degree 2d with g(+-1) != 0: g(t) = t^d q(t + 1/t).
IntPolynomial chebyshev_transform(const IntPolynomial& g) {
  const int d = g.degree() / 2;
  IntPolynomial vprev{2}, v{0, 1};  // V_0 = 2, V_1 = x
  IntPolynomial q = IntPolynomial{1} * g[d];
  const IntPolynomial x{0, 1};
  for (int j = 1; j <= d; ++j) {
    q += v * g[d + j];
    IntPolynomial vnext = x * v - vprev;
    vprev = std::move(v);
    v = std::move(vnext);
  }
  return q;
}

int roots_in_open_interval_with_multiplicity(const IntPolynomial& q, const Rational& a, const Rational& b) {
  int total = 0;
  for (const auto& [f, mult] : squarefree_decomposition(q)) total += mult * SturmSequence(f).count(a, b);
  return total;
}

}  // namespace

int count_outside_unit(const IntPolynomial& p, double tol) {
  if (p.is_zero()) throw ZeroPolynomial("count_outside_unit");
  IntPolynomial q = strip_t_power(p);
  if (q.degree() < 1) return 0;
  // Every unit-circle root of q is a root of q_* with the same multiplicity,
  // so g collects them all; r has none.
  IntPolynomial g = gcd(q, reciprocal(q));
  IntPolynomial r = exact_quotient(primitive_part(q), g);
  const IntPolynomial tm1{-1, 1}, tp1{1, 1};
  while (g.degree() > 0 && sign_at(g, Rational(1)) == 0) g = exact_quotient(g, tm1);
  while (g.degree() > 0 && sign_at(g, Rational(-1)) == 0) g = exact_quotient(g, tp1);
  int count = 0;
  if (g.degree() > 0) {
    if (reciprocity_class(g) != Reciprocity::Reciprocal || g.degree() % 2 != 0)
      throw Error("internal: reciprocal part has unexpected shape " + g.to_string());
    IntPolynomial cx = chebyshev_transform(g);
    int inside = roots_in_open_interval_with_multiplicity(cx, Rational(-2), Rational(2));
    count += g.degree() / 2 - inside;
  }
  if (r.degree() >= 1) {
    RootSet rs = all_roots(r, 1e-12);
    for (const auto& z : rs.roots) {
      double a = std::abs(z.value);
      if (std::abs(a - 1) <= tol)
        throw BoundaryAmbiguity("root of modulus " + std::to_string(a) + " not certified on the unit circle");
      if (a > 1) count += z.multiplicity;
    }
  }
  return count;
}

}  // namespace brdyn
