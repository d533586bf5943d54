#include "brdyn/braid.hpp"


#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace brdyn {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw BadParameters("a braid needs at least one strand");
  for (int l : letters_)
    if (l == 0 || std::abs(l) > strands - 1)
      throw BadParameters("letter " + std::to_string(l) + " out of range for " + std::to_string(strands) +
                          " strands");
}

std::string BraidWord::to_string() const {
  std::string out;
  for (int l : letters_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l);
  }
  return out;
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
  std::istringstream is(text);
  std::string tok;
  std::vector<int> letters;
  while (is >> tok) {
    std::string t = tok;
    int sign = 1;
    if (t[0] == 's' || t[0] == 'S') {
      t = t.substr(1);
      auto caret = t.find('^');
      if (caret != std::string::npos) {
        std::string ex = t.substr(caret + 1);
        if (ex == "-1")
          sign = -1;
        else if (ex != "1" && ex != "+1")
          throw ParseError("unsupported exponent in '" + tok + "'");
        t = t.substr(0, caret);
      }
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw ParseError("bad braid letter '" + tok + "'");
    }
    if (used != t.size() || v == 0) throw ParseError("bad braid letter '" + tok + "'");
    letters.push_back(sign * v);
  }
  int need = 2;
  for (int l : letters) need = std::max(need, std::abs(l) + 1);
  if (strands == 0) strands = need;
  if (strands < need) throw ParseError("letters exceed the strand count");
  return BraidWord(strands, std::move(letters));
}

void to_json(nlohmann::json& j, const BraidWord& b) {
  j = nlohmann::json{{"strands", b.strands()}, {"letters", b.letters()}};
}

BraidWord braid_from_json(const nlohmann::json& j) {
  try {
    return BraidWord(j.at("strands").get<int>(), j.at("letters").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("braid json: ") + e.what());
  }
}

Permutation::Permutation(std::vector<int> images) : p_(std::move(images)) {
  std::vector<char> hit(p_.size(), 0);
  for (int x : p_) {
    if (x < 0 || x >= size() || hit[x]) throw BadParameters("not a permutation");
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return Permutation(std::move(p));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw StrandMismatch("permutation sizes differ");
  std::vector<int> c(a.size());
  for (int k = 0; k < a.size(); ++k) c[k] = a(b(k));
  return Permutation(std::move(c));
}

Permutation Permutation::inverse() const {
  std::vector<int> q(p_.size());
  for (int k = 0; k < size(); ++k) q[p_[k]] = k;
  return Permutation(std::move(q));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(p_.size(), 0);
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p_[j]) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string Permutation::cycle_string() const {
  std::vector<char> seen(p_.size(), 0);
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    out += '(';
    for (int j = i; !seen[j]; j = p_[j]) {
      seen[j] = 1;
      if (out.back() != '(') out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out;
}

BraidWord beta_braid(int m, int n) {
  if (m < 1 || n < 1) throw BadParameters("beta_braid needs m, n >= 1");
  std::vector<int> w;
  for (int i = 1; i <= m; ++i) w.push_back(i);
  for (int i = m + 1; i <= m + n; ++i) w.push_back(-i);
  return BraidWord(m + n + 1, std::move(w));
}

BraidWord sigma_braid(int m, int n) {
  if (m < 1 || n < 1) throw BadParameters("sigma_braid needs m, n >= 1");
  std::vector<int> w = beta_braid(m, n).letters();
  // The last strand travels once around all the others.
  for (int i = m + n; i >= 1; --i) w.push_back(i);
  for (int i = 1; i <= m + n; ++i) w.push_back(i);
  return BraidWord(m + n + 1, std::move(w));
}

BraidWord full_twist(int s) {
  if (s < 2) throw BadParameters("full_twist needs s >= 2");
  std::vector<int> w;
  for (int r = 0; r < s; ++r)
    for (int i = 1; i < s; ++i) w.push_back(i);
  return BraidWord(s, std::move(w));
}

BraidWord xi_element(int s) {
  if (s < 2) throw BadParameters("xi_element needs s >= 2");
  std::vector<int> w;
  for (int i = 1; i < s; ++i) w.push_back(i);
  for (int i = s - 1; i >= 1; --i) w.push_back(i);
  return BraidWord(s, std::move(w));
}

BraidWord inverse(const BraidWord& b) {
  std::vector<int> w(b.letters().rbegin(), b.letters().rend());
  for (int& l : w) l = -l;
  return BraidWord(b.strands(), std::move(w));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw StrandMismatch("concat of braids on different strand counts");
  std::vector<int> w = a.letters();
  w.insert(w.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(w));
}

BraidWord conjugate(const BraidWord& b, const BraidWord& c) {
  if (b.strands() != c.strands()) throw StrandMismatch("conjugating braid has a different strand count");
  return concat(concat(c, b), inverse(c));
}

Permutation permutation(const BraidWord& b) {
  std::vector<int> p(b.strands());
  for (int k = 0; k < b.strands(); ++k) {
    int x = k;
    for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
      int i = std::abs(*it) - 1;
      if (x == i)
        x = i + 1;
      else if (x == i + 1)
        x = i;
    }
    p[k] = x;
  }
  return Permutation(std::move(p));
}

int exponent_sum(const BraidWord& b) {
  int s = 0;
  for (int l : b.letters()) s += l > 0 ? 1 : -1;
  return s;
}

namespace {

// Reduced Burau generator at t = -1. Row i-1 (0-based) holds t, -t, 1 around
// the diagonal; the inverse row is 1, 1, -1.
IntMatrix burau_generator(int dim, int letter) {
  IntMatrix g = IntMatrix::identity(dim);
  int r = std::abs(letter) - 1;
  bool pos = letter > 0;
  if (r - 1 >= 0) g(r, r - 1) = pos ? -1 : 1;
  g(r, r) = 1;
  if (r + 1 < dim) g(r, r + 1) = pos ? 1 : -1;
  return g;
}

}  // namespace

IntMatrix burau_matrix(const BraidWord& b) {
  const int dim = b.strands() - 1;
  IntMatrix m = IntMatrix::identity(dim);
  for (int l : b.letters()) m = m * burau_generator(dim, l);
  return m;
}

BurauResult burau_minus_one(const BraidWord& b) {
  BurauResult r{burau_matrix(b), {}, 1.0};
  if (r.matrix.rows() == 0) {
    r.charpoly = IntPolynomial{1};
    return r;
  }
  r.charpoly = char_poly(r.matrix);
  double rho = 0;
  for (const auto& z : all_roots(r.charpoly).roots) rho = std::max(rho, std::abs(z.value));
  r.spectral_radius = rho;
  return r;
}

BraidFingerprint fingerprint(const BraidWord& b) {
  IntPolynomial cp = b.strands() > 1 ? char_poly(burau_matrix(b)) : IntPolynomial{1};
  return {b.strands(), exponent_sum(b), permutation(b).cycle_type(), std::move(cp)};
}

void to_json(nlohmann::json& j, const BraidFingerprint& f) {
  j = nlohmann::json{{"strands", f.strands},
                     {"exponent_sum", f.exponent_sum},
                     {"cycle_type", f.cycle_type},
                     {"burau_charpoly", f.burau_charpoly.to_decimal_strings()}};
}

}  // namespace brdyn
