#pragma once

// Braid words over the Artin generators and a few conjugacy invariants.
// Words are never rewritten with the braid relations.

#include <json.hpp>

#include <string>
#include <vector>

#include "brdyn/matrix.hpp"

namespace brdyn {

class BraidWord {
 public:
  // Letter i > 0 is sigma_i, i < 0 is sigma_{|i|}^{-1}.
  BraidWord(int strands, std::vector<int> letters);
  static BraidWord identity(int strands) { return BraidWord(strands, {}); }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  std::string to_string() const;  // "1 2 -3"
  // Accepts "1 2 -3", "s1 s2 s3^-1" and mixtures; strands default to max|i|+1.
  static BraidWord parse(const std::string& text, int strands = 0);

 private:
  int strands_;
  std::vector<int> letters_;
};

void to_json(nlohmann::json& j, const BraidWord& b);
BraidWord braid_from_json(const nlohmann::json& j);

// images[k] is the image of point k (0-based).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(p_.size()); }
  int operator()(int k) const { return p_.at(k); }
  const std::vector<int>& images() const { return p_; }

  // (a * b)(k) = a(b(k))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  // Cycle lengths, sorted descending, fixed points included.
  std::vector<int> cycle_type() const;
  // "(1 2 3)(4)" with 1-based points.
  std::string cycle_string() const;

 private:
  std::vector<int> p_;
};

BraidWord beta_braid(int m, int n);
BraidWord sigma_braid(int m, int n);
BraidWord full_twist(int s);
BraidWord xi_element(int s);

BraidWord inverse(const BraidWord& b);
BraidWord concat(const BraidWord& a, const BraidWord& b);
// c b c^-1
BraidWord conjugate(const BraidWord& b, const BraidWord& c);

// Product of the transpositions (i i+1) in word order, the first letter acting
// last: permutation(w1 w2) = permutation(w1) * permutation(w2).
Permutation permutation(const BraidWord& b);
int exponent_sum(const BraidWord& b);

struct BurauResult {
  IntMatrix matrix;          // (s-1) x (s-1)
  IntPolynomial charpoly;
  double spectral_radius;    // max |root| of charpoly
};
// Reduced Burau representation at t = -1.
IntMatrix burau_matrix(const BraidWord& b);
BurauResult burau_minus_one(const BraidWord& b);

// Conjugacy invariants used to compare braids without solving the
// conjugacy problem.
struct BraidFingerprint {
  int strands = 0;
  int exponent_sum = 0;
  std::vector<int> cycle_type;
  IntPolynomial burau_charpoly;
  friend bool operator==(const BraidFingerprint&, const BraidFingerprint&) = default;
};
BraidFingerprint fingerprint(const BraidWord& b);
void to_json(nlohmann::json& j, const BraidFingerprint& f);

}  // namespace brdyn
