#pragma once

// Periodic orbits of the Smale horseshoe, coded by binary words.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brdyn/braid.hpp"

namespace brdyn {

class HorseshoeCode {
 public:
  // A cyclic word over {0,1}; throws ParseError on other symbols.
  explicit HorseshoeCode(std::string word);

  const std::string& word() const { return w_; }
  int period() const { return static_cast<int>(w_.size()); }
  bool is_primitive() const;
  std::string rotation(int k) const;  // shift by k places

 private:
  std::string w_;
};

// An eventually periodic itinerary prefix (period)^infinity.
struct Itinerary {
  std::string prefix;
  std::string period;
  static Itinerary periodic(const std::string& word) { return {"", word}; }
  char at(std::size_t i) const;
};

// -1, 0, +1. At the first disagreement the larger symbol is on the right
// when the common prefix has an even number of 1s, on the left otherwise.
int unimodal_compare(const Itinerary& a, const Itinerary& b);

// (m, n) with n >= m + 2 when some rotation reads 1 0^{n-1} 1 0^m or
// 1 0^{n-1} 1 0^{m-1} 1. Throws NonPrimitive.
std::optional<std::pair<int, int>> recognize_sigma_code(const HorseshoeCode& c);

// Left-to-right positions of the orbit points x_0..x_{k-1}, where x_i has
// itinerary rotation(i).
std::vector<int> orbit_positions(const HorseshoeCode& c);

// Positive permutation braid carrying position(x_i) to position(x_{i+1}):
// straight-line motion, each pair of strands crossing at most once and
// positively. Period 1 gives the trivial one-strand braid.
BraidWord code_to_braid(const HorseshoeCode& c);

}  // namespace brdyn
