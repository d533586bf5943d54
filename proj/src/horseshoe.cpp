#include "brdyn/horseshoe.hpp"

#include <algorithm>
#include <numeric>

namespace brdyn {

HorseshoeCode::HorseshoeCode(std::string word) : w_(std::move(word)) {
  if (w_.empty()) throw ParseError("empty horseshoe code");
  for (char ch : w_)
    if (ch != '0' && ch != '1') throw ParseError("horseshoe code must be binary: '" + w_ + "'");
}

bool HorseshoeCode::is_primitive() const {
  const int k = period();
  for (int d = 1; d < k; ++d)
    if (k % d == 0 && rotation(d) == w_) return false;
  return true;
}

std::string HorseshoeCode::rotation(int k) const {
  k %= period();
  return w_.substr(k) + w_.substr(0, k);
}

char Itinerary::at(std::size_t i) const {
  if (i < prefix.size()) return prefix[i];
  if (period.empty()) throw BadParameters("itinerary needs a nonempty period");
  return period[(i - prefix.size()) % period.size()];
}

int unimodal_compare(const Itinerary& a, const Itinerary& b) {
  // Past this length both sequences are periodic with a common period
  // window, so agreement there means equality.
  const std::size_t horizon =
      std::max(a.prefix.size(), b.prefix.size()) + a.period.size() * b.period.size() + 1;
  int ones = 0;
  for (std::size_t i = 0; i < horizon; ++i) {
    char x = a.at(i), y = b.at(i);
    if (x != y) {
      int c = x < y ? -1 : 1;
      return ones % 2 == 0 ? c : -c;
    }
    ones += x == '1';
  }
  return 0;
}

std::optional<std::pair<int, int>> recognize_sigma_code(const HorseshoeCode& c) {
  if (!c.is_primitive()) throw NonPrimitive("'" + c.word() + "' is a proper power");
  for (int r = 0; r < c.period(); ++r) {
    const std::string w = c.rotation(r);
    std::vector<int> ones;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
      if (w[i] == '1') ones.push_back(i);
    if (ones.empty() || ones[0] != 0) continue;
    const int len = static_cast<int>(w.size());
    int m = 0, n = 0;
    if (ones.size() == 2) {
      // 1 0^{n-1} 1 0^m
      n = ones[1];
      m = len - ones[1] - 1;
    } else if (ones.size() == 3 && ones[2] == len - 1) {
      // 1 0^{n-1} 1 0^{m-1} 1
      n = ones[1];
      m = ones[2] - ones[1];
    } else {
      continue;
    }
    if (m >= 1 && n >= m + 2) return std::make_pair(m, n);
  }
  return std::nullopt;
}

std::vector<int> orbit_positions(const HorseshoeCode& c) {
  if (!c.is_primitive()) throw NonPrimitive("'" + c.word() + "' is a proper power");
  const int k = c.period();
  std::vector<Itinerary> it;
  for (int i = 0; i < k; ++i) it.push_back(Itinerary::periodic(c.rotation(i)));
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return unimodal_compare(it[i], it[j]) < 0; });
  std::vector<int> pos(k);
  for (int r = 0; r < k; ++r) pos[order[r]] = r;
  return pos;
}

BraidWord code_to_braid(const HorseshoeCode& c) {
  const auto pos = orbit_positions(c);
  const int k = c.period();
  if (k == 1) return BraidWord::identity(1);
  // target[slot] = slot reached after one step by the strand starting there.
  std::vector<int> target(k);
  for (int i = 0; i < k; ++i) target[pos[i]] = pos[(i + 1) % k];
  // Bubble sort: each adjacent swap is one positive crossing, and every pair
  // that changes order swaps exactly once.
  std::vector<int> letters;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i + 1 < k; ++i)
      if (target[i] > target[i + 1]) {
        std::swap(target[i], target[i + 1]);
        letters.push_back(i + 1);
        changed = true;
      }
  }
  return BraidWord(k, std::move(letters));
}

}  // namespace brdyn
