// Acceptance run: one PASS/FAIL line per criterion. With no arguments every
// criterion runs; otherwise only the numbers given. Exit status 1 if any
// selected criterion fails.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "brdyn/suites.hpp"

using namespace brdyn;

namespace {

SuiteResult inequalities() {
  SuiteResult r = monotonic_suite();
  r.merge(minimality_suite());
  r.merge(bounds_suite());
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<SuiteResult()>>> all{
      {"paper constants", constants_suite},
      {"exact identities", identities_suite},
      {"matrix/polynomial agreement", matrix_suite},
      {"BH certification", bh_suite},
      {"Mahler measures", mahler_suite},
      {"inequality suites", inequalities},
      {"foliation suite", foliation_suite},
      {"Salem-Boyd properties", [] { return salem_boyd_suite(); }},
      {"braid/horseshoe cross-checks", horseshoe_suite}};
  std::vector<int> pick;
  for (int i = 1; i < argc; ++i) pick.push_back(std::atoi(argv[i]));
  if (pick.empty())
    for (int i = 1; i <= 9; ++i) pick.push_back(i);
  bool ok = true;
  for (int k : pick) {
    if (k < 1 || k > 9) {
      std::fprintf(stderr, "no criterion %d\n", k);
      return 2;
    }
    SuiteResult out;
    try {
      out = all[k - 1].second();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %d %s: %s\n", k, out.pass ? "PASS" : "FAIL", all[k - 1].first.c_str());
    for (std::size_t i = 0; i < out.failures.size() && i < 8; ++i) std::printf("  failed: %s\n", out.failures[i].c_str());
    for (const auto& s : out.notes) std::printf("  %s\n", s.c_str());
    ok &= out.pass;
  }
  return ok ? 0 : 1;
}
