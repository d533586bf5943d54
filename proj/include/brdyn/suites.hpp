#pragma once

// The verification suites behind `verify` and the acceptance binary. Each
// returns a verdict with the failed checks and a summary note or two.

#include <string>
#include <vector>

#include "brdyn/families.hpp"

namespace brdyn {

struct SuiteResult {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what);
  void note(const std::string& s) { notes.push_back(s); }
  void merge(const SuiteResult& o);
};

SuiteResult constants_suite();
SuiteResult identities_suite();
SuiteResult matrix_suite();
SuiteResult bh_suite();
SuiteResult mahler_suite();
SuiteResult monotonic_suite(const Rational& cap = default_precision_cap());
SuiteResult minimality_suite(const Rational& cap = default_precision_cap());
SuiteResult bounds_suite(const Rational& cap = default_precision_cap());
SuiteResult foliation_suite();
SuiteResult salem_boyd_suite(unsigned seed = 20260101);
SuiteResult horseshoe_suite();

}  // namespace brdyn
