#pragma once

#include <stdexcept>
#include <string>

namespace brdyn {

// Root of every error raised by the library. Each subclass corresponds to a
// named failure mode of one operation; callers usually catch the base.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BRDYN_ERROR(Name)                      \
  class Name : public Error {                  \
   public:                                     \
    explicit Name(const std::string& what)     \
        : Error(std::string(#Name ": ") + what) {} \
  }

BRDYN_ERROR(ZeroPolynomial);
BRDYN_ERROR(ZeroConstantTerm);
BRDYN_ERROR(NoRealRoot);
BRDYN_ERROR(ConvergenceFailure);
BRDYN_ERROR(BoundaryAmbiguity);
BRDYN_ERROR(BadParameters);
BRDYN_ERROR(StrandMismatch);
BRDYN_ERROR(EmptyImage);
BRDYN_ERROR(BadBasis);
BRDYN_ERROR(MissingRotation);
BRDYN_ERROR(UncertifiedMap);
BRDYN_ERROR(OddBranchSet);
BRDYN_ERROR(NonPrimitive);
BRDYN_ERROR(ParseError);
BRDYN_ERROR(InvalidGraph);

#undef BRDYN_ERROR

}  // namespace brdyn
