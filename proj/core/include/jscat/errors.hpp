#pragma once

#include <stdexcept>
#include <string>

namespace jscat {

// Base class for every contract violation the library raises.  The what()
// string always starts with the concrete error name.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

#define JSCAT_ERROR_TYPE(Name)                                   \
  class Name : public Error {                                    \
  public:                                                        \
    explicit Name(const std::string& w) : Error(#Name ": " + w) {} \
  };

JSCAT_ERROR_TYPE(InvalidConfig)
JSCAT_ERROR_TYPE(SingularQuadrature)
JSCAT_ERROR_TYPE(PathThroughBranchPoint)
JSCAT_ERROR_TYPE(SingularNormalization)
JSCAT_ERROR_TYPE(ThetaZero)
JSCAT_ERROR_TYPE(DivisorPole)
JSCAT_ERROR_TYPE(EdgeDivisor)
JSCAT_ERROR_TYPE(RhoInSpectrum)
JSCAT_ERROR_TYPE(RecurrenceBlowup)
JSCAT_ERROR_TYPE(WronskianDrift)
JSCAT_ERROR_TYPE(EdgeTooClose)
JSCAT_ERROR_TYPE(NotAnEigenvalue)
JSCAT_ERROR_TYPE(GridMismatch)
JSCAT_ERROR_TYPE(NotPositiveDefinite)
JSCAT_ERROR_TYPE(ZeroDiagonal)
JSCAT_ERROR_TYPE(InconsistentData)
JSCAT_ERROR_TYPE(NonIntegrableLog)

#undef JSCAT_ERROR_TYPE

}  // namespace jscat
