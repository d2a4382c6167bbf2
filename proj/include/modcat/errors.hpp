#pragma once

#include <stdexcept>
#include <string>

namespace modcat {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MODCAT_DEFINE_ERROR(Name)                     \
  class Name : public Error {                         \
   public:                                            \
    explicit Name(const std::string& what)            \
        : Error(std::string(#Name) + ": " + what) {}  \
  }

MODCAT_DEFINE_ERROR(ZeroDivision);
MODCAT_DEFINE_ERROR(BadAutomorphism);
MODCAT_DEFINE_ERROR(CapExceeded);
MODCAT_DEFINE_ERROR(ParseError);
MODCAT_DEFINE_ERROR(OutOfAlcove);
MODCAT_DEFINE_ERROR(NotASimpleCurrent);
MODCAT_DEFINE_ERROR(InvalidArgument);
MODCAT_DEFINE_ERROR(NoConvergence);
MODCAT_DEFINE_ERROR(NonIntegerOutcome);
MODCAT_DEFINE_ERROR(SingularS);
MODCAT_DEFINE_ERROR(PreconditionFailed);
MODCAT_DEFINE_ERROR(ConsistencyError);
MODCAT_DEFINE_ERROR(NoSolution);
MODCAT_DEFINE_ERROR(AmbiguousBeyondRelabeling);
MODCAT_DEFINE_ERROR(PipelineBranchSurvived);
MODCAT_DEFINE_ERROR(MalformedGoldenFile);

#undef MODCAT_DEFINE_ERROR

}  // namespace modcat
