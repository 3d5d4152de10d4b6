#pragma once

#include <stdexcept>
#include <string>

namespace weyldual {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WEYLDUAL_ERROR(Name)                 \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

WEYLDUAL_ERROR(ShapeMismatch);
WEYLDUAL_ERROR(ComplexConditionViolated);
WEYLDUAL_ERROR(VariableCountMismatch);
WEYLDUAL_ERROR(UncoveredRegion);
WEYLDUAL_ERROR(InhomogeneousOperator);
WEYLDUAL_ERROR(IncompatibleSpecs);
WEYLDUAL_ERROR(CoarseModeUnsupported);
WEYLDUAL_ERROR(NotAMapOfPresentations);
WEYLDUAL_ERROR(PreconditionFailed);
WEYLDUAL_ERROR(IncompleteWindow);
WEYLDUAL_ERROR(ParseError);

#undef WEYLDUAL_ERROR

}  // namespace weyldual
