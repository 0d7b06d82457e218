#pragma once

#include <stdexcept>
#include <string>

namespace binharm {

// Base for every validation or domain failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BINHARM_DEFINE_ERROR(Name)                            \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

BINHARM_DEFINE_ERROR(NotPIntegral);
BINHARM_DEFINE_ERROR(NotInvertible);
BINHARM_DEFINE_ERROR(ModulusMismatch);
BINHARM_DEFINE_ERROR(InvalidShape);
BINHARM_DEFINE_ERROR(PoleEvaluation);
BINHARM_DEFINE_ERROR(ImproperFunction);
BINHARM_DEFINE_ERROR(TableTooLarge);
BINHARM_DEFINE_ERROR(ZeroDenominatorTerm);
BINHARM_DEFINE_ERROR(HypothesisViolated);
BINHARM_DEFINE_ERROR(ParseFailure);

#undef BINHARM_DEFINE_ERROR

}  // namespace binharm
