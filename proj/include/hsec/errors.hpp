#pragma once

#include <stdexcept>
#include <string>

namespace hsec {

// Base of every domain error. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

#define HSEC_DECLARE_ERROR(Name)                              \
  class Name : public Error {                                 \
   public:                                                    \
    using Error::Error;                                       \
    const char* kind() const noexcept override { return #Name; } \
  };

HSEC_DECLARE_ERROR(InvalidPermutation)
HSEC_DECLARE_ERROR(DegenerateConfiguration)
HSEC_DECLARE_ERROR(OutsideCone)
HSEC_DECLARE_ERROR(UnsupportedPermutation)
HSEC_DECLARE_ERROR(SamplingExhausted)
HSEC_DECLARE_ERROR(InvalidSurface)
HSEC_DECLARE_ERROR(OutsideBoundedRegime)
HSEC_DECLARE_ERROR(NoConnectionInRange)
HSEC_DECLARE_ERROR(ContractViolation)
HSEC_DECLARE_ERROR(DegeneratePoint)

#undef HSEC_DECLARE_ERROR

}  // namespace hsec
