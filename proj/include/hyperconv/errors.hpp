#pragma once

#include <stdexcept>
#include <string>

namespace hyperconv {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define HYPERCONV_ERROR(Name)                                          \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& detail) : Error(#Name, detail) {} \
  }

HYPERCONV_ERROR(MeasureError);
HYPERCONV_ERROR(RuleDomainError);
HYPERCONV_ERROR(SpecError);
HYPERCONV_ERROR(ParamRange);
HYPERCONV_ERROR(NoInvolution);
HYPERCONV_ERROR(NegativeLinearization);
HYPERCONV_ERROR(NormalizationError);
HYPERCONV_ERROR(LinearizationSupportError);
HYPERCONV_ERROR(WeightConditionViolated);
HYPERCONV_ERROR(NotCommutative);
HYPERCONV_ERROR(NoIdentity);
HYPERCONV_ERROR(ConditionsNotVerified);
HYPERCONV_ERROR(TableError);
HYPERCONV_ERROR(ActionInvalid);
HYPERCONV_ERROR(NotSubgroup);
HYPERCONV_ERROR(NotAutomorphism);
HYPERCONV_ERROR(NotCentral);
HYPERCONV_ERROR(RepresentativeDependence);
HYPERCONV_ERROR(InvalidSequence);
HYPERCONV_ERROR(ColoringDomainError);
HYPERCONV_ERROR(PreconditionViolated);
HYPERCONV_ERROR(LiftMissing);

#undef HYPERCONV_ERROR

}  // namespace hyperconv
