#pragma once

#include <stdexcept>
#include <string>

namespace arrcd {

/// Broad failure classes. The CLI maps these onto exit codes 1, 2 and 3.
enum class ErrorCategory {
  parse,
  validation,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

#define ARRCD_DEFINE_ERROR(Name, Category)                                  \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(Category, what) {}      \
  }

ARRCD_DEFINE_ERROR(ParseError, ErrorCategory::parse);

ARRCD_DEFINE_ERROR(ValidationError, ErrorCategory::validation);
ARRCD_DEFINE_ERROR(NotInCdAlgebra, ErrorCategory::validation);
ARRCD_DEFINE_ERROR(NotEulerian, ErrorCategory::validation);
ARRCD_DEFINE_ERROR(NotMergeable, ErrorCategory::validation);
ARRCD_DEFINE_ERROR(InvalidChain, ErrorCategory::validation);
ARRCD_DEFINE_ERROR(MissingEulerData, ErrorCategory::validation);
ARRCD_DEFINE_ERROR(NotSpherical, ErrorCategory::validation);
ARRCD_DEFINE_ERROR(NotToric, ErrorCategory::validation);
ARRCD_DEFINE_ERROR(TorusDimensionTooSmall, ErrorCategory::validation);
ARRCD_DEFINE_ERROR(InconsistentSubspace, ErrorCategory::validation);
ARRCD_DEFINE_ERROR(NotCentral, ErrorCategory::validation);
ARRCD_DEFINE_ERROR(NotRational, ErrorCategory::validation);

ARRCD_DEFINE_ERROR(InternalConsistencyError, ErrorCategory::internal);
ARRCD_DEFINE_ERROR(OddCoefficient, ErrorCategory::internal);
ARRCD_DEFINE_ERROR(RouteDisagreement, ErrorCategory::internal);

#undef ARRCD_DEFINE_ERROR

}  // namespace arrcd
