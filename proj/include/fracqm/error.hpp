#pragma once

#include <stdexcept>
#include <string>

namespace fracqm {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs outside the mathematical domain of an operation. The CLI maps
/// these to exit code 2.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure did not reach its tolerance. The CLI maps these to
/// exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

#define FRACQM_DEFINE_ERROR(Name, Base) \
  class Name : public Base {            \
   public:                              \
    using Base::Base;                   \
  }

// Domain-type failures.
FRACQM_DEFINE_ERROR(SingularPoint, DomainError);
FRACQM_DEFINE_ERROR(OutOfStrip, DomainError);
FRACQM_DEFINE_ERROR(StripViolation, DomainError);
FRACQM_DEFINE_ERROR(GammaPole, DomainError);
FRACQM_DEFINE_ERROR(NoMatchingPair, DomainError);
FRACQM_DEFINE_ERROR(NoSeparatingContour, DomainError);
FRACQM_DEFINE_ERROR(NoBracket, DomainError);
FRACQM_DEFINE_ERROR(InvalidParams, DomainError);

// Convergence failures.
FRACQM_DEFINE_ERROR(QuadFailure, NumericalError);
FRACQM_DEFINE_ERROR(NonIntegrable, NumericalError);
FRACQM_DEFINE_ERROR(NonDecaying, NumericalError);
FRACQM_DEFINE_ERROR(NonSimplePoles, NumericalError);
FRACQM_DEFINE_ERROR(SeriesDiverged, NumericalError);
FRACQM_DEFINE_ERROR(OutOfRegion, NumericalError);
FRACQM_DEFINE_ERROR(BracketFailure, NumericalError);

#undef FRACQM_DEFINE_ERROR

}  // namespace fracqm
