#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ssli {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kIndexError,
  kDuplicateRoots,
  kPoleHit,
  kNonPositiveCoefficient,
  kRootOnCut,
  kDegreeTooLow,
  kBranchCut,
  kNotConjugateClosed,
  kQuadratureFailure,
  kContourTooTight,
  kNotDominated,
  kGenerationFailure,
  kNonPositiveDeterminant,
  kNotDensityMatrix,
  kNotSymmetricPositiveDefinite,
  kUnsupportedDimension,
  kSearchFailure,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above, so
// callers can branch on the category without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ssli
