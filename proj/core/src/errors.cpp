#include "ssli/errors.hpp"

namespace ssli {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kIndexError: return "IndexError";
    case ErrorCode::kDuplicateRoots: return "DuplicateRoots";
    case ErrorCode::kPoleHit: return "PoleHit";
    case ErrorCode::kNonPositiveCoefficient: return "NonPositiveCoefficient";
    case ErrorCode::kRootOnCut: return "RootOnCut";
    case ErrorCode::kDegreeTooLow: return "DegreeTooLow";
    case ErrorCode::kBranchCut: return "BranchCut";
    case ErrorCode::kNotConjugateClosed: return "NotConjugateClosed";
    case ErrorCode::kQuadratureFailure: return "QuadratureFailure";
    case ErrorCode::kContourTooTight: return "ContourTooTight";
    case ErrorCode::kNotDominated: return "NotDominated";
    case ErrorCode::kGenerationFailure: return "GenerationFailure";
    case ErrorCode::kNonPositiveDeterminant: return "NonPositiveDeterminant";
    case ErrorCode::kNotDensityMatrix: return "NotDensityMatrix";
    case ErrorCode::kNotSymmetricPositiveDefinite: return "NotSymmetricPositiveDefinite";
    case ErrorCode::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::kSearchFailure: return "SearchFailure";
  }
  return "Unknown";
}

}  // namespace ssli
