#include "toric/error.hpp"

namespace toric {

std::string_view error_name(ErrorCode code)
{
  switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::ValidationError: return "VALIDATION_ERROR";
    case ErrorCode::ZeroVector: return "ZERO_VECTOR";
    case ErrorCode::NotStronglyConvex: return "NOT_STRONGLY_CONVEX";
    case ErrorCode::SpanViolation: return "SPAN_VIOLATION";
    case ErrorCode::NotContained: return "NOT_CONTAINED";
    case ErrorCode::NotCovering: return "NOT_COVERING";
    case ErrorCode::ApexInHyperplane: return "APEX_IN_HYPERPLANE";
    case ErrorCode::NotInterior: return "NOT_INTERIOR";
    case ErrorCode::NotFullDim: return "NOT_FULL_DIM";
    case ErrorCode::NotAPermutation: return "NOT_A_PERMUTATION";
    case ErrorCode::NotAComplex: return "NOT_A_COMPLEX";
    case ErrorCode::NotQCartier: return "NOT_Q_CARTIER";
    case ErrorCode::NotComplete: return "NOT_COMPLETE";
    case ErrorCode::NotAmple: return "NOT_AMPLE";
    case ErrorCode::WrongDimension: return "WRONG_DIMENSION";
    case ErrorCode::InvalidShelling: return "INVALID_SHELLING";
    case ErrorCode::InvalidFan: return "INVALID_FAN";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "INTERNAL";
}

int exit_status(ErrorCode code) { return 10 + static_cast<int>(code); }

}  // namespace toric
