#include "idealtetra/errors.hpp"

namespace idealtetra {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NullArgument: return "NullArgument";
    case ErrorCode::NotHyperbolicPoint: return "NotHyperbolicPoint";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::GradeOverflow: return "GradeOverflow";
    case ErrorCode::GradeMismatch: return "GradeMismatch";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::PointOnPlane: return "PointOnPlane";
    case ErrorCode::NotIdeal: return "NotIdeal";
    case ErrorCode::CoincidentVertices: return "CoincidentVertices";
    case ErrorCode::NonPositiveGram: return "NonPositiveGram";
    case ErrorCode::SignObstruction: return "SignObstruction";
    case ErrorCode::Inadmissible: return "Inadmissible";
    case ErrorCode::DeltaVertex: return "DeltaVertex";
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::OutOfChart: return "OutOfChart";
    case ErrorCode::OutsideRegion: return "OutsideRegion";
    case ErrorCode::ComplexRoots: return "ComplexRoots";
    case ErrorCode::BoundaryPoint: return "BoundaryPoint";
    case ErrorCode::ToleranceUnreachable: return "ToleranceUnreachable";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
  }
  return "UnknownError";
}

bool is_numerical_fault(ErrorCode code) {
  switch (code) {
    case ErrorCode::SignObstruction:
    case ErrorCode::ComplexRoots:
    case ErrorCode::ToleranceUnreachable:
      return true;
    default:
      return false;
  }
}

}  // namespace idealtetra
