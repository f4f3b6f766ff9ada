#pragma once

#include <stdexcept>
#include <string>

namespace idealtetra {

// Failure codes carried by every Error. The CLI maps numerical faults to
// exit code 1 and domain/precondition faults to exit code 2.
enum class ErrorCode {
  ZeroVector,
  NullArgument,
  NotHyperbolicPoint,
  DomainError,
  GradeOverflow,
  GradeMismatch,
  DegenerateSpan,
  PointOnPlane,
  NotIdeal,
  CoincidentVertices,
  NonPositiveGram,
  SignObstruction,
  Inadmissible,
  DeltaVertex,
  ZeroCoordinate,
  OutOfChart,
  OutsideRegion,
  ComplexRoots,
  BoundaryPoint,
  ToleranceUnreachable,
  EmptyIntersection,
};

const char* error_code_name(ErrorCode code);

// True for faults that indicate numerical breakdown rather than a bad input.
bool is_numerical_fault(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace idealtetra
