#include "idealtetra/tolerances.hpp"

#include <cstdlib>

#include "idealtetra/errors.hpp"

namespace idealtetra {

namespace {

Tolerances make_default() {
  Tolerances t;
  if (const char* env = std::getenv("IDEALTETRA_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || v <= 0.0 || v >= 1.0) {
      fail(ErrorCode::DomainError,
           "IDEALTETRA_TOL must be a real in (0, 1)");
    }
    t.classification = v;
  }
  return t;
}

}  // namespace

Tolerances& tolerances() {
  static Tolerances t = make_default();
  return t;
}

}  // namespace idealtetra
