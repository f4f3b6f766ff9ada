#include "idealtetra/minkowski.hpp"

#include <cmath>

#include "idealtetra/errors.hpp"

namespace idealtetra {

namespace {

void check_finite(const std::array<double, 4>& c) {
  for (double x : c) {
    if (!std::isfinite(x)) {
      fail(ErrorCode::DomainError, "vector components must be finite");
    }
  }
}

}  // namespace

MinkowskiVector::MinkowskiVector(double x1, double x2, double x3, double x4)
    : c_{x1, x2, x3, x4} {
  check_finite(c_);
}

MinkowskiVector::MinkowskiVector(const std::array<double, 4>& c) : c_(c) {
  check_finite(c_);
}

MinkowskiVector MinkowskiVector::basis(int i) {
  if (i < 1 || i > 4) fail(ErrorCode::DomainError, "basis index must be 1..4");
  MinkowskiVector v;
  v.c_[static_cast<size_t>(i - 1)] = 1.0;
  return v;
}

MinkowskiVector MinkowskiVector::operator+(const MinkowskiVector& o) const {
  return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
}

MinkowskiVector MinkowskiVector::operator-(const MinkowskiVector& o) const {
  return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]};
}

MinkowskiVector MinkowskiVector::operator-() const {
  return {-c_[0], -c_[1], -c_[2], -c_[3]};
}

MinkowskiVector MinkowskiVector::operator*(double a) const {
  return {a * c_[0], a * c_[1], a * c_[2], a * c_[3]};
}

double MinkowskiVector::euclidean_norm() const {
  return std::sqrt(c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] +
                   c_[3] * c_[3]);
}

bool MinkowskiVector::is_zero() const {
  return c_[0] == 0.0 && c_[1] == 0.0 && c_[2] == 0.0 && c_[3] == 0.0;
}

const char* point_class_name(PointClass c) {
  switch (c) {
    case PointClass::Positive: return "Positive";
    case PointClass::Null: return "Null";
    case PointClass::Negative: return "Negative";
  }
  return "?";
}

double inner(const MinkowskiVector& u, const MinkowskiVector& v) {
  return u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3];
}

PointClass classify(const MinkowskiVector& v, double tol) {
  if (v.is_zero()) fail(ErrorCode::ZeroVector, "cannot classify the zero vector");
  double q = inner(v, v);
  double n = v.euclidean_norm();
  if (std::fabs(q) <= tol * n * n) return PointClass::Null;
  return q > 0.0 ? PointClass::Positive : PointClass::Negative;
}

double tance(const MinkowskiVector& p, const MinkowskiVector& q) {
  double pp = inner(p, p);
  double qq = inner(q, q);
  double np = p.euclidean_norm();
  double nq = q.euclidean_norm();
  double tol = tolerances().classification;
  if (std::fabs(pp) <= tol * np * np || std::fabs(qq) <= tol * nq * nq) {
    fail(ErrorCode::NullArgument,
         "tance requires both self-products to be nonzero");
  }
  double pq = inner(p, q);
  return (pq * pq) / (pp * qq);
}

double distance(const MinkowskiVector& p, const MinkowskiVector& q) {
  if (classify(p) != PointClass::Positive ||
      classify(q) != PointClass::Positive) {
    fail(ErrorCode::NotHyperbolicPoint,
         "distance is defined for positive points only");
  }
  double ta = tance(p, q);
  if (ta < 1.0) {
    if (ta < 1.0 - tolerances().classification) {
      fail(ErrorCode::DomainError, "tance below 1 for hyperbolic points");
    }
    ta = 1.0;
  }
  return std::acosh(std::sqrt(ta));
}

}  // namespace idealtetra
