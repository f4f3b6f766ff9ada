#pragma once

#include <array>

#include "idealtetra/tolerances.hpp"

namespace idealtetra {

// Vector in the 4-dimensional real space V carrying the bilinear symmetric
// form of signature (3,1),
//
//   <u,v> = u1 v1 - u2 v2 - u3 v3 - u4 v4,
//
// with the first basis vector the positive one. Points of the projective
// space are handled through representatives; every operation that consumes
// representatives guarantees the documented scale invariances.
class MinkowskiVector {
 public:
  MinkowskiVector() : c_{0.0, 0.0, 0.0, 0.0} {}
  MinkowskiVector(double x1, double x2, double x3, double x4);
  explicit MinkowskiVector(const std::array<double, 4>& c);

  // Orthonormal basis vector b1..b4 (i in 1..4).
  static MinkowskiVector basis(int i);

  double operator[](int i) const { return c_[i]; }
  double& operator[](int i) { return c_[i]; }
  const std::array<double, 4>& components() const { return c_; }

  MinkowskiVector operator+(const MinkowskiVector& o) const;
  MinkowskiVector operator-(const MinkowskiVector& o) const;
  MinkowskiVector operator-() const;
  MinkowskiVector operator*(double a) const;

  // Euclidean norm of the component vector; used only for tolerance scaling.
  double euclidean_norm() const;
  bool is_zero() const;

 private:
  std::array<double, 4> c_;
};

inline MinkowskiVector operator*(double a, const MinkowskiVector& v) {
  return v * a;
}

// Sign class of a projective point: positive points form hyperbolic space,
// null points the absolute, negative points de Sitter space.
enum class PointClass { Positive, Null, Negative };

const char* point_class_name(PointClass c);

double inner(const MinkowskiVector& u, const MinkowskiVector& v);

// Null when |<v,v>| <= tol * |v|^2 with the Euclidean norm; otherwise the
// sign of <v,v> decides. Throws ZeroVector for the zero vector.
PointClass classify(const MinkowskiVector& v,
                    double tol = tolerances().classification);

// <p,q><q,p> / (<p,p><q,q>); invariant under rescaling of either argument.
// Throws NullArgument when a self-product vanishes within tolerance.
double tance(const MinkowskiVector& p, const MinkowskiVector& q);

// arccosh(sqrt(tance)). Both arguments must classify Positive; the tance is
// clamped to 1 within tolerance and rejected below that.
double distance(const MinkowskiVector& p, const MinkowskiVector& q);

}  // namespace idealtetra
